#pragma once

// Exact dense linear algebra over F_p: vectors, matrices, a reduced echelon
// basis that tracks how each reduced row combines the *originally inserted*
// vectors (so decompositions come back in terms of the vectors the caller
// handed in, not the reduced rows), and a general linear-system solver.

#include <cstdint>
#include <optional>
#include <vector>

#include "lindec/errors.hpp"
#include "lindec/field.hpp"

namespace lindec {

class FVector {
  public:
    FVector(PrimeField f, std::size_t n)
        : field_(f), v_(n, 0) {}
    FVector(PrimeField f, std::vector<std::uint64_t> vals);

    std::size_t size() const { return v_.size(); }
    const PrimeField& field() const { return field_; }

    std::uint64_t operator[](std::size_t i) const { return v_[i]; }
    void set(std::size_t i, std::uint64_t val) { v_[i] = field_.reduce(val); }

    const std::vector<std::uint64_t>& data() const { return v_; }
    std::vector<std::uint64_t>& data() { return v_; }

    bool is_zero() const;

    // this += c * w; bulk-counted as 2·size() field ops (skipped when c == 0).
    void axpy(std::uint64_t c, const FVector& w);
    // this *= c; bulk-counted as size() field ops (skipped when c == 1).
    void scale(std::uint64_t c);

    FVector operator+(const FVector& o) const;
    FVector operator-(const FVector& o) const;
    FVector operator-() const;

    friend bool operator==(const FVector& a, const FVector& b);
    friend bool operator!=(const FVector& a, const FVector& b) {
        return !(a == b);
    }

  private:
    void check_compatible(const FVector& o) const;

    PrimeField field_;
    std::vector<std::uint64_t> v_;
};

class FMatrix {
  public:
    FMatrix(PrimeField f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static FMatrix identity(PrimeField f, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    std::uint64_t at(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }
    void set(std::size_t i, std::size_t j, std::uint64_t v) {
        a_[i * cols_ + j] = field_.reduce(v);
    }

    const std::vector<std::uint64_t>& data() const { return a_; }
    std::vector<std::uint64_t>& data() { return a_; }

    FVector row(std::size_t i) const;

    FMatrix operator*(const FMatrix& o) const;
    FMatrix operator+(const FMatrix& o) const;
    FMatrix operator-(const FMatrix& o) const;
    // M · v (column convention).
    FVector mul_vec(const FVector& v) const;
    // v · M (row convention).
    FVector vec_mul(const FVector& v) const;
    FMatrix transpose() const;
    FMatrix pow(std::uint64_t e) const; // square-and-multiply

    friend bool operator==(const FMatrix& a, const FMatrix& b);
    friend bool operator!=(const FMatrix& a, const FMatrix& b) {
        return !(a == b);
    }

  private:
    PrimeField field_;
    std::size_t rows_, cols_;
    std::vector<std::uint64_t> a_;
};

// Gauss-Jordan inverse. try_inverse reports failure as nullopt; inverse throws
// NotInvertible.
std::optional<FMatrix> try_inverse(const FMatrix& m);
FMatrix inverse(const FMatrix& m);

// Incrementally maintained reduced row-echelon basis of a growing subspace of
// F_p^dim. Every reduced row remembers its expression in the original inserted
// vectors, so rejected candidates and decompose() report coefficients over
// exactly the vectors that were accepted, in insertion order.
class EchelonBasis {
  public:
    EchelonBasis(PrimeField f, std::size_t dim) : field_(f), dim_(dim) {}

    struct ExtendResult {
        bool accepted;
        // Set only when rejected: v == sum coeffs[j] * originals()[j].
        std::vector<std::uint64_t> coeffs;
    };

    ExtendResult extend(const FVector& v);

    // Coefficients over originals(); verified by re-substitution before
    // returning. nullopt / NotInSpan when v is outside the span.
    std::optional<std::vector<std::uint64_t>> try_decompose(const FVector& v) const;
    std::vector<std::uint64_t> decompose(const FVector& v) const;

    bool contains(const FVector& v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }
    const PrimeField& field() const { return field_; }
    const std::vector<FVector>& originals() const { return originals_; }

  private:
    // Shared elimination: reduces r in place, accumulating the expression of
    // the eliminated part over originals into acc when acc != nullptr.
    void reduce(FVector& r, std::vector<std::uint64_t>* acc) const;

    PrimeField field_;
    std::size_t dim_;
    std::vector<FVector> rows_;                        // reduced rows
    std::vector<std::size_t> pivots_;                  // pivot column per row
    std::vector<std::vector<std::uint64_t>> transform_; // rows_[i] over originals_
    std::vector<FVector> originals_;
};

struct LinearSolution {
    FVector particular;
    std::vector<FVector> kernel; // basis of the homogeneous solution space
};

// Solves A x = b over F_p. try_ variant returns nullopt on inconsistency;
// plain variant throws NoSolution.
std::optional<LinearSolution> try_solve_linear(const FMatrix& a, const FVector& b);
LinearSolution solve_linear(const FMatrix& a, const FVector& b);

} // namespace lindec
