#pragma once

// n×n matrices over a structure-constant algebra A. Entries are stored as one
// contiguous coefficient block of length n²·r in slot order (i·n+j)·r+k, which
// is exactly the flattened-vector layout the decomposition machinery works on,
// so flattening is a copy. Inversion goes through the left regular
// representation on column vectors: M acts on A^n as an nr×nr matrix over F_p,
// which gets inverted by exact elimination; the result is mapped back and
// verified two-sided.

#include <cstdint>
#include <optional>
#include <vector>

#include "lindec/algebra.hpp"
#include "lindec/linalg.hpp"
#include "lindec/rng.hpp"

namespace lindec {

class AlgMatrix {
  public:
    AlgMatrix(AlgebraPtr alg, std::size_t n);
    static AlgMatrix identity(AlgebraPtr alg, std::size_t n);

    std::size_t n() const { return n_; }
    const AlgebraPtr& algebra() const { return alg_; }
    const PrimeField& field() const { return alg_->field(); }
    std::size_t flat_dim() const { return data_.size(); }

    const std::uint64_t* entry(std::size_t i, std::size_t j) const {
        return &data_[(i * n_ + j) * alg_->dim()];
    }
    std::uint64_t* entry(std::size_t i, std::size_t j) {
        return &data_[(i * n_ + j) * alg_->dim()];
    }
    AlgebraElement at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const AlgebraElement& e);

    const std::vector<std::uint64_t>& data() const { return data_; }
    std::vector<std::uint64_t>& data() { return data_; }

    AlgMatrix operator+(const AlgMatrix& o) const;
    AlgMatrix operator-(const AlgMatrix& o) const;
    AlgMatrix operator*(const AlgMatrix& o) const;
    AlgMatrix scaled(std::uint64_t c) const;

    // Left-to-right chain of e-1 products: the honest parties' way of powering,
    // whose field-op cost grows linearly with the exponent.
    AlgMatrix pow_naive(std::uint64_t e) const;
    // Square-and-multiply; used for order computations, never in transcripts.
    AlgMatrix pow(std::uint64_t e) const;

    friend bool operator==(const AlgMatrix& a, const AlgMatrix& b);
    friend bool operator!=(const AlgMatrix& a, const AlgMatrix& b) {
        return !(a == b);
    }

  private:
    void check_same(const AlgMatrix& o) const;
    AlgebraPtr alg_;
    std::size_t n_;
    std::vector<std::uint64_t> data_;
};

// Matrix of the action of M on column vectors A^n ≅ F_p^{n·r}.
FMatrix regular_representation(const AlgMatrix& m);

std::optional<AlgMatrix> try_inverse(const AlgMatrix& m);
AlgMatrix inverse(const AlgMatrix& m);

// Conversions for matrices over the one-dimensional scalar algebra.
FMatrix scalar_matrix(const AlgMatrix& m);
AlgMatrix from_scalar_matrix(AlgebraPtr alg, const FMatrix& m);

// Multiplicative order of an invertible matrix over the scalar algebra:
// factors |GL_n(F_p)| and strips primes with fast powering. Throws
// NotInvertible for singular input, GroupTooLarge when |GL_n(F_p)| overflows
// the supported range.
std::uint64_t matrix_order(const AlgMatrix& m);

FVector random_fvector(const PrimeField& f, std::size_t n, Rng& rng);
AlgMatrix random_alg_matrix(const AlgebraPtr& alg, std::size_t n, Rng& rng);
// Rejection-samples until try_inverse succeeds; throws SamplerFailure after
// max_tries rejections.
AlgMatrix random_invertible(const AlgebraPtr& alg, std::size_t n, Rng& rng,
                            std::size_t max_tries = 256);

} // namespace lindec
