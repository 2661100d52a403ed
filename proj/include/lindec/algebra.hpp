#pragma once

// Finite-dimensional associative unital F_p-algebras given by structure
// constants: a dense r×r×r table c with e_i·e_j = sum_k c[i][j][k]·e_k. Group
// algebras F_p[G] for permutation groups G are built by enumerating the group
// from generators; the identity element is always basis index 0. A sparse
// multiplication index derived from the dense table keeps products cheap when
// the table is mostly zeros (for group algebras it has exactly one term per
// basis pair).

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lindec/errors.hpp"
#include "lindec/field.hpp"
#include "lindec/linalg.hpp"

namespace lindec {

// Permutation of {0..deg-1}, stored as its image list.
using Perm = std::vector<std::uint32_t>;

Perm perm_identity(std::size_t deg);
// (a ∘ b)(x) = a(b(x)).
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
bool is_permutation(const Perm& a);

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
  public:
    struct Term {
        std::uint32_t k;
        std::uint64_t c;
    };

    const PrimeField& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::string& label() const { return label_; }

    // Structure constant c[i][j][k].
    std::uint64_t structure(std::size_t i, std::size_t j, std::size_t k) const {
        return table_[(i * dim_ + j) * dim_ + k];
    }
    const std::vector<std::uint64_t>& table() const { return table_; }
    const std::vector<std::uint64_t>& unit() const { return unit_; }

    // out = a · b on coefficient vectors (lengths dim()); bulk-counted.
    void mul_into(const std::uint64_t* a, const std::uint64_t* b,
                  std::uint64_t* out) const;

    // Exhaustive checks, meant for tests: (e_i e_j) e_k == e_i (e_j e_k) for
    // all basis triples, and unit·e_i == e_i·unit == e_i.
    bool is_associative_on_basis() const;
    bool unit_is_identity() const;

    // How the algebra was built; lets serialized instances rebuild cheaply.
    enum class Kind { explicit_table, group };
    Kind kind() const { return kind_; }
    const std::vector<Perm>& group_generators() const { return group_gens_; }
    std::size_t order_bound() const { return order_bound_; }
    const std::vector<Perm>& group_elements() const { return elements_; }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.field_ == b.field_ && a.dim_ == b.dim_ &&
               a.table_ == b.table_ && a.unit_ == b.unit_;
    }

    // Builds an algebra from an explicit dense table (r³ entries, row-major
    // (i,j,k)) and unit coefficient vector.
    static AlgebraPtr from_table(PrimeField f, std::size_t dim,
                                 std::vector<std::uint64_t> table,
                                 std::vector<std::uint64_t> unit,
                                 std::string label);

    // F_p, as the one-dimensional algebra; Mat_n over it is a plain matrix.
    static AlgebraPtr scalars(PrimeField f);

    // Group algebra F_p[G] with G = <gens> enumerated breadth-first from the
    // identity (basis index 0, enumeration order deterministic). Throws
    // GroupTooLarge if |G| exceeds order_bound.
    static AlgebraPtr group(PrimeField f, const std::vector<Perm>& gens,
                            std::size_t order_bound = 120,
                            std::string label = "");

  private:
    Algebra(PrimeField f) : field_(f) {}
    void build_index();

    PrimeField field_;
    std::size_t dim_ = 0;
    std::vector<std::uint64_t> table_;
    std::vector<std::uint64_t> unit_;
    std::string label_;
    Kind kind_ = Kind::explicit_table;
    std::vector<Perm> group_gens_;
    std::vector<Perm> elements_;
    std::size_t order_bound_ = 0;
    // Derived cache: nonzero terms of e_i·e_j at index i*dim+j.
    std::vector<std::vector<Term>> index_;
};

// Element of an algebra: coefficient vector over the basis.
class AlgebraElement {
  public:
    AlgebraElement(AlgebraPtr alg, std::vector<std::uint64_t> coeffs);
    static AlgebraElement zero(AlgebraPtr alg);
    static AlgebraElement one(AlgebraPtr alg);
    static AlgebraElement basis(AlgebraPtr alg, std::size_t i);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::vector<std::uint64_t>& coeffs() { return c_; }
    bool is_zero() const;

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement scaled(std::uint64_t c) const;

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) {
        return !(a == b);
    }

  private:
    void check_same(const AlgebraElement& o) const;
    AlgebraPtr alg_;
    std::vector<std::uint64_t> c_;
};

} // namespace lindec
