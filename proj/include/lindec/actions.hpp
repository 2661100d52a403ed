#pragma once

// Linear operators on the flattened matrix space Mat_n(A) ≅ F_p^{n²r}. These
// are the public operators an adversary can replay: multiplication by public
// matrices on either or both sides, conjugation by a public invertible matrix,
// an arbitrary explicit d×d matrix over F_p, and composites. Matrix-backed
// actions are applied through products over the algebra rather than by
// materializing d×d matrices; materialize() exists for when the explicit form
// itself is wanted.

#include <cstdint>
#include <memory>
#include <vector>

#include "lindec/algmatrix.hpp"

namespace lindec {

// The ambient flattened space: n×n matrices over an algebra.
struct FlatSpace {
    AlgebraPtr alg;
    std::size_t n = 0;

    std::size_t dim() const { return n * n * alg->dim(); }
    const PrimeField& field() const { return alg->field(); }

    friend bool operator==(const FlatSpace& a, const FlatSpace& b) {
        return a.n == b.n && *a.alg == *b.alg;
    }
};

// Copying a matrix into its flat coefficient vector and back; the storage
// layouts coincide, so both directions are plain copies.
FVector flatten(const AlgMatrix& m);
AlgMatrix unflatten(const FlatSpace& space, const FVector& v);

class Action {
  public:
    enum class Kind {
        left_mul,       // X -> M·X
        right_mul,      // X -> X·M
        sandwich,       // X -> G·X·H
        conjugation,    // X -> G·X·G⁻¹ (inverse precomputed at construction)
        explicit_linear, // v -> L·v on the flattened space
        compose,        // right-to-left composition of parts
    };

    static Action left_mul(AlgMatrix m);
    static Action right_mul(AlgMatrix m);
    static Action sandwich(AlgMatrix g, AlgMatrix h);
    // Throws NotInvertible when g has no inverse.
    static Action conjugation(AlgMatrix g);
    static Action explicit_linear(FMatrix l);
    // apply(compose({a,b}), v) == apply(a, apply(b, v)).
    static Action compose(std::vector<Action> parts);

    Kind kind() const { return payload_->kind; }
    // Flattened dimension the action maps to/from.
    std::size_t dim() const { return payload_->dim; }
    PrimeField field() const;

    FVector apply(const FVector& v) const;
    // The action as an explicit dim()×dim() matrix over F_p.
    FMatrix materialize() const;

    // Payload accessors (valid for the matrix-backed kinds).
    const AlgMatrix& matrix() const;        // M, G (conjugation), or G (sandwich)
    const AlgMatrix& second_matrix() const; // H (sandwich) or G⁻¹ (conjugation)
    const FMatrix& linear_matrix() const;   // explicit_linear
    const std::vector<Action>& parts() const; // compose

  private:
    struct Payload {
        Kind kind;
        std::size_t dim = 0;
        std::vector<AlgMatrix> mats;  // by kind: 1 or 2 entries
        std::optional<FMatrix> lin;
        std::vector<Action> sub;
    };
    explicit Action(std::shared_ptr<const Payload> p) : payload_(std::move(p)) {}
    std::shared_ptr<const Payload> payload_;
};

// Verifies apply(u, apply(w, v)) == apply(w, apply(u, v)) for every pair
// (u, w) on `trials` random vectors per pair.
bool commute_check(const std::vector<Action>& u_actions,
                   const std::vector<Action>& w_actions, std::size_t trials,
                   Rng& rng);

// Row vectors x ∈ F_p^n carried as n×n scalar matrices with first row x and
// zeros elsewhere; right multiplication on the embedding is exactly the row's
// vector-matrix product.
AlgMatrix embed_row(const AlgebraPtr& scalar_alg, const FVector& row);
FVector extract_row(const AlgMatrix& m);

} // namespace lindec
