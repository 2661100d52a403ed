#pragma once

// Closure of a set of seed vectors under a list of linear actions: computes a
// basis of the smallest subspace containing the seeds and invariant under
// every action, remembering for each basis vector a witness — which seed it
// came from and which generator word produced it. Decomposing an observed
// vector over such a basis and replaying the witness words on a different
// start vector is the whole engine behind the key-recovery procedures.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lindec/actions.hpp"
#include "lindec/linalg.hpp"

namespace lindec {

struct Witness {
    std::size_t origin = 0;          // index into the seed list
    std::vector<std::size_t> word;   // generator indices, applied left-to-right
};

struct ClosureOptions {
    // Default: every pass re-applies all generators to the whole current
    // basis (candidates in basis-index-major, generator-index-minor order,
    // snapshot taken at pass start). frontier_only restricts candidates to
    // vectors accepted since the previous pass; the accepted vectors and
    // witnesses are identical either way, because a candidate rejected once
    // stays inside the (growing) span forever.
    bool frontier_only = false;
    // One line per accepted vector when set.
    std::ostream* trace = nullptr;
};

struct ClosureStats {
    std::uint64_t field_ops = 0;
    std::size_t passes = 0;        // includes the final pass that adds nothing
    std::size_t applications = 0;  // candidate evaluations u(b)
};

struct SpanBasis {
    EchelonBasis echelon;            // originals() = accepted vectors, in order
    std::vector<Witness> witnesses;  // parallel to originals()
    ClosureStats stats;

    std::size_t size() const { return witnesses.size(); }
    std::size_t dim() const { return echelon.dim(); }
    const FVector& vector(std::size_t i) const { return echelon.originals()[i]; }
};

SpanBasis span_closure(const std::vector<FVector>& seeds,
                       const std::vector<Action>& gens,
                       const ClosureOptions& opts = {});

// Applies word[0], then word[1], ... to base.
FVector apply_word(const std::vector<std::size_t>& word,
                   const std::vector<Action>& gens, FVector base);

struct WeightedWitness {
    std::uint64_t coeff = 0;
    Witness witness;
};

// target = sum coeff_i · vector(i); throws NotInSpan if target is outside the
// closed span. Entries are aligned with the basis (zero coefficients kept).
std::vector<WeightedWitness> closure_decompose(const SpanBasis& basis,
                                               const FVector& target);

// sum over nonzero coefficients of coeff · word(replacements[origin]).
FVector replay(const std::vector<WeightedWitness>& combination,
               const std::vector<FVector>& replacements,
               const std::vector<Action>& gens);

} // namespace lindec
