#include "lindec/spanclosure.hpp"

#include <ostream>

#include "lindec/opcount.hpp"

namespace lindec {

namespace {

void trace_accept(std::ostream* os, std::size_t pass, const Witness& w,
                  std::size_t rank) {
    if (!os) return;
    *os << "pass=" << pass << " origin=" << w.origin << " word=[";
    for (std::size_t i = 0; i < w.word.size(); ++i)
        *os << (i ? " " : "") << w.word[i];
    *os << "] rank=" << rank << '\n';
}

} // namespace

SpanBasis span_closure(const std::vector<FVector>& seeds,
                       const std::vector<Action>& gens,
                       const ClosureOptions& opts) {
    if (seeds.empty()) throw DimensionError("span closure needs at least one seed");
    const PrimeField f = seeds.front().field();
    const std::size_t d = seeds.front().size();
    for (const auto& s : seeds) {
        if (s.field() != f) throw IncompatibleOperands("seeds over different fields");
        if (s.size() != d) throw DimensionError("seed length mismatch");
    }
    for (const auto& g : gens)
        if (g.dim() != d)
            throw DimensionError("generator dimension != seed dimension");

    OpMeter meter;
    SpanBasis out{EchelonBasis(f, d), {}, {}};

    for (std::size_t i = 0; i < seeds.size(); ++i) {
        if (out.echelon.extend(seeds[i]).accepted) {
            out.witnesses.push_back({i, {}});
            trace_accept(opts.trace, 0, out.witnesses.back(), out.echelon.rank());
        }
    }

    std::size_t processed = 0; // candidates below this index were already expanded
    bool full = out.echelon.rank() == d;
    while (!full) {
        ++out.stats.passes;
        const std::size_t start = opts.frontier_only ? processed : 0;
        const std::size_t end = out.witnesses.size();
        bool added = false;
        for (std::size_t bi = start; bi < end && !full; ++bi) {
            for (std::size_t ui = 0; ui < gens.size() && !full; ++ui) {
                FVector cand = gens[ui].apply(out.echelon.originals()[bi]);
                ++out.stats.applications;
                if (out.echelon.extend(cand).accepted) {
                    Witness w = out.witnesses[bi];
                    w.word.push_back(ui);
                    out.witnesses.push_back(std::move(w));
                    trace_accept(opts.trace, out.stats.passes,
                                 out.witnesses.back(), out.echelon.rank());
                    added = true;
                    if (out.echelon.rank() == d) full = true;
                }
            }
        }
        processed = end;
        if (!added) break;
    }

    out.stats.field_ops = meter.elapsed();
    return out;
}

FVector apply_word(const std::vector<std::size_t>& word,
                   const std::vector<Action>& gens, FVector base) {
    for (std::size_t idx : word) {
        if (idx >= gens.size()) throw DimensionError("witness word index out of range");
        base = gens[idx].apply(base);
    }
    return base;
}

std::vector<WeightedWitness> closure_decompose(const SpanBasis& basis,
                                               const FVector& target) {
    auto coeffs = basis.echelon.decompose(target);
    std::vector<WeightedWitness> out;
    out.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out.push_back({coeffs[i], basis.witnesses[i]});
    return out;
}

FVector replay(const std::vector<WeightedWitness>& combination,
               const std::vector<FVector>& replacements,
               const std::vector<Action>& gens) {
    if (replacements.empty()) throw DimensionError("replay needs a start vector");
    FVector acc(replacements.front().field(), replacements.front().size());
    for (const auto& ww : combination) {
        if (ww.coeff == 0) continue;
        if (ww.witness.origin >= replacements.size())
            throw DimensionError("witness origin out of range");
        FVector term = apply_word(ww.witness.word, gens,
                                  replacements[ww.witness.origin]);
        acc.axpy(ww.coeff, term);
    }
    return acc;
}

} // namespace lindec
