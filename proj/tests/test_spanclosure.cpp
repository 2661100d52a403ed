#include <doctest.h>

#include <sstream>

#include "lindec/spanclosure.hpp"
#include "oracle.hpp"

using namespace lindec;

namespace {

Action explicit_from_rows(PrimeField f, std::size_t d,
                          std::vector<std::uint64_t> vals) {
    FMatrix m(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m.set(i, j, vals[i * d + j]);
    return Action::explicit_linear(m);
}

Action random_explicit(PrimeField f, std::size_t d, Rng& rng) {
    FMatrix m(f, d, d);
    for (auto& x : m.data()) x = rng.below(f.modulus());
    return Action::explicit_linear(m);
}

microref::Mat to_micro(const Action& a) {
    auto m = a.materialize();
    microref::Mat out(m.rows(), microref::Vec(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j);
    return out;
}

struct RandomInstance {
    PrimeField f;
    std::vector<FVector> seeds;
    std::vector<Action> gens;
};

RandomInstance random_instance(Rng& rng, std::uint64_t p, std::size_t max_dim) {
    PrimeField f(p);
    std::size_t d = 1 + rng.below(max_dim);
    std::size_t nw = 1 + rng.below(2);
    std::size_t nu = 1 + rng.below(3);
    RandomInstance inst{f, {}, {}};
    for (std::size_t i = 0; i < nw; ++i)
        inst.seeds.push_back(random_fvector(f, d, rng));
    for (std::size_t i = 0; i < nu; ++i)
        inst.gens.push_back(random_explicit(f, d, rng));
    return inst;
}

} // namespace

TEST_SUITE("spanclosure") {

TEST_CASE("fixed instance over F_2: swap action") {
    PrimeField f(2);
    auto swap = explicit_from_rows(f, 2, {0, 1, 1, 0});
    auto basis = span_closure({FVector(f, {1, 0})}, {swap});
    REQUIRE(basis.size() == 2);
    CHECK(basis.vector(0) == FVector(f, {1, 0}));
    CHECK(basis.vector(1) == FVector(f, {0, 1}));
    CHECK(basis.witnesses[0].origin == 0);
    CHECK(basis.witnesses[0].word.empty());
    CHECK(basis.witnesses[1].origin == 0);
    CHECK(basis.witnesses[1].word == std::vector<std::size_t>{0});
    CHECK(basis.stats.passes == 1); // filled the space during the first pass
}

TEST_CASE("fixed instance over F_3: cyclic shift builds words of growing length") {
    PrimeField f(3);
    auto shift = explicit_from_rows(f, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
    auto basis = span_closure({FVector(f, {1, 0, 0})}, {shift});
    REQUIRE(basis.size() == 3);
    CHECK(basis.witnesses[1].word == std::vector<std::size_t>{0});
    CHECK(basis.witnesses[2].word == std::vector<std::size_t>{0, 0});
    CHECK(basis.vector(1) == FVector(f, {0, 1, 0}));
    CHECK(basis.vector(2) == FVector(f, {0, 0, 1}));
}

TEST_CASE("nilpotent generator terminates with a final empty pass") {
    PrimeField f(3);
    // e0 -> e1 -> 0 inside F_3^3: the span closes below full dimension.
    auto nil = explicit_from_rows(f, 3, {0, 0, 0, 1, 0, 0, 0, 0, 0});
    auto basis = span_closure({FVector(f, {1, 0, 0})}, {nil});
    REQUIRE(basis.size() == 2);
    CHECK(basis.vector(1) == FVector(f, {0, 1, 0}));
    // Pass 1 accepts the image; pass 2 re-derives one rejection per basis
    // vector and closes empty.
    CHECK(basis.stats.passes == 2);
    CHECK(basis.stats.applications == 3);
}

TEST_CASE("dependent seeds keep only the first representative") {
    PrimeField f(3);
    auto basis = span_closure({FVector(f, {1, 1}), FVector(f, {2, 2})}, {});
    REQUIRE(basis.size() == 1);
    CHECK(basis.witnesses[0].origin == 0);
    CHECK(basis.stats.passes == 1); // single empty pass over no generators
}

TEST_CASE("empty seed list is rejected") {
    CHECK_THROWS_AS(span_closure({}, {}), DimensionError);
}

TEST_CASE("mismatched generator dimension is rejected") {
    PrimeField f(3);
    auto g = random_explicit(f, 3, *[] {
        static Rng rng(1);
        return &rng;
    }());
    CHECK_THROWS_AS(span_closure({FVector(f, {1, 0})}, {g}), DimensionError);
}

TEST_CASE("closure equals the brute-force orbit span") {
    Rng rng(2024);
    int done = 0;
    while (done < 60) {
        std::uint64_t p = (rng.below(2) == 0) ? 2 : 3;
        auto inst = random_instance(rng, p, 6);
        auto basis = span_closure(inst.seeds, inst.gens);

        std::vector<microref::Vec> seeds;
        for (const auto& s : inst.seeds) seeds.push_back(s.data());
        std::vector<microref::Mat> gens;
        for (const auto& g : inst.gens) gens.push_back(to_micro(g));
        auto oracle =
            microref::orbit_span(seeds, gens, inst.seeds.front().size(), p);

        CHECK(basis.size() == oracle.rank());
        for (std::size_t i = 0; i < basis.size(); ++i)
            CHECK(oracle.member(basis.vector(i).data()));
        ++done;
    }
}

TEST_CASE("witness replay reproduces every basis vector") {
    Rng rng(7);
    for (int round = 0; round < 25; ++round) {
        auto inst = random_instance(rng, 5, 8);
        auto basis = span_closure(inst.seeds, inst.gens);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            auto replayed = apply_word(basis.witnesses[i].word, inst.gens,
                                       inst.seeds[basis.witnesses[i].origin]);
            CHECK(replayed == basis.vector(i));
        }
    }
}

TEST_CASE("closed span is invariant under every generator") {
    Rng rng(8);
    for (int round = 0; round < 25; ++round) {
        auto inst = random_instance(rng, 7, 8);
        auto basis = span_closure(inst.seeds, inst.gens);
        for (const auto& g : inst.gens)
            for (std::size_t i = 0; i < basis.size(); ++i)
                CHECK(basis.echelon.contains(g.apply(basis.vector(i))));
    }
}

TEST_CASE("frontier mode matches the default exactly") {
    Rng rng(9);
    for (int round = 0; round < 25; ++round) {
        auto inst = random_instance(rng, 3, 8);
        auto full = span_closure(inst.seeds, inst.gens);
        ClosureOptions opts;
        opts.frontier_only = true;
        auto frontier = span_closure(inst.seeds, inst.gens, opts);
        REQUIRE(full.size() == frontier.size());
        for (std::size_t i = 0; i < full.size(); ++i) {
            CHECK(full.vector(i) == frontier.vector(i));
            CHECK(full.witnesses[i].origin == frontier.witnesses[i].origin);
            CHECK(full.witnesses[i].word == frontier.witnesses[i].word);
        }
        CHECK(frontier.stats.applications <= full.stats.applications);
    }
}

TEST_CASE("pass count stays within the ambient dimension") {
    Rng rng(10);
    for (int round = 0; round < 20; ++round) {
        auto inst = random_instance(rng, 2, 7);
        auto basis = span_closure(inst.seeds, inst.gens);
        CHECK(basis.stats.passes <= inst.seeds.front().size());
    }
}

TEST_CASE("frontier cost obeys the cubic budget on an adversarial chain") {
    // Single shift generator: rank grows by one per pass, the worst case for
    // pass-count. Frontier mode still fits C·(d³|U|² + d|W|²) with C = 16.
    PrimeField f(11);
    const std::size_t d = 40;
    FMatrix shift(f, d, d);
    for (std::size_t i = 0; i + 1 < d; ++i) shift.set(i + 1, i, 1);
    FVector seed(f, d);
    seed.data()[0] = 1;
    ClosureOptions opts;
    opts.frontier_only = true;
    auto basis = span_closure({seed}, {Action::explicit_linear(shift)}, opts);
    CHECK(basis.size() == d);
    const std::uint64_t budget = 16 * (d * d * d * 1 + d * 1);
    CHECK(basis.stats.field_ops <= budget);
}

TEST_CASE("default mode obeys the cubic budget on dense two-generator instances") {
    PrimeField f(11);
    Rng rng(31);
    const std::size_t d = 48;
    std::vector<Action> gens{random_explicit(f, d, rng),
                             random_explicit(f, d, rng)};
    auto basis = span_closure({random_fvector(f, d, rng)}, gens);
    CHECK(basis.size() == d); // dense random generators reach the full space
    const std::uint64_t budget = 16 * (d * d * d * 4 + d * 1);
    CHECK(basis.stats.field_ops <= budget);
}

TEST_CASE("trace emits one line per accepted vector") {
    PrimeField f(3);
    std::ostringstream os;
    ClosureOptions opts;
    opts.trace = &os;
    auto shift = explicit_from_rows(f, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
    auto basis = span_closure({FVector(f, {1, 0, 0})}, {shift}, opts);
    std::string text = os.str();
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    CHECK(lines == basis.size());
    CHECK(text.find("origin=0") != std::string::npos);
    CHECK(text.find("word=[0 0]") != std::string::npos);
}

TEST_CASE("decompose-and-replay reconstructs targets inside the span") {
    Rng rng(12);
    for (int round = 0; round < 25; ++round) {
        auto inst = random_instance(rng, 7, 8);
        auto basis = span_closure(inst.seeds, inst.gens);
        // Random combination of basis vectors.
        FVector target(inst.f, basis.dim());
        for (std::size_t i = 0; i < basis.size(); ++i)
            target.axpy(rng.below(7), basis.vector(i));
        auto comb = closure_decompose(basis, target);
        REQUIRE(comb.size() == basis.size());
        auto rebuilt = replay(comb, inst.seeds, inst.gens);
        CHECK(rebuilt == target);
    }
}

TEST_CASE("targets outside the span raise NotInSpan") {
    PrimeField f(5);
    auto nil = explicit_from_rows(f, 2, {0, 0, 1, 0});
    auto basis = span_closure({FVector(f, {0, 1})}, {nil});
    CHECK(basis.size() == 1); // (0,1) maps to zero
    CHECK_THROWS_AS(closure_decompose(basis, FVector(f, {1, 0})), NotInSpan);
}

} // TEST_SUITE
