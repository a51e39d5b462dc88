#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "sclogic/equivalence.hpp"
#include "sclogic/parser.hpp"
#include "sclogic/semantics.hpp"
#include "sclogic/statics.hpp"

using namespace scl;

namespace {

// Deterministic closed terms over {a,b,c} for throughput runs.
std::vector<Term> sample_terms(int depth, std::size_t count) {
    std::mt19937 rng(2024);
    std::vector<std::string> atoms{"a", "b", "c"};
    std::vector<Term> out;
    std::function<Term(int)> gen = [&](int d) -> Term {
        unsigned pick = rng() % (d == 0 ? 5u : 8u);
        switch (pick) {
            case 0: return Term::truth();
            case 1: return Term::falsity();
            case 2:
            case 3:
            case 4: return Term::atom(atoms[pick - 2]);
            case 5: return Term::negation(gen(d - 1));
            case 6: return Term::seq_and(gen(d - 1), gen(d - 1));
            default: return Term::seq_or(gen(d - 1), gen(d - 1));
        }
    };
    for (std::size_t i = 0; i < count; ++i) out.push_back(gen(depth));
    return out;
}

void BM_se(benchmark::State& state) {
    std::vector<Term> terms = sample_terms(int(state.range(0)), 256);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(se(terms[i++ % terms.size()]));
    }
}
BENCHMARK(BM_se)->Arg(4)->Arg(8);

void BM_mse(benchmark::State& state) {
    std::vector<Term> terms = sample_terms(int(state.range(0)), 256);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mse(terms[i++ % terms.size()]));
    }
}
BENCHMARK(BM_mse)->Arg(4)->Arg(8);

void BM_sse(benchmark::State& state) {
    AtomOrdering sigma = AtomOrdering::from_string("abc");
    std::vector<Term> terms = sample_terms(int(state.range(0)), 256);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sse(sigma, terms[i++ % terms.size()]));
    }
}
BENCHMARK(BM_sse)->Arg(4)->Arg(6);

void BM_decide_eq_mem(benchmark::State& state) {
    std::vector<Term> terms = sample_terms(6, 256);
    Semantics sem = Semantics::memorizing();
    std::size_t i = 0;
    for (auto _ : state) {
        const Term& p = terms[i % terms.size()];
        const Term& q = terms[(i + 1) % terms.size()];
        benchmark::DoNotOptimize(decide_eq(sem, p, q));
        ++i;
    }
}
BENCHMARK(BM_decide_eq_mem);

void BM_validate_mem_axiom(benchmark::State& state) {
    Equation mem{"Mem", parse("($x || $y) && $z"),
                 parse("(!$x && ($y && $z)) || ($x && $z)")};
    EnumerationBudget budget{Alphabet({"a", "b"}), int(state.range(0)), true};
    for (auto _ : state) {
        LawReport r = validate_law(Semantics::memorizing(), mem, budget);
        benchmark::DoNotOptimize(r.instances);
    }
}
BENCHMARK(BM_validate_mem_axiom)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_census_static(benchmark::State& state) {
    Semantics sem = Semantics::static_over(AtomOrdering::from_string("ab"));
    EnumerationBudget budget{Alphabet({"a", "b"}), int(state.range(0)), true};
    for (auto _ : state) {
        benchmark::DoNotOptimize(census_distinct_trees(sem, budget));
    }
}
BENCHMARK(BM_census_static)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
