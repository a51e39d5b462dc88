// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion also carries a wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sclogic/equivalence.hpp"
#include "sclogic/laws.hpp"
#include "sclogic/models.hpp"
#include "sclogic/parser.hpp"
#include "sclogic/semantics.hpp"
#include "sclogic/statics.hpp"

using namespace scl;

namespace {

struct Criterion {
    int number;
    std::string title;
    double time_limit_s;
    std::function<bool(std::string&)> run;
};

std::string S(EvalTree t) { return render_tree(t, TreeStyle::Structured); }
AtomOrdering ord(const char* s) { return AtomOrdering::from_string(s); }

bool check(bool cond, const std::string& what, std::string& log) {
    if (!cond) log += "    FAILED: " + what + "\n";
    return cond;
}

// ---------------------------------------------------------------------------
// 1. Golden trees.
bool golden_trees(std::string& log) {
    bool ok = true;
    EvalTree pic1 = EvalTree::node("b", EvalTree::leaf(false),
                                   EvalTree::node("a", EvalTree::leaf(true),
                                                  EvalTree::leaf(false)));
    ok &= check(se(parse("!b && a")) == pic1, "se(!b && a) != F<b>(T<a>F)", log);
    ok &= check(se(parse("!(b || !a)")) == pic1, "se(!(b || !a)) != F<b>(T<a>F)", log);
    ok &= check(S(mse(parse("a && (b && a)"))) == "((T <b> F) <a> F)",
                "mse(a && (b && a)) mismatch", log);

    Term p = parse("!a || (b && a)");
    ok &= check(S(sse(ord("ab"), p)) == "((T <b> F) <a> (T <b> T))", "sse_ab tree", log);
    ok &= check(S(sse(ord("ba"), p)) == "((T <a> T) <b> (F <a> T))", "sse_ba tree", log);

    std::vector<TruthTableRow> want_ab{{{true, true}, true},
                                       {{true, false}, false},
                                       {{false, true}, true},
                                       {{false, false}, true}};
    std::vector<TruthTableRow> want_ba{{{true, true}, true},
                                       {{true, false}, true},
                                       {{false, true}, false},
                                       {{false, false}, true}};
    ok &= check(truth_table(sse(ord("ab"), p), ord("ab")) == want_ab, "truth table ab", log);
    ok &= check(truth_table(sse(ord("ba"), p), ord("ba")) == want_ba, "truth table ba", log);

    ok &= check(S(sse(ord("ab"), Term::falsity())) == "((F <b> F) <a> (F <b> F))",
                "sse_ab(F)", log);
    ok &= check(S(sse(ord("ba"), Term::falsity())) == "((F <a> F) <b> (F <a> F))",
                "sse_ba(F)", log);
    return ok;
}

// ---------------------------------------------------------------------------
// 2. Counting.
bool counting(std::string& log) {
    bool ok = true;
    const char* expected[] = {"2", "6", "74", "16430"};
    for (unsigned n = 0; n <= 3; ++n)
        ok &= check(count_memorizing(n).to_string() == expected[n],
                    "count_memorizing(" + std::to_string(n) + ")", log);
    std::vector<std::vector<std::string>> alphabets{{}, {"a"}, {"a", "b"}, {"a", "b", "c"}};
    for (unsigned n = 0; n <= 3; ++n)
        ok &= check(enumerate_decision_trees(alphabets[n]).size() ==
                        count_memorizing(n).as_u64(),
                    "decision-tree enumeration length at n=" + std::to_string(n), log);
    for (unsigned n = 0; n <= 4; ++n) {
        BigNat want = 2;
        for (unsigned i = 0; i < n; ++i) want *= want;
        ok &= check(count_static(n) == want, "count_static(" + std::to_string(n) + ")", log);
    }
    ok &= check(census_distinct_trees(Semantics::static_over(ord("a")),
                                      {Alphabet({"a"}), 3, true}) == 4,
                "static census |sigma|=1", log);
    ok &= check(census_distinct_trees(Semantics::static_over(ord("ab")),
                                      {Alphabet({"a", "b"}), 3, true}) == 16,
                "static census |sigma|=2", log);
    return ok;
}

// ---------------------------------------------------------------------------
// 3. Soundness suite over the shipped catalog.
bool soundness(std::string& log) {
    bool ok = true;
    EnumerationBudget budget{Alphabet({"a", "b"}), 2, true};
    AtomOrdering sigma = ord("ab");
    for (const LawEntry& entry : law_catalog()) {
        Semantics sem = entry.designated == SemanticsKind::Free ? Semantics::free()
                        : entry.designated == SemanticsKind::Memorizing
                            ? Semantics::memorizing()
                            : Semantics::static_over(sigma);
        LawReport report = validate_law(sem, entry.eq, budget);
        if (!report.ok()) {
            ok = false;
            log += "    law " + entry.eq.name + " (" + entry.source + ") failed with " +
                   std::to_string(report.counterexamples.size()) + " counterexample(s)\n";
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 4. Negative controls.
bool negative_controls(std::string& log) {
    bool ok = true;
    EnumerationBudget budget{Alphabet({"a", "b"}), 2, true};
    Equation comm{"Comm", parse("$x && $y"), parse("$y && $x")};
    Equation abs{"Abs", parse("$x && ($x || $y)"), parse("$x")};
    Equation idem{"idem", parse("$x && $x"), parse("$x")};

    auto expect_cex = [&](const Semantics& sem, const Equation& eq, const char* what) {
        LawReport r = validate_law(sem, eq, budget);
        if (r.counterexamples.empty()) {
            ok = false;
            log += std::string("    expected a counterexample for ") + what + "\n";
            return;
        }
        // The reported binding must be concrete and genuinely separating.
        const Counterexample& cex = r.counterexamples.front();
        std::map<std::string, Term> binding(cex.binding.begin(), cex.binding.end());
        Term li = substitute(eq.lhs, binding), ri = substitute(eq.rhs, binding);
        if (decide_eq(sem, li, ri)) {
            ok = false;
            log += std::string("    reported binding is not a counterexample for ") + what + "\n";
        }
    };
    expect_cex(Semantics::free(), comm, "(Comm) under free");
    expect_cex(Semantics::memorizing(), comm, "(Comm) under memorizing");
    expect_cex(Semantics::free(), abs, "(Abs) under free");
    expect_cex(Semantics::free(), idem, "idempotence under free");
    return ok;
}

// ---------------------------------------------------------------------------
// 5. Hierarchy and witnesses.
bool hierarchy(std::string& log) {
    bool ok = true;
    EnumerationBudget budget{Alphabet({"a", "b"}), 2, true};
    std::vector<Term> pool = enumerate_terms(budget);
    Semantics st = Semantics::static_over(ord("ab"));
    TreeOps ops;
    // se-class -> mse-tree and mse-class -> sse-tree must be functions; that
    // is exactly "equal under the finer semantics implies equal under the
    // coarser one" for every pair from the pool.
    std::unordered_map<std::uint32_t, std::uint32_t> se_to_mse, mse_to_sse;
    std::uint64_t violations = 0;
    for (const Term& p : pool) {
        std::uint32_t a = tree_of(Semantics::free(), p, {}, ops).id();
        std::uint32_t b = tree_of(Semantics::memorizing(), p, {}, ops).id();
        std::uint32_t c = tree_of(st, p, {}, ops).id();
        auto [it1, fresh1] = se_to_mse.try_emplace(a, b);
        if (!fresh1 && it1->second != b) ++violations;
        auto [it2, fresh2] = mse_to_sse.try_emplace(b, c);
        if (!fresh2 && it2->second != c) ++violations;
    }
    ok &= check(violations == 0, "hierarchy violations: " + std::to_string(violations), log);

    auto w1 = find_separating_witness(Semantics::free(), Semantics::memorizing(), budget);
    ok &= check(w1.has_value(), "no free/memorizing witness", log);
    if (w1) {
        ok &= check(decide_eq(Semantics::memorizing(), w1->first, w1->second) &&
                        !decide_eq(Semantics::free(), w1->first, w1->second),
                    "free/memorizing witness invalid", log);
    }
    EnumerationBudget a_budget{Alphabet({"a"}), 2, true};
    auto w2 = find_separating_witness(Semantics::memorizing(),
                                      Semantics::static_over(ord("a")), a_budget);
    ok &= check(w2.has_value(), "no memorizing/static witness", log);
    if (w2) {
        ok &= check(decide_eq(Semantics::static_over(ord("a")), w2->first, w2->second) &&
                        !decide_eq(Semantics::memorizing(), w2->first, w2->second),
                    "memorizing/static witness invalid", log);
    }
    // The canonical pairs are witnesses as well.
    ok &= check(decide_eq(Semantics::memorizing(), parse("a && a"), parse("a")) &&
                    !decide_eq(Semantics::free(), parse("a && a"), parse("a")),
                "(a && a, a) not a free/memorizing witness", log);
    ok &= check(decide_eq(Semantics::static_over(ord("a")), parse("F && a"), parse("a && F")) &&
                    !decide_eq(Semantics::memorizing(), parse("F && a"), parse("a && F")),
                "(F && a, a && F) not a memorizing/static witness", log);
    return ok;
}

// ---------------------------------------------------------------------------
// 6. Translation round trips.
bool round_trips(std::string& log) {
    EnumerationBudget budget{Alphabet({"a", "b"}), 2, true};
    std::uint64_t se_failures = 0, mse_failures = 0, total = 0;
    TreeOps ops;
    for (const Term& p : enumerate_terms(budget)) {
        ++total;
        if (se(p) != se(to_cond(p))) ++se_failures;
        if (mse(p) != mse(to_scl(to_cond(p)))) ++mse_failures;
        if (ops.cache_size() > (1u << 22)) ops.clear();
    }
    bool ok = true;
    ok &= check(se_failures == 0,
                "se(f(P)) != se(P) for " + std::to_string(se_failures) + "/" +
                    std::to_string(total) + " pool terms", log);
    ok &= check(mse_failures == 0,
                "mse(g(f(P))) != mse(P) for " + std::to_string(mse_failures) + " pool terms",
                log);
    return ok;
}

// ---------------------------------------------------------------------------
// 7. Static agreement and full evaluation.
bool static_agreement(std::string& log) {
    bool ok = true;
    for (const char* sigma : {"a", "ab", "ba", "abc"}) {
        AtomOrdering o = ord(sigma);
        EnumerationBudget budget{Alphabet(o.atoms()), 2, true};
        std::uint64_t mismatches = 0;
        for (const Term& p : enumerate_terms(budget))
            if (sse(o, p) != sse_alt(o, p)) ++mismatches;
        ok &= check(mismatches == 0,
                    std::string("sse != sse_alt over sigma=") + sigma + " (" +
                        std::to_string(mismatches) + " mismatches)", log);
    }

    // Full evaluation coincides with sequential conjunction statically:
    // exhaustive over depth-1 pairs, then seeded random depth-2 pairs.
    AtomOrdering ab = ord("ab");
    EnumerationBudget d1{Alphabet({"a", "b"}), 1, true};
    std::uint64_t bad = 0;
    std::vector<Term> pool1 = enumerate_terms(d1);
    for (const Term& p : pool1)
        for (const Term& q : pool1)
            if (sse(ab, expand_full_and(p, q)) != sse(ab, Term::seq_and(p, q))) ++bad;
    EnumerationBudget d2{Alphabet({"a", "b"}), 2, true};
    std::vector<Term> pool2 = enumerate_terms(d2);
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 10000; ++i) {
        const Term& p = pool2[rng() % pool2.size()];
        const Term& q = pool2[rng() % pool2.size()];
        if (sse(ab, expand_full_and(p, q)) != sse(ab, Term::seq_and(p, q))) ++bad;
    }
    ok &= check(bad == 0, "static full-evaluation mismatches: " + std::to_string(bad), log);

    // ... while memorizing evaluation distinguishes them for some pair.
    bool separated = false;
    Term witness_p = Term::truth(), witness_q = Term::truth();
    for (const Term& p : pool1) {
        for (const Term& q : pool1) {
            if (mse(expand_full_and(p, q)) != mse(Term::seq_and(p, q))) {
                separated = true;
                witness_p = p;
                witness_q = q;
                break;
            }
        }
        if (separated) break;
    }
    ok &= check(separated, "no memorizing full-evaluation witness found", log);
    if (separated)
        log += "    memorizing witness: P = " + render(witness_p) +
               ", Q = " + render(witness_q) + "\n";
    return ok;
}

// ---------------------------------------------------------------------------
// 8. Independence fixtures.
bool independence(std::string& log) {
    bool ok = true;
    const auto& fixtures = builtin_fixtures();
    ok &= check(fixtures.size() == 6, "expected six fixtures", log);
    for (const auto& fx : fixtures) {
        IndependenceCheck result = verify_independence(fx);
        for (const auto& r : result.axiom_results)
            if (!r.satisfied)
                log += "    " + fx.name + ": axiom " + r.name + " violated\n";
        if (!result.refuted) log += "    " + fx.name + ": refutation not falsified\n";
        ok &= result.passed();
    }
    // The neg model computes !T = 2 exactly as printed.
    ok &= check(eval_in_model(builtin_fixture("neg").model, parse("!T"), {}) == 2,
                "neg model: !T != 2", log);
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "golden trees", 1.0, golden_trees},
        {2, "counting", 30.0, counting},
        {3, "soundness suite (full catalog)", 300.0, soundness},
        {4, "negative controls", 10.0, negative_controls},
        {5, "hierarchy and witnesses", 60.0, hierarchy},
        {6, "translation round trips", 30.0, round_trips},
        {7, "static agreement / full evaluation", 120.0, static_agreement},
        {8, "independence fixtures", 5.0, independence},
    };

    int failures = 0;
    for (Criterion& c : criteria) {
        std::string log;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(log);
        } catch (const std::exception& e) {
            log += std::string("    exception: ") + e.what() + "\n";
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > c.time_limit_s) {
            ok = false;
            log += "    exceeded time limit of " + std::to_string(c.time_limit_s) + " s\n";
        }
        std::printf("[%s] %d. %s (%.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", c.number,
                    c.title.c_str(), elapsed, c.time_limit_s);
        if (!log.empty()) std::fputs(log.c_str(), stdout);
        if (!ok) ++failures;
    }
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::puts("all criteria passed");
    return 0;
}
