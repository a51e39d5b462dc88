#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sclogic/bignum.hpp"
#include "sclogic/semantics.hpp"
#include "sclogic/statics.hpp"
#include "sclogic/term.hpp"
#include "sclogic/tree.hpp"

namespace scl {

enum class SemanticsKind { Free, Memorizing, Static };

// One of the three congruence semantics; Static carries an atom ordering.
class Semantics {
public:
    static Semantics free() { return Semantics(SemanticsKind::Free, {}); }
    static Semantics memorizing() { return Semantics(SemanticsKind::Memorizing, {}); }
    static Semantics static_over(AtomOrdering order) {
        return Semantics(SemanticsKind::Static, std::move(order));
    }

    SemanticsKind kind() const { return kind_; }
    const AtomOrdering& order() const;
    std::string to_string() const;

private:
    Semantics(SemanticsKind kind, AtomOrdering order)
        : kind_(kind), order_(std::move(order)) {}
    SemanticsKind kind_;
    AtomOrdering order_;
};

// The evaluation tree of a closed term under the given semantics.
EvalTree tree_of(const Semantics& sem, const Term& p);
EvalTree tree_of(const Semantics& sem, const Term& p, const VarEnv& env, TreeOps& ops);

// Structural equality of the two evaluation trees.
bool decide_eq(const Semantics& sem, const Term& p, const Term& q);

// Bound for exhaustive closed-term enumeration.
struct EnumerationBudget {
    Alphabet atoms;
    int max_depth = 2;
    bool include_constants = true;
};

// All closed sequential-signature terms within the budget, duplicate-free, in
// a fixed deterministic order: by connective depth, then constructor
// (T < F < atoms < ! < && < ||), then children lexicographically.
std::vector<Term> enumerate_terms(const EnumerationBudget& budget);

// Lazy variant; stops early when the callback returns false.
void for_each_term(const EnumerationBudget& budget,
                   const std::function<bool(const Term&)>& fn);

// Number of terms enumerate_terms would yield; UINT64_MAX when the count
// does not fit.
std::uint64_t enumeration_size(const EnumerationBudget& budget);

// Named open-term identity.
struct Equation {
    std::string name;
    Term lhs;
    Term rhs;

    std::vector<std::string> variables() const;  // sorted, duplicate-free
};

// Named group of equations (an axiom system).
struct AxiomSet {
    std::string name;
    std::vector<Equation> axioms;

    const Equation* find(const std::string& axiom_name) const;
};

struct ValidateOptions {
    std::uint64_t exhaustive_cap = 4'000'000;  // max instances for one law
    int sample_count = 10'000;                 // seeded random fallback
    std::uint64_t seed = 12345;
};

struct Counterexample {
    std::vector<std::pair<std::string, Term>> binding;  // variable -> closed term
};

struct LawReport {
    std::uint64_t instances = 0;
    std::vector<Counterexample> counterexamples;
    std::string strategy;
    bool ok() const { return counterexamples.empty(); }
};

// Checks an open identity on closed substitution instances drawn from the
// budget pool. Bindings are reduced to congruence-class representatives under
// sem (equivalent bindings give equivalent instances); if the reduced
// Cartesian product still exceeds the cap, a depth-1 exhaustive pass plus
// seeded random sampling from the full pool is used instead.
LawReport validate_law(const Semantics& sem, const Equation& eq,
                       const EnumerationBudget& budget, const ValidateOptions& options = {});

// Number of distinct evaluation trees over the budget pool. Exact; stops
// enumerating once the semantics' known ceiling is reached.
std::uint64_t census_distinct_trees(const Semantics& sem, const EnumerationBudget& budget);

// T_n = n * T_{n-1}^2 + 2, T_0 = 2 (number of decision trees over n atoms).
BigNat count_memorizing(unsigned n);

// 2^(2^n) (number of perfect trees leveled by an ordering of n atoms).
BigNat count_static(unsigned n);

// All decision trees over the given atoms, duplicate-free; the length equals
// count_memorizing(atoms.size()). Guarded to at most 3 atoms.
std::vector<EvalTree> enumerate_decision_trees(const std::vector<std::string>& atoms);

// A pair identified by sem_b but separated by sem_a, if one exists within the
// budget; the first such pair in enumeration order.
std::optional<std::pair<Term, Term>> find_separating_witness(
    const Semantics& sem_a, const Semantics& sem_b, const EnumerationBudget& budget);

}  // namespace scl
