#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sclogic/equivalence.hpp"
#include "sclogic/term.hpp"

namespace scl {

// Finite interpretation of the sequential signature: a domain {0..k-1},
// operation tables, designated truth values and an atom assignment.
struct FiniteModel {
    int domain_size = 2;
    std::vector<int> neg_table;                // k entries
    std::vector<std::vector<int>> and_table;   // k rows (row = left operand)
    std::vector<std::vector<int>> or_table;    // k rows
    int true_elem = 1;
    int false_elem = 0;
    std::map<std::string, int> atom_assignment;

    void validate() const;  // throws on out-of-range entries
};

// Homomorphic evaluation; variables from the binding, atoms from the model's
// assignment. The term must be cond-free.
int eval_in_model(const FiniteModel& m, const Term& t,
                  const std::map<std::string, int>& binding);

// True iff lhs and rhs evaluate equal under every assignment of domain
// elements to the equation's variables.
bool check_equation(const FiniteModel& m, const Equation& eq);

// A finite model meant to show that `dropped` is not derivable from the rest
// of `axioms`: it satisfies every other axiom and falsifies `refuting`.
struct IndependenceFixture {
    std::string name;
    FiniteModel model;
    AxiomSet axioms;
    std::string dropped;
    Equation refuting;
};

struct IndependenceCheck {
    struct AxiomResult {
        std::string name;
        bool satisfied = false;
    };
    std::vector<AxiomResult> axiom_results;  // every axiom except the dropped one
    bool refuted = false;                    // refuting equation falsified?
    bool passed() const;
};

IndependenceCheck verify_independence(const IndependenceFixture& fx);

// The six embedded independence fixtures (neg, or, tand, abs, mem, comm),
// tables exactly as printed, with F = 0, T = 1 and a = 2 where an atom is
// used.
const std::vector<IndependenceFixture>& builtin_fixtures();
const IndependenceFixture& builtin_fixture(const std::string& name);

// Exhaustive search for a model of axioms minus `dropped` that refutes some
// closed instance of the dropped axiom (instances over T, F and up to
// `atom_count` atoms). Domain size is capped at 3. Deterministic: the first
// model in enumeration order wins.
std::optional<FiniteModel> search_model(const AxiomSet& axioms, const std::string& dropped,
                                        int domain_size, int atom_count);

// Variant refuting an explicit target equation while satisfying the whole set.
std::optional<FiniteModel> search_model(const AxiomSet& axioms, const Equation& target,
                                        int domain_size, int atom_count);

// A closed instance of eq (variables filled from T, F and assigned atoms)
// that the model falsifies, if any.
std::optional<Equation> find_refuting_instance(const FiniteModel& m, const Equation& eq);

// Text format:
//   domain k
//   neg: e0 e1 ...
//   and:   (k rows of k entries)
//   or:    (k rows)
//   T=i F=j
//   atom a=e   (zero or more)
FiniteModel parse_model(std::string_view text);
std::string format_model(const FiniteModel& m);

}  // namespace scl
