#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sclogic/semantics.hpp"
#include "sclogic/term.hpp"
#include "sclogic/tree.hpp"

namespace scl {

// Duplicate-free atom sequence; the empty ordering is permitted.
class AtomOrdering {
public:
    AtomOrdering() = default;
    explicit AtomOrdering(std::vector<std::string> atoms);

    // "ab" -> atoms a, b (one per character); "foo,bar" -> multi-character
    // atoms split on commas.
    static AtomOrdering from_string(std::string_view text);

    const std::vector<std::string>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }
    bool contains(const std::string& name) const;
    std::string to_string() const;

    friend bool operator==(const AtomOrdering& a, const AtomOrdering& b) {
        return a.atoms_ == b.atoms_;
    }

private:
    std::vector<std::string> atoms_;
};

// E over sigma: E_eps = F, E_(a rho) = E_rho <| a |> E_rho. Closed, cond-only.
Term build_E(const AtomOrdering& sigma);

// D over sigma: D_eps = F, D_(a rho) = (a && !a) || D_rho. Closed, cond-free.
Term build_D(const AtomOrdering& sigma);

// Static evaluation of a closed conditional-signature term whose atoms are
// covered by sigma: mse(T <| E_sigma |> p). The result is a perfect tree of
// depth |sigma| whose level i tests sigma's i-th atom.
EvalTree sse_cond(const AtomOrdering& sigma, const Term& p);

// Static evaluation of a closed sequential-signature term: sse_cond applied
// to the conditional translation of p.
EvalTree sse(const AtomOrdering& sigma, const Term& p);

// Equivalent construction without the conditional: mse(D_sigma || p).
EvalTree sse_alt(const AtomOrdering& sigma, const Term& p);

// Uniform static evaluation for any closed term (either signature or mixed);
// agrees with sse on sequential terms and with sse_cond on conditional terms.
EvalTree static_tree(const AtomOrdering& sigma, const Term& p);
EvalTree static_tree(const AtomOrdering& sigma, const Term& p, const VarEnv& env, TreeOps& ops);

// One row per assignment; assignment[i] is the value of sigma's i-th atom.
// Rows in textbook order: the first atom varies slowest, T before F.
using TruthTableRow = std::pair<std::vector<bool>, bool>;

// Extracts all 2^|sigma| rows from a perfect tree leveled exactly by sigma.
std::vector<TruthTableRow> truth_table(EvalTree x, const AtomOrdering& sigma);

// Plain-text table: one column per atom, a separator, and a result column.
std::string format_truth_table(EvalTree x, const AtomOrdering& sigma,
                               const std::string& heading);

}  // namespace scl
