#include "sclogic/statics.hpp"

#include <algorithm>
#include <set>

namespace scl {

AtomOrdering::AtomOrdering(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    std::set<std::string> seen;
    for (const std::string& a : atoms_) {
        if (a.empty()) throw error("ordering atom name must be nonempty");
        if (!seen.insert(a).second)
            throw error("atom ordering contains duplicate atom '" + a + "'");
    }
}

AtomOrdering AtomOrdering::from_string(std::string_view text) {
    std::vector<std::string> atoms;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t comma = text.find(',', start);
            if (comma == std::string_view::npos) comma = text.size();
            if (comma > start) atoms.emplace_back(text.substr(start, comma - start));
            start = comma + 1;
        }
    } else {
        for (char c : text) atoms.emplace_back(1, c);
    }
    return AtomOrdering(std::move(atoms));
}

bool AtomOrdering::contains(const std::string& name) const {
    return std::find(atoms_.begin(), atoms_.end(), name) != atoms_.end();
}

std::string AtomOrdering::to_string() const {
    bool single = std::all_of(atoms_.begin(), atoms_.end(),
                              [](const std::string& a) { return a.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (i && !single) out += ',';
        out += atoms_[i];
    }
    return out;
}

Term build_E(const AtomOrdering& sigma) {
    Term e = Term::falsity();
    const auto& atoms = sigma.atoms();
    for (auto it = atoms.rbegin(); it != atoms.rend(); ++it)
        e = Term::cond(e, Term::atom(*it), e);
    return e;
}

Term build_D(const AtomOrdering& sigma) {
    Term d = Term::falsity();
    const auto& atoms = sigma.atoms();
    for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
        Term a = Term::atom(*it);
        d = Term::seq_or(Term::seq_and(a, Term::negation(a)), d);
    }
    return d;
}

namespace {

void require_covered(const AtomOrdering& sigma, const Term& p) {
    for (const std::string& a : atom_names(p))
        if (!sigma.contains(a))
            throw error("atom '" + a + "' of the term is missing from the ordering");
}

}  // namespace

EvalTree static_tree(const AtomOrdering& sigma, const Term& p, const VarEnv& env,
                     TreeOps& ops) {
    require_covered(sigma, p);
    EvalTree e = se(build_E(sigma), env, ops);
    EvalTree body = se(p, env, ops);
    return ops.memorize(ops.replace(e, EvalTree::leaf(true), body));
}

EvalTree static_tree(const AtomOrdering& sigma, const Term& p) {
    TreeOps ops;
    return static_tree(sigma, p, {}, ops);
}

EvalTree sse_cond(const AtomOrdering& sigma, const Term& p) {
    if (!p.is_cp_pure())
        throw error("sse_cond expects a term over the conditional signature");
    if (!p.is_closed()) throw error("sse_cond expects a closed term");
    return static_tree(sigma, p);
}

EvalTree sse(const AtomOrdering& sigma, const Term& p) {
    if (!p.is_scl_pure())
        throw error("sse expects a term over the sequential signature");
    if (!p.is_closed()) throw error("sse expects a closed term");
    return sse_cond(sigma, to_cond(p));
}

EvalTree sse_alt(const AtomOrdering& sigma, const Term& p) {
    if (!p.is_scl_pure())
        throw error("sse_alt expects a term over the sequential signature");
    if (!p.is_closed()) throw error("sse_alt expects a closed term");
    require_covered(sigma, p);
    return mse(Term::seq_or(build_D(sigma), p));
}

namespace {

void collect_rows(EvalTree x, const AtomOrdering& sigma, std::size_t level,
                  std::vector<bool>& assignment, std::vector<TruthTableRow>& rows) {
    if (level == sigma.size()) {
        if (!x.is_leaf()) throw error("tree not leveled by the ordering: too deep");
        rows.emplace_back(assignment, x.leaf_value());
        return;
    }
    if (x.is_leaf() || x.atom() != sigma.atoms()[level])
        throw error("tree not leveled by the ordering: expected atom '" +
                    sigma.atoms()[level] + "' at level " + std::to_string(level));
    assignment.push_back(true);
    collect_rows(x.left(), sigma, level + 1, assignment, rows);
    assignment.back() = false;
    collect_rows(x.right(), sigma, level + 1, assignment, rows);
    assignment.pop_back();
}

}  // namespace

std::vector<TruthTableRow> truth_table(EvalTree x, const AtomOrdering& sigma) {
    std::vector<TruthTableRow> rows;
    std::vector<bool> assignment;
    collect_rows(x, sigma, 0, assignment, rows);
    return rows;
}

std::string format_truth_table(EvalTree x, const AtomOrdering& sigma,
                               const std::string& heading) {
    std::vector<TruthTableRow> rows = truth_table(x, sigma);
    std::string out;
    for (const std::string& a : sigma.atoms()) {
        out += a;
        out += ' ';
    }
    out += "| ";
    out += heading;
    out += '\n';
    for (const auto& [assignment, value] : rows) {
        for (std::size_t i = 0; i < assignment.size(); ++i) {
            out += assignment[i] ? 'T' : 'F';
            out += std::string(sigma.atoms()[i].size(), ' ');
        }
        out += "| ";
        out += value ? 'T' : 'F';
        out += '\n';
    }
    return out;
}

}  // namespace scl
