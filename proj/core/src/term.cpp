#include "sclogic/term.hpp"

#include <algorithm>

namespace scl {

namespace {

void collect_names(const Term& t, Term::Kind wanted, std::vector<std::string>& out,
                   std::set<std::string>& seen) {
    using Kind = Term::Kind;
    switch (t.kind()) {
        case Kind::ConstT:
        case Kind::ConstF:
            return;
        case Kind::Atom:
        case Kind::Var:
            if (t.kind() == wanted && seen.insert(t.name()).second) out.push_back(t.name());
            return;
        case Kind::Not:
            collect_names(t.arg(), wanted, out, seen);
            return;
        case Kind::SeqAnd:
        case Kind::SeqOr:
            collect_names(t.lhs(), wanted, out, seen);
            collect_names(t.rhs(), wanted, out, seen);
            return;
        case Kind::Cond:
            collect_names(t.then_branch(), wanted, out, seen);
            collect_names(t.condition(), wanted, out, seen);
            collect_names(t.else_branch(), wanted, out, seen);
            return;
    }
}

}  // namespace

Term Term::make(Kind kind, std::string name, std::vector<Term> kids) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->name = std::move(name);
    node->closed = kind != Kind::Var;
    node->scl_pure = kind != Kind::Cond;
    node->cp_pure = kind != Kind::Not && kind != Kind::SeqAnd && kind != Kind::SeqOr;
    for (const Term& k : kids) {
        node->closed = node->closed && k.is_closed();
        node->scl_pure = node->scl_pure && k.is_scl_pure();
        node->cp_pure = node->cp_pure && k.is_cp_pure();
    }
    node->kids = std::move(kids);
    return Term(std::move(node));
}

Term Term::truth() {
    static const Term t = make(Kind::ConstT, {}, {});
    return t;
}

Term Term::falsity() {
    static const Term f = make(Kind::ConstF, {}, {});
    return f;
}

Term Term::atom(std::string name) {
    if (name.empty()) throw error("atom name must be nonempty");
    return make(Kind::Atom, std::move(name), {});
}

Term Term::var(std::string name) {
    if (name.empty()) throw error("variable name must be nonempty");
    return make(Kind::Var, std::move(name), {});
}

Term Term::negation(Term arg) { return make(Kind::Not, {}, {std::move(arg)}); }

Term Term::seq_and(Term lhs, Term rhs) {
    return make(Kind::SeqAnd, {}, {std::move(lhs), std::move(rhs)});
}

Term Term::seq_or(Term lhs, Term rhs) {
    return make(Kind::SeqOr, {}, {std::move(lhs), std::move(rhs)});
}

Term Term::cond(Term then_branch, Term condition, Term else_branch) {
    return make(Kind::Cond, {},
                {std::move(then_branch), std::move(condition), std::move(else_branch)});
}

const std::string& Term::name() const {
    if (kind() != Kind::Atom && kind() != Kind::Var) throw error("term has no name");
    return node_->name;
}

const Term& Term::arg() const {
    if (kind() != Kind::Not) throw error("term is not a negation");
    return node_->kids[0];
}

const Term& Term::lhs() const {
    if (kind() != Kind::SeqAnd && kind() != Kind::SeqOr) throw error("term is not binary");
    return node_->kids[0];
}

const Term& Term::rhs() const {
    if (kind() != Kind::SeqAnd && kind() != Kind::SeqOr) throw error("term is not binary");
    return node_->kids[1];
}

const Term& Term::then_branch() const {
    if (kind() != Kind::Cond) throw error("term is not a conditional");
    return node_->kids[0];
}

const Term& Term::condition() const {
    if (kind() != Kind::Cond) throw error("term is not a conditional");
    return node_->kids[1];
}

const Term& Term::else_branch() const {
    if (kind() != Kind::Cond) throw error("term is not a conditional");
    return node_->kids[2];
}

std::size_t Term::size() const {
    std::size_t n = 1;
    for (const Term& k : node_->kids) n += k.size();
    return n;
}

bool Term::equal(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    if (a.node_->name != b.node_->name) return false;
    if (a.node_->kids.size() != b.node_->kids.size()) return false;
    for (std::size_t i = 0; i < a.node_->kids.size(); ++i)
        if (!equal(a.node_->kids[i], b.node_->kids[i])) return false;
    return true;
}

Alphabet::Alphabet(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw error("alphabet must be nonempty");
    std::set<std::string> seen;
    for (const std::string& a : atoms_) {
        if (a.empty()) throw error("alphabet atom name must be nonempty");
        if (!seen.insert(a).second) throw error("alphabet contains duplicate atom '" + a + "'");
    }
}

bool Alphabet::contains(const std::string& name) const {
    return std::find(atoms_.begin(), atoms_.end(), name) != atoms_.end();
}

std::vector<std::string> atom_names(const Term& t) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    collect_names(t, Term::Kind::Atom, out, seen);
    return out;
}

std::vector<std::string> variable_names(const Term& t) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    collect_names(t, Term::Kind::Var, out, seen);
    return out;
}

Term dual(const Term& t) {
    using Kind = Term::Kind;
    if (!t.is_scl_pure()) throw error("dual is defined on the sequential signature only");
    switch (t.kind()) {
        case Kind::ConstT: return Term::falsity();
        case Kind::ConstF: return Term::truth();
        case Kind::Atom:
        case Kind::Var: return t;
        case Kind::Not: return Term::negation(dual(t.arg()));
        case Kind::SeqAnd: return Term::seq_or(dual(t.lhs()), dual(t.rhs()));
        case Kind::SeqOr: return Term::seq_and(dual(t.lhs()), dual(t.rhs()));
        case Kind::Cond: break;
    }
    throw error("unreachable term kind in dual");
}

Term to_cond(const Term& t) {
    using Kind = Term::Kind;
    if (!t.is_scl_pure()) throw error("to_cond expects a term without conditionals");
    switch (t.kind()) {
        case Kind::ConstT:
        case Kind::ConstF:
        case Kind::Atom:
        case Kind::Var: return t;
        case Kind::Not:
            return Term::cond(Term::falsity(), to_cond(t.arg()), Term::truth());
        case Kind::SeqAnd:
            return Term::cond(to_cond(t.rhs()), to_cond(t.lhs()), Term::falsity());
        case Kind::SeqOr:
            return Term::cond(Term::truth(), to_cond(t.lhs()), to_cond(t.rhs()));
        case Kind::Cond: break;
    }
    throw error("unreachable term kind in to_cond");
}

Term to_scl(const Term& t) {
    using Kind = Term::Kind;
    if (!t.is_cp_pure()) throw error("to_scl expects a term over the conditional signature");
    switch (t.kind()) {
        case Kind::ConstT:
        case Kind::ConstF:
        case Kind::Atom:
        case Kind::Var: return t;
        case Kind::Cond: {
            Term gy = to_scl(t.condition());
            Term gx = to_scl(t.then_branch());
            Term gz = to_scl(t.else_branch());
            return Term::seq_or(Term::seq_and(gy, gx),
                                Term::seq_and(Term::negation(gy), gz));
        }
        default: break;
    }
    throw error("unreachable term kind in to_scl");
}

Term expand_full_and(const Term& left, const Term& right) {
    if (!left.is_scl_pure() || !right.is_scl_pure())
        throw error("expand_full_and expects terms without conditionals");
    return Term::seq_and(
        Term::seq_or(left, Term::seq_and(right, Term::falsity())), right);
}

Term substitute(const Term& t, const std::map<std::string, Term>& binding) {
    using Kind = Term::Kind;
    switch (t.kind()) {
        case Kind::ConstT:
        case Kind::ConstF:
        case Kind::Atom: return t;
        case Kind::Var: {
            auto it = binding.find(t.name());
            if (it == binding.end()) throw error("unbound variable '" + t.name() + "'");
            if (!it->second.is_closed())
                throw error("substitution for '" + t.name() + "' is not closed");
            return it->second;
        }
        case Kind::Not: return Term::negation(substitute(t.arg(), binding));
        case Kind::SeqAnd:
            return Term::seq_and(substitute(t.lhs(), binding), substitute(t.rhs(), binding));
        case Kind::SeqOr:
            return Term::seq_or(substitute(t.lhs(), binding), substitute(t.rhs(), binding));
        case Kind::Cond:
            return Term::cond(substitute(t.then_branch(), binding),
                              substitute(t.condition(), binding),
                              substitute(t.else_branch(), binding));
    }
    throw error("unreachable term kind in substitute");
}

}  // namespace scl
