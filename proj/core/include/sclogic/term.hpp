#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "sclogic/error.hpp"

namespace scl {

// Immutable term over the sequential signature {T, F, !, &&, ||, atoms},
// the conditional signature {T, F, _<|_|>_, atoms}, or a mixture of both.
// Variables are permitted so that terms can express open identities; every
// evaluation-tree operation rejects them.
//
// cond(x, y, z) is "if y then x else z": y is evaluated first.
class Term {
public:
    enum class Kind : std::uint8_t {
        ConstT,
        ConstF,
        Atom,
        Var,
        Not,
        SeqAnd,
        SeqOr,
        Cond,
    };

    static Term truth();
    static Term falsity();
    static Term atom(std::string name);
    static Term var(std::string name);
    static Term negation(Term arg);
    static Term seq_and(Term lhs, Term rhs);
    static Term seq_or(Term lhs, Term rhs);
    static Term cond(Term then_branch, Term condition, Term else_branch);

    Kind kind() const { return node_->kind; }

    // Atom / Var only.
    const std::string& name() const;

    // Not only.
    const Term& arg() const;

    // SeqAnd / SeqOr only.
    const Term& lhs() const;
    const Term& rhs() const;

    // Cond only.
    const Term& then_branch() const;
    const Term& condition() const;
    const Term& else_branch() const;

    bool is_closed() const { return node_->closed; }      // no Var anywhere
    bool is_scl_pure() const { return node_->scl_pure; }  // no Cond anywhere
    bool is_cp_pure() const { return node_->cp_pure; }    // no Not/SeqAnd/SeqOr

    std::size_t size() const;  // node count

    friend bool operator==(const Term& a, const Term& b) { return equal(a, b); }
    friend bool operator!=(const Term& a, const Term& b) { return !equal(a, b); }

private:
    struct Node {
        Kind kind;
        bool closed;
        bool scl_pure;
        bool cp_pure;
        std::string name;         // Atom / Var
        std::vector<Term> kids;   // arity per kind
    };

    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static bool equal(const Term& a, const Term& b);
    static Term make(Kind kind, std::string name, std::vector<Term> kids);

    std::shared_ptr<const Node> node_;
};

// Nonempty, duplicate-free, ordered atom universe.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> atoms);
    const std::vector<std::string>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool contains(const std::string& name) const;

private:
    std::vector<std::string> atoms_;
};

// Atom names occurring in t, in first-occurrence order.
std::vector<std::string> atom_names(const Term& t);
// Variable names occurring in t, in first-occurrence order.
std::vector<std::string> variable_names(const Term& t);

// Duality on the sequential signature: swaps T/F and &&/||, fixes atoms,
// variables and negation. Involution. Rejects terms containing cond.
Term dual(const Term& t);

// Translation into the conditional signature:
//   f(!t) = F <| f(t) |> T,  f(s && t) = f(t) <| f(s) |> F,
//   f(s || t) = T <| f(s) |> f(t);  constants, atoms and variables are fixed.
// Rejects terms containing cond.
Term to_cond(const Term& t);

// Translation back into the sequential signature:
//   g(x <| y |> z) = (g(y) && g(x)) || (!g(y) && g(z)).
// Rejects terms containing !, && or ||.
Term to_scl(const Term& t);

// Full-evaluation conjunction, expanded into the sequential signature:
// (left || (right && F)) && right. Both arguments must be cond-free.
Term expand_full_and(const Term& left, const Term& right);

// Simultaneous substitution of closed terms for variables. Every variable of
// t must be bound and every bound term must be closed.
Term substitute(const Term& t, const std::map<std::string, Term>& binding);

}  // namespace scl
