#pragma once

// Test-only helpers: a classical truth-functional evaluator used as an
// independent oracle, and seeded random generators for terms and trees.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "sclogic/term.hpp"
#include "sclogic/tree.hpp"

namespace scltest {

// Plain two-valued evaluation, ignoring evaluation order entirely.
inline bool classical_eval(const scl::Term& t, const std::map<std::string, bool>& env) {
    using Kind = scl::Term::Kind;
    switch (t.kind()) {
        case Kind::ConstT: return true;
        case Kind::ConstF: return false;
        case Kind::Atom: return env.at(t.name());
        case Kind::Var: throw scl::error("classical_eval: open term");
        case Kind::Not: return !classical_eval(t.arg(), env);
        case Kind::SeqAnd: {
            bool l = classical_eval(t.lhs(), env);
            bool r = classical_eval(t.rhs(), env);
            return l && r;
        }
        case Kind::SeqOr: {
            bool l = classical_eval(t.lhs(), env);
            bool r = classical_eval(t.rhs(), env);
            return l || r;
        }
        case Kind::Cond:
            return classical_eval(t.condition(), env) ? classical_eval(t.then_branch(), env)
                                                      : classical_eval(t.else_branch(), env);
    }
    throw scl::error("classical_eval: unreachable");
}

struct TermGen {
    std::mt19937 rng;
    std::vector<std::string> atoms;
    std::vector<std::string> vars;   // empty = closed terms only
    bool with_cond = false;

    explicit TermGen(unsigned seed, std::vector<std::string> atom_names = {"a", "b"},
                     std::vector<std::string> var_names = {}, bool cond = false)
        : rng(seed), atoms(std::move(atom_names)), vars(std::move(var_names)),
          with_cond(cond) {}

    scl::Term operator()(int max_depth) {
        using scl::Term;
        unsigned leaf_kinds = 2 + unsigned(atoms.size()) + unsigned(vars.size());
        if (max_depth == 0) {
            unsigned pick = rng() % leaf_kinds;
            if (pick == 0) return Term::truth();
            if (pick == 1) return Term::falsity();
            pick -= 2;
            if (pick < atoms.size()) return Term::atom(atoms[pick]);
            return Term::var(vars[pick - atoms.size()]);
        }
        unsigned pick = rng() % (with_cond ? 5u : 4u);
        switch (pick) {
            case 0: return (*this)(0);
            case 1: return Term::negation((*this)(max_depth - 1));
            case 2: return Term::seq_and((*this)(max_depth - 1), (*this)(max_depth - 1));
            case 3: return Term::seq_or((*this)(max_depth - 1), (*this)(max_depth - 1));
            default:
                return Term::cond((*this)(max_depth - 1), (*this)(max_depth - 1),
                                  (*this)(max_depth - 1));
        }
    }
};

struct TreeGen {
    std::mt19937 rng;
    std::vector<std::string> atoms;

    explicit TreeGen(unsigned seed, std::vector<std::string> atom_names = {"a", "b", "c"})
        : rng(seed), atoms(std::move(atom_names)) {}

    scl::EvalTree operator()(int max_depth) {
        using scl::EvalTree;
        if (max_depth == 0 || rng() % 3 == 0) return EvalTree::leaf(rng() % 2 == 0);
        const std::string& atom = atoms[rng() % atoms.size()];
        return EvalTree::node(atom, (*this)(max_depth - 1), (*this)(max_depth - 1));
    }
};

}  // namespace scltest
