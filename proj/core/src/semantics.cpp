#include "sclogic/semantics.hpp"

namespace scl {

namespace {

EvalTree se_rec(const Term& p, const VarEnv* env, TreeOps& ops) {
    using Kind = Term::Kind;
    const EvalTree t = EvalTree::leaf(true);
    const EvalTree f = EvalTree::leaf(false);
    switch (p.kind()) {
        case Kind::ConstT: return t;
        case Kind::ConstF: return f;
        case Kind::Atom: return EvalTree::node(p.name(), t, f);
        case Kind::Var: {
            if (env) {
                auto it = env->find(p.name());
                if (it != env->end()) return it->second;
            }
            throw error("cannot evaluate open term: unbound variable '" + p.name() + "'");
        }
        case Kind::Not: return ops.replace(se_rec(p.arg(), env, ops), f, t);
        case Kind::SeqAnd: {
            EvalTree l = se_rec(p.lhs(), env, ops);
            return ops.replace(l, se_rec(p.rhs(), env, ops), f);
        }
        case Kind::SeqOr: {
            EvalTree l = se_rec(p.lhs(), env, ops);
            return ops.replace(l, t, se_rec(p.rhs(), env, ops));
        }
        case Kind::Cond: {
            EvalTree c = se_rec(p.condition(), env, ops);
            EvalTree x = se_rec(p.then_branch(), env, ops);
            EvalTree z = se_rec(p.else_branch(), env, ops);
            return ops.replace(c, x, z);
        }
    }
    throw error("unreachable term kind in se");
}

}  // namespace

EvalTree se(const Term& p) {
    TreeOps ops;
    return se_rec(p, nullptr, ops);
}

EvalTree mse(const Term& p) {
    TreeOps ops;
    return ops.memorize(se_rec(p, nullptr, ops));
}

EvalTree se(const Term& p, const VarEnv& env, TreeOps& ops) {
    return se_rec(p, &env, ops);
}

EvalTree mse(const Term& p, const VarEnv& env, TreeOps& ops) {
    return ops.memorize(se_rec(p, &env, ops));
}

}  // namespace scl
