#include "sclogic/equivalence.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace scl {

const AtomOrdering& Semantics::order() const {
    if (kind_ != SemanticsKind::Static) throw error("semantics carries no atom ordering");
    return order_;
}

std::string Semantics::to_string() const {
    switch (kind_) {
        case SemanticsKind::Free: return "free";
        case SemanticsKind::Memorizing: return "mem";
        case SemanticsKind::Static: return "static(" + order_.to_string() + ")";
    }
    return "?";
}

EvalTree tree_of(const Semantics& sem, const Term& p, const VarEnv& env, TreeOps& ops) {
    switch (sem.kind()) {
        case SemanticsKind::Free: return se(p, env, ops);
        case SemanticsKind::Memorizing: return mse(p, env, ops);
        case SemanticsKind::Static: return static_tree(sem.order(), p, env, ops);
    }
    throw error("unknown semantics");
}

EvalTree tree_of(const Semantics& sem, const Term& p) {
    TreeOps ops;
    return tree_of(sem, p, {}, ops);
}

bool decide_eq(const Semantics& sem, const Term& p, const Term& q) {
    TreeOps ops;
    return tree_of(sem, p, {}, ops) == tree_of(sem, q, {}, ops);
}

namespace {

struct PoolEntry {
    Term term;
    int depth;
};

}  // namespace

void for_each_term(const EnumerationBudget& budget,
                   const std::function<bool(const Term&)>& fn) {
    std::vector<PoolEntry> pool;
    // Tier 0: constants, then atoms in alphabet order.
    std::vector<Term> tier0;
    if (budget.include_constants) {
        tier0.push_back(Term::truth());
        tier0.push_back(Term::falsity());
    }
    for (const std::string& a : budget.atoms.atoms()) tier0.push_back(Term::atom(a));

    std::size_t tier_begin = 0;
    for (const Term& t : tier0) {
        if (!fn(t)) return;
        if (budget.max_depth > 0) pool.push_back({t, 0});
    }

    for (int d = 1; d <= budget.max_depth; ++d) {
        const bool store = d < budget.max_depth;
        const std::size_t end_prev = pool.size();
        auto emit = [&](Term t) {
            if (!fn(t)) return false;
            if (store) pool.push_back({std::move(t), d});
            return true;
        };
        for (std::size_t i = tier_begin; i < end_prev; ++i)
            if (!emit(Term::negation(pool[i].term))) return;
        for (int op = 0; op < 2; ++op) {
            for (std::size_t i = 0; i < end_prev; ++i) {
                for (std::size_t j = 0; j < end_prev; ++j) {
                    if (std::max(pool[i].depth, pool[j].depth) != d - 1) continue;
                    Term t = op == 0 ? Term::seq_and(pool[i].term, pool[j].term)
                                     : Term::seq_or(pool[i].term, pool[j].term);
                    if (!emit(std::move(t))) return;
                }
            }
        }
        tier_begin = end_prev;
    }
}

std::vector<Term> enumerate_terms(const EnumerationBudget& budget) {
    std::vector<Term> out;
    for_each_term(budget, [&](const Term& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

std::uint64_t enumeration_size(const EnumerationBudget& budget) {
    std::uint64_t exact = budget.atoms.size() + (budget.include_constants ? 2 : 0);
    std::uint64_t cum = exact;      // N_{<=0}
    std::uint64_t prev_cum = 0;     // N_{<=-1}
    std::uint64_t total = exact;
    for (int d = 1; d <= budget.max_depth; ++d) {
        if (cum >= (std::uint64_t(1) << 31)) return UINT64_MAX;  // saturate
        std::uint64_t fresh = exact + 2 * (cum * cum - prev_cum * prev_cum);
        total += fresh;
        prev_cum = cum;
        cum += fresh;
        exact = fresh;
    }
    return total;
}

std::vector<std::string> Equation::variables() const {
    std::vector<std::string> vars = variable_names(lhs);
    for (const std::string& v : variable_names(rhs))
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    return vars;
}

const Equation* AxiomSet::find(const std::string& axiom_name) const {
    for (const Equation& eq : axioms)
        if (eq.name == axiom_name) return &eq;
    return nullptr;
}

namespace {

constexpr std::size_t kOpsCacheLimit = std::size_t(1) << 22;

void check_static_budget(const Semantics& sem, const EnumerationBudget& budget) {
    if (sem.kind() != SemanticsKind::Static) return;
    for (const std::string& a : budget.atoms.atoms())
        if (!sem.order().contains(a))
            throw error("budget atom '" + a + "' is missing from the static ordering");
}

// Evaluates one side of an equation over variable slot trees. The slots hold
// se-images of the bound terms; the per-semantics wrap happens afterwards.
class InstanceEvaluator {
public:
    InstanceEvaluator(const Semantics& sem, std::vector<std::string> vars)
        : sem_(sem), vars_(std::move(vars)) {
        if (sem_.kind() == SemanticsKind::Static)
            e_tree_ = se(build_E(sem_.order()), {}, ops_);
    }

    TreeOps& ops() { return ops_; }

    EvalTree se_slots(const Term& t, const std::vector<EvalTree>& slots) {
        using Kind = Term::Kind;
        const EvalTree tt = EvalTree::leaf(true);
        const EvalTree ff = EvalTree::leaf(false);
        switch (t.kind()) {
            case Kind::ConstT: return tt;
            case Kind::ConstF: return ff;
            case Kind::Atom: return EvalTree::node(t.name(), tt, ff);
            case Kind::Var: {
                auto it = std::find(vars_.begin(), vars_.end(), t.name());
                if (it == vars_.end()) throw error("unbound variable '" + t.name() + "'");
                return slots[std::size_t(it - vars_.begin())];
            }
            case Kind::Not: return ops_.replace(se_slots(t.arg(), slots), ff, tt);
            case Kind::SeqAnd: {
                EvalTree l = se_slots(t.lhs(), slots);
                return ops_.replace(l, se_slots(t.rhs(), slots), ff);
            }
            case Kind::SeqOr: {
                EvalTree l = se_slots(t.lhs(), slots);
                return ops_.replace(l, tt, se_slots(t.rhs(), slots));
            }
            case Kind::Cond: {
                EvalTree c = se_slots(t.condition(), slots);
                EvalTree x = se_slots(t.then_branch(), slots);
                EvalTree z = se_slots(t.else_branch(), slots);
                return ops_.replace(c, x, z);
            }
        }
        throw error("unreachable term kind");
    }

    EvalTree eval(const Term& side, const std::vector<EvalTree>& slots) {
        EvalTree raw = se_slots(side, slots);
        switch (sem_.kind()) {
            case SemanticsKind::Free: return raw;
            case SemanticsKind::Memorizing: return ops_.memorize(raw);
            case SemanticsKind::Static:
                return ops_.memorize(ops_.replace(e_tree_, EvalTree::leaf(true), raw));
        }
        throw error("unknown semantics");
    }

    void maybe_trim() {
        if (ops_.cache_size() > kOpsCacheLimit) {
            ops_.clear();
            if (sem_.kind() == SemanticsKind::Static)
                e_tree_ = se(build_E(sem_.order()), {}, ops_);
        }
    }

private:
    Semantics sem_;
    std::vector<std::string> vars_;
    TreeOps ops_;
    EvalTree e_tree_ = EvalTree::leaf(false);
};

// First-in-enumeration-order representative of every congruence class in the
// pool under sem.
std::vector<Term> class_representatives(const Semantics& sem, const std::vector<Term>& pool) {
    std::vector<Term> reps;
    std::unordered_set<std::uint32_t> seen;
    TreeOps ops;
    for (const Term& t : pool) {
        EvalTree tree = tree_of(sem, t, {}, ops);
        if (seen.insert(tree.id()).second) reps.push_back(t);
        if (ops.cache_size() > kOpsCacheLimit) ops.clear();
    }
    return reps;
}

bool product_exceeds(std::size_t base, std::size_t exponent, std::uint64_t cap) {
    std::uint64_t product = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (base != 0 && product > cap / base) return true;
        product *= base;
    }
    return product > cap;
}

}  // namespace

LawReport validate_law(const Semantics& sem, const Equation& eq,
                       const EnumerationBudget& budget, const ValidateOptions& options) {
    check_static_budget(sem, budget);

    const std::vector<std::string> vars = eq.variables();
    const std::size_t k = vars.size();
    LawReport report;
    InstanceEvaluator evaluator(sem, vars);

    std::vector<Term> pool = enumerate_terms(budget);
    if (pool.empty()) throw error("empty term pool");

    if (k == 0) {
        report.instances = 1;
        report.strategy = "closed equation";
        std::vector<EvalTree> slots;
        if (evaluator.eval(eq.lhs, slots) != evaluator.eval(eq.rhs, slots))
            report.counterexamples.push_back({});
        return report;
    }

    auto run_exhaustive = [&](const std::vector<Term>& reps) {
        std::vector<EvalTree> rep_trees;
        rep_trees.reserve(reps.size());
        {
            TreeOps se_ops;
            for (const Term& t : reps) rep_trees.push_back(se(t, {}, se_ops));
        }
        std::vector<std::size_t> idx(k, 0);
        std::vector<EvalTree> slots(k, EvalTree::leaf(false));
        while (true) {
            for (std::size_t i = 0; i < k; ++i) slots[i] = rep_trees[idx[i]];
            ++report.instances;
            if (evaluator.eval(eq.lhs, slots) != evaluator.eval(eq.rhs, slots)) {
                Counterexample cex;
                for (std::size_t i = 0; i < k; ++i) cex.binding.emplace_back(vars[i], reps[idx[i]]);
                report.counterexamples.push_back(std::move(cex));
            }
            evaluator.maybe_trim();
            std::size_t pos = k;
            while (pos > 0) {
                --pos;
                if (++idx[pos] < reps.size()) break;
                idx[pos] = 0;
                if (pos == 0) return;
            }
        }
    };

    std::vector<Term> reps = class_representatives(sem, pool);
    if (!product_exceeds(reps.size(), k, options.exhaustive_cap)) {
        report.strategy = "exhaustive over " + std::to_string(reps.size()) +
                          " class representatives (depth <= " +
                          std::to_string(budget.max_depth) + ")";
        run_exhaustive(reps);
        return report;
    }

    // Fall back: exhaustive over the shallow pool's representatives, then a
    // seeded random sample of full-pool bindings.
    EnumerationBudget shallow = budget;
    shallow.max_depth = std::min(budget.max_depth, 1);
    std::vector<Term> shallow_reps = class_representatives(sem, enumerate_terms(shallow));
    if (product_exceeds(shallow_reps.size(), k, options.exhaustive_cap * 16)) {
        shallow.max_depth = 0;
        shallow_reps = class_representatives(sem, enumerate_terms(shallow));
    }
    report.strategy = "exhaustive over " + std::to_string(shallow_reps.size()) +
                      " class representatives (depth <= " +
                      std::to_string(shallow.max_depth) + ") + " +
                      std::to_string(options.sample_count) + " seeded samples";
    run_exhaustive(shallow_reps);

    std::mt19937_64 rng(options.seed);
    std::vector<EvalTree> pool_trees;
    pool_trees.reserve(pool.size());
    {
        TreeOps se_ops;
        for (const Term& t : pool) {
            pool_trees.push_back(se(t, {}, se_ops));
            if (se_ops.cache_size() > kOpsCacheLimit) se_ops.clear();
        }
    }
    std::vector<EvalTree> slots(k, EvalTree::leaf(false));
    std::vector<std::size_t> choice(k, 0);
    for (int s = 0; s < options.sample_count; ++s) {
        for (std::size_t i = 0; i < k; ++i) {
            choice[i] = std::size_t(rng() % pool.size());
            slots[i] = pool_trees[choice[i]];
        }
        ++report.instances;
        if (evaluator.eval(eq.lhs, slots) != evaluator.eval(eq.rhs, slots)) {
            Counterexample cex;
            for (std::size_t i = 0; i < k; ++i) cex.binding.emplace_back(vars[i], pool[choice[i]]);
            report.counterexamples.push_back(std::move(cex));
        }
        evaluator.maybe_trim();
    }
    return report;
}

namespace {

std::uint64_t census_ceiling(const Semantics& sem, const EnumerationBudget& budget) {
    if (sem.kind() == SemanticsKind::Memorizing) {
        BigNat n = count_memorizing(unsigned(budget.atoms.size()));
        if (n.fits_u64()) return n.as_u64();
    } else if (sem.kind() == SemanticsKind::Static) {
        if (sem.order().size() <= 5) return count_static(unsigned(sem.order().size())).as_u64();
    }
    return UINT64_MAX;
}

}  // namespace

std::uint64_t census_distinct_trees(const Semantics& sem, const EnumerationBudget& budget) {
    check_static_budget(sem, budget);
    const std::uint64_t ceiling = census_ceiling(sem, budget);
    std::unordered_set<std::uint32_t> seen;
    TreeOps ops;
    for_each_term(budget, [&](const Term& t) {
        seen.insert(tree_of(sem, t, {}, ops).id());
        if (ops.cache_size() > kOpsCacheLimit) ops.clear();
        return std::uint64_t(seen.size()) < ceiling;
    });
    return seen.size();
}

BigNat count_memorizing(unsigned n) {
    BigNat t = 2;
    for (unsigned i = 1; i <= n; ++i) t = BigNat(i) * t * t + BigNat(2);
    return t;
}

BigNat count_static(unsigned n) {
    BigNat t = 2;
    for (unsigned i = 0; i < n; ++i) t = t * t;
    return t;
}

namespace {

void decision_trees_over(const std::vector<std::string>& atoms, std::uint32_t mask,
                         std::map<std::uint32_t, std::vector<EvalTree>>& memo) {
    if (memo.count(mask)) return;
    std::vector<EvalTree> out{EvalTree::leaf(true), EvalTree::leaf(false)};
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (!(mask & (1u << i))) continue;
        std::uint32_t rest = mask & ~(1u << i);
        decision_trees_over(atoms, rest, memo);
        const std::vector<EvalTree>& sub = memo.at(rest);
        for (EvalTree l : sub)
            for (EvalTree r : sub) out.push_back(EvalTree::node(atoms[i], l, r));
    }
    memo.emplace(mask, std::move(out));
}

}  // namespace

std::vector<EvalTree> enumerate_decision_trees(const std::vector<std::string>& atoms) {
    if (atoms.size() > 3)
        throw error("decision-tree enumeration is limited to 3 atoms");
    std::set<std::string> seen(atoms.begin(), atoms.end());
    if (seen.size() != atoms.size()) throw error("duplicate atom in alphabet");
    std::map<std::uint32_t, std::vector<EvalTree>> memo;
    std::uint32_t full = (1u << atoms.size()) - 1;
    decision_trees_over(atoms, full, memo);
    return memo.at(full);
}

std::optional<std::pair<Term, Term>> find_separating_witness(
    const Semantics& sem_a, const Semantics& sem_b, const EnumerationBudget& budget) {
    check_static_budget(sem_a, budget);
    check_static_budget(sem_b, budget);
    struct Prior {
        EvalTree a_tree;
        std::size_t index;
    };
    std::unordered_map<std::uint32_t, std::vector<Prior>> groups;
    std::vector<Term> terms;
    TreeOps ops;
    std::optional<std::pair<Term, Term>> result;
    for_each_term(budget, [&](const Term& t) {
        EvalTree b_tree = tree_of(sem_b, t, {}, ops);
        EvalTree a_tree = tree_of(sem_a, t, {}, ops);
        auto& prior = groups[b_tree.id()];
        for (const Prior& p : prior) {
            if (p.a_tree != a_tree) {
                result = std::make_pair(terms[p.index], t);
                return false;
            }
        }
        prior.push_back({a_tree, terms.size()});
        terms.push_back(t);
        if (ops.cache_size() > kOpsCacheLimit) ops.clear();
        return true;
    });
    return result;
}

}  // namespace scl
