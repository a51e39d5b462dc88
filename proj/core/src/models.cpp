#include "sclogic/models.hpp"

#include <algorithm>
#include <sstream>

#include "sclogic/laws.hpp"
#include "sclogic/parser.hpp"

namespace scl {

void FiniteModel::validate() const {
    const int k = domain_size;
    auto in_range = [k](int e) { return e >= 0 && e < k; };
    if (k <= 0) throw error("model domain must be nonempty");
    if (int(neg_table.size()) != k) throw error("neg table must have k entries");
    if (int(and_table.size()) != k || int(or_table.size()) != k)
        throw error("operation tables must have k rows");
    for (int e : neg_table)
        if (!in_range(e)) throw error("neg table entry out of range");
    for (const auto& table : {and_table, or_table})
        for (const auto& row : table) {
            if (int(row.size()) != k) throw error("operation table row must have k entries");
            for (int e : row)
                if (!in_range(e)) throw error("operation table entry out of range");
        }
    if (!in_range(true_elem) || !in_range(false_elem))
        throw error("designated truth values out of range");
    for (const auto& [name, e] : atom_assignment)
        if (!in_range(e)) throw error("atom assignment for '" + name + "' out of range");
}

int eval_in_model(const FiniteModel& m, const Term& t,
                  const std::map<std::string, int>& binding) {
    using Kind = Term::Kind;
    switch (t.kind()) {
        case Kind::ConstT: return m.true_elem;
        case Kind::ConstF: return m.false_elem;
        case Kind::Atom: {
            auto it = m.atom_assignment.find(t.name());
            if (it == m.atom_assignment.end())
                throw error("model assigns no value to atom '" + t.name() + "'");
            return it->second;
        }
        case Kind::Var: {
            auto it = binding.find(t.name());
            if (it == binding.end()) throw error("unbound variable '" + t.name() + "'");
            return it->second;
        }
        case Kind::Not: return m.neg_table[eval_in_model(m, t.arg(), binding)];
        case Kind::SeqAnd:
            return m.and_table[eval_in_model(m, t.lhs(), binding)]
                              [eval_in_model(m, t.rhs(), binding)];
        case Kind::SeqOr:
            return m.or_table[eval_in_model(m, t.lhs(), binding)]
                             [eval_in_model(m, t.rhs(), binding)];
        case Kind::Cond: throw error("finite models interpret the sequential signature only");
    }
    throw error("unreachable term kind in eval_in_model");
}

bool check_equation(const FiniteModel& m, const Equation& eq) {
    std::vector<std::string> vars = eq.variables();
    std::map<std::string, int> binding;
    std::vector<int> values(vars.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < vars.size(); ++i) binding[vars[i]] = values[i];
        if (eval_in_model(m, eq.lhs, binding) != eval_in_model(m, eq.rhs, binding))
            return false;
        std::size_t pos = vars.size();
        if (pos == 0) return true;
        while (pos > 0) {
            --pos;
            if (++values[pos] < m.domain_size) break;
            values[pos] = 0;
            if (pos == 0) return true;
        }
    }
}

bool IndependenceCheck::passed() const {
    if (!refuted) return false;
    return std::all_of(axiom_results.begin(), axiom_results.end(),
                       [](const AxiomResult& r) { return r.satisfied; });
}

IndependenceCheck verify_independence(const IndependenceFixture& fx) {
    fx.model.validate();
    if (!fx.axioms.find(fx.dropped))
        throw error("dropped axiom '" + fx.dropped + "' is not in the set");
    IndependenceCheck out;
    for (const Equation& ax : fx.axioms.axioms) {
        if (ax.name == fx.dropped) continue;
        out.axiom_results.push_back({ax.name, check_equation(fx.model, ax)});
    }
    out.refuted = !check_equation(fx.model, fx.refuting);
    return out;
}

namespace {

Equation make_eq(const std::string& name, const std::string& lhs, const std::string& rhs) {
    return Equation{name, parse(lhs), parse(rhs)};
}

FiniteModel make_model(int k, std::vector<int> neg, std::vector<std::vector<int>> andt,
                       std::vector<std::vector<int>> ort,
                       std::map<std::string, int> atoms = {}) {
    FiniteModel m;
    m.domain_size = k;
    m.neg_table = std::move(neg);
    m.and_table = std::move(andt);
    m.or_table = std::move(ort);
    m.true_elem = 1;
    m.false_elem = 0;
    m.atom_assignment = std::move(atoms);
    m.validate();
    return m;
}

std::vector<IndependenceFixture> make_fixtures() {
    const AxiomSet& eqsscl = axiom_set("eqsscl");
    std::vector<IndependenceFixture> out;

    out.push_back({"neg",
                   make_model(4, {3, 2, 1, 0},
                              {{0, 0, 2, 2}, {0, 1, 2, 3}, {2, 2, 2, 2}, {2, 3, 2, 3}},
                              {{0, 1, 0, 1}, {1, 1, 1, 1}, {0, 1, 2, 3}, {1, 1, 3, 3}}),
                   eqsscl, "neg", make_eq("refute-neg", "F", "!T")});

    out.push_back({"or",
                   make_model(3, {1, 0, 0},
                              {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}},
                              {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, {{"a", 2}}),
                   eqsscl, "or", make_eq("refute-or", "F || a", "!(!F && !a)")});

    out.push_back({"tand",
                   make_model(2, {1, 0}, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}),
                   eqsscl, "tand", make_eq("refute-tand", "T && F", "F")});

    out.push_back({"abs",
                   make_model(2, {0, 0}, {{0, 0}, {0, 1}}, {{0, 0}, {0, 0}}),
                   eqsscl, "abs", make_eq("refute-abs", "T && (T || F)", "T")});

    out.push_back({"mem",
                   make_model(3, {1, 0, 0},
                              {{0, 0, 2}, {0, 1, 2}, {2, 2, 0}},
                              {{0, 1, 1}, {1, 1, 1}, {1, 1, 1}}, {{"a", 2}}),
                   eqsscl, "mem",
                   make_eq("refute-mem", "(F || F) && a", "(!F && (F && a)) || (F && a)")});

    out.push_back({"comm",
                   make_model(3, {1, 0, 2},
                              {{0, 0, 0}, {0, 1, 2}, {2, 2, 2}},
                              {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, {{"a", 2}}),
                   eqsscl, "comm", make_eq("refute-comm", "F && a", "a && F")});

    return out;
}

}  // namespace

const std::vector<IndependenceFixture>& builtin_fixtures() {
    static const std::vector<IndependenceFixture> fixtures = make_fixtures();
    return fixtures;
}

const IndependenceFixture& builtin_fixture(const std::string& name) {
    for (const IndependenceFixture& fx : builtin_fixtures())
        if (fx.name == name) return fx;
    throw error("no builtin fixture named '" + name + "'");
}

namespace {

// Closure of {T, F} and the assigned atoms under the model's operations,
// remembering a witnessing closed term for every reachable element.
std::map<int, Term> generated_subalgebra(const FiniteModel& m) {
    std::map<int, Term> reached;
    reached.emplace(m.true_elem, Term::truth());
    reached.emplace(m.false_elem, Term::falsity());
    for (const auto& [name, e] : m.atom_assignment) reached.emplace(e, Term::atom(name));
    bool grew = true;
    while (grew) {
        grew = false;
        std::map<int, Term> next = reached;
        for (const auto& [e, t] : reached) {
            if (next.emplace(m.neg_table[e], Term::negation(t)).second) grew = true;
            for (const auto& [e2, t2] : reached) {
                if (next.emplace(m.and_table[e][e2], Term::seq_and(t, t2)).second) grew = true;
                if (next.emplace(m.or_table[e][e2], Term::seq_or(t, t2)).second) grew = true;
            }
        }
        reached = std::move(next);
    }
    return reached;
}

bool refutable_in(const FiniteModel& m, const Equation& eq,
                  const std::map<int, Term>& generated, Equation* instance_out) {
    std::vector<std::string> vars = eq.variables();
    std::vector<int> elems;
    for (const auto& [e, t] : generated) elems.push_back(e);
    std::vector<std::size_t> idx(vars.size(), 0);
    if (vars.empty()) {
        if (check_equation(m, eq)) return false;
        if (instance_out) *instance_out = eq;
        return true;
    }
    while (true) {
        std::map<std::string, int> binding;
        for (std::size_t i = 0; i < vars.size(); ++i) binding[vars[i]] = elems[idx[i]];
        if (eval_in_model(m, eq.lhs, binding) != eval_in_model(m, eq.rhs, binding)) {
            if (instance_out) {
                std::map<std::string, Term> subst;
                for (std::size_t i = 0; i < vars.size(); ++i)
                    subst.emplace(vars[i], generated.at(elems[idx[i]]));
                *instance_out = Equation{eq.name + "-instance", substitute(eq.lhs, subst),
                                         substitute(eq.rhs, subst)};
            }
            return true;
        }
        std::size_t pos = vars.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < elems.size()) break;
            idx[pos] = 0;
            if (pos == 0) return false;
        }
    }
}

Term rename_vars(const Term& t, const std::map<std::string, std::string>& renaming) {
    using Kind = Term::Kind;
    switch (t.kind()) {
        case Kind::ConstT:
        case Kind::ConstF:
        case Kind::Atom: return t;
        case Kind::Var: return Term::var(renaming.at(t.name()));
        case Kind::Not: return Term::negation(rename_vars(t.arg(), renaming));
        case Kind::SeqAnd:
            return Term::seq_and(rename_vars(t.lhs(), renaming), rename_vars(t.rhs(), renaming));
        case Kind::SeqOr:
            return Term::seq_or(rename_vars(t.lhs(), renaming), rename_vars(t.rhs(), renaming));
        case Kind::Cond:
            return Term::cond(rename_vars(t.then_branch(), renaming),
                              rename_vars(t.condition(), renaming),
                              rename_vars(t.else_branch(), renaming));
    }
    throw error("unreachable term kind in rename_vars");
}

// Renames variables to v0, v1, ... in first-occurrence order across
// lhs then rhs, so equations can be compared up to variable names.
std::string canonical_equation(const Term& lhs, const Term& rhs) {
    std::map<std::string, std::string> renaming;
    int counter = 0;
    for (const Term& side : {lhs, rhs})
        for (const std::string& v : variable_names(side))
            if (!renaming.count(v)) renaming.emplace(v, "v" + std::to_string(counter++));
    return render(rename_vars(lhs, renaming)) + " = " + render(rename_vars(rhs, renaming));
}

bool matches_pattern(const Equation& eq, const char* pattern) {
    std::string p(pattern);
    std::size_t sep = p.find('=');
    Term pl = parse(p.substr(0, sep)), pr = parse(p.substr(sep + 1));
    std::string want = canonical_equation(pl, pr);
    return canonical_equation(eq.lhs, eq.rhs) == want ||
           canonical_equation(eq.rhs, eq.lhs) == want;
}

// Enumerates candidate models with cheap pruning: designated values and the
// negation table first, then the conjunction table narrowed by identity and
// commutativity axioms when present, and the disjunction table computed from
// a De Morgan definition when present. Axioms are recognized structurally,
// not by name.
template <typename Fn>
void enumerate_models(const std::vector<const Equation*>& active, int k, int atom_count,
                      const Fn& visit) {
    auto has = [&](const char* pattern) {
        return std::any_of(active.begin(), active.end(),
                           [&](const Equation* eq) { return matches_pattern(*eq, pattern); });
    };
    const bool has_neg = has("F = !T");
    const bool has_or = has("$x || $y = !(!$x && !$y)");
    const bool has_tand = has("T && $x = $x");
    const bool has_comm = has("$x && $y = $y && $x");

    FiniteModel m;
    m.domain_size = k;

    auto check_active_subset = [&](auto pred) {
        for (const Equation* eq : active)
            if (pred(*eq) && !check_equation(m, *eq)) return false;
        return true;
    };

    auto uses_or = [](const Equation& eq) {
        struct {
            bool found = false;
            void walk(const Term& t) {
                if (found) return;
                switch (t.kind()) {
                    case Term::Kind::SeqOr: found = true; return;
                    case Term::Kind::Not: walk(t.arg()); return;
                    case Term::Kind::SeqAnd: walk(t.lhs()); walk(t.rhs()); return;
                    default: return;
                }
            }
        } scan;
        scan.walk(eq.lhs);
        scan.walk(eq.rhs);
        return scan.found;
    };

    for (int f = 0; f < k; ++f) {
        for (int t = 0; t < k; ++t) {
            m.false_elem = f;
            m.true_elem = t;
            // Negation tables.
            std::vector<int> neg(k, 0);
            std::uint64_t neg_count = 1;
            for (int i = 0; i < k; ++i) neg_count *= std::uint64_t(k);
            for (std::uint64_t nc = 0; nc < neg_count; ++nc) {
                std::uint64_t v = nc;
                for (int i = 0; i < k; ++i) {
                    neg[i] = int(v % k);
                    v /= k;
                }
                if (has_neg && neg[t] != f) continue;
                m.neg_table = neg;
                // Conjunction tables. (tand) fixes row t, (comm) the lower
                // triangle and, together with (tand), column t.
                std::vector<std::pair<int, int>> free_cells;
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) {
                        if (has_tand && i == t) continue;
                        if (has_comm && has_tand && j == t) continue;
                        if (has_comm && j < i) continue;
                        free_cells.emplace_back(i, j);
                    }
                std::uint64_t and_count = 1;
                for (std::size_t i = 0; i < free_cells.size(); ++i)
                    and_count *= std::uint64_t(k);
                for (std::uint64_t ac = 0; ac < and_count; ++ac) {
                    m.and_table.assign(k, std::vector<int>(k, 0));
                    std::uint64_t w = ac;
                    for (auto [i, j] : free_cells) {
                        m.and_table[i][j] = int(w % k);
                        w /= k;
                    }
                    if (has_tand)
                        for (int j = 0; j < k; ++j) m.and_table[t][j] = j;
                    if (has_comm && has_tand)
                        for (int i = 0; i < k; ++i) m.and_table[i][t] = i;
                    if (has_comm)
                        for (int i = 0; i < k; ++i)
                            for (int j = 0; j < i; ++j)
                                if (!(has_tand && (j == t || i == t)))
                                    m.and_table[i][j] = m.and_table[j][i];
                    // Disjunction tables.
                    if (has_or) {
                        m.or_table.assign(k, std::vector<int>(k, 0));
                        for (int i = 0; i < k; ++i)
                            for (int j = 0; j < k; ++j)
                                m.or_table[i][j] = neg[m.and_table[neg[i]][neg[j]]];
                        if (!check_active_subset([](const Equation&) { return true; }))
                            continue;
                        if (visit(m, atom_count)) return;
                    } else {
                        if (!check_active_subset(
                                [&](const Equation& eq) { return !uses_or(eq); }))
                            continue;
                        std::uint64_t or_count = 1;
                        for (int i = 0; i < k * k; ++i) or_count *= std::uint64_t(k);
                        for (std::uint64_t oc = 0; oc < or_count; ++oc) {
                            m.or_table.assign(k, std::vector<int>(k, 0));
                            std::uint64_t u = oc;
                            for (int i = 0; i < k; ++i)
                                for (int j = 0; j < k; ++j) {
                                    m.or_table[i][j] = int(u % k);
                                    u /= k;
                                }
                            if (!check_active_subset([](const Equation&) { return true; }))
                                continue;
                            if (visit(m, atom_count)) return;
                        }
                    }
                }
            }
        }
    }
}

std::optional<FiniteModel> search_refuting(const AxiomSet& axioms, const std::string& dropped,
                                           const Equation& target, int domain_size,
                                           int atom_count) {
    if (domain_size < 1 || domain_size > 3)
        throw error("model search supports domain sizes 1 to 3");
    if (atom_count < 0 || atom_count > 1) throw error("model search supports at most one atom");
    if (target.lhs == target.rhs) return std::nullopt;
    for (const std::string& a : atom_names(target.lhs))
        if (atom_count < 1 || a != "a")
            throw error("search targets may use at most the atom 'a'");
    for (const std::string& a : atom_names(target.rhs))
        if (atom_count < 1 || a != "a")
            throw error("search targets may use at most the atom 'a'");

    std::vector<const Equation*> active;
    for (const Equation& eq : axioms.axioms) {
        if (eq.name == dropped) continue;
        if (!atom_names(eq.lhs).empty() || !atom_names(eq.rhs).empty())
            throw error("search axioms must be atom-free");
        active.push_back(&eq);
    }

    std::optional<FiniteModel> found;
    enumerate_models(active, domain_size, atom_count, [&](FiniteModel& m, int atoms) {
        auto try_model = [&]() {
            std::map<int, Term> generated = generated_subalgebra(m);
            if (refutable_in(m, target, generated, nullptr)) {
                found = m;
                return true;
            }
            return false;
        };
        if (atoms == 0) {
            m.atom_assignment.clear();
            return try_model();
        }
        for (int e = 0; e < m.domain_size; ++e) {
            m.atom_assignment = {{"a", e}};
            if (try_model()) return true;
        }
        return false;
    });
    return found;
}

}  // namespace

std::optional<FiniteModel> search_model(const AxiomSet& axioms, const std::string& dropped,
                                        int domain_size, int atom_count) {
    const Equation* target = axioms.find(dropped);
    if (!target) throw error("dropped axiom '" + dropped + "' is not in the set");
    return search_refuting(axioms, dropped, *target, domain_size, atom_count);
}

std::optional<FiniteModel> search_model(const AxiomSet& axioms, const Equation& target,
                                        int domain_size, int atom_count) {
    return search_refuting(axioms, "", target, domain_size, atom_count);
}

std::optional<Equation> find_refuting_instance(const FiniteModel& m, const Equation& eq) {
    Equation instance{"", Term::truth(), Term::truth()};
    if (refutable_in(m, eq, generated_subalgebra(m), &instance)) return instance;
    return std::nullopt;
}

FiniteModel parse_model(std::string_view text) {
    std::istringstream in{std::string(text)};
    FiniteModel m;
    m.neg_table.clear();
    std::string word;
    if (!(in >> word) || word != "domain") throw error("model file must start with 'domain k'");
    if (!(in >> m.domain_size)) throw error("bad domain size");
    const int k = m.domain_size;
    if (!(in >> word) || word != "neg:") throw error("expected 'neg:'");
    m.neg_table.resize(k);
    for (int i = 0; i < k; ++i)
        if (!(in >> m.neg_table[i])) throw error("bad neg table");
    auto read_table = [&](const char* header, std::vector<std::vector<int>>& table) {
        if (!(in >> word) || word != header)
            throw error(std::string("expected '") + header + "'");
        table.assign(k, std::vector<int>(k, 0));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (!(in >> table[i][j])) throw error("bad operation table");
    };
    read_table("and:", m.and_table);
    read_table("or:", m.or_table);
    if (!(in >> word) || word.rfind("T=", 0) != 0) throw error("expected 'T=i'");
    m.true_elem = std::stoi(word.substr(2));
    if (!(in >> word) || word.rfind("F=", 0) != 0) throw error("expected 'F=j'");
    m.false_elem = std::stoi(word.substr(2));
    while (in >> word) {
        if (word != "atom") throw error("unexpected trailing content '" + word + "'");
        std::string assignment;
        if (!(in >> assignment)) throw error("expected 'atom name=e'");
        std::size_t eq = assignment.find('=');
        if (eq == std::string::npos) throw error("expected 'atom name=e'");
        m.atom_assignment[assignment.substr(0, eq)] = std::stoi(assignment.substr(eq + 1));
    }
    m.validate();
    return m;
}

std::string format_model(const FiniteModel& m) {
    std::ostringstream out;
    out << "domain " << m.domain_size << "\n";
    out << "neg:";
    for (int e : m.neg_table) out << ' ' << e;
    out << "\n";
    auto put_table = [&](const char* header, const std::vector<std::vector<int>>& table) {
        out << header << "\n";
        for (const auto& row : table) {
            for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
            out << "\n";
        }
    };
    put_table("and:", m.and_table);
    put_table("or:", m.or_table);
    out << "T=" << m.true_elem << " F=" << m.false_elem << "\n";
    for (const auto& [name, e] : m.atom_assignment)
        out << "atom " << name << "=" << e << "\n";
    return out.str();
}

}  // namespace scl
