// Command-line front end for the short-circuit logic library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sclogic/equivalence.hpp"
#include "sclogic/laws.hpp"
#include "sclogic/models.hpp"
#include "sclogic/parser.hpp"
#include "sclogic/semantics.hpp"
#include "sclogic/statics.hpp"

namespace {

using namespace scl;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Semantics semantics_from(const std::string& name, const std::string& order) {
    if (name == "free") return Semantics::free();
    if (name == "mem") return Semantics::memorizing();
    if (name == "static") {
        if (order.empty()) throw UsageError("--semantics static requires --order");
        return Semantics::static_over(AtomOrdering::from_string(order));
    }
    throw UsageError("unknown semantics '" + name + "' (expected free|mem|static)");
}

std::vector<std::string> atom_list(const std::string& text) {
    return AtomOrdering::from_string(text).atoms();
}

Alphabet alphabet_of_size(int n) {
    if (n < 1 || n > 26) throw UsageError("--atoms must be between 1 and 26");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.emplace_back(1, char('a' + i));
    return Alphabet(names);
}

Equation parse_equation(const std::string& name, const std::string& text) {
    std::size_t sep = text.find('=');
    if (sep == std::string::npos) throw UsageError("equation must contain '='");
    return Equation{name, parse(text.substr(0, sep)), parse(text.substr(sep + 1))};
}

TreeStyle style_from(const std::string& name) {
    if (name == "ascii") return TreeStyle::Ascii;
    if (name == "dot") return TreeStyle::Dot;
    if (name == "structured") return TreeStyle::Structured;
    throw UsageError("unknown render style '" + name + "'");
}

std::string lowercase(std::string s) {
    for (char& c : s) c = char(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

int cmd_parse(const std::string& expr, const std::string& format) {
    Term t = parse(expr);
    if (format == "sexpr")
        std::cout << to_sexpr(t) << "\n";
    else if (format == "structured")
        std::cout << to_structured(t) << "\n";
    else
        throw UsageError("unknown format '" + format + "'");
    return kExitOk;
}

int cmd_tree(const std::string& expr, const std::string& sem_name, const std::string& order,
             const std::string& render_style) {
    Term t = parse(expr);
    Semantics sem = semantics_from(sem_name, order);
    EvalTree tree = tree_of(sem, t);
    if (render_style == "table") {
        if (sem.kind() != SemanticsKind::Static)
            throw UsageError("--render table requires --semantics static");
        std::cout << format_truth_table(tree, sem.order(), render(t));
        return kExitOk;
    }
    std::string out = render_tree(tree, style_from(render_style));
    std::cout << out;
    if (out.empty() || out.back() != '\n') std::cout << "\n";
    return kExitOk;
}

int cmd_eq(const std::string& p_text, const std::string& q_text, const std::string& sem_name,
           const std::string& order) {
    Semantics sem = semantics_from(sem_name, order);
    EvalTree pt = tree_of(sem, parse(p_text));
    EvalTree qt = tree_of(sem, parse(q_text));
    if (pt == qt) {
        std::cout << "EQUIVALENT\n";
        std::cout << "tree: " << render_tree(pt, TreeStyle::Structured) << "\n";
        return kExitOk;
    }
    std::cout << "NOT EQUIVALENT\n";
    std::cout << "lhs: " << render_tree(pt, TreeStyle::Structured) << "\n";
    std::cout << "rhs: " << render_tree(qt, TreeStyle::Structured) << "\n";
    return kExitFalse;
}

int cmd_translate(const std::string& expr, const std::string& target) {
    Term t = parse(expr);
    if (target == "cp")
        std::cout << render(to_cond(t)) << "\n";
    else if (target == "scl")
        std::cout << render(to_scl(t)) << "\n";
    else
        throw UsageError("--to expects cp or scl");
    return kExitOk;
}

int cmd_dual(const std::string& expr) {
    std::cout << render(dual(parse(expr))) << "\n";
    return kExitOk;
}

struct LawsConfig {
    std::vector<std::string> sets;
    std::string semantics_override;
    int depth = 2;
    int atoms = 2;
    std::string order;
    std::uint64_t seed = 12345;
    std::uint64_t cap = 4'000'000;
    int samples = 10'000;
    std::string file;
    bool verbose = false;
};

int cmd_laws(const LawsConfig& cfg) {
    std::vector<LawEntry> catalog =
        cfg.file.empty() ? law_catalog() : [&] {
            std::ifstream in(cfg.file);
            if (!in) throw UsageError("cannot open law file '" + cfg.file + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            return parse_law_records(buf.str());
        }();

    auto selected = [&](const LawEntry& entry) {
        if (cfg.sets.empty()) return true;
        std::string name = lowercase(entry.eq.name), source = lowercase(entry.source);
        for (const std::string& s : cfg.sets) {
            std::string needle = lowercase(s);
            if (name.find(needle) != std::string::npos ||
                source.find(needle) != std::string::npos)
                return true;
        }
        return false;
    };

    EnumerationBudget budget{alphabet_of_size(cfg.atoms), cfg.depth, true};
    AtomOrdering sigma = cfg.order.empty()
                             ? AtomOrdering(budget.atoms.atoms())
                             : AtomOrdering::from_string(cfg.order);
    ValidateOptions options;
    options.seed = cfg.seed;
    options.exhaustive_cap = cfg.cap;
    options.sample_count = cfg.samples;

    int checked = 0, failed = 0;
    for (const LawEntry& entry : catalog) {
        if (!selected(entry)) continue;
        ++checked;
        SemanticsKind kind = entry.designated;
        if (!cfg.semantics_override.empty()) {
            if (cfg.semantics_override == "free") kind = SemanticsKind::Free;
            else if (cfg.semantics_override == "mem") kind = SemanticsKind::Memorizing;
            else if (cfg.semantics_override == "static") kind = SemanticsKind::Static;
            else throw UsageError("unknown semantics '" + cfg.semantics_override + "'");
        }
        Semantics sem = kind == SemanticsKind::Free ? Semantics::free()
                        : kind == SemanticsKind::Memorizing
                            ? Semantics::memorizing()
                            : Semantics::static_over(sigma);
        LawReport report = validate_law(sem, entry.eq, budget, options);
        std::printf("%-4s %-18s %-12s %-28s instances=%llu\n",
                    report.ok() ? "ok" : "FAIL", entry.eq.name.c_str(),
                    sem.to_string().c_str(), entry.source.c_str(),
                    static_cast<unsigned long long>(report.instances));
        if (cfg.verbose)
            std::printf("     %s = %s   [%s]\n", render(entry.eq.lhs).c_str(),
                        render(entry.eq.rhs).c_str(), report.strategy.c_str());
        if (!report.ok()) {
            ++failed;
            std::size_t shown = std::min<std::size_t>(report.counterexamples.size(), 3);
            for (std::size_t i = 0; i < shown; ++i) {
                std::string line = "     counterexample:";
                for (const auto& [var, term] : report.counterexamples[i].binding)
                    line += " $" + var + " = " + render(term) + ";";
                std::puts(line.c_str());
            }
            if (report.counterexamples.size() > shown)
                std::printf("     ... and %zu more\n", report.counterexamples.size() - shown);
        }
    }
    std::printf("%d law(s) checked, %d failed\n", checked, failed);
    return failed == 0 ? kExitOk : kExitFalse;
}

int cmd_models_verify(const std::string& source, std::string axioms_name, std::string drop,
                      std::string refute_text) {
    IndependenceFixture fx{"", FiniteModel{}, AxiomSet{}, "", Equation{"", Term::truth(), Term::truth()}};
    if (source.rfind("builtin:", 0) == 0) {
        fx = builtin_fixture(source.substr(8));
        if (!axioms_name.empty() && axioms_name != fx.axioms.name)
            fx.axioms = axiom_set(axioms_name);
        if (!drop.empty()) fx.dropped = drop;
        if (!refute_text.empty()) fx.refuting = parse_equation("refute", refute_text);
    } else {
        std::ifstream in(source);
        if (!in) throw UsageError("cannot open model file '" + source + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        fx.name = source;
        fx.model = parse_model(buf.str());
        if (axioms_name.empty() || drop.empty() || refute_text.empty())
            throw UsageError("model files need --axioms, --drop and --refute");
        fx.axioms = axiom_set(axioms_name);
        fx.dropped = drop;
        fx.refuting = parse_equation("refute", refute_text);
    }

    IndependenceCheck check = verify_independence(fx);
    std::printf("model: %s (domain %d), axioms: %s minus '%s'\n", fx.name.c_str(),
                fx.model.domain_size, fx.axioms.name.c_str(), fx.dropped.c_str());
    for (const auto& r : check.axiom_results)
        std::printf("  %-6s %s\n", r.name.c_str(), r.satisfied ? "ok" : "VIOLATED");
    std::printf("refutation %s = %s: %s\n", render(fx.refuting.lhs).c_str(),
                render(fx.refuting.rhs).c_str(),
                check.refuted ? "falsified" : "NOT falsified");
    std::puts(check.passed() ? "PASS" : "FAIL");
    return check.passed() ? kExitOk : kExitFalse;
}

int cmd_models_search(const std::string& axioms_name, const std::string& drop, int k,
                      int atom_count, const std::string& refute_text) {
    const AxiomSet& set = axiom_set(axioms_name);
    std::optional<FiniteModel> model;
    Equation target{"", Term::truth(), Term::truth()};
    if (!refute_text.empty()) {
        target = parse_equation("target", refute_text);
        AxiomSet reduced = set;
        if (!drop.empty()) {
            reduced.axioms.clear();
            for (const Equation& eq : set.axioms)
                if (eq.name != drop) reduced.axioms.push_back(eq);
        }
        model = search_model(reduced, target, k, atom_count);
    } else {
        if (drop.empty()) throw UsageError("models search needs --drop or --refute");
        const Equation* dropped = set.find(drop);
        if (!dropped) throw UsageError("axiom '" + drop + "' is not in set " + axioms_name);
        target = *dropped;
        model = search_model(set, drop, k, atom_count);
    }
    if (!model) {
        std::puts("no model found");
        return kExitFalse;
    }
    if (auto instance = find_refuting_instance(*model, target))
        std::printf("# refutes: %s = %s\n", render(instance->lhs).c_str(),
                    render(instance->rhs).c_str());
    std::cout << format_model(*model);
    return kExitOk;
}

int cmd_count(const std::string& kind, int n) {
    if (n < 0) throw UsageError("--n must be nonnegative");
    if (kind == "memorizing")
        std::cout << count_memorizing(unsigned(n)).to_string() << "\n";
    else if (kind == "static")
        std::cout << count_static(unsigned(n)).to_string() << "\n";
    else
        throw UsageError("--kind expects memorizing or static");
    return kExitOk;
}

int cmd_enumerate(const std::string& atoms, int depth, const std::string& sem_name,
                  const std::string& order, bool distinct, bool no_constants) {
    EnumerationBudget budget{Alphabet(atom_list(atoms)), depth, !no_constants};
    if (distinct) {
        if (sem_name.empty()) throw UsageError("--distinct requires --semantics");
        Semantics sem = semantics_from(sem_name, order);
        std::cout << census_distinct_trees(sem, budget) << "\n";
        return kExitOk;
    }
    for_each_term(budget, [](const Term& t) {
        std::cout << render(t) << "\n";
        return true;
    });
    return kExitOk;
}

int cmd_witness(const std::string& from, const std::string& to, const std::string& order,
                int depth, const std::string& atoms) {
    Semantics sem_a = semantics_from(from, order);
    Semantics sem_b = semantics_from(to, order);
    Alphabet alphabet = atoms.empty()
                            ? (sem_b.kind() == SemanticsKind::Static
                                   ? Alphabet(sem_b.order().atoms())
                                   : alphabet_of_size(2))
                            : Alphabet(atom_list(atoms));
    EnumerationBudget budget{alphabet, depth, true};
    auto witness = find_separating_witness(sem_a, sem_b, budget);
    if (!witness) {
        std::puts("no witness found");
        return kExitFalse;
    }
    std::printf("witness found:\n  P = %s\n  Q = %s\n", render(witness->first).c_str(),
                render(witness->second).c_str());
    std::printf("  %s tree of P: %s\n", sem_a.to_string().c_str(),
                render_tree(tree_of(sem_a, witness->first), TreeStyle::Structured).c_str());
    std::printf("  %s tree of Q: %s\n", sem_a.to_string().c_str(),
                render_tree(tree_of(sem_a, witness->second), TreeStyle::Structured).c_str());
    std::printf("  %s tree of both: %s\n", sem_b.to_string().c_str(),
                render_tree(tree_of(sem_b, witness->first), TreeStyle::Structured).c_str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"short-circuit propositional logic: evaluation trees, congruences, laws"};
    app.require_subcommand(1);

    std::string expr, expr2, format = "structured", sem_name, order, render_style = "structured";
    std::string target, kind, atoms, from, to, source, axioms_name, drop, refute;
    int n = 0, depth = 2, k = 2, atom_count = 0;
    bool distinct = false, no_constants = false;
    LawsConfig laws_cfg;

    auto* parse_cmd = app.add_subcommand("parse", "parse an expression and print its AST");
    parse_cmd->add_option("expr", expr, "expression")->required();
    parse_cmd->add_option("--format", format, "sexpr|structured");

    auto* tree_cmd = app.add_subcommand("tree", "print the evaluation tree of an expression");
    tree_cmd->add_option("expr", expr, "expression")->required();
    tree_cmd->add_option("--semantics", sem_name, "free|mem|static")->required();
    tree_cmd->add_option("--order", order, "atom ordering for static semantics");
    tree_cmd->add_option("--render", render_style, "ascii|dot|structured|table");

    auto* eq_cmd = app.add_subcommand("eq", "decide equivalence of two expressions");
    eq_cmd->add_option("p", expr, "first expression")->required();
    eq_cmd->add_option("q", expr2, "second expression")->required();
    eq_cmd->add_option("--semantics", sem_name, "free|mem|static")->required();
    eq_cmd->add_option("--order", order, "atom ordering for static semantics");

    auto* tr_cmd = app.add_subcommand("translate", "translate between the two signatures");
    tr_cmd->add_option("expr", expr, "expression")->required();
    tr_cmd->add_option("--to", target, "cp|scl")->required();

    auto* dual_cmd = app.add_subcommand("dual", "dual of a sequential expression");
    dual_cmd->add_option("expr", expr, "expression")->required();

    auto* laws_cmd = app.add_subcommand("laws", "validate the shipped law catalog");
    laws_cmd->add_option("--set", laws_cfg.sets, "filter by name/source substring");
    laws_cmd->add_option("--semantics", laws_cfg.semantics_override,
                         "override the designated semantics");
    laws_cmd->add_option("--depth", laws_cfg.depth, "binding pool depth (default 2)");
    laws_cmd->add_option("--atoms", laws_cfg.atoms, "number of atoms (default 2)");
    laws_cmd->add_option("--order", laws_cfg.order, "static ordering (default: pool atoms)");
    laws_cmd->add_option("--seed", laws_cfg.seed, "sampling seed (default 12345)");
    laws_cmd->add_option("--cap", laws_cfg.cap, "exhaustive instance cap");
    laws_cmd->add_option("--samples", laws_cfg.samples, "random samples when capped");
    laws_cmd->add_option("--file", laws_cfg.file, "external catalog file");
    laws_cmd->add_flag("--verbose", laws_cfg.verbose, "print equations and strategies");

    auto* models_cmd = app.add_subcommand("models", "finite-model tools");
    models_cmd->require_subcommand(1);
    auto* mverify = models_cmd->add_subcommand("verify", "verify an independence model");
    mverify->add_option("source", source, "model file or builtin:NAME")->required();
    mverify->add_option("--axioms", axioms_name, "axiom set (eqfscl|eqmscl|eqsscl)");
    mverify->add_option("--drop", drop, "axiom left out");
    mverify->add_option("--refute", refute, "equation the model must falsify");
    auto* msearch = models_cmd->add_subcommand("search", "search for an independence model");
    msearch->add_option("--axioms", axioms_name, "axiom set")->required();
    msearch->add_option("--drop", drop, "axiom left out");
    msearch->add_option("--k", k, "domain size (1..3)")->required();
    msearch->add_option("--atoms", atom_count, "number of atoms (0 or 1)");
    msearch->add_option("--refute", refute, "explicit equation to refute");

    auto* count_cmd = app.add_subcommand("count", "closed counting formulas");
    count_cmd->add_option("--kind", kind, "memorizing|static")->required();
    count_cmd->add_option("--n", n, "number of atoms")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate closed terms");
    enum_cmd->add_option("--atoms", atoms, "atom list, e.g. ab or foo,bar")->required();
    enum_cmd->add_option("--depth", depth, "maximum connective depth")->required();
    enum_cmd->add_option("--semantics", sem_name, "free|mem|static");
    enum_cmd->add_option("--order", order, "atom ordering for static semantics");
    enum_cmd->add_flag("--distinct", distinct, "print the distinct-tree census instead");
    enum_cmd->add_flag("--no-constants", no_constants, "exclude T and F from depth 0");

    auto* wit_cmd = app.add_subcommand("witness", "separate two semantics");
    wit_cmd->add_option("--from", from, "finer semantics: free|mem")->required();
    wit_cmd->add_option("--to", to, "coarser semantics: mem|static")->required();
    wit_cmd->add_option("--order", order, "atom ordering for static semantics");
    wit_cmd->add_option("--depth", depth, "search pool depth (default 2)");
    wit_cmd->add_option("--atoms", atoms, "atom list (default: ab or the ordering)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (parse_cmd->parsed()) return cmd_parse(expr, format);
        if (tree_cmd->parsed()) return cmd_tree(expr, sem_name, order, render_style);
        if (eq_cmd->parsed()) return cmd_eq(expr, expr2, sem_name, order);
        if (tr_cmd->parsed()) return cmd_translate(expr, target);
        if (dual_cmd->parsed()) return cmd_dual(expr);
        if (laws_cmd->parsed()) return cmd_laws(laws_cfg);
        if (models_cmd->parsed()) {
            if (mverify->parsed()) return cmd_models_verify(source, axioms_name, drop, refute);
            if (msearch->parsed()) return cmd_models_search(axioms_name, drop, k, atom_count, refute);
        }
        if (count_cmd->parsed()) return cmd_count(kind, n);
        if (enum_cmd->parsed())
            return cmd_enumerate(atoms, depth, sem_name, order, distinct, no_constants);
        if (wit_cmd->parsed()) return cmd_witness(from, to, order, depth, atoms);
        throw UsageError("no subcommand");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
