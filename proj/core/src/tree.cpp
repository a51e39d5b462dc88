#include "sclogic/tree.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <shared_mutex>

namespace scl {

namespace {

// Ids 0 and 1 are the F and T leaves; internal nodes start at 2.
constexpr std::uint32_t kLeafF = 0;
constexpr std::uint32_t kLeafT = 1;

struct NodeRec {
    std::uint32_t atom;
    std::uint32_t left;
    std::uint32_t right;
};

struct NodeKeyHash {
    std::size_t operator()(const std::array<std::uint32_t, 3>& k) const {
        std::uint64_t h = (std::uint64_t(k[0]) << 42) ^ (std::uint64_t(k[1]) << 21) ^ k[2];
        return std::hash<std::uint64_t>()(h * 0x9e3779b97f4a7c15ull);
    }
};

// Process-wide hash-consing store.
struct Store {
    std::shared_mutex mu;
    std::deque<NodeRec> nodes;
    std::unordered_map<std::array<std::uint32_t, 3>, std::uint32_t, NodeKeyHash> unique;
    std::deque<std::string> atom_names;
    std::unordered_map<std::string, std::uint32_t> atom_ids;

    static Store& instance() {
        static Store s;
        return s;
    }

    std::uint32_t intern_atom(const std::string& name) {
        {
            std::shared_lock lock(mu);
            auto it = atom_ids.find(name);
            if (it != atom_ids.end()) return it->second;
        }
        std::unique_lock lock(mu);
        auto [it, inserted] = atom_ids.try_emplace(name, std::uint32_t(atom_names.size()));
        if (inserted) atom_names.push_back(name);
        return it->second;
    }

    std::uint32_t intern_node(std::uint32_t atom, std::uint32_t left, std::uint32_t right) {
        std::array<std::uint32_t, 3> key{atom, left, right};
        {
            std::shared_lock lock(mu);
            auto it = unique.find(key);
            if (it != unique.end()) return it->second;
        }
        std::unique_lock lock(mu);
        auto [it, inserted] = unique.try_emplace(key, std::uint32_t(nodes.size()) + 2);
        if (inserted) nodes.push_back({atom, left, right});
        return it->second;
    }

    NodeRec rec(std::uint32_t id) {
        std::shared_lock lock(mu);
        return nodes[id - 2];
    }

    std::string atom_name(std::uint32_t atom) {
        std::shared_lock lock(mu);
        return atom_names[atom];
    }
};

std::uint32_t make_node(std::uint32_t atom, std::uint32_t l, std::uint32_t r) {
    return Store::instance().intern_node(atom, l, r);
}

}  // namespace

EvalTree EvalTree::leaf(bool value) { return EvalTree(value ? kLeafT : kLeafF); }

EvalTree EvalTree::node(const std::string& atom, EvalTree left, EvalTree right) {
    if (atom.empty()) throw error("tree atom name must be nonempty");
    Store& s = Store::instance();
    return EvalTree(s.intern_node(s.intern_atom(atom), left.id_, right.id_));
}

bool EvalTree::leaf_value() const {
    if (!is_leaf()) throw error("tree node is not a leaf");
    return id_ == kLeafT;
}

std::string EvalTree::atom() const {
    if (is_leaf()) throw error("tree leaf has no atom");
    return Store::instance().atom_name(Store::instance().rec(id_).atom);
}

EvalTree EvalTree::left() const {
    if (is_leaf()) throw error("tree leaf has no branches");
    return EvalTree(Store::instance().rec(id_).left);
}

EvalTree EvalTree::right() const {
    if (is_leaf()) throw error("tree leaf has no branches");
    return EvalTree(Store::instance().rec(id_).right);
}

std::size_t EvalTree::leaf_count() const {
    if (is_leaf()) return 1;
    return left().leaf_count() + right().leaf_count();
}

std::size_t EvalTree::depth() const {
    if (is_leaf()) return 0;
    return 1 + std::max(left().depth(), right().depth());
}

std::uint32_t TreeOps::atom_id(const std::string& name) {
    return Store::instance().intern_atom(name);
}

EvalTree TreeOps::replace(EvalTree x, EvalTree on_true, EvalTree on_false) {
    if (x.id_ == kLeafT) return on_true;
    if (x.id_ == kLeafF) return on_false;
    if (on_true.id_ == kLeafT && on_false.id_ == kLeafF) return x;
    std::array<std::uint32_t, 3> key{x.id_, on_true.id_, on_false.id_};
    auto it = replace_cache_.find(key);
    if (it != replace_cache_.end()) return EvalTree(it->second);
    NodeRec r = Store::instance().rec(x.id_);
    EvalTree l = replace(EvalTree(r.left), on_true, on_false);
    EvalTree rr = replace(EvalTree(r.right), on_true, on_false);
    std::uint32_t out = make_node(r.atom, l.id_, rr.id_);
    replace_cache_.emplace(key, out);
    return EvalTree(out);
}

EvalTree TreeOps::reduce(std::uint32_t atom_id, bool keep_left, EvalTree x) {
    if (x.is_leaf()) return x;
    std::array<std::uint32_t, 3> key{x.id_, atom_id, keep_left ? 1u : 0u};
    auto it = reduce_cache_.find(key);
    if (it != reduce_cache_.end()) return EvalTree(it->second);
    NodeRec r = Store::instance().rec(x.id_);
    EvalTree out = EvalTree(x.id_);
    if (r.atom == atom_id) {
        out = reduce(atom_id, keep_left, EvalTree(keep_left ? r.left : r.right));
    } else {
        EvalTree l = reduce(atom_id, keep_left, EvalTree(r.left));
        EvalTree rr = reduce(atom_id, keep_left, EvalTree(r.right));
        out = EvalTree(make_node(r.atom, l.id_, rr.id_));
    }
    reduce_cache_.emplace(key, out.id_);
    return out;
}

EvalTree TreeOps::memorize(EvalTree x) {
    if (x.is_leaf()) return x;
    auto it = memo_m_.find(x.id_);
    if (it != memo_m_.end()) return EvalTree(it->second);
    NodeRec r = Store::instance().rec(x.id_);
    EvalTree l = memorize(reduce(r.atom, true, EvalTree(r.left)));
    EvalTree rr = memorize(reduce(r.atom, false, EvalTree(r.right)));
    std::uint32_t out = make_node(r.atom, l.id_, rr.id_);
    memo_m_.emplace(x.id_, out);
    return EvalTree(out);
}

void TreeOps::clear() {
    replace_cache_.clear();
    reduce_cache_.clear();
    memo_m_.clear();
}

std::size_t TreeOps::cache_size() const {
    return replace_cache_.size() + reduce_cache_.size() + memo_m_.size();
}

EvalTree replace_leaves(EvalTree x, EvalTree on_true, EvalTree on_false) {
    TreeOps ops;
    return ops.replace(x, on_true, on_false);
}

EvalTree left_reduce(const std::string& atom, EvalTree x) {
    TreeOps ops;
    return ops.reduce(TreeOps::atom_id(atom), true, x);
}

EvalTree right_reduce(const std::string& atom, EvalTree x) {
    TreeOps ops;
    return ops.reduce(TreeOps::atom_id(atom), false, x);
}

EvalTree memorize(EvalTree x) {
    TreeOps ops;
    return ops.memorize(x);
}

bool is_decision_tree(EvalTree x) {
    std::set<std::string> path;
    struct Walker {
        std::set<std::string>& path;
        bool walk(EvalTree t) {
            if (t.is_leaf()) return true;
            auto [it, inserted] = path.insert(t.atom());
            if (!inserted) return false;
            bool ok = walk(t.left()) && walk(t.right());
            path.erase(it);
            return ok;
        }
    } w{path};
    return w.walk(x);
}

EvalTree tree_dual(EvalTree x) {
    if (x.is_leaf()) return EvalTree::leaf(!x.leaf_value());
    return EvalTree::node(x.atom(), tree_dual(x.right()), tree_dual(x.left()));
}

namespace {

void structured_into(EvalTree x, std::string& out) {
    if (x.is_leaf()) {
        out += x.leaf_value() ? 'T' : 'F';
        return;
    }
    out += '(';
    structured_into(x.left(), out);
    out += " <" + x.atom() + "> ";
    structured_into(x.right(), out);
    out += ')';
}

struct AsciiBlock {
    std::vector<std::string> lines;
    std::size_t width = 0;
    std::size_t root = 0;  // column of the root label
};

AsciiBlock ascii_block(EvalTree x) {
    if (x.is_leaf()) return {{x.leaf_value() ? std::string("T") : std::string("F")}, 1, 0};
    AsciiBlock l = ascii_block(x.left());
    AsciiBlock r = ascii_block(x.right());
    const std::size_t gap = 3;
    std::string label = x.atom();
    AsciiBlock out;
    out.width = l.width + gap + r.width;
    out.root = (l.root + l.width + gap + r.root) / 2;
    std::string head(out.root, ' ');
    head += label;
    std::string arms(out.root >= 1 ? out.root - 1 : 0, ' ');
    arms += "/ \\";
    out.lines.push_back(head);
    out.lines.push_back(arms);
    std::size_t rows = std::max(l.lines.size(), r.lines.size());
    for (std::size_t i = 0; i < rows; ++i) {
        std::string row = i < l.lines.size() ? l.lines[i] : std::string();
        row.resize(l.width + gap, ' ');
        if (i < r.lines.size()) row += r.lines[i];
        out.lines.push_back(row);
    }
    return out;
}

void dot_nodes(EvalTree x, const std::string& id, std::string& out) {
    if (x.is_leaf()) {
        out += "  " + id + " [label=\"" + (x.leaf_value() ? "T" : "F") + "\", shape=box];\n";
        return;
    }
    out += "  " + id + " [label=\"" + x.atom() + "\"];\n";
    dot_nodes(x.left(), id + "l", out);
    dot_nodes(x.right(), id + "r", out);
}

void dot_edges(EvalTree x, const std::string& id, std::string& out) {
    if (x.is_leaf()) return;
    out += "  " + id + " -> " + id + "l;\n";
    out += "  " + id + " -> " + id + "r [style=dashed];\n";
    dot_edges(x.left(), id + "l", out);
    dot_edges(x.right(), id + "r", out);
}

}  // namespace

std::string render_tree(EvalTree x, TreeStyle style) {
    switch (style) {
        case TreeStyle::Structured: {
            std::string out;
            structured_into(x, out);
            return out;
        }
        case TreeStyle::Dot: {
            std::string out = "digraph evaltree {\n";
            dot_nodes(x, "n", out);
            dot_edges(x, "n", out);
            out += "}\n";
            return out;
        }
        case TreeStyle::Ascii: {
            AsciiBlock b = ascii_block(x);
            std::string out;
            for (std::string& line : b.lines) {
                while (!line.empty() && line.back() == ' ') line.pop_back();
                out += line;
                out += '\n';
            }
            return out;
        }
    }
    throw error("unknown tree style");
}

namespace {

class TreeParser {
public:
    explicit TreeParser(std::string_view in) : in_(in) {}

    EvalTree run() {
        EvalTree t = parse();
        skip_ws();
        if (pos_ != in_.size()) throw parse_error("trailing input in tree", pos_);
        return t;
    }

private:
    std::string_view in_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < in_.size() && (in_[pos_] == ' ' || in_[pos_] == '\n' || in_[pos_] == '\t'))
            ++pos_;
    }

    EvalTree parse() {
        skip_ws();
        if (pos_ >= in_.size()) throw parse_error("unexpected end of tree", pos_);
        char c = in_[pos_];
        if (c == 'T') {
            ++pos_;
            return EvalTree::leaf(true);
        }
        if (c == 'F') {
            ++pos_;
            return EvalTree::leaf(false);
        }
        if (c != '(') throw parse_error("expected leaf or '('", pos_);
        ++pos_;
        EvalTree l = parse();
        skip_ws();
        if (pos_ >= in_.size() || in_[pos_] != '<') throw parse_error("expected '<atom>'", pos_);
        ++pos_;
        std::size_t start = pos_;
        while (pos_ < in_.size() && in_[pos_] != '>') ++pos_;
        if (pos_ >= in_.size() || pos_ == start) throw parse_error("expected '<atom>'", pos_);
        std::string atom(in_.substr(start, pos_ - start));
        ++pos_;
        EvalTree r = parse();
        skip_ws();
        if (pos_ >= in_.size() || in_[pos_] != ')') throw parse_error("expected ')'", pos_);
        ++pos_;
        return EvalTree::node(atom, l, r);
    }
};

}  // namespace

EvalTree parse_tree(std::string_view text) { return TreeParser(text).run(); }

}  // namespace scl
