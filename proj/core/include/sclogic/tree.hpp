#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sclogic/error.hpp"

namespace scl {

// Evaluation tree: a finite binary tree whose internal nodes carry atom names
// and whose leaves are T or F. node(a, X, Y) reads "test a; on true continue
// with X (left), on false with Y (right)".
//
// Trees are hash-consed in a process-wide store, so copies are cheap and
// operator== is structural equality in O(1). The store is guarded by a
// shared mutex; trees may be built and inspected from any thread.
class EvalTree {
public:
    static EvalTree leaf(bool value);
    static EvalTree node(const std::string& atom, EvalTree left, EvalTree right);

    bool is_leaf() const { return id_ < 2; }
    bool leaf_value() const;       // leaves only
    std::string atom() const;      // internal nodes only
    EvalTree left() const;         // internal nodes only
    EvalTree right() const;        // internal nodes only

    std::size_t leaf_count() const;
    std::size_t depth() const;

    std::uint32_t id() const { return id_; }
    friend bool operator==(EvalTree a, EvalTree b) { return a.id_ == b.id_; }
    friend bool operator!=(EvalTree a, EvalTree b) { return a.id_ != b.id_; }
    friend bool operator<(EvalTree a, EvalTree b) { return a.id_ < b.id_; }

private:
    friend class TreeOps;
    explicit EvalTree(std::uint32_t id) : id_(id) {}
    std::uint32_t id_;
};

// Leaf replacement X[T -> on_true, F -> on_false].
EvalTree replace_leaves(EvalTree x, EvalTree on_true, EvalTree on_false);

// Left a-reduction: prunes every a-node inside x to its left branch.
EvalTree left_reduce(const std::string& atom, EvalTree x);
// Right a-reduction: prunes every a-node inside x to its right branch.
EvalTree right_reduce(const std::string& atom, EvalTree x);

// Memorizing transformation m: m(X <a> Y) = m(L_a(X)) <a> m(R_a(Y)).
// Idempotent; its image is exactly the decision trees.
EvalTree memorize(EvalTree x);

// True iff no root-to-leaf path tests the same atom twice.
bool is_decision_tree(EvalTree x);

// Swaps T and F leaves and the two branches of every node; involution.
EvalTree tree_dual(EvalTree x);

enum class TreeStyle { Ascii, Dot, Structured };

// Structured style is bit-exact: leaves "T"/"F", nodes "(left <atom> right)".
// Dot output is a digraph with solid true-edges and dashed false-edges.
std::string render_tree(EvalTree x, TreeStyle style);

// Parses the structured format back; inverse of render_tree(Structured).
EvalTree parse_tree(std::string_view text);

// Reusable operation context with memo tables. The free functions above are
// one-shot wrappers; batch computations (congruence deciders, law checking)
// keep one TreeOps alive so shared subcomputations are not repeated.
class TreeOps {
public:
    EvalTree replace(EvalTree x, EvalTree on_true, EvalTree on_false);
    EvalTree reduce(std::uint32_t atom_id, bool keep_left, EvalTree x);
    EvalTree memorize(EvalTree x);
    void clear();
    std::size_t cache_size() const;

    static std::uint32_t atom_id(const std::string& name);

private:
    struct TripleHash {
        std::size_t operator()(const std::array<std::uint32_t, 3>& k) const {
            std::uint64_t h = (std::uint64_t(k[0]) << 40) ^ (std::uint64_t(k[1]) << 20) ^ k[2];
            return std::hash<std::uint64_t>()(h * 0x9e3779b97f4a7c15ull);
        }
    };
    std::unordered_map<std::array<std::uint32_t, 3>, std::uint32_t, TripleHash> replace_cache_;
    std::unordered_map<std::array<std::uint32_t, 3>, std::uint32_t, TripleHash> reduce_cache_;
    std::unordered_map<std::uint32_t, std::uint32_t> memo_m_;
};

}  // namespace scl

template <>
struct std::hash<scl::EvalTree> {
    std::size_t operator()(scl::EvalTree t) const {
        return std::hash<std::uint32_t>()(t.id());
    }
};
