#pragma once

// Painted trees: rooted planar trees whose edges carry a two-color painting.
// The root edge is always painted, leaf edges never are, and the painting may
// change only at dedicated nodes, so every node falls into one of three
// shapes (branching unpainted, branching painted, paint change). These trees
// index the faces of the composihedra; the binary ones index vertices.
//
// Trees are immutable values with planar (ordered-children) equality. Node
// kinds are derived from the edge flags, never stored.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ck {

// A node together with the paint flag of the edge from it toward the root.
// Children are ordered left to right; a node without children is a leaf.
struct PaintedTree {
    bool painted = false;
    std::vector<PaintedTree> children;

    bool is_leaf() const { return children.empty(); }

    friend bool operator==(const PaintedTree& a, const PaintedTree& b) {
        return a.painted == b.painted && a.children == b.children;
    }
    friend bool operator!=(const PaintedTree& a, const PaintedTree& b) { return !(a == b); }
    friend bool operator<(const PaintedTree& a, const PaintedTree& b) {
        if (a.painted != b.painted) return b.painted;
        return std::lexicographical_compare(a.children.begin(), a.children.end(),
                                            b.children.begin(), b.children.end());
    }
};

// An unpainted planar tree whose internal nodes have at least two children.
// Binary shapes underlie the Loday coordinates; general shapes index
// associahedron faces.
struct TreeShape {
    std::vector<TreeShape> children;

    bool is_leaf() const { return children.empty(); }

    friend bool operator==(const TreeShape& a, const TreeShape& b) {
        return a.children == b.children;
    }
    friend bool operator!=(const TreeShape& a, const TreeShape& b) { return !(a == b); }
    friend bool operator<(const TreeShape& a, const TreeShape& b) {
        return std::lexicographical_compare(a.children.begin(), a.children.end(),
                                            b.children.begin(), b.children.end());
    }
};

enum class NodeKind {
    Leaf,
    UnpaintedBranch,  // valence >= 3, all incident edges unpainted
    PaintedBranch,    // valence >= 3, all incident edges painted
    PaintChange,      // painted edge below, >= 1 unpainted edges above
    IllFormed,
};

inline NodeKind classify(const PaintedTree& node) {
    if (node.is_leaf()) return node.painted ? NodeKind::IllFormed : NodeKind::Leaf;
    bool any_painted = false, any_unpainted = false;
    for (const auto& c : node.children) (c.painted ? any_painted : any_unpainted) = true;
    if (any_painted && any_unpainted) return NodeKind::IllFormed;
    if (node.painted) {
        if (any_painted) return node.children.size() >= 2 ? NodeKind::PaintedBranch : NodeKind::IllFormed;
        return NodeKind::PaintChange;
    }
    if (any_painted) return NodeKind::IllFormed;
    return node.children.size() >= 2 ? NodeKind::UnpaintedBranch : NodeKind::IllFormed;
}

namespace detail {
inline bool valid_rec(const PaintedTree& node) {
    if (classify(node) == NodeKind::IllFormed) return false;
    for (const auto& c : node.children)
        if (!valid_rec(c)) return false;
    return true;
}
}  // namespace detail

inline bool valid_painted_tree(const PaintedTree& t) {
    return t.painted && detail::valid_rec(t);
}

inline int leaf_count(const PaintedTree& t) {
    if (t.is_leaf()) return 1;
    int n = 0;
    for (const auto& c : t.children) n += leaf_count(c);
    return n;
}

inline int leaf_count(const TreeShape& s) {
    if (s.is_leaf()) return 1;
    int n = 0;
    for (const auto& c : s.children) n += leaf_count(c);
    return n;
}

inline bool valid_shape(const TreeShape& s) {
    if (s.is_leaf()) return true;
    if (s.children.size() < 2) return false;
    for (const auto& c : s.children)
        if (!valid_shape(c)) return false;
    return true;
}

// Binary: branching nodes have exactly two children, paint-change nodes one.
inline bool is_binary(const PaintedTree& t) {
    switch (classify(t)) {
        case NodeKind::Leaf: return true;
        case NodeKind::PaintChange:
            if (t.children.size() != 1) return false;
            break;
        case NodeKind::PaintedBranch:
        case NodeKind::UnpaintedBranch:
            if (t.children.size() != 2) return false;
            break;
        case NodeKind::IllFormed: return false;
    }
    for (const auto& c : t.children)
        if (!is_binary(c)) return false;
    return true;
}

inline bool is_binary(const TreeShape& s) {
    if (s.is_leaf()) return true;
    if (s.children.size() != 2) return false;
    return is_binary(s.children[0]) && is_binary(s.children[1]);
}

// ---------------------------------------------------------------------------
// Serialization. Leaves print as "*"; an internal node prints its children in
// parentheses, each preceded by the paint mark of its edge ('=' painted,
// '-' unpainted). The root edge is painted by convention and not printed.
// The canonical linear order on trees is lexicographic on this string.

namespace detail {
inline void ser(const PaintedTree& n, std::string& out) {
    if (n.is_leaf()) {
        out += '*';
        return;
    }
    out += '(';
    for (const auto& c : n.children) {
        out += c.painted ? '=' : '-';
        ser(c, out);
    }
    out += ')';
}
inline void ser(const TreeShape& n, std::string& out) {
    if (n.is_leaf()) {
        out += '*';
        return;
    }
    out += '(';
    for (const auto& c : n.children) ser(c, out);
    out += ')';
}
}  // namespace detail

inline std::string to_string(const PaintedTree& t) {
    std::string out;
    detail::ser(t, out);
    return out;
}

inline std::string to_string(const TreeShape& s) {
    std::string out;
    detail::ser(s, out);
    return out;
}

namespace detail {
inline PaintedTree parse_painted(const std::string& s, std::size_t& i, bool painted) {
    PaintedTree node;
    node.painted = painted;
    if (i >= s.size()) throw std::invalid_argument("truncated tree string: " + s);
    if (s[i] == '*') {
        ++i;
        return node;
    }
    if (s[i] != '(') throw std::invalid_argument("bad tree string at '" + s.substr(i) + "'");
    ++i;
    while (i < s.size() && s[i] != ')') {
        if (s[i] != '=' && s[i] != '-')
            throw std::invalid_argument("missing paint mark in: " + s);
        bool p = s[i] == '=';
        ++i;
        node.children.push_back(parse_painted(s, i, p));
    }
    if (i >= s.size()) throw std::invalid_argument("unbalanced tree string: " + s);
    ++i;  // ')'
    return node;
}
inline TreeShape parse_shape(const std::string& s, std::size_t& i) {
    TreeShape node;
    if (i >= s.size()) throw std::invalid_argument("truncated shape string: " + s);
    if (s[i] == '*') {
        ++i;
        return node;
    }
    if (s[i] != '(') throw std::invalid_argument("bad shape string at '" + s.substr(i) + "'");
    ++i;
    while (i < s.size() && s[i] != ')') node.children.push_back(parse_shape(s, i));
    if (i >= s.size()) throw std::invalid_argument("unbalanced shape string: " + s);
    ++i;
    return node;
}
}  // namespace detail

inline PaintedTree parse_painted_tree(const std::string& s) {
    std::size_t i = 0;
    PaintedTree t = detail::parse_painted(s, i, true);
    if (i != s.size()) throw std::invalid_argument("trailing characters in tree string: " + s);
    return t;
}

inline TreeShape parse_tree_shape(const std::string& s) {
    std::size_t i = 0;
    TreeShape t = detail::parse_shape(s, i);
    if (i != s.size()) throw std::invalid_argument("trailing characters in shape string: " + s);
    return t;
}

inline void canonical_sort(std::vector<PaintedTree>& v) {
    std::vector<std::pair<std::string, std::size_t>> keys;
    keys.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) keys.emplace_back(to_string(v[i]), i);
    std::sort(keys.begin(), keys.end());
    std::vector<PaintedTree> out;
    out.reserve(v.size());
    for (auto& [k, i] : keys) out.push_back(std::move(v[i]));
    v = std::move(out);
}

inline void canonical_sort(std::vector<TreeShape>& v) {
    std::sort(v.begin(), v.end(),
              [](const TreeShape& a, const TreeShape& b) { return to_string(a) < to_string(b); });
}

// ---------------------------------------------------------------------------
// Builders.

inline PaintedTree leaf_node() { return PaintedTree{}; }

// Single paint-change node with n unpainted leaves; indexes the top cell.
inline PaintedTree painted_corolla(int n) {
    if (n < 1) throw std::invalid_argument("painted_corolla: n must be >= 1");
    PaintedTree t;
    t.painted = true;
    t.children.assign(static_cast<std::size_t>(n), PaintedTree{});
    return t;
}

// Copy of a shape as an unpainted region (parent edge unpainted).
inline PaintedTree unpainted_from_shape(const TreeShape& s) {
    PaintedTree n;
    n.painted = false;
    n.children.reserve(s.children.size());
    for (const auto& c : s.children) n.children.push_back(unpainted_from_shape(c));
    return n;
}

// u(t; r_1,...,r_t): a painted branching node carrying painted corollas of
// sizes r_1..r_t. Requires t >= 2 and all r_i >= 1.
inline PaintedTree upper_tree(const std::vector<int>& signature) {
    if (signature.size() < 2) throw std::invalid_argument("upper_tree: need at least 2 blocks");
    PaintedTree t;
    t.painted = true;
    for (int r : signature) t.children.push_back(painted_corolla(r));
    return t;
}

// l(k,2): a paint-change node over n-1 unpainted branches, the k-th of which
// is a 2-leaf corolla (covering leaves k-1 and k). Requires 1 <= k <= n-1.
inline PaintedTree lower_tree(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1) throw std::invalid_argument("lower_tree: need n >= 2, 1 <= k <= n-1");
    PaintedTree t;
    t.painted = true;
    for (int pos = 1; pos <= n - 1; ++pos) {
        if (pos == k) {
            PaintedTree star;
            star.children.assign(2, PaintedTree{});
            t.children.push_back(star);
        } else {
            t.children.push_back(PaintedTree{});
        }
    }
    return t;
}

// Paints a shape entirely and hangs crown i at leaf i. The result has
// sum(leaf_count(crown_i)) leaves. A one-leaf base returns its crown (unit
// law of the module structure).
inline PaintedTree graft(const TreeShape& base, const std::vector<PaintedTree>& crowns) {
    if (!valid_shape(base)) throw std::invalid_argument("graft: malformed base shape");
    if (static_cast<int>(crowns.size()) != leaf_count(base))
        throw std::invalid_argument("graft: crown count must equal base leaf count");
    std::size_t next = 0;
    auto build = [&](auto&& self, const TreeShape& s) -> PaintedTree {
        if (s.is_leaf()) return crowns[next++];
        PaintedTree n;
        n.painted = true;
        n.children.reserve(s.children.size());
        for (const auto& c : s.children) n.children.push_back(self(self, c));
        return n;
    };
    return build(build, base);
}

// Operadic composition of shapes: plug plugs[i] into leaf i of base.
inline TreeShape compose_shapes(const TreeShape& base, const std::vector<TreeShape>& plugs) {
    if (static_cast<int>(plugs.size()) != leaf_count(base))
        throw std::invalid_argument("compose_shapes: plug count must equal base leaf count");
    std::size_t next = 0;
    auto build = [&](auto&& self, const TreeShape& s) -> TreeShape {
        if (s.is_leaf()) return plugs[next++];
        TreeShape n;
        n.children.reserve(s.children.size());
        for (const auto& c : s.children) n.children.push_back(self(self, c));
        return n;
    };
    return build(build, base);
}

// ---------------------------------------------------------------------------
// Enumeration. Each enumerator returns every tree exactly once, sorted in the
// canonical string order.

inline std::vector<std::vector<int>> compositions(int n, int min_parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            if (static_cast<int>(cur.size()) >= min_parts) out.push_back(cur);
            return;
        }
        for (int first = 1; first <= rest; ++first) {
            cur.push_back(first);
            self(self, rest - first);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

inline std::vector<TreeShape> enumerate_shapes_binary(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_shapes_binary: n must be >= 1");
    std::vector<std::vector<TreeShape>> memo(static_cast<std::size_t>(n) + 1);
    memo[1] = {TreeShape{}};
    for (int m = 2; m <= n; ++m) {
        for (int i = 1; i <= m - 1; ++i)
            for (const auto& l : memo[i])
                for (const auto& r : memo[m - i]) {
                    TreeShape s;
                    s.children = {l, r};
                    memo[m].push_back(std::move(s));
                }
        canonical_sort(memo[m]);
    }
    return memo[n];
}

inline std::vector<TreeShape> enumerate_shapes(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_shapes: n must be >= 1");
    std::vector<std::vector<TreeShape>> memo(static_cast<std::size_t>(n) + 1);
    memo[1] = {TreeShape{}};
    for (int m = 2; m <= n; ++m) {
        for (const auto& comp : compositions(m, 2)) {
            std::vector<TreeShape> partial{TreeShape{}};
            for (int part : comp) {
                std::vector<TreeShape> grown;
                for (const auto& acc : partial)
                    for (const auto& sub : memo[part]) {
                        TreeShape s = acc;
                        s.children.push_back(sub);
                        grown.push_back(std::move(s));
                    }
                partial = std::move(grown);
            }
            for (auto& s : partial) memo[m].push_back(std::move(s));
        }
        canonical_sort(memo[m]);
    }
    return memo[n];
}

namespace detail {
// A binary painted tree either has a paint-change root over a full binary
// shape (painting cut at the root edge) or a painted root joining two
// smaller binary painted trees.
inline const std::vector<PaintedTree>& binary_painted_levels(
    int n, std::vector<std::vector<PaintedTree>>& memo) {
    auto& out = memo[static_cast<std::size_t>(n)];
    if (!out.empty()) return out;
    for (const auto& s : enumerate_shapes_binary(n)) {
        PaintedTree t;
        t.painted = true;
        t.children = {unpainted_from_shape(s)};
        out.push_back(std::move(t));
    }
    for (int i = 1; i <= n - 1; ++i)
        for (const auto& l : binary_painted_levels(i, memo))
            for (const auto& r : binary_painted_levels(n - i, memo)) {
                PaintedTree t;
                t.painted = true;
                t.children = {l, r};
                out.push_back(std::move(t));
            }
    canonical_sort(out);
    return out;
}
}  // namespace detail

inline std::vector<PaintedTree> enumerate_binary_painted(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_binary_painted: n must be >= 1");
    std::vector<std::vector<PaintedTree>> memo(static_cast<std::size_t>(n) + 1);
    return detail::binary_painted_levels(n, memo);
}

namespace detail {
inline const std::vector<PaintedTree>& painted_levels(
    int n, std::vector<std::vector<PaintedTree>>& memo) {
    auto& out = memo[static_cast<std::size_t>(n)];
    if (!out.empty()) return out;
    PaintedTree seed;
    seed.painted = true;
    // Paint-change root: children form an ordered forest of unpainted trees.
    for (const auto& comp : compositions(n, 1)) {
        std::vector<PaintedTree> partial{seed};
        for (int part : comp) {
            std::vector<PaintedTree> grown;
            for (const auto& acc : partial)
                for (const auto& s : enumerate_shapes(part)) {
                    PaintedTree t = acc;
                    t.children.push_back(unpainted_from_shape(s));
                    grown.push_back(std::move(t));
                }
            partial = std::move(grown);
        }
        for (auto& t : partial) out.push_back(std::move(t));
    }
    // Painted branching root over smaller painted trees.
    for (const auto& comp : compositions(n, 2)) {
        std::vector<PaintedTree> partial{seed};
        for (int part : comp) {
            std::vector<PaintedTree> grown;
            for (const auto& acc : partial)
                for (const auto& sub : painted_levels(part, memo)) {
                    PaintedTree t = acc;
                    t.children.push_back(sub);
                    grown.push_back(std::move(t));
                }
            partial = std::move(grown);
        }
        for (auto& t : partial) out.push_back(std::move(t));
    }
    canonical_sort(out);
    return out;
}
}  // namespace detail

inline std::vector<PaintedTree> enumerate_painted(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_painted: n must be >= 1");
    std::vector<std::vector<PaintedTree>> memo(static_cast<std::size_t>(n) + 1);
    return detail::painted_levels(n, memo);
}

// ---------------------------------------------------------------------------
// Contraction and refinement.

// Internal edges are identified by the preorder index of their upper node
// (root = 0); leaf edges and the root edge are not internal.
inline std::vector<int> internal_edges(const PaintedTree& t) {
    std::vector<int> out;
    int counter = 0;
    auto walk = [&](auto&& self, const PaintedTree& n, bool is_root) -> void {
        int id = counter++;
        if (!is_root && !n.is_leaf()) out.push_back(id);
        for (const auto& c : n.children) self(self, c, false);
    };
    walk(walk, t, true);
    return out;
}

// Collapses the selected internal edges simultaneously; each collapsed node's
// children are spliced, in order, into its parent. Returns nothing when the
// collapsed tree violates the node rules (the selection itself may be any
// subset of internal edges). Unknown edge ids are an error.
inline std::optional<PaintedTree> contract(const PaintedTree& t, const std::vector<int>& edges) {
    auto internals = internal_edges(t);
    std::set<int> sel(edges.begin(), edges.end());
    for (int e : sel)
        if (!std::binary_search(internals.begin(), internals.end(), e))
            throw std::invalid_argument("contract: edge id " + std::to_string(e) +
                                        " is not an internal edge");
    int counter = 0;
    auto walk = [&](auto&& self, const PaintedTree& n) -> PaintedTree {
        ++counter;
        PaintedTree out;
        out.painted = n.painted;
        for (const auto& c : n.children) {
            int child_id = counter;
            PaintedTree done = self(self, c);
            if (sel.count(child_id)) {
                for (auto& g : done.children) out.children.push_back(std::move(g));
            } else {
                out.children.push_back(std::move(done));
            }
        }
        return out;
    };
    PaintedTree result = walk(walk, t);
    if (!valid_painted_tree(result)) return std::nullopt;
    return result;
}

namespace detail {
inline bool edge_matches(const PaintedTree& a, const PaintedTree& b) { return a.painted == b.painted; }
inline bool edge_matches(const TreeShape&, const TreeShape&) { return true; }

template <class Node>
bool refines_node(const Node& a, const Node& b);

// Walks a's descendants deciding per edge whether it survives (and must then
// match the next child of b) or collapses (splicing its children into the
// walk). `frames` is the stack of child lists still to process.
template <class Node>
bool cover(std::vector<std::pair<const std::vector<Node>*, std::size_t>> frames,
           std::size_t pos, const std::vector<Node>& bs) {
    while (!frames.empty() && frames.back().second == frames.back().first->size())
        frames.pop_back();
    if (frames.empty()) return pos == bs.size();
    const Node& c = (*frames.back().first)[frames.back().second];
    ++frames.back().second;
    if (pos < bs.size() && edge_matches(c, bs[pos]) && refines_node(c, bs[pos])) {
        if (cover(frames, pos + 1, bs)) return true;
    }
    if (!c.is_leaf()) {
        frames.emplace_back(&c.children, 0);
        if (cover(std::move(frames), pos, bs)) return true;
    }
    return false;
}

template <class Node>
bool refines_node(const Node& a, const Node& b) {
    if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf();
    std::vector<std::pair<const std::vector<Node>*, std::size_t>> frames;
    frames.emplace_back(&a.children, 0);
    return cover(std::move(frames), 0, b.children);
}
}  // namespace detail

// True when some subset of internal edges of t collapses to u exactly
// (reflexive: every tree refines itself).
inline bool refines(const PaintedTree& t, const PaintedTree& u) {
    if (leaf_count(t) != leaf_count(u))
        throw std::invalid_argument("refines: leaf counts differ");
    return detail::refines_node(t, u);
}

inline bool refines(const TreeShape& t, const TreeShape& u) {
    if (leaf_count(t) != leaf_count(u))
        throw std::invalid_argument("refines: leaf counts differ");
    return detail::refines_node(t, u);
}

// ---------------------------------------------------------------------------
// Domain equivalence.

namespace detail {
inline void collect_leaves(const PaintedTree& n, std::vector<PaintedTree>& out) {
    if (n.is_leaf()) {
        out.push_back(n);
        return;
    }
    for (const auto& c : n.children) collect_leaves(c, out);
}
}  // namespace detail

// Collapses every internal edge joining two unpainted branching nodes, so
// all unpainted subtrees become corollas. This is the least refined member
// of the domain equivalence class; two trees are domain equivalent exactly
// when their canonical forms are equal.
inline PaintedTree canonicalize_domain(const PaintedTree& t) {
    auto walk = [&](auto&& self, const PaintedTree& n) -> PaintedTree {
        if (n.is_leaf()) return n;
        if (!n.painted) {
            PaintedTree star;
            star.painted = false;
            detail::collect_leaves(n, star.children);
            return star;
        }
        PaintedTree out;
        out.painted = true;
        out.children.reserve(n.children.size());
        for (const auto& c : n.children) out.children.push_back(self(self, c));
        return out;
    };
    return walk(walk, t);
}

inline bool domain_equivalent(const PaintedTree& a, const PaintedTree& b) {
    return canonicalize_domain(a) == canonicalize_domain(b);
}

// ---------------------------------------------------------------------------
// Weighted-tree form of a domain class.

struct WeightedTree {
    TreeShape shape;           // the painted skeleton
    std::vector<int> weights;  // unpainted corolla sizes, left to right

    friend bool operator==(const WeightedTree& a, const WeightedTree& b) {
        return a.shape == b.shape && a.weights == b.weights;
    }
    friend bool operator!=(const WeightedTree& a, const WeightedTree& b) { return !(a == b); }
    friend bool operator<(const WeightedTree& a, const WeightedTree& b) {
        if (a.shape != b.shape) return a.shape < b.shape;
        return a.weights < b.weights;
    }
};

inline int total_weight(const WeightedTree& w) {
    int n = 0;
    for (int x : w.weights) n += x;
    return n;
}

// Extracts the weighted binary tree of the input's domain class: the shape is
// the painted skeleton of the canonical form and the weights are the corolla
// sizes. The painted skeleton must be binary (paint-change nodes carry one
// branch, painted branchings two); the input itself may be any member of the
// class, e.g. the canonical form that from_weighted returns.
inline WeightedTree weighted_form(const PaintedTree& t) {
    PaintedTree c = canonicalize_domain(t);
    WeightedTree out;
    auto walk = [&](auto&& self, const PaintedTree& n) -> TreeShape {
        switch (classify(n)) {
            case NodeKind::PaintChange: {
                if (n.children.size() != 1)
                    throw std::invalid_argument("weighted_form: painted skeleton is not binary");
                out.weights.push_back(leaf_count(n.children[0]));
                return TreeShape{};
            }
            case NodeKind::PaintedBranch: {
                if (n.children.size() != 2)
                    throw std::invalid_argument("weighted_form: painted skeleton is not binary");
                TreeShape s;
                s.children = {self(self, n.children[0]), self(self, n.children[1])};
                return s;
            }
            default:
                throw std::invalid_argument("weighted_form: not a painted tree vertex class");
        }
    };
    out.shape = walk(walk, c);
    return out;
}

// Inverse of weighted_form: rebuilds the canonical representative.
inline PaintedTree from_weighted(const WeightedTree& w) {
    if (!is_binary(w.shape)) throw std::invalid_argument("from_weighted: shape must be binary");
    if (static_cast<int>(w.weights.size()) != leaf_count(w.shape))
        throw std::invalid_argument("from_weighted: weight count must equal shape leaves");
    for (int x : w.weights)
        if (x < 1) throw std::invalid_argument("from_weighted: weights must be positive");
    std::size_t next = 0;
    auto build = [&](auto&& self, const TreeShape& s) -> PaintedTree {
        PaintedTree n;
        n.painted = true;
        if (s.is_leaf()) {
            int wi = w.weights[next++];
            if (wi == 1) {
                n.children = {PaintedTree{}};
            } else {
                PaintedTree star;
                star.children.assign(static_cast<std::size_t>(wi), PaintedTree{});
                n.children = {std::move(star)};
            }
            return n;
        }
        n.children = {self(self, s.children[0]), self(self, s.children[1])};
        return n;
    };
    return build(build, w.shape);
}

// Smooths the one-child paint-change nodes of a binary painted tree, leaving
// the underlying binary shape.
inline TreeShape underlying_shape(const PaintedTree& t) {
    auto walk = [&](auto&& self, const PaintedTree& n) -> TreeShape {
        if (n.is_leaf()) return TreeShape{};
        if (n.children.size() == 1) return self(self, n.children[0]);
        TreeShape s;
        s.children.reserve(n.children.size());
        for (const auto& c : n.children) s.children.push_back(self(self, c));
        return s;
    };
    return walk(walk, t);
}

}  // namespace ck
