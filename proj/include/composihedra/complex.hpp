#pragma once

// Combinatorial face structure: facet trees, the face posets of the
// composihedra, associahedra and multiplihedra built from painted trees under
// contraction, facet subposets with their product decompositions, and the
// quotient map collapsing the multiplihedron onto the composihedron.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "composihedra/poset.hpp"
#include "composihedra/trees.hpp"

namespace ck {

struct FacetTree {
    enum class Kind { Upper, Lower };
    Kind kind = Kind::Upper;
    std::vector<int> signature;  // upper: (r_1..r_t), t >= 2, sum = n
    int k = 0;                   // lower: 1 <= k <= n-1
    PaintedTree tree;            // the realization

    friend bool operator==(const FacetTree& a, const FacetTree& b) {
        return a.kind == b.kind && a.signature == b.signature && a.k == b.k && a.tree == b.tree;
    }
};

// All facet trees of CK(n): the n-1 minimal lower trees followed by the
// 2^{n-1}-1 upper trees with signatures in lexicographic order. This matches
// the facet order of composihedron_hrep.
inline std::vector<FacetTree> facet_trees(int n) {
    if (n < 2) throw std::invalid_argument("facet_trees: n must be >= 2");
    std::vector<FacetTree> out;
    for (int k = 1; k <= n - 1; ++k) {
        FacetTree f;
        f.kind = FacetTree::Kind::Lower;
        f.k = k;
        f.tree = lower_tree(n, k);
        out.push_back(std::move(f));
    }
    for (const auto& sig : compositions(n, 2)) {
        FacetTree f;
        f.kind = FacetTree::Kind::Upper;
        f.signature = sig;
        f.tree = upper_tree(sig);
        out.push_back(std::move(f));
    }
    return out;
}

namespace detail {
// Existential order on domain classes: [t] <= [u] when some member of [t]
// contracts to some member of [u]. Classes are keyed by canonical form.
struct ClassifiedTrees {
    std::vector<PaintedTree> trees;        // all painted trees, canonical order
    std::vector<PaintedTree> classes;      // distinct canonical forms, canonical order
    std::vector<int> class_of;             // tree index -> class index
    std::vector<std::vector<int>> members; // class index -> tree indices
};

inline ClassifiedTrees classify_trees(int n) {
    ClassifiedTrees c;
    c.trees = enumerate_painted(n);
    std::map<PaintedTree, int> index;
    for (const auto& t : c.trees) {
        PaintedTree canon = canonicalize_domain(t);
        if (!index.count(canon)) index.emplace(canon, 0);
    }
    {
        std::vector<PaintedTree> cl;
        cl.reserve(index.size());
        for (const auto& [tree, unused] : index) cl.push_back(tree);
        canonical_sort(cl);
        for (std::size_t i = 0; i < cl.size(); ++i) index[cl[i]] = static_cast<int>(i);
        c.classes = std::move(cl);
    }
    c.members.resize(c.classes.size());
    for (std::size_t i = 0; i < c.trees.size(); ++i) {
        int cls = index[canonicalize_domain(c.trees[i])];
        c.class_of.push_back(cls);
        c.members[static_cast<std::size_t>(cls)].push_back(static_cast<int>(i));
    }
    return c;
}
}  // namespace detail

// Face poset of the multiplihedron: all painted trees with n leaves under
// the contraction order. Atoms are the binary trees; the painted corolla is
// the top, of rank n-1.
inline FacePoset face_poset_multiplihedron(int n) {
    auto trees = enumerate_painted(n);
    int m = static_cast<int>(trees.size());
    FacePoset p;
    p.leq.assign(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i) {
        p.labels.push_back(to_string(trees[static_cast<std::size_t>(i)]));
        for (int j = 0; j < m; ++j)
            p.leq[i][j] = refines(trees[static_cast<std::size_t>(i)], trees[static_cast<std::size_t>(j)]);
    }
    assign_ranks_by_longest_chain(p);
    PaintedTree top = painted_corolla(n);
    for (int i = 0; i < m; ++i)
        if (trees[static_cast<std::size_t>(i)] == top) p.top = i;
    return p;
}

// Face poset of the composihedron: domain classes of painted trees, ordered
// existentially over representatives. Ranks by longest chain, so binary
// classes sit at rank 0 and the corolla class at rank n-1.
inline FacePoset face_poset_composihedron(int n) {
    auto c = detail::classify_trees(n);
    int m = static_cast<int>(c.trees.size());
    int nc = static_cast<int>(c.classes.size());
    FacePoset p;
    p.leq.assign(nc, std::vector<bool>(nc, false));
    for (const auto& cls : c.classes) p.labels.push_back(to_string(cls));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int ci = c.class_of[static_cast<std::size_t>(i)];
            int cj = c.class_of[static_cast<std::size_t>(j)];
            if (p.leq[ci][cj]) continue;
            if (refines(c.trees[static_cast<std::size_t>(i)], c.trees[static_cast<std::size_t>(j)]))
                p.leq[ci][cj] = true;
        }
    assign_ranks_by_longest_chain(p);
    PaintedTree top = painted_corolla(n);
    for (int i = 0; i < nc; ++i)
        if (c.classes[static_cast<std::size_t>(i)] == top) p.top = i;
    return p;
}

// Face poset of the associahedron K(n) on unpainted trees under contraction.
// K(2) is a single point.
inline FacePoset face_poset_associahedron(int n) {
    if (n < 2) throw std::invalid_argument("face_poset_associahedron: n must be >= 2");
    auto shapes = enumerate_shapes(n);
    int m = static_cast<int>(shapes.size());
    FacePoset p;
    p.leq.assign(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i) {
        p.labels.push_back(to_string(shapes[static_cast<std::size_t>(i)]));
        for (int j = 0; j < m; ++j)
            p.leq[i][j] = refines(shapes[static_cast<std::size_t>(i)], shapes[static_cast<std::size_t>(j)]);
    }
    assign_ranks_by_longest_chain(p);
    TreeShape corolla;
    corolla.children.assign(static_cast<std::size_t>(n), TreeShape{});
    for (int i = 0; i < m; ++i)
        if (shapes[static_cast<std::size_t>(i)] == corolla) p.top = i;
    return p;
}

// The order ideal of classes refining a facet tree, as an induced subposet of
// face_poset_composihedron(n). Its top is the facet class, of rank n-2.
inline FacePoset facet_subposet(int n, const FacetTree& f) {
    if (leaf_count(f.tree) != n)
        throw std::invalid_argument("facet_subposet: facet tree has wrong leaf count");
    FacePoset full = face_poset_composihedron(n);
    std::string want = to_string(canonicalize_domain(f.tree));
    int fidx = -1;
    for (int i = 0; i < full.size(); ++i)
        if (full.labels[static_cast<std::size_t>(i)] == want) fidx = i;
    if (fidx < 0) throw std::invalid_argument("facet_subposet: facet tree not a face of CK(n)");
    std::vector<int> keep;
    for (int i = 0; i < full.size(); ++i)
        if (full.leq[i][fidx]) keep.push_back(i);
    FacePoset p;
    int m = static_cast<int>(keep.size());
    p.leq.assign(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i) {
        p.labels.push_back(full.labels[static_cast<std::size_t>(keep[static_cast<std::size_t>(i)])]);
        p.ranks.push_back(full.ranks[static_cast<std::size_t>(keep[static_cast<std::size_t>(i)])]);
        for (int j = 0; j < m; ++j)
            p.leq[i][j] = full.leq[keep[static_cast<std::size_t>(i)]][keep[static_cast<std::size_t>(j)]];
        if (keep[static_cast<std::size_t>(i)] == fidx) p.top = i;
    }
    return p;
}

// The expected product shape of a facet per the recursive construction:
// K(t) x CK(r_1) x ... x CK(r_t) for an upper facet, CK(n-1) (times the point
// K(2)) for a lower one.
inline FacePoset facet_product_model(int n, const FacetTree& f) {
    if (f.kind == FacetTree::Kind::Lower) {
        return product_poset(face_poset_composihedron(n - 1), face_poset_associahedron(2));
    }
    FacePoset p = face_poset_associahedron(static_cast<int>(f.signature.size()));
    for (int r : f.signature) p = product_poset(p, face_poset_composihedron(r));
    return p;
}

// The collapse J(n) -> CK(n): source poset, target poset, and the image of
// each source element. Order-preserving and surjective; fibers over atoms are
// the domain classes of binary trees.
struct QuotientMap {
    FacePoset source;
    FacePoset target;
    std::vector<int> image;
};

inline QuotientMap quotient_to_composihedron(int n) {
    QuotientMap q;
    q.source = face_poset_multiplihedron(n);
    q.target = face_poset_composihedron(n);
    std::map<std::string, int> target_index;
    for (int i = 0; i < q.target.size(); ++i)
        target_index.emplace(q.target.labels[static_cast<std::size_t>(i)], i);
    for (const auto& label : q.source.labels) {
        PaintedTree t = parse_painted_tree(label);
        q.image.push_back(target_index.at(to_string(canonicalize_domain(t))));
    }
    return q;
}

}  // namespace ck
