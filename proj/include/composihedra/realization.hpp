#pragma once

// Exact-rational realizations: Loday coordinates for binary shapes, the
// painted variants M_q / M_0 and their weighted generalization, the
// range-quotient map, and the facet inequalities of the composihedra.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "composihedra/rational.hpp"
#include "composihedra/trees.hpp"

namespace ck {

using Point = std::vector<Rat>;
using WeightVector = std::vector<Int>;  // positive integer leaf weights

inline WeightVector unit_weights(int n) {
    return WeightVector(static_cast<std::size_t>(n), Int(1));
}

inline void check_weights(const WeightVector& w, int n) {
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("weight vector length must equal the leaf count");
    for (const auto& x : w)
        if (x < 1) throw std::invalid_argument("weights must be positive integers");
}

enum class Sense { LE, GE, EQ };

struct Hyperplane {
    std::vector<Rat> coeffs;
    Rat rhs;
    Sense sense = Sense::LE;

    friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
        return a.coeffs == b.coeffs && a.rhs == b.rhs && a.sense == b.sense;
    }
};

inline Rat evaluate(const Hyperplane& h, const Point& p) {
    if (h.coeffs.size() != p.size())
        throw std::invalid_argument("hyperplane/point dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += h.coeffs[i] * p[i];
    return s;
}

inline bool satisfies(const Hyperplane& h, const Point& p) {
    Rat v = evaluate(h, p);
    switch (h.sense) {
        case Sense::LE: return v <= h.rhs;
        case Sense::GE: return v >= h.rhs;
        case Sense::EQ: return v == h.rhs;
    }
    return false;
}

inline bool tight(const Hyperplane& h, const Point& p) { return evaluate(h, p) == h.rhs; }

// A facet inequality tagged with the tree indexing it.
struct Facet {
    Hyperplane plane;
    PaintedTree tree;

    friend bool operator==(const Facet& a, const Facet& b) {
        return a.plane == b.plane && a.tree == b.tree;
    }
};

struct HRep {
    int dim = 0;
    std::vector<Facet> facets;

    friend bool operator==(const HRep& a, const HRep& b) {
        return a.dim == b.dim && a.facets == b.facets;
    }
};

// Vertex set; tags, when present, run parallel to points and carry the
// canonical binary painted tree of each vertex class.
struct VRep {
    int dim = 0;
    std::vector<Point> points;
    std::vector<PaintedTree> tags;

    friend bool operator==(const VRep& a, const VRep& b) {
        return a.dim == b.dim && a.points == b.points && a.tags == b.tags;
    }
};

// Row order used for every vertex listing: decreasing coordinate sum, then
// increasing lexicographic. Fully painted trees (maximal sum) come first.
inline bool point_row_less(const Point& a, const Point& b) {
    Rat sa = 0, sb = 0;
    for (const auto& x : a) sa += x;
    for (const auto& x : b) sb += x;
    if (sa != sb) return sa > sb;
    return a < b;
}

// ---------------------------------------------------------------------------
// Coordinates.

// Loday's coordinates: entry i is l_i * r_i, the leaf counts of the two
// subtrees at the i-th trivalent node in left-to-right ("raindrop") order.
inline Point loday_point(const TreeShape& shape) {
    if (!is_binary(shape)) throw std::invalid_argument("loday_point: shape must be binary");
    int n = leaf_count(shape);
    if (n < 2) throw std::invalid_argument("loday_point: need at least 2 leaves");
    Point coords;
    coords.reserve(static_cast<std::size_t>(n) - 1);
    auto walk = [&](auto&& self, const TreeShape& s) -> Int {
        if (s.is_leaf()) return 1;
        Int l = self(self, s.children[0]);
        std::size_t slot = coords.size();
        coords.emplace_back();
        Int r = self(self, s.children[1]);
        coords[slot] = Rat(l * r);
        return l + r;
    };
    walk(walk, shape);
    return coords;
}

// M_q with leaf weights: the i-th trivalent node contributes L_i * R_i when
// painted and q * L_i * R_i when unpainted, where L_i, R_i sum the weights of
// its left and right subtree leaves. Paint-change nodes contribute nothing.
// q = 0 gives the composihedron vertices, q = 1 the Loday point of the shape.
inline Point painted_point(const PaintedTree& t, const Rat& q, const WeightVector& w) {
    if (!is_binary(t)) throw std::invalid_argument("painted_point: tree must be binary");
    if (q < 0 || q > 1) throw std::invalid_argument("painted_point: q must lie in [0,1]");
    int n = leaf_count(t);
    check_weights(w, n);
    Point coords;
    coords.reserve(static_cast<std::size_t>(n) - 1);
    std::size_t next_leaf = 0;
    auto walk = [&](auto&& self, const PaintedTree& node) -> Int {
        if (node.is_leaf()) return w[next_leaf++];
        if (node.children.size() == 1) return self(self, node.children[0]);
        Int l = self(self, node.children[0]);
        std::size_t slot = coords.size();
        coords.emplace_back();
        Int r = self(self, node.children[1]);
        Rat x(l * r);
        if (!node.painted) x *= q;
        coords[slot] = x;
        return l + r;
    };
    walk(walk, t);
    return coords;
}

inline Point painted_point(const PaintedTree& t, const Rat& q) {
    return painted_point(t, q, unit_weights(leaf_count(t)));
}

// The range-quotient map: unpainted nodes keep q * l_i * r_i, painted nodes
// are flattened to i * (n - i). Identifies range-equivalent trees and
// realizes the next associahedron.
inline Point range_quotient_point(const PaintedTree& t, const Rat& q) {
    if (!is_binary(t)) throw std::invalid_argument("range_quotient_point: tree must be binary");
    if (q <= 0 || q >= 1) throw std::invalid_argument("range_quotient_point: q must lie in (0,1)");
    int n = leaf_count(t);
    Point coords;
    coords.reserve(static_cast<std::size_t>(n) - 1);
    auto walk = [&](auto&& self, const PaintedTree& node) -> Int {
        if (node.is_leaf()) return 1;
        if (node.children.size() == 1) return self(self, node.children[0]);
        Int l = self(self, node.children[0]);
        std::size_t slot = coords.size();
        coords.emplace_back();
        Int r = self(self, node.children[1]);
        int i = static_cast<int>(slot) + 1;
        coords[slot] = node.painted ? Rat(Int(i) * (n - i)) : Rat(l * r) * q;
        return l + r;
    };
    walk(walk, t);
    return coords;
}

// ---------------------------------------------------------------------------
// Representations.

// Facet inequalities: x_k >= 0 for each lower tree l(k,2), and for each upper
// tree u(t; r_1..r_t) the inequality
//   x_{r_1} + x_{r_1+r_2} + ... + x_{r_1+...+r_{t-1}} <= sum_{i<j} R_i R_j
// with R_i the weight of the i-th leaf block. Lower facets come first (k
// ascending), then upper facets with signatures in lexicographic order.
inline HRep composihedron_hrep(int n, const WeightVector& w) {
    if (n < 2) throw std::invalid_argument("composihedron_hrep: n must be >= 2");
    check_weights(w, n);
    HRep h;
    h.dim = n - 1;
    for (int k = 1; k <= n - 1; ++k) {
        Facet f;
        f.plane.coeffs.assign(static_cast<std::size_t>(n) - 1, Rat(0));
        f.plane.coeffs[static_cast<std::size_t>(k) - 1] = 1;
        f.plane.rhs = 0;
        f.plane.sense = Sense::GE;
        f.tree = lower_tree(n, k);
        h.facets.push_back(std::move(f));
    }
    for (const auto& sig : compositions(n, 2)) {
        Facet f;
        f.plane.coeffs.assign(static_cast<std::size_t>(n) - 1, Rat(0));
        int prefix = 0;
        for (std::size_t i = 0; i + 1 < sig.size(); ++i) {
            prefix += sig[i];
            f.plane.coeffs[static_cast<std::size_t>(prefix) - 1] = 1;
        }
        std::vector<Int> block(sig.size(), Int(0));
        int at = 0;
        for (std::size_t i = 0; i < sig.size(); ++i)
            for (int j = 0; j < sig[i]; ++j) block[i] += w[static_cast<std::size_t>(at++)];
        Int rhs = 0;
        for (std::size_t i = 0; i < sig.size(); ++i)
            for (std::size_t j = i + 1; j < sig.size(); ++j) rhs += block[i] * block[j];
        f.plane.rhs = Rat(rhs);
        f.plane.sense = Sense::LE;
        f.tree = upper_tree(sig);
        h.facets.push_back(std::move(f));
    }
    return h;
}

inline HRep composihedron_hrep(int n) { return composihedron_hrep(n, unit_weights(n)); }

// Vertex set { M_0^w(t) : t binary painted with n leaves }, deduplicated and
// tagged with the canonical tree of each domain class. Every class must land
// on a single point; that is asserted during assembly.
inline VRep composihedron_vrep(int n, const WeightVector& w) {
    if (n < 1) throw std::invalid_argument("composihedron_vrep: n must be >= 1");
    check_weights(w, n);
    VRep v;
    v.dim = n - 1;
    std::map<PaintedTree, Point> by_class;
    for (const auto& t : enumerate_binary_painted(n)) {
        Point p = painted_point(t, Rat(0), w);
        PaintedTree c = canonicalize_domain(t);
        auto it = by_class.find(c);
        if (it == by_class.end())
            by_class.emplace(std::move(c), std::move(p));
        else if (it->second != p)
            throw std::logic_error("composihedron_vrep: domain class mapped to two points");
    }
    std::vector<std::pair<Point, PaintedTree>> rows;
    rows.reserve(by_class.size());
    for (auto& [tree, pt] : by_class) rows.emplace_back(pt, tree);
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return point_row_less(a.first, b.first); });
    for (auto& [pt, tree] : rows) {
        v.points.push_back(std::move(pt));
        v.tags.push_back(std::move(tree));
    }
    return v;
}

inline VRep composihedron_vrep(int n) { return composihedron_vrep(n, unit_weights(n)); }

// Loday's realization of the associahedron on binary shapes (n >= 2), in the
// same row order.
inline VRep associahedron_vrep(int n) {
    if (n < 2) throw std::invalid_argument("associahedron_vrep: n must be >= 2");
    VRep v;
    v.dim = n - 1;
    std::vector<std::pair<Point, PaintedTree>> rows;
    for (const auto& s : enumerate_shapes_binary(n)) {
        PaintedTree t = graft(s, std::vector<PaintedTree>(static_cast<std::size_t>(n),
                                                          painted_corolla(1)));
        rows.emplace_back(loday_point(s), std::move(t));
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return point_row_less(a.first, b.first); });
    for (auto& [pt, tree] : rows) {
        v.points.push_back(std::move(pt));
        v.tags.push_back(std::move(tree));
    }
    return v;
}

// M_q realization of the multiplihedron: one point per binary painted tree,
// all distinct for q strictly between 0 and 1.
inline VRep multiplihedron_vrep(int n, const Rat& q) {
    if (n < 1) throw std::invalid_argument("multiplihedron_vrep: n must be >= 1");
    if (q <= 0 || q >= 1)
        throw std::invalid_argument("multiplihedron_vrep: q must lie strictly in (0,1)");
    VRep v;
    v.dim = n - 1;
    std::vector<std::pair<Point, PaintedTree>> rows;
    for (const auto& t : enumerate_binary_painted(n)) rows.emplace_back(painted_point(t, q), t);
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return point_row_less(a.first, b.first); });
    for (auto& [pt, tree] : rows) {
        v.points.push_back(std::move(pt));
        v.tags.push_back(std::move(tree));
    }
    return v;
}

}  // namespace ck
