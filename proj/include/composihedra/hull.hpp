#pragma once

// Exact polytope machinery over the rationals: vertex enumeration from facet
// inequalities by brute-force subset solving, tight-set queries, and the
// geometric face lattice. Sized for desk scale (a few dozen inequalities in
// dimension at most five), where exactness beats asymptotics.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "composihedra/poset.hpp"
#include "composihedra/rational.hpp"
#include "composihedra/realization.hpp"

namespace ck {

struct unbounded_polytope : std::runtime_error {
    unbounded_polytope() : std::runtime_error("polytope is unbounded") {}
};

struct empty_polytope : std::runtime_error {
    empty_polytope() : std::runtime_error("polytope is empty") {}
};

using Matrix = std::vector<std::vector<Rat>>;

// Row-reduces in place with pivot-by-first-nonzero; returns the rank.
inline int gauss_rank(Matrix m) {
    if (m.empty()) return 0;
    std::size_t cols = m[0].size();
    int rank = 0;
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
        std::size_t pivot = m.size();
        for (std::size_t r = static_cast<std::size_t>(rank); r < m.size(); ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == m.size()) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[pivot]);
        const auto& prow = m[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || m[r][col] == 0) continue;
            Rat f = m[r][col] / prow[col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * prow[c];
        }
        ++rank;
    }
    return rank;
}

// Solves A x = b for square A; empty result when A is singular.
inline std::optional<std::vector<Rat>> solve_square(Matrix a, std::vector<Rat> b) {
    std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == n) return std::nullopt;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// Dimension of the affine hull of a point set (-1 for the empty set).
inline int affine_dim(const std::vector<Point>& pts) {
    if (pts.empty()) return -1;
    if (pts.size() == 1) return 0;
    Matrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rat> row(pts[i].size());
        for (std::size_t c = 0; c < row.size(); ++c) row[c] = pts[i][c] - pts[0][c];
        diffs.push_back(std::move(row));
    }
    return gauss_rank(std::move(diffs));
}

namespace detail {
struct NormalizedRow {
    std::vector<Rat> coeffs;  // a . x <= rhs
    Rat rhs;
};

inline std::vector<NormalizedRow> normalize_le(const HRep& h) {
    std::vector<NormalizedRow> rows;
    for (const auto& f : h.facets) {
        NormalizedRow r{f.plane.coeffs, f.plane.rhs};
        switch (f.plane.sense) {
            case Sense::LE: rows.push_back(std::move(r)); break;
            case Sense::GE: {
                for (auto& c : r.coeffs) c = -c;
                r.rhs = -r.rhs;
                rows.push_back(std::move(r));
                break;
            }
            case Sense::EQ: {
                NormalizedRow neg{r.coeffs, r.rhs};
                for (auto& c : neg.coeffs) c = -c;
                neg.rhs = -neg.rhs;
                rows.push_back(std::move(r));
                rows.push_back(std::move(neg));
                break;
            }
        }
    }
    return rows;
}

inline void for_each_subset(int m, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    if (k > m) return;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Nonzero recession direction, if one exists: either the normals do not span
// (the recession cone contains a line) or some extreme ray, cut out by d-1
// independent tight normals, satisfies every inequality homogeneously.
inline bool has_recession_direction(const std::vector<NormalizedRow>& rows, int d) {
    Matrix normals;
    for (const auto& r : rows) normals.push_back(r.coeffs);
    if (gauss_rank(normals) < d) return true;
    int m = static_cast<int>(rows.size());
    bool found = false;
    for_each_subset(m, d - 1, [&](const std::vector<int>& idx) {
        if (found) return;
        // Null direction of the chosen d-1 normals: append a probe row to fix
        // scale, then solve for each probe axis until one succeeds.
        for (int axis = 0; axis < d && !found; ++axis) {
            Matrix a;
            std::vector<Rat> b;
            for (int i : idx) {
                a.push_back(rows[static_cast<std::size_t>(i)].coeffs);
                b.emplace_back(0);
            }
            std::vector<Rat> probe(static_cast<std::size_t>(d), Rat(0));
            probe[static_cast<std::size_t>(axis)] = 1;
            a.push_back(std::move(probe));
            b.emplace_back(1);
            auto v = solve_square(std::move(a), std::move(b));
            if (!v) continue;
            for (int s = 0; s < 2; ++s) {
                bool ok = true;
                for (const auto& r : rows) {
                    Rat dot = 0;
                    for (int c = 0; c < d; ++c)
                        dot += r.coeffs[static_cast<std::size_t>(c)] * (*v)[static_cast<std::size_t>(c)];
                    if (s == 1) dot = -dot;
                    if (dot > 0) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    found = true;
                    break;
                }
            }
        }
    });
    return found;
}
}  // namespace detail

// Enumerates the vertex set of a bounded H-polytope: every full-rank d-subset
// of facet hyperplanes is solved exactly and feasible solutions are kept.
// Unbounded and empty inputs raise their own error types. Rows come back
// sorted by decreasing coordinate sum, then lexicographically.
inline VRep enumerate_vertices(const HRep& h) {
    int d = h.dim;
    if (d < 1) throw std::invalid_argument("enumerate_vertices: dimension must be >= 1");
    int m = static_cast<int>(h.facets.size());
    if (m < d + 1) throw std::invalid_argument("enumerate_vertices: need at least dim+1 facets");
    auto rows = detail::normalize_le(h);
    if (detail::has_recession_direction(rows, d)) throw unbounded_polytope{};
    std::set<Point> found;
    int mr = static_cast<int>(rows.size());
    detail::for_each_subset(mr, d, [&](const std::vector<int>& idx) {
        Matrix a;
        std::vector<Rat> b;
        for (int i : idx) {
            a.push_back(rows[static_cast<std::size_t>(i)].coeffs);
            b.push_back(rows[static_cast<std::size_t>(i)].rhs);
        }
        auto x = solve_square(std::move(a), std::move(b));
        if (!x) return;
        for (const auto& r : rows) {
            Rat dot = 0;
            for (int c = 0; c < d; ++c)
                dot += r.coeffs[static_cast<std::size_t>(c)] * (*x)[static_cast<std::size_t>(c)];
            if (dot > r.rhs) return;
        }
        found.insert(std::move(*x));
    });
    if (found.empty()) throw empty_polytope{};
    VRep v;
    v.dim = d;
    v.points.assign(found.begin(), found.end());
    std::sort(v.points.begin(), v.points.end(), point_row_less);
    return v;
}

// Indices of the facets satisfied with equality at p. The point must satisfy
// every inequality.
inline std::vector<int> tight_set(const Point& p, const HRep& h) {
    std::vector<int> out;
    for (std::size_t i = 0; i < h.facets.size(); ++i) {
        const auto& plane = h.facets[i].plane;
        if (!satisfies(plane, p))
            throw std::invalid_argument("tight_set: point violates facet " + std::to_string(i));
        if (tight(plane, p)) out.push_back(static_cast<int>(i));
    }
    return out;
}

// Geometric face lattice: faces are the vertex sets cut out by facet subsets,
// closed under intersection, with the whole polytope as top and the empty
// face as bottom. Order is vertex-set inclusion; rank is affine dimension.
inline FacePoset face_lattice_geometric(const HRep& h, const VRep& v) {
    if (h.dim != v.dim) throw std::invalid_argument("face_lattice_geometric: dimension mismatch");
    int nv = static_cast<int>(v.points.size());
    std::vector<std::vector<int>> facet_sets(h.facets.size());
    for (std::size_t f = 0; f < h.facets.size(); ++f)
        for (int i = 0; i < nv; ++i)
            if (tight(h.facets[f].plane, v.points[static_cast<std::size_t>(i)]))
                facet_sets[f].push_back(i);
    std::vector<int> all(static_cast<std::size_t>(nv));
    std::iota(all.begin(), all.end(), 0);
    std::set<std::vector<int>> faces;
    faces.insert(all);
    faces.insert(std::vector<int>{});
    std::vector<std::vector<int>> work{all};
    while (!work.empty()) {
        std::vector<int> cur = std::move(work.back());
        work.pop_back();
        for (const auto& fs : facet_sets) {
            std::vector<int> inter;
            std::set_intersection(cur.begin(), cur.end(), fs.begin(), fs.end(),
                                  std::back_inserter(inter));
            if (faces.insert(inter).second) work.push_back(std::move(inter));
        }
    }
    FacePoset p;
    std::vector<std::vector<int>> elems(faces.begin(), faces.end());
    // order faces by (size, content) so vertices come before edges etc.
    std::sort(elems.begin(), elems.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    for (const auto& e : elems) {
        std::string label = "{";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) label += ',';
            label += std::to_string(e[i]);
        }
        label += '}';
        p.labels.push_back(std::move(label));
        std::vector<Point> pts;
        for (int i : e) pts.push_back(v.points[static_cast<std::size_t>(i)]);
        p.ranks.push_back(affine_dim(pts));
    }
    int n = static_cast<int>(elems.size());
    p.leq.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            p.leq[i][j] = std::includes(elems[static_cast<std::size_t>(j)].begin(),
                                        elems[static_cast<std::size_t>(j)].end(),
                                        elems[static_cast<std::size_t>(i)].begin(),
                                        elems[static_cast<std::size_t>(i)].end());
    for (int i = 0; i < n; ++i) {
        if (elems[static_cast<std::size_t>(i)].empty()) p.bottom = i;
        if (static_cast<int>(elems[static_cast<std::size_t>(i)].size()) == nv) p.top = i;
    }
    return p;
}

}  // namespace ck
