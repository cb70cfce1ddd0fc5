#pragma once

// Finite graded posets with labeled elements, used both for geometric face
// lattices and for the combinatorial tree posets. The full order relation is
// stored as a dense boolean matrix; everything here is desk scale.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ck {

struct FacePoset {
    std::vector<std::string> labels;
    std::vector<int> ranks;
    std::vector<std::vector<bool>> leq;  // leq[i][j] means element i <= element j
    std::optional<int> top;
    std::optional<int> bottom;

    int size() const { return static_cast<int>(labels.size()); }

    friend bool operator==(const FacePoset& a, const FacePoset& b) {
        return a.labels == b.labels && a.ranks == b.ranks && a.leq == b.leq && a.top == b.top &&
               a.bottom == b.bottom;
    }
};

inline bool is_partial_order(const FacePoset& p) {
    int n = p.size();
    for (int i = 0; i < n; ++i)
        if (!p.leq[i][i]) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != j && p.leq[i][j] && p.leq[j][i]) return false;
            if (!p.leq[i][j]) continue;
            for (int k = 0; k < n; ++k)
                if (p.leq[j][k] && !p.leq[i][k]) return false;
        }
    return true;
}

// covers[i] lists the j with i < j and nothing strictly between.
inline std::vector<std::vector<int>> upper_covers(const FacePoset& p) {
    int n = p.size();
    std::vector<std::vector<int>> covers(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !p.leq[i][j]) continue;
            bool direct = true;
            for (int k = 0; k < n && direct; ++k)
                if (k != i && k != j && p.leq[i][k] && p.leq[k][j]) direct = false;
            if (direct) covers[i].push_back(j);
        }
    return covers;
}

inline std::vector<std::vector<int>> lower_covers(const FacePoset& p) {
    auto up = upper_covers(p);
    std::vector<std::vector<int>> down(p.size());
    for (int i = 0; i < p.size(); ++i)
        for (int j : up[i]) down[j].push_back(i);
    return down;
}

inline bool is_graded(const FacePoset& p) {
    auto up = upper_covers(p);
    for (int i = 0; i < p.size(); ++i)
        for (int j : up[i])
            if (p.ranks[j] != p.ranks[i] + 1) return false;
    return true;
}

// Ranks as longest chain below: minimal elements get 0.
inline void assign_ranks_by_longest_chain(FacePoset& p) {
    int n = p.size();
    std::vector<int> below(n, 0);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    // count of elements <= i orders any linear extension
    std::vector<int> weight(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.leq[j][i]) ++weight[i];
    std::sort(order.begin(), order.end(), [&](int a, int b) { return weight[a] < weight[b]; });
    p.ranks.assign(n, 0);
    for (int i : order) {
        int r = 0;
        for (int j = 0; j < n; ++j)
            if (j != i && p.leq[j][i]) r = std::max(r, p.ranks[j] + 1);
        p.ranks[i] = r;
    }
}

// Number of elements per rank, from the minimum rank upward.
inline std::vector<int> f_vector(const FacePoset& p) {
    if (p.size() == 0) return {};
    int lo = *std::min_element(p.ranks.begin(), p.ranks.end());
    int hi = *std::max_element(p.ranks.begin(), p.ranks.end());
    std::vector<int> f(static_cast<std::size_t>(hi - lo + 1), 0);
    for (int r : p.ranks) ++f[static_cast<std::size_t>(r - lo)];
    return f;
}

// Copy with a new minimum adjoined below everything (rank one less than the
// current minimum).
inline FacePoset with_bottom(const FacePoset& p, const std::string& label = "bottom") {
    if (p.bottom) return p;
    FacePoset q = p;
    int n = p.size();
    int r = n == 0 ? 0 : *std::min_element(p.ranks.begin(), p.ranks.end()) - 1;
    q.labels.push_back(label);
    q.ranks.push_back(r);
    for (auto& row : q.leq) row.push_back(false);
    q.leq.emplace_back(n + 1, true);
    q.bottom = n;
    return q;
}

// Componentwise order on pairs; ranks add.
inline FacePoset product_poset(const FacePoset& a, const FacePoset& b) {
    FacePoset p;
    int na = a.size(), nb = b.size();
    p.labels.reserve(static_cast<std::size_t>(na) * nb);
    p.ranks.reserve(static_cast<std::size_t>(na) * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            p.labels.push_back("(" + a.labels[i] + "," + b.labels[j] + ")");
            p.ranks.push_back(a.ranks[i] + b.ranks[j]);
        }
    int n = na * nb;
    p.leq.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < na; ++k)
                for (int l = 0; l < nb; ++l)
                    if (a.leq[i][k] && b.leq[j][l]) p.leq[i * nb + j][k * nb + l] = true;
    if (a.top && b.top) p.top = *a.top * nb + *b.top;
    if (a.bottom && b.bottom) p.bottom = *a.bottom * nb + *b.bottom;
    return p;
}

namespace detail {
// Iterated refinement of element colors by rank and cover neighborhoods;
// isomorphic posets refine to equal color multisets. Run on the disjoint
// union of two posets so the resulting classes align across them.
inline std::vector<std::uint64_t> refine_colors(const std::vector<int>& ranks,
                                                const std::vector<std::vector<int>>& up,
                                                const std::vector<std::vector<int>>& down) {
    int n = static_cast<int>(ranks.size());
    std::vector<std::uint64_t> color(n);
    for (int i = 0; i < n; ++i) color[i] = static_cast<std::uint64_t>(ranks[i] + 2);
    auto distinct = [](const std::vector<std::uint64_t>& v) {
        auto s = v;
        std::sort(s.begin(), s.end());
        return std::unique(s.begin(), s.end()) - s.begin();
    };
    auto classes = distinct(color);
    for (int round = 0; round < n; ++round) {
        std::map<std::vector<std::uint64_t>, std::uint64_t> dict;
        std::vector<std::uint64_t> next(n);
        for (int i = 0; i < n; ++i) {
            std::vector<std::uint64_t> sig{color[i], 0};
            std::vector<std::uint64_t> ups, downs;
            for (int j : up[i]) ups.push_back(color[j]);
            for (int j : down[i]) downs.push_back(color[j]);
            std::sort(ups.begin(), ups.end());
            std::sort(downs.begin(), downs.end());
            sig.insert(sig.end(), ups.begin(), ups.end());
            sig.push_back(1);
            sig.insert(sig.end(), downs.begin(), downs.end());
            next[i] = dict.emplace(sig, static_cast<std::uint64_t>(dict.size())).first->second;
        }
        color = std::move(next);
        auto now = distinct(color);
        if (now == classes || now == n) break;
        classes = now;
    }
    return color;
}
}  // namespace detail

// Searches for a rank-preserving order isomorphism a -> b. Returns the image
// vector (a-index to b-index) or nothing. Backtracking over rank-stratified
// candidates pruned by cover-degree colors.
inline std::optional<std::vector<int>> poset_isomorphic(const FacePoset& a, const FacePoset& b) {
    int n = a.size();
    if (n != b.size()) return std::nullopt;
    if (n == 0) return std::vector<int>{};
    {
        auto ra = a.ranks, rb = b.ranks;
        std::sort(ra.begin(), ra.end());
        std::sort(rb.begin(), rb.end());
        if (ra != rb) return std::nullopt;
    }
    auto up_a = upper_covers(a), down_a = lower_covers(a);
    auto up_b = upper_covers(b), down_b = lower_covers(b);
    std::vector<int> ranks = a.ranks;
    ranks.insert(ranks.end(), b.ranks.begin(), b.ranks.end());
    std::vector<std::vector<int>> up(2 * n), down(2 * n);
    for (int i = 0; i < n; ++i) {
        up[i] = up_a[i];
        down[i] = down_a[i];
        for (int j : up_b[i]) up[n + i].push_back(n + j);
        for (int j : down_b[i]) down[n + i].push_back(n + j);
    }
    auto color = detail::refine_colors(ranks, up, down);
    std::vector<std::uint64_t> ca(color.begin(), color.begin() + n);
    std::vector<std::uint64_t> cb(color.begin() + n, color.end());
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    // candidates per a-element
    std::vector<std::vector<int>> cands(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (ca[i] == cb[j]) cands[i].push_back(j);
    // assign in an order that keeps each element adjacent (in the Hasse
    // diagram) to earlier ones where possible, so cover consistency prunes
    // immediately; ties broken toward small candidate classes
    std::vector<int> order;
    {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<char> frontier(static_cast<std::size_t>(n), 0);
        for (int step = 0; step < n; ++step) {
            int best = -1;
            bool best_adj = false;
            for (int i = 0; i < n; ++i) {
                if (seen[static_cast<std::size_t>(i)]) continue;
                bool adj = frontier[static_cast<std::size_t>(i)];
                if (best < 0 || adj > best_adj ||
                    (adj == best_adj && cands[i].size() < cands[best].size())) {
                    best = i;
                    best_adj = adj;
                }
            }
            seen[static_cast<std::size_t>(best)] = 1;
            order.push_back(best);
            for (int j : up_a[static_cast<std::size_t>(best)]) frontier[static_cast<std::size_t>(j)] = 1;
            for (int j : down_a[static_cast<std::size_t>(best)]) frontier[static_cast<std::size_t>(j)] = 1;
        }
    }
    auto cover_matrix = [n](const std::vector<std::vector<int>>& covers) {
        std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i)
            for (int j : covers[static_cast<std::size_t>(i)]) m[i][j] = true;
        return m;
    };
    auto cov_a = cover_matrix(up_a), cov_b = cover_matrix(up_b);
    std::vector<int> image(n, -1), used(n, 0), assigned;
    auto consistent = [&](int x, int y) {
        // covers between x and every already-assigned element must transport
        for (int z : assigned) {
            if (cov_a[x][z] != cov_b[y][image[z]]) return false;
            if (cov_a[z][x] != cov_b[image[z]][y]) return false;
        }
        return true;
    };
    auto dfs = [&](auto&& self, int k) -> bool {
        if (k == n) return true;
        int x = order[k];
        for (int y : cands[x]) {
            if (used[y]) continue;
            if (!consistent(x, y)) continue;
            image[x] = y;
            used[y] = 1;
            assigned.push_back(x);
            if (self(self, k + 1)) return true;
            assigned.pop_back();
            image[x] = -1;
            used[y] = 0;
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    return image;
}

}  // namespace ck
