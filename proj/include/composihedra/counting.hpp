#pragma once

// Exact counting for the polytope families. Everything is computed in
// arbitrary-precision integers; the vertex recursion and its binary-transform
// closed form are evaluated independently and must agree.

#include <stdexcept>
#include <utility>
#include <vector>

#include "composihedra/rational.hpp"

namespace ck {

inline Int catalan(int k) {
    if (k < 0) throw std::invalid_argument("catalan: k must be >= 0");
    std::vector<Int> c(static_cast<std::size_t>(k) + 1);
    c[0] = 1;
    for (int m = 1; m <= k; ++m)
        for (int i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
    return c[static_cast<std::size_t>(k)];
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// a_0..a_n with a_0 = 0 and a_m = 1 + sum a_i a_{m-i}.
inline std::vector<Int> vertex_series(int n) {
    std::vector<Int> a(static_cast<std::size_t>(n) + 1);
    a[0] = 0;
    for (int m = 1; m <= n; ++m) {
        Int s = 1;
        for (int i = 1; i <= m - 1; ++i) s += a[i] * a[m - i];
        a[m] = s;
    }
    return a;
}

// Number of vertices of the n-th composihedron. Returns 0 for n = 0 (the
// recursion seed). The recursion is cross-checked against the closed form
// a_n = sum_k C(n-1, k) Catalan(k).
inline Int vertex_count(int n) {
    if (n < 0) throw std::invalid_argument("vertex_count: n must be >= 0");
    if (n == 0) return 0;
    Int rec = vertex_series(n)[static_cast<std::size_t>(n)];
    Int closed = 0;
    for (int k = 0; k <= n - 1; ++k) closed += binomial(n - 1, k) * catalan(k);
    if (rec != closed)
        throw std::logic_error("vertex_count: recursion and closed form disagree at n=" +
                               std::to_string(n));
    return rec;
}

struct FacetBreakdown {
    int n = 0;
    Int upper_count;  // 2^{n-1} - 1
    Int lower_count;  // n - 1
    Int total;        // 2^{n-1} + n - 2

    friend bool operator==(const FacetBreakdown& a, const FacetBreakdown& b) {
        return a.n == b.n && a.upper_count == b.upper_count && a.lower_count == b.lower_count &&
               a.total == b.total;
    }
};

inline FacetBreakdown facet_breakdown(int n) {
    if (n < 2) throw std::invalid_argument("facet_breakdown: n must be >= 2");
    FacetBreakdown f;
    f.n = n;
    f.upper_count = (Int(1) << (n - 1)) - 1;
    f.lower_count = n - 1;
    f.total = f.upper_count + f.lower_count;
    return f;
}

// Facet-count identity relating the four families: facets of CK(n+1) plus
// facets of K(n+2) minus facets of J(n+1) equals the 2n facets of the n-cube.
inline std::pair<Int, Int> facet_identity(int n) {
    if (n < 1) throw std::invalid_argument("facet_identity: n must be >= 1");
    Int pow2 = Int(1) << n;
    Int ck_facets = pow2 + n - 1;
    Int k_facets = Int(n + 1) * (n + 2) / 2 - 1;
    Int j_facets = Int(n) * (n + 1) / 2 + pow2 - 1;
    Int lhs = ck_facets + k_facets - j_facets;
    Int rhs = 2 * Int(n);
    return {lhs, rhs};
}

// Coefficients 0..degree of A(x)^2 + x/(1-x), for checking the generating
// function equation satisfied by the vertex counts.
inline std::vector<Int> gf_rhs_coefficients(int degree) {
    auto a = vertex_series(degree);
    std::vector<Int> out(static_cast<std::size_t>(degree) + 1);
    for (int m = 0; m <= degree; ++m) {
        Int s = m >= 1 ? 1 : 0;  // x/(1-x) contributes 1 to every positive degree
        for (int i = 0; i <= m; ++i) s += a[i] * a[m - i];
        out[m] = s;
    }
    return out;
}

}  // namespace ck
