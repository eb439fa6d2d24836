#pragma once
// Independent reference for the seven- and three-dimensional products on
// integer vectors. It shares nothing with the library: the structure
// constants are rebuilt from the seven listed triples with an explicit
// permutation-sign rule, and all arithmetic is plain 64-bit integers.

#include <array>
#include <cstdint>
#include <vector>

namespace oracle {

using Int = std::int64_t;
using IVec = std::vector<Int>;

struct Tensor3 {
    int n;
    std::vector<Int> c; // c[(i*n + j)*n + k], 0-based
    Int operator()(int i, int j, int k) const { return c[(i * n + j) * n + k]; }
};

// Sign of the permutation taking (a,b,c) to (x,y,z), or 0 if not a permutation.
inline Int perm_sign(std::array<int, 3> from, std::array<int, 3> to) {
    int map[3] = {-1, -1, -1};
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t)
            if (to[s] == from[t]) map[s] = t;
    for (int s : map)
        if (s < 0) return 0;
    if (map[0] == map[1] || map[1] == map[2] || map[0] == map[2]) return 0;
    int inversions = 0;
    for (int s = 0; s < 3; ++s)
        for (int t = s + 1; t < 3; ++t) inversions += map[s] > map[t];
    return inversions % 2 ? -1 : 1;
}

inline Tensor3 from_triples(int n, const std::vector<std::array<int, 3>>& triples) {
    Tensor3 t{n, std::vector<Int>(n * n * n, 0)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (const auto& tr : triples) {
                    const Int s = perm_sign({tr[0] - 1, tr[1] - 1, tr[2] - 1}, {i, j, k});
                    if (s) t.c[(i * n + j) * n + k] = s;
                }
    return t;
}

inline Tensor3 cross7() {
    return from_triples(7, {{1, 2, 3}, {2, 4, 6}, {4, 3, 5}, {6, 5, 1}, {5, 7, 2}, {7, 1, 4}, {3, 6, 7}});
}

inline Tensor3 cross3() { return from_triples(3, {{1, 2, 3}}); }

inline IVec e(int n, int i) {
    IVec v(n, 0);
    v[i - 1] = 1;
    return v;
}

inline Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IVec cross(const Tensor3& t, const IVec& a, const IVec& b) {
    IVec r(t.n, 0);
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j)
            for (int k = 0; k < t.n; ++k) r[k] += a[i] * b[j] * t(i, j, k);
    return r;
}

inline IVec ternary(const Tensor3& t, const IVec& a, const IVec& b, const IVec& c) {
    IVec r = cross(t, a, cross(t, b, c));
    const Int ac = dot(a, c), ab = dot(a, b);
    for (int k = 0; k < t.n; ++k) r[k] += -b[k] * ac + c[k] * ab;
    return r;
}

inline IVec add(IVec a, const IVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline IVec scale(Int s, IVec a) {
    for (auto& x : a) x *= s;
    return a;
}

inline int nonzero_count(const Tensor3& t) {
    int c = 0;
    for (auto x : t.c) c += x != 0;
    return c;
}

inline Int g(const Tensor3& t, int i, int j, int m, int q) {
    return dot(e(t.n, i), ternary(t, e(t.n, j), e(t.n, m), e(t.n, q)));
}

inline Int eq10_sum(const Tensor3& t) {
    Int s = 0;
    for (int i = 1; i <= t.n; ++i)
        for (int j = 1; j <= t.n; ++j)
            for (int k = 1; k <= t.n; ++k) {
                const IVec v = ternary(t, e(t.n, i), e(t.n, j), e(t.n, k));
                s += dot(v, v);
            }
    return s;
}

// 4 sum |e_i x {e_j,e_k,e_l}|^2 and the sum of the squared three-term right side.
inline std::array<Int, 2> obstruction_sums(const Tensor3& t) {
    const int n = t.n;
    Int lhs = 0, rhs = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    const IVec ei = e(n, i), ej = e(n, j), ek = e(n, k), el = e(n, l);
                    const IVec x = cross(t, ei, ternary(t, ej, ek, el));
                    lhs += 4 * dot(x, x);
                    const IVec s = add(add(ternary(t, ei, ej, cross(t, ek, el)), ternary(t, ei, ek, cross(t, el, ej))),
                                       ternary(t, ei, el, cross(t, ej, ek)));
                    rhs += dot(s, s);
                }
    return {lhs, rhs};
}

} // namespace oracle
