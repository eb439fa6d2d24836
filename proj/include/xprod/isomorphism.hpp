#pragma once
/**
 * @file isomorphism.hpp
 * @brief Signed-permutation equivalence of product tables.
 *
 * A signed permutation s maps e_i to signs[i] * e_{perm[i]}. It is an
 * isomorphism from table a to table b when s(x) x_b s(y) = s(x x_a y) for all
 * basis pairs, i.e.
 *
 *     signs[i] signs[j] b[perm i][perm j][perm k] = signs[k] a[i][j][k].
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "product_table.hpp"

namespace xprod {

struct SignedPermutation {
    std::vector<std::size_t> perm; ///< 1-based images
    std::vector<int> signs;        ///< each +1 or -1

    static SignedPermutation identity(std::size_t n) {
        SignedPermutation s{std::vector<std::size_t>(n), std::vector<int>(n, 1)};
        std::iota(s.perm.begin(), s.perm.end(), std::size_t{1});
        return s;
    }

    [[nodiscard]] std::size_t dim() const noexcept { return perm.size(); }

    /// Throws unless perm is a bijection on 1..n and every sign is +-1.
    void validate() const {
        if (signs.size() != perm.size()) throw InputError("SignedPermutation: perm/signs length differ");
        std::vector<bool> seen(perm.size(), false);
        for (auto p : perm) {
            if (p < 1 || p > perm.size() || seen[p - 1]) throw InputError("SignedPermutation: not a bijection");
            seen[p - 1] = true;
        }
        for (int s : signs) {
            if (s != 1 && s != -1) throw InputError("SignedPermutation: signs must be +1 or -1");
        }
    }

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

/// The table of x *' y = s(s^-1(x) * s^-1(y)), so that s is an isomorphism
/// from t to the result.
[[nodiscard]] inline ProductTable apply(const SignedPermutation& s, const ProductTable& t) {
    detail::require_same_dim(s.dim(), t.dim(), "apply");
    s.validate();
    std::vector<TableEntry> entries;
    for (const auto& e : t.nonzero()) {
        const int sign = s.signs[e.i - 1] * s.signs[e.j - 1] * s.signs[e.k - 1];
        entries.push_back({s.perm[e.i - 1], s.perm[e.j - 1], s.perm[e.k - 1], Rational(sign) * e.c});
    }
    return ProductTable(t.dim(), entries);
}

/// Number of unordered basis pairs {i, j}, i < j, on which s intertwines the
/// two products. Equals n(n-1)/2 exactly when s is an isomorphism (diagonal
/// pairs vanish on both sides).
[[nodiscard]] inline std::size_t verified_pairs(const SignedPermutation& s, const ProductTable& a,
                                                const ProductTable& b) {
    const std::size_t n = a.dim();
    std::size_t ok = 0;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            bool good = true;
            for (std::size_t k = 1; k <= n && good; ++k) {
                const Rational lhs = Rational(s.signs[i - 1] * s.signs[j - 1]) *
                                     b.constant(s.perm[i - 1], s.perm[j - 1], s.perm[k - 1]);
                good = lhs == Rational(s.signs[k - 1]) * a.constant(i, j, k);
            }
            if (good) ++ok;
        }
    return ok;
}

struct IsoSearchResult {
    std::optional<SignedPermutation> match;
    std::size_t candidates_tried = 0;
};

/// Exhaustive search over all n! 2^n signed permutations in lexicographic
/// order of (perm, signs) with +1 before -1; the first isomorphism wins.
[[nodiscard]] inline IsoSearchResult find_signed_isomorphism(const ProductTable& a, const ProductTable& b) {
    detail::require_same_dim(a.dim(), b.dim(), "find_signed_isomorphism");
    const std::size_t n = a.dim();
    if (n > 10) throw std::invalid_argument("find_signed_isomorphism: dimension too large for exhaustive search");

    // Dense copies; each constant is reduced to its sign class for the
    // support test and compared exactly afterwards.
    auto dense = [n](const ProductTable& t) {
        std::vector<Rational> d(n * n * n);
        for (const auto& e : t.nonzero()) d[((e.i - 1) * n + (e.j - 1)) * n + (e.k - 1)] = e.c;
        return d;
    };
    const auto da = dense(a);
    const auto db = dense(b);
    auto idx = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };

    // Nonzero triples of a with i < j.
    std::vector<std::array<std::size_t, 3>> support;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!da[idx(i, j, k)].is_zero()) support.push_back({i, j, k});
    const std::size_t support_b = [&] {
        std::size_t c = 0;
        for (const auto& e : b.nonzero()) c += e.i < e.j;
        return c;
    }();

    IsoSearchResult result;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    const std::size_t sign_count = std::size_t{1} << n;
    std::vector<int> sg(n);
    do {
        // A permutation whose support does not line up cannot be fixed by signs.
        bool support_ok = support.size() == support_b;
        for (std::size_t t = 0; t < support.size() && support_ok; ++t) {
            const auto& [i, j, k] = support[t];
            support_ok = !db[idx(p[i], p[j], p[k])].is_zero();
        }
        if (!support_ok) {
            result.candidates_tried += sign_count;
            continue;
        }
        for (std::size_t mask = 0; mask < sign_count; ++mask) {
            ++result.candidates_tried;
            // Most significant bit is position 0, so +1 (bit clear) sorts first.
            for (std::size_t t = 0; t < n; ++t) sg[t] = (mask >> (n - 1 - t)) & 1U ? -1 : 1;
            bool ok = true;
            for (std::size_t t = 0; t < support.size() && ok; ++t) {
                const auto& [i, j, k] = support[t];
                const Rational lhs = Rational(sg[i] * sg[j]) * db[idx(p[i], p[j], p[k])];
                ok = lhs == Rational(sg[k]) * da[idx(i, j, k)];
            }
            if (!ok) continue;
            SignedPermutation s;
            for (std::size_t t = 0; t < n; ++t) {
                s.perm.push_back(p[t] + 1);
                s.signs.push_back(sg[t]);
            }
            result.match = std::move(s);
            return result;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return result;
}

/// Seven-dimensional entry point.
[[nodiscard]] inline std::optional<SignedPermutation> find_iso(const ProductTable& a, const ProductTable& b) {
    if (a.dim() != 7 || b.dim() != 7) throw DimensionMismatch("find_iso: both tables must have dimension 7");
    return find_signed_isomorphism(a, b).match;
}

} // namespace xprod
