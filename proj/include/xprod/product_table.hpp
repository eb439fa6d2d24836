#pragma once
/**
 * @file product_table.hpp
 * @brief Bilinear products on R^n given by structure constants.
 *
 * A table stores c_ijk with e_i x e_j = sum_k c_ijk e_k. Only antisymmetry in
 * the first index pair is enforced, so arbitrary anticommutative candidates
 * can be represented and then tested against the vector-product axioms.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "vector.hpp"

namespace xprod {

/// One structure constant c_ijk, indices 1-based.
struct TableEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    Rational c;

    friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

enum class CanonicalKind { cross3, cross7 };

/// The seven independent components f_ijk = 1 of the seven-dimensional product.
inline constexpr std::array<std::array<std::size_t, 3>, 7> kCross7Triples{{
    {1, 2, 3}, {2, 4, 6}, {4, 3, 5}, {6, 5, 1}, {5, 7, 2}, {7, 1, 4}, {3, 6, 7},
}};

class ProductTable {
public:
    /// Build from a list of constants. The antisymmetric image c_jik = -c_ijk is
    /// filled in automatically; entries that disagree (directly or through that
    /// image) raise TableConflict.
    ProductTable(std::size_t dim, std::span<const TableEntry> entries) : dim_(dim) {
        if (dim == 0) throw std::invalid_argument("ProductTable: dimension must be positive");
        std::map<std::array<std::size_t, 3>, Rational> given;
        auto put = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
            auto [it, inserted] = given.try_emplace({i, j, k}, c);
            if (!inserted && it->second != c) {
                throw TableConflict("contradictory constants for (" + std::to_string(i) + "," +
                                    std::to_string(j) + "," + std::to_string(k) + "): " +
                                    it->second.str() + " vs " + c.str());
            }
        };
        for (const auto& e : entries) {
            detail::require_index(e.i, dim, "ProductTable");
            detail::require_index(e.j, dim, "ProductTable");
            detail::require_index(e.k, dim, "ProductTable");
            if (e.i == e.j && !e.c.is_zero()) {
                throw TableConflict("c_iik must vanish, got c_" + std::to_string(e.i) +
                                    std::to_string(e.j) + std::to_string(e.k) + " = " + e.c.str());
            }
            put(e.i, e.j, e.k, e.c);
            put(e.j, e.i, e.k, -e.c);
        }
        for (auto& [key, c] : given) {
            if (!c.is_zero()) entries_.push_back({key[0], key[1], key[2], c});
        }
        // std::map iteration already yields lexicographic (i,j,k) order.
    }

    ProductTable(std::size_t dim, std::initializer_list<TableEntry> entries)
        : ProductTable(dim, std::span<const TableEntry>(entries.begin(), entries.size())) {}

    /// Zero product in dimension n.
    explicit ProductTable(std::size_t dim) : ProductTable(dim, std::span<const TableEntry>{}) {}

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    /// Every nonzero constant, both orientations, sorted by (i,j,k).
    [[nodiscard]] std::span<const TableEntry> nonzero() const noexcept { return entries_; }

    /// One orientation (i < j) per independent component, sorted by (i,j,k).
    [[nodiscard]] std::vector<TableEntry> independent() const {
        std::vector<TableEntry> out;
        for (const auto& e : entries_) {
            if (e.i < e.j) out.push_back(e);
        }
        return out;
    }

    [[nodiscard]] Rational constant(std::size_t i, std::size_t j, std::size_t k) const {
        detail::require_index(i, dim_, "structure_constant");
        detail::require_index(j, dim_, "structure_constant");
        detail::require_index(k, dim_, "structure_constant");
        const auto key = std::make_tuple(i, j, k);
        const auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                                         [](const TableEntry& e, const auto& t) {
                                             return std::tie(e.i, e.j, e.k) < t;
                                         });
        if (it != entries_.end() && std::tie(it->i, it->j, it->k) == key) return it->c;
        return Rational{};
    }

    /// True when c is antisymmetric under every transposition of (i,j,k).
    [[nodiscard]] bool totally_antisymmetric() const {
        for (const auto& e : entries_) {
            if (constant(e.j, e.k, e.i) != e.c) return false;
            if (constant(e.i, e.k, e.j) != -e.c) return false;
        }
        return true;
    }

    friend bool operator==(const ProductTable&, const ProductTable&) = default;

private:
    std::size_t dim_;
    std::vector<TableEntry> entries_;
};

[[nodiscard]] inline ProductTable make_table(std::size_t dim, std::span<const TableEntry> entries) {
    return ProductTable(dim, entries);
}

[[nodiscard]] inline ProductTable make_table(std::size_t dim, std::initializer_list<TableEntry> entries) {
    return ProductTable(dim, entries);
}

/// Entries c_{s(a)s(b)s(c)} = sign(s) * c for every permutation s of a triple.
[[nodiscard]] inline std::vector<TableEntry> antisymmetrize(std::size_t a, std::size_t b,
                                                            std::size_t c, const Rational& value) {
    return {
        {a, b, c, value}, {b, c, a, value}, {c, a, b, value},
        {b, a, c, -value}, {a, c, b, -value}, {c, b, a, -value},
    };
}

[[nodiscard]] inline ProductTable canonical_table(CanonicalKind kind) {
    std::vector<TableEntry> entries;
    if (kind == CanonicalKind::cross3) {
        entries = antisymmetrize(1, 2, 3, Rational(1));
        return ProductTable(3, entries);
    }
    for (const auto& [a, b, c] : kCross7Triples) {
        auto part = antisymmetrize(a, b, c, Rational(1));
        entries.insert(entries.end(), part.begin(), part.end());
    }
    return ProductTable(7, entries);
}

[[nodiscard]] inline Rational structure_constant(const ProductTable& t, std::size_t i, std::size_t j,
                                                 std::size_t k) {
    return t.constant(i, j, k);
}

/// Bilinear extension: sum_{i,j} a_i b_j (e_i x e_j).
[[nodiscard]] inline Vector cross(const ProductTable& t, const Vector& a, const Vector& b) {
    detail::require_same_dim(a.dim(), t.dim(), "cross");
    detail::require_same_dim(b.dim(), t.dim(), "cross");
    const auto x = a.components();
    const auto y = b.components();
    std::vector<Rational> out(t.dim());
    for (const auto& e : t.nonzero()) {
        const auto& ai = x[e.i - 1];
        const auto& bj = y[e.j - 1];
        if (ai.is_zero() || bj.is_zero()) continue;
        out[e.k - 1] += e.c * ai * bj;
    }
    return Vector(std::move(out));
}

} // namespace xprod
