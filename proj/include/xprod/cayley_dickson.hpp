#pragma once
/**
 * @file cayley_dickson.hpp
 * @brief The doubling ladder R -> C -> H -> O -> sedenions over exact rationals.
 *
 * An element at level L has 2^L coordinates over u_0 = 1, u_1, ..., u_{2^L - 1}.
 * Level L+1 elements are pairs (a, b) of level-L elements stored as the
 * concatenation of their coordinates, multiplied by
 *
 *     (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)),   conj(a, b) = (conj(a), -b).
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "product_table.hpp"
#include "rational.hpp"
#include "sampling.hpp"
#include "vector.hpp"

namespace xprod {

inline constexpr int kMaxCdLevel = 4;

class CDElement {
public:
    /// Zero element at the given level.
    explicit CDElement(int level) : level_(checked_level(level)), c_(std::size_t{1} << level) {}

    CDElement(int level, std::vector<Rational> coefficients)
        : level_(checked_level(level)), c_(std::move(coefficients)) {
        if (c_.size() != (std::size_t{1} << level_)) {
            throw std::invalid_argument("CDElement: level " + std::to_string(level_) + " needs " +
                                        std::to_string(std::size_t{1} << level_) + " coefficients");
        }
    }

    static CDElement unit(int level) {
        CDElement e(level);
        e.c_[0] = Rational(1);
        return e;
    }

    /// Basis element u_k, k = 0 .. 2^level - 1 (u_0 is the unit).
    static CDElement basis_element(int level, std::size_t k) {
        CDElement e(level);
        if (k >= e.c_.size()) {
            throw IndexOutOfRange("CDElement: basis index " + std::to_string(k) + " out of range");
        }
        e.c_[k] = Rational(1);
        return e;
    }

    /// Embed a vector of dimension 2^level - 1 as an imaginary element.
    static CDElement from_imaginary(int level, const Vector& v) {
        CDElement e(level);
        detail::require_same_dim(v.dim(), e.c_.size() - 1, "CDElement::from_imaginary");
        for (std::size_t k = 1; k < e.c_.size(); ++k) e.c_[k] = v(k);
        return e;
    }

    [[nodiscard]] int level() const noexcept { return level_; }
    [[nodiscard]] std::size_t size() const noexcept { return c_.size(); }
    [[nodiscard]] std::span<const Rational> coefficients() const noexcept { return c_; }
    [[nodiscard]] const Rational& operator[](std::size_t k) const { return c_.at(k); }

    [[nodiscard]] const Rational& real() const noexcept { return c_[0]; }

    /// Coordinates along u_1..u_{2^L-1}.
    [[nodiscard]] Vector imaginary() const {
        if (level_ == 0) throw std::invalid_argument("CDElement: level 0 has no imaginary part");
        return Vector(std::vector<Rational>(c_.begin() + 1, c_.end()));
    }

    CDElement& operator+=(const CDElement& o) {
        require_same_level(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    CDElement& operator-=(const CDElement& o) {
        require_same_level(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    CDElement& operator*=(const Rational& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    friend CDElement operator+(CDElement a, const CDElement& b) { return a += b; }
    friend CDElement operator-(CDElement a, const CDElement& b) { return a -= b; }
    friend CDElement operator*(const Rational& s, CDElement a) { return a *= s; }
    friend bool operator==(const CDElement&, const CDElement&) = default;

private:
    static int checked_level(int level) {
        if (level < 0 || level > 16) throw std::invalid_argument("CDElement: bad level");
        return level;
    }
    void require_same_level(const CDElement& o) const {
        if (o.level_ != level_) throw DimensionMismatch("CDElement: level mismatch");
    }

    int level_;
    std::vector<Rational> c_;
};

namespace detail {

using Coeffs = std::vector<Rational>;

inline Coeffs cd_conj(std::span<const Rational> x) {
    Coeffs r(x.begin(), x.end());
    for (std::size_t k = 1; k < r.size(); ++k) r[k] = -r[k];
    return r;
}

inline Coeffs cd_product(std::span<const Rational> x, std::span<const Rational> y) {
    const std::size_t n = x.size();
    if (n == 1) return {x[0] * y[0]};
    const std::size_t h = n / 2;
    const auto a = x.first(h), b = x.last(h);
    const auto c = y.first(h), d = y.last(h);

    const Coeffs ac = cd_product(a, c);
    const Coeffs db = cd_product(cd_conj(d), b);
    const Coeffs da = cd_product(d, a);
    const Coeffs bc = cd_product(b, cd_conj(c));

    Coeffs r(n);
    for (std::size_t k = 0; k < h; ++k) {
        r[k] = ac[k] - db[k];
        r[h + k] = da[k] + bc[k];
    }
    return r;
}

} // namespace detail

[[nodiscard]] inline CDElement cd_mul(const CDElement& x, const CDElement& y) {
    if (x.level() != y.level()) throw DimensionMismatch("cd_mul: level mismatch");
    return CDElement(x.level(), detail::cd_product(x.coefficients(), y.coefficients()));
}

[[nodiscard]] inline CDElement conjugate(const CDElement& x) {
    return CDElement(x.level(), detail::cd_conj(x.coefficients()));
}

[[nodiscard]] inline Rational cd_norm_sq(const CDElement& x) {
    Rational s;
    for (const auto& v : x.coefficients()) s += v * v;
    return s;
}

/// (xy - yx)/2 on imaginary elements, returned over u_1..u_{2^L-1}.
[[nodiscard]] inline Vector commutator_cross(const CDElement& x, const CDElement& y) {
    if (x.level() != y.level()) throw DimensionMismatch("commutator_cross: level mismatch");
    if (x.level() == 0) throw std::invalid_argument("commutator_cross: level 0 has no imaginary part");
    if (!x.real().is_zero() || !y.real().is_zero()) {
        throw std::invalid_argument("commutator_cross: operands must have zero unit coordinate");
    }
    CDElement r = cd_mul(x, y) - cd_mul(y, x);
    r *= Rational(1, 2);
    if (!r.real().is_zero()) throw std::logic_error("commutator_cross: real part did not cancel");
    return r.imaginary();
}

/// Structure constants of the half-commutator on the imaginary subspace of
/// the level-L algebra; dimension 2^L - 1. Level 3 gives the 7D product.
[[nodiscard]] inline ProductTable derived_table(int level = 3) {
    if (level < 1 || level > kMaxCdLevel) throw std::invalid_argument("derived_table: level must be 1..4");
    const std::size_t n = (std::size_t{1} << level) - 1;
    std::vector<TableEntry> entries;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            const Vector v = commutator_cross(CDElement::basis_element(level, i),
                                              CDElement::basis_element(level, j));
            for (std::size_t k = 1; k <= n; ++k) {
                if (!v(k).is_zero()) entries.push_back({i, j, k, v(k)});
            }
        }
    }
    return ProductTable(n, entries);
}

[[nodiscard]] inline CDElement random_element(SampleGenerator& gen, int level) {
    std::vector<Rational> c;
    for (std::size_t k = 0; k < (std::size_t{1} << level); ++k) c.push_back(gen.scalar());
    return CDElement(level, std::move(c));
}

[[nodiscard]] inline CDElement random_imaginary(SampleGenerator& gen, int level) {
    CDElement x = random_element(gen, level);
    std::vector<Rational> c(x.coefficients().begin(), x.coefficients().end());
    c[0] = Rational{};
    return CDElement(level, std::move(c));
}

// ---------------------------------------------------------------------------
// Norm multiplicativity across the ladder

struct HurwitzReport {
    int level = 0;
    std::size_t pairs_checked = 0;
    bool multiplicative = true; ///< no violation found
    /// A pair with |xy|^2 != |x|^2 |y|^2, with both sides.
    struct Violation {
        CDElement x, y;
        Rational product_norm_sq; ///< |xy|^2
        Rational norm_product;    ///< |x|^2 |y|^2
    };
    std::optional<Violation> witness;

    /// Levels 0..3 must be multiplicative; level 4 must produce a witness.
    [[nodiscard]] bool matches_hurwitz() const {
        return level <= 3 ? multiplicative : witness.has_value();
    }
};

namespace detail {

inline bool record_pair(HurwitzReport& r, const CDElement& x, const CDElement& y) {
    ++r.pairs_checked;
    Rational lhs = cd_norm_sq(cd_mul(x, y));
    Rational rhs = cd_norm_sq(x) * cd_norm_sq(y);
    if (lhs == rhs) return false;
    r.multiplicative = false;
    if (!r.witness) r.witness = HurwitzReport::Violation{x, y, std::move(lhs), std::move(rhs)};
    return true;
}

} // namespace detail

/// Levels 0..3: check |xy|^2 = |x|^2 |y|^2 on every sample pair.
/// Level 4: scan x = u_a + u_b, y = u_c + u_d (a < b, c < d) in lexicographic
/// order of (a, b, c, d) and stop at the first violation.
[[nodiscard]] inline HurwitzReport hurwitz_boundary_check(
    int level, std::span<const std::pair<CDElement, CDElement>> samples) {
    if (level < 0 || level > kMaxCdLevel) throw std::invalid_argument("hurwitz_boundary_check: level must be 0..4");
    HurwitzReport r;
    r.level = level;
    if (level <= 3) {
        for (const auto& [x, y] : samples) {
            if (x.level() != level || y.level() != level) {
                throw DimensionMismatch("hurwitz_boundary_check: sample level mismatch");
            }
            detail::record_pair(r, x, y);
        }
        return r;
    }
    const std::size_t n = std::size_t{1} << level;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    const CDElement x = CDElement::basis_element(level, a) + CDElement::basis_element(level, b);
                    const CDElement y = CDElement::basis_element(level, c) + CDElement::basis_element(level, d);
                    if (detail::record_pair(r, x, y)) return r;
                }
    return r;
}

/// Seeded random pairs at a level.
[[nodiscard]] inline std::vector<std::pair<CDElement, CDElement>> random_pairs(int level, std::size_t count,
                                                                               std::uint64_t seed) {
    SampleGenerator gen(seed);
    std::vector<std::pair<CDElement, CDElement>> out;
    for (std::size_t s = 0; s < count; ++s) {
        CDElement x = random_element(gen, level);
        CDElement y = random_element(gen, level);
        out.emplace_back(std::move(x), std::move(y));
    }
    return out;
}

} // namespace xprod
