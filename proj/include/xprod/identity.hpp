#pragma once
/**
 * @file identity.hpp
 * @brief Ternary product, the g tensor and exact identity checkers.
 *
 * Every checker compares two exactly evaluated sides. Violations are returned
 * as data, with the inputs and both sides stored in a witness.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "product_table.hpp"
#include "rational.hpp"
#include "sampling.hpp"
#include "vector.hpp"

namespace xprod {

// ---------------------------------------------------------------------------
// Ternary product and g tensor

/// {a,b,c} = a x (b x c) - b (a.c) + c (a.b)
[[nodiscard]] inline Vector ternary(const ProductTable& t, const Vector& a, const Vector& b,
                                    const Vector& c) {
    detail::require_same_dim(a.dim(), b.dim(), "ternary");
    detail::require_same_dim(a.dim(), c.dim(), "ternary");
    Vector r = cross(t, a, cross(t, b, c));
    const Rational ac = dot(a, c);
    const Rational ab = dot(a, b);
    if (!ac.is_zero()) r = axpy(-ac, b, r);
    if (!ab.is_zero()) r = axpy(ab, c, r);
    return r;
}

/// Rank-4 tensor g_ijmn = e_i . {e_j, e_m, e_n}, stored densely.
class TernaryTensor {
public:
    struct Component {
        std::array<std::size_t, 4> index;
        Rational value;
    };

    TernaryTensor(std::size_t dim, std::vector<Rational> values)
        : dim_(dim), values_(std::move(values)) {
        if (values_.size() != dim_ * dim_ * dim_ * dim_) {
            throw std::invalid_argument("TernaryTensor: value count does not match dimension");
        }
    }

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    [[nodiscard]] const Rational& operator()(std::size_t i, std::size_t j, std::size_t m,
                                             std::size_t n) const {
        for (auto x : {i, j, m, n}) detail::require_index(x, dim_, "TernaryTensor");
        return values_[offset(i, j, m, n)];
    }

    /// All nonzero components in lexicographic index order.
    [[nodiscard]] std::vector<Component> nonzero() const {
        std::vector<Component> out;
        for_each_index([&](std::size_t i, std::size_t j, std::size_t m, std::size_t n) {
            const auto& v = values_[offset(i, j, m, n)];
            if (!v.is_zero()) out.push_back({{i, j, m, n}, v});
        });
        return out;
    }

    /// Nonzero components with strictly increasing indices. For a totally
    /// antisymmetric tensor these determine everything else.
    [[nodiscard]] std::vector<Component> independent() const {
        std::vector<Component> out;
        for (const auto& c : nonzero()) {
            const auto& x = c.index;
            if (x[0] < x[1] && x[1] < x[2] && x[2] < x[3]) out.push_back(c);
        }
        return out;
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& v : values_) {
            if (!v.is_zero()) return false;
        }
        return true;
    }

    /// Checks g(..x..y..) == -g(..y..x..) for all six index transpositions
    /// over every quadruple. Returns the first offending quadruple, if any.
    [[nodiscard]] std::optional<std::array<std::size_t, 4>> antisymmetry_violation() const {
        std::optional<std::array<std::size_t, 4>> bad;
        for_each_index([&](std::size_t i, std::size_t j, std::size_t m, std::size_t n) {
            if (bad) return;
            const std::array<std::size_t, 4> q{i, j, m, n};
            const auto& v = values_[offset(i, j, m, n)];
            for (std::size_t a = 0; a < 4 && !bad; ++a) {
                for (std::size_t b = a + 1; b < 4 && !bad; ++b) {
                    auto p = q;
                    std::swap(p[a], p[b]);
                    if (values_[offset(p[0], p[1], p[2], p[3])] != -v) bad = q;
                }
            }
        });
        return bad;
    }

    friend bool operator==(const TernaryTensor&, const TernaryTensor&) = default;

private:
    template <class F>
    void for_each_index(F&& f) const {
        for (std::size_t i = 1; i <= dim_; ++i)
            for (std::size_t j = 1; j <= dim_; ++j)
                for (std::size_t m = 1; m <= dim_; ++m)
                    for (std::size_t n = 1; n <= dim_; ++n) f(i, j, m, n);
    }

    [[nodiscard]] std::size_t offset(std::size_t i, std::size_t j, std::size_t m,
                                     std::size_t n) const noexcept {
        return (((i - 1) * dim_ + (j - 1)) * dim_ + (m - 1)) * dim_ + (n - 1);
    }

    std::size_t dim_;
    std::vector<Rational> values_;
};

[[nodiscard]] inline TernaryTensor g_tensor(const ProductTable& t) {
    const std::size_t n = t.dim();
    std::vector<Rational> values(n * n * n * n);
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t m = 1; m <= n; ++m) {
            for (std::size_t k = 1; k <= n; ++k) {
                const Vector v = ternary(t, basis(n, j), basis(n, m), basis(n, k));
                for (std::size_t i = 1; i <= n; ++i) {
                    values[(((i - 1) * n + (j - 1)) * n + (m - 1)) * n + (k - 1)] = v(i);
                }
            }
        }
    }
    return TernaryTensor(n, std::move(values));
}

// ---------------------------------------------------------------------------
// Reports

enum class IdentityId {
    eq1,
    eq2,
    eq4,
    eq5,
    alternating,
    eq7,
    eq8,
    eq9,
    eq10,
    eq12,
    eq13,
    eq15,
    obstruction,
};

[[nodiscard]] constexpr std::string_view identity_name(IdentityId id) {
    switch (id) {
    case IdentityId::eq1: return "eq1";
    case IdentityId::eq2: return "eq2";
    case IdentityId::eq4: return "eq4";
    case IdentityId::eq5: return "eq5";
    case IdentityId::alternating: return "alternating";
    case IdentityId::eq7: return "eq7";
    case IdentityId::eq8: return "eq8";
    case IdentityId::eq9: return "eq9";
    case IdentityId::eq10: return "eq10";
    case IdentityId::eq12: return "eq12";
    case IdentityId::eq13: return "eq13";
    case IdentityId::eq15: return "eq15";
    case IdentityId::obstruction: return "obstruction";
    }
    return "?";
}

using Quantity = std::variant<Rational, Vector>;

struct Witness {
    std::vector<std::pair<std::string, Vector>> inputs;
    std::vector<std::size_t> indices; ///< basis indices, for tensor identities
    Quantity lhs;
    Quantity rhs;
    std::vector<std::pair<std::string, Rational>> extra; ///< further labelled values

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct IdentityReport {
    IdentityId id;
    std::size_t cases = 0; ///< number of instances evaluated
    std::optional<Witness> witness; ///< present iff violated

    [[nodiscard]] bool holds() const noexcept { return !witness.has_value(); }

    /// Fold another evaluation of the same identity into this one; the first
    /// violation seen is kept.
    void absorb(const IdentityReport& other) {
        cases += other.cases;
        if (!witness && other.witness) witness = other.witness;
    }

    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

namespace detail {

inline IdentityReport compare(IdentityId id, Quantity lhs, Quantity rhs,
                              std::vector<std::pair<std::string, Vector>> inputs) {
    IdentityReport r{id, 1, std::nullopt};
    if (lhs != rhs) r.witness = Witness{std::move(inputs), {}, std::move(lhs), std::move(rhs), {}};
    return r;
}

inline Rational as_rational(std::size_t n) { return Rational(static_cast<long>(n)); }

} // namespace detail

// ---------------------------------------------------------------------------
// Axioms and pointwise identities

/// Checks x*x = 0 on every sample vector, orthogonality a.(a x b) = b.(a x b) = 0,
/// and the polarized norm condition |a x b|^2 = |a|^2|b|^2 - (a.b)^2 on every pair.
[[nodiscard]] inline std::vector<IdentityReport> check_axioms(
    const ProductTable& t, std::span<const std::pair<Vector, Vector>> samples) {
    IdentityReport r1{IdentityId::eq1, 0, std::nullopt};
    IdentityReport r2{IdentityId::eq2, 0, std::nullopt};
    IdentityReport r4{IdentityId::eq4, 0, std::nullopt};
    const Vector zero(t.dim());
    for (const auto& [a, b] : samples) {
        detail::require_same_dim(a.dim(), t.dim(), "check_axioms");
        detail::require_same_dim(b.dim(), t.dim(), "check_axioms");
        for (const Vector* v : {&a, &b}) {
            r1.absorb(detail::compare(IdentityId::eq1, cross(t, *v, *v), zero, {{"a", *v}}));
        }
        const Vector ab = cross(t, a, b);
        r2.absorb(detail::compare(IdentityId::eq2, dot(ab, a), Rational{}, {{"a", a}, {"b", b}}));
        r2.absorb(detail::compare(IdentityId::eq2, dot(ab, b), Rational{}, {{"a", a}, {"b", b}}));
        const Rational d = dot(a, b);
        r4.absorb(detail::compare(IdentityId::eq4, norm_sq(ab), norm_sq(a) * norm_sq(b) - d * d,
                                  {{"a", a}, {"b", b}}));
    }
    return {r1, r2, r4};
}

/// a x (b x a) = |a|^2 b - (a.b) a
[[nodiscard]] inline IdentityReport check_eq5(const ProductTable& t, const Vector& a, const Vector& b) {
    detail::require_same_dim(a.dim(), b.dim(), "check_eq5");
    Vector lhs = cross(t, a, cross(t, b, a));
    Vector rhs = axpy(-dot(a, b), a, norm_sq(a) * b);
    return detail::compare(IdentityId::eq5, std::move(lhs), std::move(rhs), {{"a", a}, {"b", b}});
}

/// {a,b,c} = -{b,a,c} = -{a,c,b} = -{c,b,a}.
[[nodiscard]] inline IdentityReport check_alternating(const ProductTable& t, const Vector& a,
                                                      const Vector& b, const Vector& c) {
    const Vector base = ternary(t, a, b, c);
    const std::vector<std::pair<std::string, Vector>> in{{"a", a}, {"b", b}, {"c", c}};
    IdentityReport r = detail::compare(IdentityId::alternating, base, -ternary(t, b, a, c), in);
    r.absorb(detail::compare(IdentityId::alternating, base, -ternary(t, a, c, b), in));
    r.absorb(detail::compare(IdentityId::alternating, base, -ternary(t, c, b, a), in));
    r.absorb(detail::compare(IdentityId::alternating, ternary(t, a, a, c), Vector(a.dim()), in));
    r.cases = 1;
    return r;
}

/// 2 a x {b,c,d} = {a,b,c x d} + {a,c,d x b} + {a,d,b x c}
[[nodiscard]] inline IdentityReport check_eq12(const ProductTable& t, const Vector& a, const Vector& b,
                                               const Vector& c, const Vector& d) {
    detail::require_same_dim(a.dim(), b.dim(), "check_eq12");
    detail::require_same_dim(a.dim(), c.dim(), "check_eq12");
    detail::require_same_dim(a.dim(), d.dim(), "check_eq12");
    Vector lhs = Rational(2) * cross(t, a, ternary(t, b, c, d));
    Vector rhs = ternary(t, a, b, cross(t, c, d)) + ternary(t, a, c, cross(t, d, b)) +
                 ternary(t, a, d, cross(t, b, c));
    return detail::compare(IdentityId::eq12, std::move(lhs), std::move(rhs),
                           {{"a", a}, {"b", b}, {"c", c}, {"d", d}});
}

// ---------------------------------------------------------------------------
// Orthonormal-basis sums. Each returns (direct sum, closed form in n).

using SumPair = std::pair<Rational, Rational>;

/// (sum_i (e_i x a).(e_i x b), (n-1) a.b)
[[nodiscard]] inline SumPair basis_sum_eq7(const ProductTable& t, const Vector& a, const Vector& b) {
    detail::require_same_dim(a.dim(), t.dim(), "basis_sum_eq7");
    detail::require_same_dim(b.dim(), t.dim(), "basis_sum_eq7");
    const std::size_t n = t.dim();
    Rational sum;
    for (std::size_t i = 1; i <= n; ++i) {
        const Vector e = basis(n, i);
        sum += dot(cross(t, e, a), cross(t, e, b));
    }
    return {sum, (detail::as_rational(n) - 1) * dot(a, b)};
}

/// (sum_i {e_i,a,b}.{e_i,c,d}, (n-5)(a x b).(c x d) + 2(a.c)(b.d) - 2(a.d)(b.c))
[[nodiscard]] inline SumPair basis_sum_eq8(const ProductTable& t, const Vector& a, const Vector& b,
                                           const Vector& c, const Vector& d) {
    for (const Vector* v : {&a, &b, &c, &d}) detail::require_same_dim(v->dim(), t.dim(), "basis_sum_eq8");
    const std::size_t n = t.dim();
    Rational sum;
    for (std::size_t i = 1; i <= n; ++i) {
        const Vector e = basis(n, i);
        sum += dot(ternary(t, e, a, b), ternary(t, e, c, d));
    }
    const Rational closed = (detail::as_rational(n) - 5) * dot(cross(t, a, b), cross(t, c, d)) +
                            Rational(2) * dot(a, c) * dot(b, d) - Rational(2) * dot(a, d) * dot(b, c);
    return {sum, closed};
}

/// (sum_{i,j} {e_i,e_j,a}.{e_i,e_j,b}, (n-1)(n-3) a.b)
[[nodiscard]] inline SumPair basis_sum_eq9(const ProductTable& t, const Vector& a, const Vector& b) {
    detail::require_same_dim(a.dim(), t.dim(), "basis_sum_eq9");
    detail::require_same_dim(b.dim(), t.dim(), "basis_sum_eq9");
    const std::size_t n = t.dim();
    Rational sum;
    for (std::size_t i = 1; i <= n; ++i) {
        const Vector ei = basis(n, i);
        for (std::size_t j = 1; j <= n; ++j) {
            const Vector ej = basis(n, j);
            sum += dot(ternary(t, ei, ej, a), ternary(t, ei, ej, b));
        }
    }
    const Rational nn = detail::as_rational(n);
    return {sum, (nn - 1) * (nn - 3) * dot(a, b)};
}

/// (sum_{i,j,k} |{e_i,e_j,e_k}|^2, n(n-1)(n-3))
[[nodiscard]] inline SumPair basis_sum_eq10(const ProductTable& t) {
    const std::size_t n = t.dim();
    Rational sum;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k)
                sum += norm_sq(ternary(t, basis(n, i), basis(n, j), basis(n, k)));
    const Rational nn = detail::as_rational(n);
    return {sum, nn * (nn - 1) * (nn - 3)};
}

/// (sum_{i,j} {e_i,e_j,a}.{e_i, e_j x b, c}, -(n-3)(n-6) a.(b x c))
[[nodiscard]] inline SumPair basis_sum_eq13(const ProductTable& t, const Vector& a, const Vector& b,
                                            const Vector& c) {
    for (const Vector* v : {&a, &b, &c}) detail::require_same_dim(v->dim(), t.dim(), "basis_sum_eq13");
    const std::size_t n = t.dim();
    Rational sum;
    for (std::size_t i = 1; i <= n; ++i) {
        const Vector ei = basis(n, i);
        for (std::size_t j = 1; j <= n; ++j) {
            const Vector ej = basis(n, j);
            sum += dot(ternary(t, ei, ej, a), ternary(t, ei, cross(t, ej, b), c));
        }
    }
    const Rational nn = detail::as_rational(n);
    return {sum, -(nn - 3) * (nn - 6) * dot(a, cross(t, b, c))};
}

/// Wrap a (sum, closed form) pair as a report.
[[nodiscard]] inline IdentityReport sum_report(IdentityId id, const SumPair& p,
                                               std::vector<std::pair<std::string, Vector>> inputs = {}) {
    return detail::compare(id, p.first, p.second, std::move(inputs));
}

// ---------------------------------------------------------------------------
// Dimension obstruction

struct ObstructionReport {
    std::size_t dim = 0;
    Rational lhs_sum;    ///< 4 sum |e_i x {e_j,e_k,e_l}|^2
    Rational rhs_sum;    ///< sum |{e_i,e_j,e_k x e_l} + {e_i,e_k,e_l x e_j} + {e_i,e_l,e_j x e_k}|^2
    Rational lhs_closed; ///< 4n(n-1)^2(n-3)
    Rational rhs_closed; ///< 3n(n-1)(n-3)(3n-13)
    Rational poly;       ///< 5n(n-1)(n-3)(n-7)

    /// The sums agree and each matches its closed form.
    [[nodiscard]] bool consistent() const {
        return lhs_sum == rhs_sum && lhs_sum == lhs_closed && rhs_sum == rhs_closed;
    }

    friend bool operator==(const ObstructionReport&, const ObstructionReport&) = default;
};

[[nodiscard]] inline ObstructionReport obstruction_report(const ProductTable& t) {
    const std::size_t n = t.dim();
    std::vector<Vector> e;
    e.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) e.push_back(basis(n, i));

    // Products and ternaries of basis vectors, cached by index.
    std::vector<Vector> prod;
    prod.reserve(n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) prod.push_back(cross(t, e[k], e[l]));
    auto p = [&](std::size_t k, std::size_t l) -> const Vector& { return prod[k * n + l]; };

    ObstructionReport r;
    r.dim = n;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t l = 0; l < n; ++l) {
                const Vector tr = ternary(t, e[j], e[k], e[l]);
                if (tr.is_zero()) continue;
                for (std::size_t i = 0; i < n; ++i) r.lhs_sum += norm_sq(cross(t, e[i], tr));
            }
        }
    }
    r.lhs_sum *= Rational(4);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const Vector s = ternary(t, e[i], e[j], p(k, l)) + ternary(t, e[i], e[k], p(l, j)) +
                                     ternary(t, e[i], e[l], p(j, k));
                    r.rhs_sum += norm_sq(s);
                }
    const Rational nn = detail::as_rational(n);
    r.lhs_closed = Rational(4) * nn * (nn - 1) * (nn - 1) * (nn - 3);
    r.rhs_closed = Rational(3) * nn * (nn - 1) * (nn - 3) * (Rational(3) * nn - 13);
    r.poly = Rational(5) * nn * (nn - 1) * (nn - 3) * (nn - 7);
    return r;
}

[[nodiscard]] inline IdentityReport to_identity_report(const ObstructionReport& o) {
    IdentityReport r{IdentityId::obstruction, 1, std::nullopt};
    if (!o.consistent()) {
        r.witness = Witness{{}, {}, o.lhs_sum, o.rhs_sum,
                            {{"lhs_closed", o.lhs_closed}, {"rhs_closed", o.rhs_closed}, {"poly", o.poly}}};
    }
    return r;
}

// ---------------------------------------------------------------------------
// Failure of a x (b x c) = b (a.c) - c (a.b)

struct Eq6Counterexample {
    std::size_t i, j, k;
    Vector value; ///< {e_i, e_j, e_k}

    friend bool operator==(const Eq6Counterexample&, const Eq6Counterexample&) = default;
};

/// First basis triple (lexicographic) whose ternary product is nonzero.
[[nodiscard]] inline std::optional<Eq6Counterexample> find_eq6_counterexample(const ProductTable& t) {
    const std::size_t n = t.dim();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k) {
                Vector v = ternary(t, basis(n, i), basis(n, j), basis(n, k));
                if (!v.is_zero()) return Eq6Counterexample{i, j, k, std::move(v)};
            }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Contraction identity sum_k c_ijk c_kmn = g_ijmn + d_im d_jn - d_in d_jm

[[nodiscard]] inline IdentityReport check_eq15(const ProductTable& t, const TernaryTensor& g) {
    detail::require_same_dim(t.dim(), g.dim(), "check_eq15");
    const std::size_t n = t.dim();
    std::vector<Rational> c(n * n * n);
    for (const auto& e : t.nonzero()) c[((e.i - 1) * n + (e.j - 1)) * n + (e.k - 1)] = e.c;
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& {
        return c[((i - 1) * n + (j - 1)) * n + (k - 1)];
    };

    IdentityReport r{IdentityId::eq15, 0, std::nullopt};
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t m = 1; m <= n; ++m)
                for (std::size_t q = 1; q <= n; ++q) {
                    ++r.cases;
                    if (r.witness) continue;
                    Rational lhs;
                    for (std::size_t k = 1; k <= n; ++k) {
                        const auto& x = at(i, j, k);
                        if (!x.is_zero()) lhs += x * at(k, m, q);
                    }
                    Rational rhs = g(i, j, m, q);
                    if (i == m && j == q) rhs += Rational(1);
                    if (i == q && j == m) rhs -= Rational(1);
                    if (lhs != rhs) r.witness = Witness{{}, {i, j, m, q}, lhs, rhs, {}};
                }
    // In three dimensions the contraction must reduce to the plain epsilon-delta
    // identity, i.e. g vanishes.
    if (n == 3 && !r.witness) {
        for (const auto& comp : g.nonzero()) {
            r.witness = Witness{{}, {comp.index.begin(), comp.index.end()}, comp.value, Rational{}, {}};
            break;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Full suite

/// Runs every identity on `samples` seeded random instances plus the basis-sum,
/// contraction and obstruction checks. Order of the returned reports is fixed.
[[nodiscard]] inline std::vector<IdentityReport> verify_all(const ProductTable& t, std::size_t samples,
                                                            std::uint64_t seed) {
    const std::size_t n = t.dim();
    SampleGenerator gen(seed);
    std::vector<std::pair<Vector, Vector>> pairs;
    for (std::size_t s = 0; s < samples; ++s) {
        Vector a = gen.vector(n);
        Vector b = gen.vector(n);
        pairs.emplace_back(std::move(a), std::move(b));
    }
    std::vector<IdentityReport> out = check_axioms(t, pairs);

    IdentityReport r5{IdentityId::eq5, 0, std::nullopt};
    IdentityReport ralt{IdentityId::alternating, 0, std::nullopt};
    IdentityReport r7{IdentityId::eq7, 0, std::nullopt};
    IdentityReport r8{IdentityId::eq8, 0, std::nullopt};
    IdentityReport r9{IdentityId::eq9, 0, std::nullopt};
    IdentityReport r12{IdentityId::eq12, 0, std::nullopt};
    IdentityReport r13{IdentityId::eq13, 0, std::nullopt};
    for (std::size_t s = 0; s < samples; ++s) {
        const auto& [a, b] = pairs[s];
        const Vector c = gen.vector(n);
        const Vector d = gen.vector(n);
        r5.absorb(check_eq5(t, a, b));
        ralt.absorb(check_alternating(t, a, b, c));
        r7.absorb(sum_report(IdentityId::eq7, basis_sum_eq7(t, a, b), {{"a", a}, {"b", b}}));
        r8.absorb(sum_report(IdentityId::eq8, basis_sum_eq8(t, a, b, c, d),
                             {{"a", a}, {"b", b}, {"c", c}, {"d", d}}));
        r9.absorb(sum_report(IdentityId::eq9, basis_sum_eq9(t, a, b), {{"a", a}, {"b", b}}));
        r12.absorb(check_eq12(t, a, b, c, d));
        r13.absorb(sum_report(IdentityId::eq13, basis_sum_eq13(t, a, b, c),
                              {{"a", a}, {"b", b}, {"c", c}}));
    }
    out.push_back(r5);
    out.push_back(ralt);
    out.push_back(r7);
    out.push_back(r8);
    out.push_back(r9);
    out.push_back(sum_report(IdentityId::eq10, basis_sum_eq10(t)));
    out.push_back(r12);
    out.push_back(r13);
    out.push_back(check_eq15(t, g_tensor(t)));
    out.push_back(to_identity_report(obstruction_report(t)));
    return out;
}

[[nodiscard]] inline bool all_hold(std::span<const IdentityReport> reports) {
    for (const auto& r : reports) {
        if (!r.holds()) return false;
    }
    return true;
}

} // namespace xprod
