#pragma once
/**
 * @file vector.hpp
 * @brief Dense exact vectors over the Euclidean inner product.
 *
 * Components are addressed 1-based, matching the basis labels e_1..e_n.
 */

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace xprod {

class Vector {
public:
    /// Zero vector of dimension n.
    explicit Vector(std::size_t n) : c_(n) {
        if (n == 0) throw std::invalid_argument("Vector: dimension must be positive");
    }
    explicit Vector(std::vector<Rational> components) : c_(std::move(components)) {
        if (c_.empty()) throw std::invalid_argument("Vector: dimension must be positive");
    }
    Vector(std::initializer_list<Rational> components) : Vector(std::vector<Rational>(components)) {}

    [[nodiscard]] std::size_t dim() const noexcept { return c_.size(); }

    /// Component i, 1-based.
    [[nodiscard]] const Rational& operator()(std::size_t i) const {
        detail::require_index(i, dim(), "Vector");
        return c_[i - 1];
    }
    Rational& operator()(std::size_t i) {
        detail::require_index(i, dim(), "Vector");
        return c_[i - 1];
    }

    [[nodiscard]] std::span<const Rational> components() const noexcept { return c_; }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : c_) {
            if (!x.is_zero()) return false;
        }
        return true;
    }

    Vector& operator+=(const Vector& o) {
        detail::require_same_dim(dim(), o.dim(), "Vector +");
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Vector& operator-=(const Vector& o) {
        detail::require_same_dim(dim(), o.dim(), "Vector -");
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Vector& operator*=(const Rational& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Rational& s, Vector a) { return a *= s; }
    friend Vector operator-(Vector a) { return a *= Rational(-1); }

    friend bool operator==(const Vector&, const Vector&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Vector& v) {
        os << '(';
        for (std::size_t i = 0; i < v.c_.size(); ++i) os << (i ? ", " : "") << v.c_[i];
        return os << ')';
    }

private:
    std::vector<Rational> c_;
};

[[nodiscard]] inline Rational dot(const Vector& a, const Vector& b) {
    detail::require_same_dim(a.dim(), b.dim(), "dot");
    const auto x = a.components();
    const auto y = b.components();
    Rational s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
    }
    return s;
}

[[nodiscard]] inline Rational norm_sq(const Vector& a) { return dot(a, a); }

/// e_i in dimension n.
[[nodiscard]] inline Vector basis(std::size_t n, std::size_t i) {
    if (n == 0) throw std::invalid_argument("basis: dimension must be positive");
    detail::require_index(i, n, "basis");
    Vector v(n);
    v(i) = Rational(1);
    return v;
}

/// s*a + b.
[[nodiscard]] inline Vector axpy(const Rational& s, const Vector& a, const Vector& b) {
    detail::require_same_dim(a.dim(), b.dim(), "axpy");
    Vector r = b;
    if (s.is_zero()) return r;
    for (std::size_t i = 1; i <= a.dim(); ++i) r(i) += s * a(i);
    return r;
}

} // namespace xprod
