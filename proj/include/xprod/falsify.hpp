#pragma once
/**
 * @file falsify.hpp
 * @brief Sweep of candidate products in dimensions where none can exist.
 *
 * Each candidate is rejected by the first failing stage: the axioms on
 * random samples, the eq10 basis sum, or the obstruction certificate. The
 * obstruction stage can never pass outside n in {1, 3, 7}, so every
 * candidate in the sweep dimensions ends with a certificate.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "identity.hpp"
#include "product_table.hpp"
#include "sampling.hpp"

namespace xprod {

struct Candidate {
    std::string family; ///< "zero", "epsilon", "epsilon-pair", "random-antisymmetric", "random-rational"
    ProductTable table;
};

struct Certificate {
    Candidate candidate;
    std::optional<IdentityReport> rejection; ///< first failing check; empty means nothing failed
    [[nodiscard]] bool rejected() const noexcept { return rejection.has_value(); }
};

inline const std::vector<std::size_t>& sweep_dimensions() {
    static const std::vector<std::size_t> dims{2, 4, 5, 6};
    return dims;
}

namespace detail {

inline std::vector<std::array<std::size_t, 3>> triples(std::size_t n) {
    std::vector<std::array<std::size_t, 3>> out;
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = a + 1; b <= n; ++b)
            for (std::size_t c = b + 1; c <= n; ++c) out.push_back({a, b, c});
    return out;
}

} // namespace detail

/// Deterministic candidate list for dimension n: the zero product, every
/// embedding of the 3D epsilon on an index triple (both orientations), pairs
/// of disjoint embeddings, then seeded random tables until `count` is reached.
/// Random tables are totally antisymmetric with constants in {-1, 0, 1} when
/// n >= 3; for n = 2 (where total antisymmetry forces zero) they are
/// first-pair antisymmetric with small rational constants.
[[nodiscard]] inline std::vector<Candidate> sweep_candidates(std::size_t n, std::size_t count,
                                                             std::uint64_t seed) {
    std::vector<Candidate> out;
    auto push = [&](std::string family, ProductTable t) {
        if (out.size() < count) out.push_back({std::move(family), std::move(t)});
    };
    push("zero", ProductTable(n));
    const auto tri = detail::triples(n);
    for (const auto& [a, b, c] : tri) {
        for (int sign : {1, -1}) push("epsilon", ProductTable(n, antisymmetrize(a, b, c, Rational(sign))));
    }
    for (std::size_t x = 0; x < tri.size(); ++x) {
        for (std::size_t y = x + 1; y < tri.size(); ++y) {
            const auto& s = tri[x];
            const auto& t = tri[y];
            bool disjoint = true;
            for (auto u : s)
                for (auto v : t) disjoint = disjoint && u != v;
            if (!disjoint) continue;
            auto entries = antisymmetrize(s[0], s[1], s[2], Rational(1));
            auto more = antisymmetrize(t[0], t[1], t[2], Rational(1));
            entries.insert(entries.end(), more.begin(), more.end());
            push("epsilon-pair", ProductTable(n, entries));
        }
    }
    SampleGenerator gen(seed ^ (0x9e3779b97f4a7c15ULL * n));
    while (out.size() < count) {
        std::vector<TableEntry> entries;
        if (n >= 3) {
            for (const auto& [a, b, c] : tri) {
                const long v = static_cast<long>(gen.below(3)) - 1;
                if (v == 0) continue;
                auto part = antisymmetrize(a, b, c, Rational(v));
                entries.insert(entries.end(), part.begin(), part.end());
            }
            push("random-antisymmetric", ProductTable(n, entries));
        } else {
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = i + 1; j <= n; ++j)
                    for (std::size_t k = 1; k <= n; ++k) entries.push_back({i, j, k, gen.scalar()});
            push("random-rational", ProductTable(n, entries));
        }
    }
    return out;
}

/// Run the staged rejection on one table.
[[nodiscard]] inline std::optional<IdentityReport> reject(const ProductTable& t, std::size_t samples,
                                                          std::uint64_t seed) {
    SampleGenerator gen(seed);
    std::vector<std::pair<Vector, Vector>> pairs;
    for (std::size_t s = 0; s < samples; ++s) {
        Vector a = gen.vector(t.dim());
        Vector b = gen.vector(t.dim());
        pairs.emplace_back(std::move(a), std::move(b));
    }
    for (auto& r : check_axioms(t, pairs)) {
        if (!r.holds()) return r;
    }
    if (auto r = sum_report(IdentityId::eq10, basis_sum_eq10(t)); !r.holds()) return r;
    if (auto r = to_identity_report(obstruction_report(t)); !r.holds()) return r;
    return std::nullopt;
}

[[nodiscard]] inline std::vector<Certificate> falsification_sweep(std::size_t n, std::size_t count,
                                                                  std::size_t samples, std::uint64_t seed) {
    std::vector<Certificate> out;
    std::size_t index = 0;
    for (auto& c : sweep_candidates(n, count, seed)) {
        auto r = reject(c.table, samples, seed + index++);
        out.push_back({std::move(c), std::move(r)});
    }
    return out;
}

} // namespace xprod
