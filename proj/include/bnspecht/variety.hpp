#pragma once

#include "bnspecht/partition.hpp"
#include "bnspecht/polynomial.hpp"

#include <string_view>
#include <vector>

namespace bnspecht {

using RationalPoint = std::vector<Rational>;

/// "1,-2,3/4"; whitespace around entries is ignored.
RationalPoint parse_point(std::string_view text);
std::string to_string(const RationalPoint& z);

/// Multiplicities of the coordinate values, sorted non-increasingly.
Partition sn_orbit_type(const RationalPoint& z);

/// Ω(z) = cut(Λ(z²), number of zero coordinates).
Bipartition bn_orbit_type(const RationalPoint& z);

/// λ_1 = λ_2 = … = λ_{len(μ)+1}, rows past the length reading 0.
bool orbit_set_nonempty(const Bipartition& bp);

/// Canonical point of H_bp with a_i = i: blocks of size λ_1+μ_i for i ≤ len(μ), then λ_1 zeros,
/// then blocks of size λ_{len(μ)+2}, λ_{len(μ)+3}, …. Throws EmptyOrbitSet for an empty class.
RationalPoint orbit_representative(const Bipartition& bp);

struct OrbitClass {
    Bipartition bipartition;
    bool nonempty = false;

    bool operator==(const OrbitClass&) const = default;
};

/// Every specht generator of bp vanishes at z.
bool variety_contains_by_evaluation(const Bipartition& bp, const RationalPoint& z);
/// Ω(z) is not bidominated by bp.
bool variety_contains_by_order(const Bipartition& bp, const RationalPoint& z);
/// The evaluation route; the order route is kept separate so the two can be compared.
bool variety_contains(const Bipartition& bp, const RationalPoint& z);

/// Nonempty classes (ϑ,ω) of BP_n with (ϑ,ω) not bidominated by bp, in canonical order.
std::vector<OrbitClass> decompose_variety(const Bipartition& bp);

/// Blocks of a_i = i repeated (ϑ⊎ω)_i times.
RationalPoint witness_z1(const Bipartition& bp);
/// ϑ_1 zeros, then a_i = i repeated ω_i + ϑ_{i+1} times for i ≤ max(len ϑ, len ω).
RationalPoint witness_z2(const Bipartition& bp);

/// cut(sort(Λ ∪ {t}), t); requires t ≥ 0.
Bipartition phi(int t, const Partition& Lambda);

/// With s = max{i : λ_i ≥ t}: (λ_1, …, λ_{s−1}, λ_s + λ_{s+1} − t, λ_{s+2}, …). Requires 0 ≤ t ≤ λ_1;
/// t = 0 returns λ.
Partition lambda_t(const Partition& lambda, int t);

} // namespace bnspecht
