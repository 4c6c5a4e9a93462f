#pragma once

#include "bnspecht/partition.hpp"
#include "bnspecht/polynomial.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace bnspecht {

/// Even/odd split of a monomial's exponents: m = Π_{I1} x_i^{2k_i} · Π_{I2} x_i^{2r_i+1}.
struct MonomialProfile {
    std::vector<int> I1; // ascending; exponent positive and even
    std::vector<int> k;  // k[j] ≥ 1 belongs to I1[j]
    std::vector<int> I2; // ascending; exponent odd
    std::vector<int> r;  // r[j] ≥ 0 belongs to I2[j]

    int ell() const noexcept { return static_cast<int>(I1.size()); }
    int s() const noexcept { return static_cast<int>(I2.size()); }
    int d1() const noexcept;
    int d2() const noexcept;

    bool operator==(const MonomialProfile&) const = default;
};

MonomialProfile monomial_profile(const Monomial& m);
Monomial reconstruct(const MonomialProfile& profile);

/// ((k sorted + 1, 1^{n−(ℓ+s+d1+d2)}), (r sorted + 1)); empty when ℓ+s+d1+d2 > n.
std::optional<Bipartition> gamma(const Monomial& m, int n);
/// Componentwise conjugate of gamma(m, n).
std::optional<Bipartition> gamma_star(const Monomial& m, int n);

struct MonomialDetection {
    Monomial monomial;
    MonomialProfile profile;
    /// wt(P_d) + d1 + d2 ≤ n.
    bool applicable = false;
    std::optional<Bipartition> gamma;
    std::optional<Bipartition> gamma_star;
    /// Applicable and no other applicable Γ* strictly bidominates this one.
    bool maximal = false;
};

struct DetectionReport {
    int n = 0;
    int degree = -1;
    /// Number of distinct variables in the top homogeneous component.
    int weight = 0;
    /// One entry per monomial of the top component, descending lex.
    std::vector<MonomialDetection> monomials;

    /// The applicable entries only.
    std::vector<MonomialDetection> applicable() const;
};

/// Rejects P = 0 and polynomials whose ring is not Q[x_1 … x_n].
DetectionReport detect_specht_subideal(const Polynomial& P, int n);

struct Exclusion {
    /// Distinct bidominance-maximal Γ* among applicable monomials (an antichain).
    std::vector<Bipartition> maxima;
    /// Every (ϑ,ω) ∈ BP_n bidominated by one of the maxima, canonical order.
    std::vector<Bipartition> excluded;
};

/// Empty when no monomial of the top component is applicable.
std::optional<Exclusion> excluded_orbit_classes(const Polynomial& P, int n);

/// Σ s_{ϑ,ω}² over (ϑ,ω) ∈ BP_n not bidominated by bp.
mpz_class rank_bound(const Bipartition& bp, int n);

/// Distinct polynomials (up to sign) of the B_n-orbit of P; n ≤ 6.
std::vector<Polynomial> bn_orbit(const Polynomial& P);

struct SymmetrizationResult {
    /// Σ_{σ ∈ S_{J_1}×…×S_{J_{ℓ+s}}} ε(σ)·σ(R).
    Polynomial symmetrized;
    /// Δ̃_{J_1}⋯Δ̃_{J_{ℓ+s}}·Π_{J_{ℓ+1}∪…∪J_{ℓ+s}} x_i, a Specht generator of shape Γ*(m).
    Polynomial generator;
    /// k_1!⋯k_ℓ!·r_1!⋯r_s!.
    mpz_class multiple;
    std::size_t group_size = 0;
    bool verified = false;
};

/// Averages P over the sign flips, scales the coefficient of m to 1, multiplies by the
/// Vandermonde factors of the sets and alternates over S_{J_1}×…, J_i = {v_i} ∪ I_i where
/// v_i runs through I1 then I2 of m's profile. sets[i] must have k_i (resp. r_i) elements,
/// be pairwise disjoint and avoid every variable of the top component.
SymmetrizationResult verify_symmetrization(const Polynomial& P, const Monomial& m,
                                           const std::vector<std::vector<int>>& sets,
                                           std::size_t max_group = 100'000);

} // namespace bnspecht
