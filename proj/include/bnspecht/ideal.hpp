#pragma once

#include "bnspecht/groebner.hpp"
#include "bnspecht/partition.hpp"
#include "bnspecht/poset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bnspecht {

/// Reduced grevlex Gröbner basis of I_shape in Q[x_1 … x_n]. Memoized per (shape, n); thread-safe.
const GroebnerBasis& specht_ideal_gb(const Bipartition& shape, int n, const GroebnerLimits& limits = {});

/// I_b ⊆ I_a, decided by reducing every generator of I_b modulo GB(I_a).
bool specht_ideal_contains(const Bipartition& a, const Bipartition& b, int n, const GroebnerLimits& limits = {});

/// The symmetrization identity behind a covering step of type 3 or 4.
///
/// Case 3 lives on {1 … a+2b} with A = {1 … a}, B1 = {a+1 … a+b}, B2 = {a+b+1 … a+2b};
/// case 4 on {1 … a+2b+1} with |B1| = b+1, |B2| = b. G = S_{A∪B1}, H = S_A × S_{B1}.
struct CoveringCertificate {
    int covering_case = 0;
    int a = 0;
    int b = 0;
    std::vector<int> A, B1, B2;
    /// Δ_{A∪B1}(x²).
    Polynomial p_star;
    /// Δ_A(x²)·Δ_{B1}(x²)·Π_{i∈A} R(x_i²), R(y) = Π_{j∈B2}(y − x_j²); case 4 also carries Π_{i∈A} x_i².
    Polynomial q_star;
    /// Σ_{σ∈G/H} ε(σ)·σQ*.
    Polynomial q_bar;
    /// Specht generator of the lower shape, and Q̃ = (generator of the upper shape)·Π_{i∈A} x_i.
    Polynomial p;
    Polynomial q_tilde;
    std::size_t cosets = 0;
    /// p_star == q_bar.
    bool verified = false;
    /// p == Σ_{σ∈G/H} ε(σ)·σQ̃.
    bool full_identity = false;
};

/// a ≥ 1, b ≥ 0, case ∈ {3, 4}; throws ResourceExceeded when C(|A∪B1|, a) > max_cosets.
CoveringCertificate covering_certificate(int covering_case, int a, int b, std::size_t max_cosets = 100'000);

struct InclusionStep {
    Bipartition upper;
    Covering covering;
    /// Present for steps of type 3 and 4.
    std::optional<CoveringCertificate> certificate;
    /// Present when n ≤ max_groebner_n: every generator of the lower ideal reduces to 0.
    std::optional<bool> groebner_membership;
};

struct InclusionReport {
    Bipartition upper;
    Bipartition lower;
    int n = 0;
    std::vector<InclusionStep> steps;
    /// Every certificate verified and every Gröbner check passed.
    bool included = false;
};

/// Walks a saturated chain from a down to b; requires bidominates(a, b).
InclusionReport inclusion_by_certificates(const Bipartition& a, const Bipartition& b, int n, int max_groebner_n = 4,
                                          const GroebnerLimits& limits = {});

/// 1 ∈ ⟨gens, 1 − y·f⟩ with y = x_{n+1}.
bool radical_membership(const Polynomial& f, const std::vector<Polynomial>& gens, const GroebnerLimits& limits = {});

struct OrderCheck {
    MonomialOrder order = MonomialOrder::lex;
    CriterionResult criterion;
};

/// Empirical record for the universal Gröbner basis conjecture at one shape.
struct UniversalGbReport {
    Bipartition shape;
    int n = 0;
    /// Every shape ⊴ shape whose generators enter the candidate set.
    std::vector<Bipartition> shapes_below;
    std::vector<Polynomial> candidate_set;
    std::vector<OrderCheck> orders;
};

inline constexpr int kMaxConjectureN = 4;

UniversalGbReport universal_gb_check(const Bipartition& shape, int n, const std::vector<MonomialOrder>& orders,
                                     const GroebnerLimits& limits = {});

struct RadicalProbe {
    std::string origin;
    Polynomial candidate;
    bool in_radical = false;
    bool in_ideal = false;
};

/// Probes radicality of I_shape: each candidate is tested for membership in the radical
/// and in the ideal itself. A candidate in the radical but not in the ideal refutes radicality.
struct RadicalReport {
    Bipartition shape;
    int n = 0;
    std::vector<RadicalProbe> probes;
    bool consistent_with_radical = true;
};

RadicalReport radical_harness(const Bipartition& shape, int n, const GroebnerLimits& limits = {});

} // namespace bnspecht
