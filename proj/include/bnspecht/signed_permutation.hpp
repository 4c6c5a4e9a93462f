#pragma once

#include "bnspecht/polynomial.hpp"

#include <span>
#include <string>
#include <vector>

namespace bnspecht {

/// Element (τ, ρ) of B_n = {±1}^n ⋊ S_n acting by x_i ↦ τ_{ρ(i)} x_{ρ(i)}.
///
/// perm[i-1] = ρ(i); signs[j-1] = τ_j is indexed by the target position.
class SignedPermutation {
public:
    SignedPermutation() = default;
    SignedPermutation(std::vector<int> perm, std::vector<int> signs);

    static SignedPermutation identity(int n);
    /// The transposition (i j).
    static SignedPermutation transposition(int n, int i, int j);
    /// ε_i: flips the sign of x_i only.
    static SignedPermutation sign_flip(int n, int i);
    /// ρ with all signs +1; images are 1-based.
    static SignedPermutation from_permutation(std::vector<int> perm);

    int degree() const noexcept { return static_cast<int>(perm_.size()); }
    int image(int i) const { return perm_[static_cast<std::size_t>(i - 1)]; }
    int sign_at(int j) const { return signs_[static_cast<std::size_t>(j - 1)]; }
    const std::vector<int>& perm() const noexcept { return perm_; }
    const std::vector<int>& signs() const noexcept { return signs_; }

    /// (g·h)·x = g·(h·x).
    SignedPermutation operator*(const SignedPermutation& h) const;
    SignedPermutation inverse() const;

    bool operator==(const SignedPermutation&) const = default;

    std::string to_string() const;

private:
    std::vector<int> perm_;
    std::vector<int> signs_;
};

/// Ring automorphism induced by g; act(g·h, p) = act(g, act(h, p)).
Polynomial act(const SignedPermutation& g, const Polynomial& p);

/// (g·z)_{ρ(i)} = τ_{ρ(i)} z_i, so evaluate(act(g,p), z) = evaluate(p, g⁻¹·z).
std::vector<Rational> act_on_point(const SignedPermutation& g, std::span<const Rational> z);

/// Sign of a permutation given by 1-based images.
int permutation_sign(std::span<const int> perm);

} // namespace bnspecht
