#include "bnspecht/signed_permutation.hpp"

#include "bnspecht/errors.hpp"

#include <algorithm>
#include <numeric>

namespace bnspecht {

SignedPermutation::SignedPermutation(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs))
{
    const std::size_t n = perm_.size();
    if (signs_.size() != n)
        throw RejectedInput("signed permutation: sign vector length differs from degree");
    std::vector<bool> hit(n, false);
    for (int v : perm_) {
        if (v < 1 || static_cast<std::size_t>(v) > n || hit[static_cast<std::size_t>(v - 1)])
            throw RejectedInput("signed permutation: images are not a bijection on 1..n");
        hit[static_cast<std::size_t>(v - 1)] = true;
    }
    for (int s : signs_)
        if (s != 1 && s != -1)
            throw RejectedInput("signed permutation: signs must be +1 or -1");
}

SignedPermutation SignedPermutation::identity(int n)
{
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    return {std::move(perm), std::vector<int>(static_cast<std::size_t>(n), 1)};
}

SignedPermutation SignedPermutation::transposition(int n, int i, int j)
{
    auto g = identity(n);
    if (i < 1 || j < 1 || i > n || j > n)
        throw RejectedInput("transposition index outside 1..n");
    std::swap(g.perm_[static_cast<std::size_t>(i - 1)], g.perm_[static_cast<std::size_t>(j - 1)]);
    return g;
}

SignedPermutation SignedPermutation::sign_flip(int n, int i)
{
    auto g = identity(n);
    if (i < 1 || i > n)
        throw RejectedInput("sign flip index outside 1..n");
    g.signs_[static_cast<std::size_t>(i - 1)] = -1;
    return g;
}

SignedPermutation SignedPermutation::from_permutation(std::vector<int> perm)
{
    const std::size_t n = perm.size();
    return {std::move(perm), std::vector<int>(n, 1)};
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& h) const
{
    if (degree() != h.degree())
        throw RejectedInput("signed permutations of different degree");
    const auto inv = inverse();
    const int n = degree();
    std::vector<int> perm(static_cast<std::size_t>(n)), signs(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        perm[static_cast<std::size_t>(i - 1)] = image(h.image(i));
    // τ_gh(j) = τ_g(j) · τ_h(ρ_g⁻¹(j))
    for (int j = 1; j <= n; ++j)
        signs[static_cast<std::size_t>(j - 1)] = sign_at(j) * h.sign_at(inv.image(j));
    return {std::move(perm), std::move(signs)};
}

SignedPermutation SignedPermutation::inverse() const
{
    const int n = degree();
    std::vector<int> perm(static_cast<std::size_t>(n)), signs(static_cast<std::size_t>(n));
    // g⁻¹ sends x_{ρ(i)} to τ_{ρ(i)} x_i
    for (int i = 1; i <= n; ++i) {
        perm[static_cast<std::size_t>(image(i) - 1)] = i;
        signs[static_cast<std::size_t>(i - 1)] = sign_at(image(i));
    }
    SignedPermutation g;
    g.perm_ = std::move(perm);
    g.signs_ = std::move(signs);
    return g;
}

std::string SignedPermutation::to_string() const
{
    std::string out = "[";
    for (int i = 1; i <= degree(); ++i) {
        if (i > 1)
            out += ' ';
        out += std::to_string(i) + "->" + (sign_at(image(i)) < 0 ? "-" : "") + std::to_string(image(i));
    }
    return out + "]";
}

Polynomial act(const SignedPermutation& g, const Polynomial& p)
{
    if (g.degree() != p.num_vars())
        throw RejectedInput("act: group degree " + std::to_string(g.degree()) + " differs from ring size "
                            + std::to_string(p.num_vars()));
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Monomial m;
        int sign = 1;
        for (int i = 1; i <= p.num_vars(); ++i) {
            const int e = t.monomial.exponent(i);
            if (!e)
                continue;
            const int target = g.image(i);
            m.set_exponent(target, e);
            if (g.sign_at(target) < 0 && (e & 1))
                sign = -sign;
        }
        terms.push_back({m, sign > 0 ? t.coeff : Rational(-t.coeff)});
    }
    return Polynomial::from_terms(p.num_vars(), std::move(terms));
}

std::vector<Rational> act_on_point(const SignedPermutation& g, std::span<const Rational> z)
{
    if (static_cast<int>(z.size()) != g.degree())
        throw RejectedInput("act_on_point: dimension mismatch");
    std::vector<Rational> out(z.size());
    for (int i = 1; i <= g.degree(); ++i) {
        const int target = g.image(i);
        const Rational& v = z[static_cast<std::size_t>(i - 1)];
        out[static_cast<std::size_t>(target - 1)] = g.sign_at(target) < 0 ? Rational(-v) : v;
    }
    return out;
}

int permutation_sign(std::span<const int> perm)
{
    std::vector<bool> seen(perm.size(), false);
    int sign = 1;
    for (std::size_t start = 0; start < perm.size(); ++start) {
        if (seen[start])
            continue;
        std::size_t len = 0;
        for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(perm[i] - 1)) {
            seen[i] = true;
            ++len;
        }
        if (len % 2 == 0)
            sign = -sign;
    }
    return sign;
}

} // namespace bnspecht
