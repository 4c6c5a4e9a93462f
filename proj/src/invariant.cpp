#include "bnspecht/invariant.hpp"

#include "bnspecht/errors.hpp"
#include "bnspecht/signed_permutation.hpp"
#include "bnspecht/specht.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace bnspecht {

namespace {

Partition plus_one(std::vector<int> values, int extra_ones)
{
    for (auto& v : values)
        ++v;
    values.insert(values.end(), static_cast<std::size_t>(extra_ones), 1);
    return Partition::from_unsorted(std::move(values));
}

Polynomial normalized_sign(Polynomial p)
{
    if (!p.is_zero() && sgn(p.terms().front().coeff) < 0)
        p = -p;
    return p;
}

mpz_class factorial(int k)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return f;
}

} // namespace

int MonomialProfile::d1() const noexcept
{
    return std::accumulate(k.begin(), k.end(), 0);
}

int MonomialProfile::d2() const noexcept
{
    return std::accumulate(r.begin(), r.end(), 0);
}

MonomialProfile monomial_profile(const Monomial& m)
{
    MonomialProfile p;
    for (int i = 1; i <= m.last_variable(); ++i) {
        const int e = m.exponent(i);
        if (e == 0)
            continue;
        if (e % 2 == 0) {
            p.I1.push_back(i);
            p.k.push_back(e / 2);
        } else {
            p.I2.push_back(i);
            p.r.push_back(e / 2);
        }
    }
    return p;
}

Monomial reconstruct(const MonomialProfile& profile)
{
    Monomial m;
    for (std::size_t j = 0; j < profile.I1.size(); ++j)
        m.set_exponent(profile.I1[j], 2 * profile.k[j]);
    for (std::size_t j = 0; j < profile.I2.size(); ++j)
        m.set_exponent(profile.I2[j], 2 * profile.r[j] + 1);
    return m;
}

std::optional<Bipartition> gamma(const Monomial& m, int n)
{
    const auto p = monomial_profile(m);
    const int used = p.ell() + p.s() + p.d1() + p.d2();
    if (used > n)
        return std::nullopt;
    return Bipartition{plus_one(p.k, n - used), plus_one(p.r, 0)};
}

std::optional<Bipartition> gamma_star(const Monomial& m, int n)
{
    const auto g = gamma(m, n);
    if (!g)
        return std::nullopt;
    return Bipartition{conjugate(g->left), conjugate(g->right)};
}

std::vector<MonomialDetection> DetectionReport::applicable() const
{
    std::vector<MonomialDetection> out;
    for (const auto& d : monomials)
        if (d.applicable)
            out.push_back(d);
    return out;
}

DetectionReport detect_specht_subideal(const Polynomial& P, int n)
{
    if (P.is_zero())
        throw RejectedInput("detect_specht_subideal: the zero polynomial carries no information");
    if (P.num_vars() != n)
        throw RejectedInput("detect_specht_subideal: polynomial ring has " + std::to_string(P.num_vars())
                            + " variables, expected " + std::to_string(n));
    DetectionReport report;
    report.n = n;
    report.degree = P.degree();
    const Polynomial top = P.homogeneous_component(report.degree);
    report.weight = static_cast<int>(top.variables().size());
    for (const auto& t : top.terms()) {
        MonomialDetection d;
        d.monomial = t.monomial;
        d.profile = monomial_profile(t.monomial);
        d.applicable = report.weight + d.profile.d1() + d.profile.d2() <= n;
        d.gamma = gamma(t.monomial, n);
        d.gamma_star = gamma_star(t.monomial, n);
        report.monomials.push_back(std::move(d));
    }
    for (auto& d : report.monomials) {
        if (!d.applicable)
            continue;
        d.maximal = std::none_of(report.monomials.begin(), report.monomials.end(), [&](const MonomialDetection& o) {
            return o.applicable && *o.gamma_star != *d.gamma_star && bidominates(*o.gamma_star, *d.gamma_star);
        });
    }
    return report;
}

std::optional<Exclusion> excluded_orbit_classes(const Polynomial& P, int n)
{
    const auto report = detect_specht_subideal(P, n);
    Exclusion ex;
    for (const auto& d : report.monomials)
        if (d.maximal && std::find(ex.maxima.begin(), ex.maxima.end(), *d.gamma_star) == ex.maxima.end())
            ex.maxima.push_back(*d.gamma_star);
    if (ex.maxima.empty())
        return std::nullopt;
    std::sort(ex.maxima.begin(), ex.maxima.end(), canonical_before);
    for (const auto& bp : enumerate_bipartitions(n))
        if (std::any_of(ex.maxima.begin(), ex.maxima.end(), [&](const Bipartition& top) { return bidominates(top, bp); }))
            ex.excluded.push_back(bp);
    return ex;
}

mpz_class rank_bound(const Bipartition& bp, int n)
{
    if (bp.size() != n)
        throw RejectedInput("rank_bound: " + bp.to_string() + " is not a bipartition of " + std::to_string(n));
    mpz_class total = 0;
    for (const auto& c : enumerate_bipartitions(n))
        if (!bidominates(bp, c)) {
            const mpz_class s = num_standard_bitableaux(c);
            total += s * s;
        }
    return total;
}

std::vector<Polynomial> bn_orbit(const Polynomial& P)
{
    const int n = P.num_vars();
    if (n > 6)
        throw ResourceExceeded("bn_orbit: |B_n| too large for n = " + std::to_string(n));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::set<std::string> seen;
    std::vector<Polynomial> out;
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> signs;
            for (int i = 0; i < n; ++i)
                signs.push_back((mask >> i) & 1u ? -1 : 1);
            Polynomial q = normalized_sign(act(SignedPermutation(perm, signs), P));
            if (seen.insert(q.to_string()).second)
                out.push_back(std::move(q));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

SymmetrizationResult verify_symmetrization(const Polynomial& P, const Monomial& m,
                                           const std::vector<std::vector<int>>& sets, std::size_t max_group)
{
    const int n = P.num_vars();
    if (P.is_zero())
        throw RejectedInput("verify_symmetrization: P = 0");
    const Polynomial top = P.homogeneous_component(P.degree());
    if (top.coefficient(m) == 0)
        throw RejectedInput("verify_symmetrization: " + m.to_string() + " is not a monomial of the top component");
    const auto profile = monomial_profile(m);
    std::vector<int> anchors = profile.I1;
    anchors.insert(anchors.end(), profile.I2.begin(), profile.I2.end());
    std::vector<int> sizes = profile.k;
    sizes.insert(sizes.end(), profile.r.begin(), profile.r.end());
    if (sets.size() != anchors.size())
        throw RejectedInput("verify_symmetrization: need " + std::to_string(anchors.size()) + " index sets");

    const auto top_vars = top.variables();
    std::set<int> used;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (static_cast<int>(sets[i].size()) != sizes[i])
            throw RejectedInput("verify_symmetrization: set " + std::to_string(i + 1) + " must have "
                                + std::to_string(sizes[i]) + " elements");
        for (int v : sets[i]) {
            if (v < 1 || v > n)
                throw RejectedInput("verify_symmetrization: index " + std::to_string(v) + " outside the ring");
            if (std::binary_search(top_vars.begin(), top_vars.end(), v))
                throw RejectedInput("verify_symmetrization: x" + std::to_string(v) + " occurs in the top component");
            if (!used.insert(v).second)
                throw RejectedInput("verify_symmetrization: index sets are not disjoint");
        }
    }

    std::vector<std::vector<int>> blocks;
    SymmetrizationResult result;
    result.multiple = 1;
    std::size_t group = 1;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        std::vector<int> I = sets[i];
        std::sort(I.begin(), I.end());
        std::vector<int> J{anchors[i]};
        J.insert(J.end(), I.begin(), I.end());
        blocks.push_back(J);
        result.multiple *= factorial(sizes[i]);
        for (std::size_t f = 2; f <= J.size(); ++f) {
            group *= f;
            if (group > max_group)
                throw ResourceExceeded("verify_symmetrization: symmetrization group exceeds " + std::to_string(max_group));
        }
    }
    result.group_size = group;

    // sign averaging: odd part in the I2 variables, even part in all others
    Polynomial Q = P;
    for (int i = 1; i <= n; ++i) {
        const Polynomial flipped = act(SignedPermutation::sign_flip(n, i), Q);
        const bool odd = std::binary_search(profile.I2.begin(), profile.I2.end(), i);
        Q = scale(odd ? Q - flipped : Q + flipped, Rational(1, 2));
    }
    Q *= 1 / Q.coefficient(m);

    Polynomial R = Q;
    Monomial odd_extra;
    Monomial odd_all;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        std::vector<int> I(blocks[i].begin() + 1, blocks[i].end());
        R *= substitute_squares(vandermonde(n, I));
        if (i >= profile.I1.size()) {
            for (int v : I)
                odd_extra.set_exponent(v, 1);
            for (int v : blocks[i])
                odd_all.set_exponent(v, 1);
        }
    }
    R = R.times_term(odd_extra, 1);

    result.generator = Polynomial::monomial(n, odd_all);
    for (const auto& J : blocks)
        result.generator *= substitute_squares(vandermonde(n, J));

    // Σ over the product of the symmetric groups on the blocks
    Polynomial sum(n);
    std::vector<std::vector<int>> images = blocks;
    for (auto& img : images)
        std::sort(img.begin(), img.end());
    std::function<void(std::size_t)> walk = [&](std::size_t b) {
        if (b == images.size()) {
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 1);
            for (std::size_t i = 0; i < blocks.size(); ++i) {
                std::vector<int> src = blocks[i];
                std::sort(src.begin(), src.end());
                for (std::size_t k = 0; k < src.size(); ++k)
                    perm[static_cast<std::size_t>(src[k] - 1)] = images[i][k];
            }
            sum += scale(act(SignedPermutation::from_permutation(perm), R), permutation_sign(perm));
            return;
        }
        do {
            walk(b + 1);
        } while (std::next_permutation(images[b].begin(), images[b].end()));
    };
    walk(0);
    result.symmetrized = std::move(sum);
    result.verified = result.symmetrized == scale(result.generator, Rational(result.multiple));
    return result;
}

} // namespace bnspecht
