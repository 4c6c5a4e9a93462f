#include "bnspecht/specht.hpp"

#include "bnspecht/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace bnspecht {

namespace {

constexpr long kMaxGenerators = 200'000;

mpz_class factorial(int k)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return f;
}

mpz_class binomial(int n, int k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

std::vector<int> column_lengths(const Partition& p)
{
    return conjugate(p).parts();
}

Polynomial squared_vandermonde(int num_vars, const std::vector<int>& indices)
{
    return substitute_squares(vandermonde(num_vars, indices));
}

} // namespace

Polynomial specht_polynomial_sn(const Tableau& t, int num_vars)
{
    Polynomial p = Polynomial::constant(num_vars, 1);
    for (const auto& col : t.columns())
        p *= vandermonde(num_vars, col);
    return p;
}

Polynomial specht_polynomial_bn(const Bitableau& bt)
{
    const int n = bt.n();
    Polynomial p = substitute_squares(specht_polynomial_sn(bt.first(), n))
                   * substitute_squares(specht_polynomial_sn(bt.second(), n));
    Monomial odd;
    for (int k : bt.second().entries())
        odd.set_exponent(k, 1);
    return p.times_term(odd, 1);
}

int specht_degree(const Bipartition& shape)
{
    int d = 0;
    for (int len : column_lengths(shape.left))
        d += len * (len - 1) / 2;
    for (int len : column_lengths(shape.right))
        d += len * (len - 1) / 2;
    return 2 * d + shape.right.size();
}

mpz_class specht_generator_count(const Bipartition& shape)
{
    mpz_class count = factorial(shape.size());
    for (const Partition* p : {&shape.left, &shape.right}) {
        std::map<int, int> multiplicity;
        for (int len : column_lengths(*p)) {
            count /= factorial(len);
            ++multiplicity[len];
        }
        for (const auto& [len, m] : multiplicity)
            count /= factorial(m);
    }
    return count;
}

std::vector<Polynomial> specht_generators(const Bipartition& shape, int n)
{
    if (shape.size() != n)
        throw RejectedInput("specht_generators: shape " + shape.to_string() + " is not a bipartition of "
                            + std::to_string(n));
    if (specht_generator_count(shape) > kMaxGenerators)
        throw ResourceExceeded("specht_generators: orbit of " + shape.to_string() + " too large");

    struct Slot {
        int component;
        int length;
    };
    std::vector<Slot> slots;
    for (int len : column_lengths(shape.left))
        slots.push_back({0, len});
    for (int len : column_lengths(shape.right))
        slots.push_back({1, len});

    std::vector<Polynomial> out;
    std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
    std::vector<std::vector<int>> chosen(slots.size());
    std::map<std::vector<int>, Polynomial> cache;

    auto emit = [&] {
        Polynomial p = Polynomial::constant(n, 1);
        Monomial odd;
        for (std::size_t c = 0; c < slots.size(); ++c) {
            const auto& col = chosen[c];
            if (col.size() > 1) {
                auto it = cache.find(col);
                if (it == cache.end())
                    it = cache.emplace(col, squared_vandermonde(n, col)).first;
                p *= it->second;
            }
            if (slots[c].component == 1)
                for (int k : col)
                    odd.set_exponent(k, 1);
        }
        p = p.times_term(odd, 1);
        if (sgn(p.terms().front().coeff) < 0)
            p = -p;
        out.push_back(std::move(p));
    };

    std::function<void(std::size_t)> fill_slot;
    // Extends chosen[c] by entries > `from`, one at a time.
    std::function<void(std::size_t, int)> extend = [&](std::size_t c, int from) {
        auto& col = chosen[c];
        if (static_cast<int>(col.size()) == slots[c].length) {
            fill_slot(c + 1);
            return;
        }
        for (int v = from + 1; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v)])
                continue;
            if (col.empty() && c > 0 && slots[c - 1].component == slots[c].component
                && slots[c - 1].length == slots[c].length && v < chosen[c - 1].front())
                continue;
            used[static_cast<std::size_t>(v)] = true;
            col.push_back(v);
            extend(c, v);
            col.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    fill_slot = [&](std::size_t c) {
        if (c == slots.size()) {
            emit();
            return;
        }
        extend(c, 0);
    };
    fill_slot(0);
    // lex-largest leading monomials first, then the remaining terms
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
        return std::lexicographical_compare(
            a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
            [](const Term& s, const Term& t) { return s.monomial != t.monomial ? s.monomial > t.monomial : s.coeff > t.coeff; });
    });
    return out;
}

mpz_class num_standard_tableaux(const Partition& shape)
{
    const auto conj = conjugate(shape);
    mpz_class hooks = 1;
    for (int i = 1; i <= shape.length(); ++i)
        for (int j = 1; j <= shape.row(i); ++j)
            hooks *= (shape.row(i) - j) + (conj.row(j) - i) + 1;
    return factorial(shape.size()) / hooks;
}

mpz_class num_standard_bitableaux(const Bipartition& shape)
{
    return binomial(shape.size(), shape.left.size()) * num_standard_tableaux(shape.left)
           * num_standard_tableaux(shape.right);
}

} // namespace bnspecht
