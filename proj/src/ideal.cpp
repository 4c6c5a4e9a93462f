#include "bnspecht/ideal.hpp"

#include "bnspecht/errors.hpp"
#include "bnspecht/signed_permutation.hpp"
#include "bnspecht/specht.hpp"
#include "bnspecht/tableau.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

namespace bnspecht {

namespace {

Polynomial squared_vandermonde(int num_vars, const std::vector<int>& indices)
{
    return substitute_squares(vandermonde(num_vars, indices));
}

Polynomial product_of_variables(int num_vars, const std::vector<int>& indices, int power = 1)
{
    Monomial m;
    for (int i : indices)
        m.set_exponent(i, power);
    return Polynomial::monomial(num_vars, m);
}

std::vector<int> range(int first, int last)
{
    std::vector<int> out;
    for (int i = first; i <= last; ++i)
        out.push_back(i);
    return out;
}

std::vector<int> join(const std::vector<int>& x, const std::vector<int>& y)
{
    std::vector<int> out = x;
    out.insert(out.end(), y.begin(), y.end());
    std::sort(out.begin(), out.end());
    return out;
}

// Σ over the C(|A∪B1|, |A|) subsets K: σ sends A onto K and B1 onto the complement, both monotonically.
Polynomial alternating_coset_sum(const Polynomial& q, const std::vector<int>& A, const std::vector<int>& B1,
                                 int num_vars, std::size_t& cosets)
{
    const std::vector<int> ab = join(A, B1);
    const std::size_t a = A.size();
    std::vector<bool> in_k(ab.size(), false);
    std::fill(in_k.begin(), in_k.begin() + static_cast<std::ptrdiff_t>(a), true);
    Polynomial sum(num_vars);
    cosets = 0;
    // prev_permutation over a sorted-descending mask walks subsets in lex order of K
    do {
        std::vector<int> image(static_cast<std::size_t>(num_vars));
        std::iota(image.begin(), image.end(), 1);
        std::size_t next_a = 0;
        std::size_t next_b = a;
        std::vector<int> targets(ab.size());
        for (std::size_t pos = 0; pos < ab.size(); ++pos)
            targets[in_k[pos] ? next_a++ : next_b++] = ab[pos];
        for (std::size_t pos = 0; pos < ab.size(); ++pos)
            image[static_cast<std::size_t>(ab[pos] - 1)] = targets[pos];
        const int eps = permutation_sign(image);
        sum += scale(act(SignedPermutation::from_permutation(image), q), eps);
        ++cosets;
    } while (std::prev_permutation(in_k.begin(), in_k.end()));
    return sum;
}

struct GbCache {
    std::mutex mutex;
    std::map<std::pair<std::string, int>, std::unique_ptr<GroebnerBasis>> bases;
};

GbCache& gb_cache()
{
    static GbCache cache;
    return cache;
}

void require_size(const Bipartition& bp, int n, const char* what)
{
    if (bp.size() != n)
        throw RejectedInput(std::string(what) + ": " + bp.to_string() + " is not a bipartition of " + std::to_string(n));
}

} // namespace

const GroebnerBasis& specht_ideal_gb(const Bipartition& shape, int n, const GroebnerLimits& limits)
{
    require_size(shape, n, "specht_ideal_gb");
    auto& cache = gb_cache();
    const auto key = std::pair{shape.to_string(), n};
    {
        std::lock_guard lock(cache.mutex);
        if (auto it = cache.bases.find(key); it != cache.bases.end())
            return *it->second;
    }
    auto gb = std::make_unique<GroebnerBasis>(buchberger(specht_generators(shape, n), MonomialOrder::grevlex, limits));
    std::lock_guard lock(cache.mutex);
    auto [it, inserted] = cache.bases.emplace(key, std::move(gb));
    return *it->second;
}

bool specht_ideal_contains(const Bipartition& a, const Bipartition& b, int n, const GroebnerLimits& limits)
{
    require_size(a, n, "specht_ideal_contains");
    require_size(b, n, "specht_ideal_contains");
    const GroebnerBasis& gb = specht_ideal_gb(a, n, limits);
    for (const auto& g : specht_generators(b, n))
        if (!ideal_member(g, gb, limits))
            return false;
    return true;
}

CoveringCertificate covering_certificate(int covering_case, int a, int b, std::size_t max_cosets)
{
    if (covering_case != 3 && covering_case != 4)
        throw RejectedInput("covering_certificate: case must be 3 or 4");
    if (a < 1 || b < 0)
        throw RejectedInput("covering_certificate: need a >= 1 and b >= 0");
    const int b1 = covering_case == 3 ? b : b + 1;
    const int num_vars = a + b1 + b;
    if (num_vars > kMaxVars)
        throw ResourceExceeded("covering_certificate: " + std::to_string(num_vars) + " variables exceed the ring bound");
    mpz_class coset_count;
    mpz_bin_uiui(coset_count.get_mpz_t(), static_cast<unsigned long>(a + b1), static_cast<unsigned long>(a));
    if (coset_count > static_cast<unsigned long>(max_cosets))
        throw ResourceExceeded("covering_certificate: " + coset_count.get_str() + " cosets exceed the bound");

    CoveringCertificate c;
    c.covering_case = covering_case;
    c.a = a;
    c.b = b;
    c.A = range(1, a);
    c.B1 = range(a + 1, a + b1);
    c.B2 = range(a + b1 + 1, num_vars);
    const auto a_b1 = join(c.A, c.B1);
    const auto a_b2 = join(c.A, c.B2);

    c.p_star = squared_vandermonde(num_vars, a_b1);
    c.q_star = squared_vandermonde(num_vars, c.A) * squared_vandermonde(num_vars, c.B1);
    for (int i : c.A)
        for (int j : c.B2)
            c.q_star *= Polynomial::monomial(num_vars, Monomial::variable(i, 2))
                        - Polynomial::monomial(num_vars, Monomial::variable(j, 2));
    if (covering_case == 4)
        c.q_star *= product_of_variables(num_vars, c.A, 2);
    c.q_bar = alternating_coset_sum(c.q_star, c.A, c.B1, num_vars, c.cosets);
    c.verified = c.p_star == c.q_bar;

    Polynomial q;
    if (covering_case == 3) {
        c.p = squared_vandermonde(num_vars, c.B2) * squared_vandermonde(num_vars, a_b1)
              * product_of_variables(num_vars, a_b1);
        q = squared_vandermonde(num_vars, a_b2) * squared_vandermonde(num_vars, c.B1)
            * product_of_variables(num_vars, c.B1);
    } else {
        c.p = squared_vandermonde(num_vars, a_b1) * squared_vandermonde(num_vars, c.B2)
              * product_of_variables(num_vars, c.B2);
        q = squared_vandermonde(num_vars, c.B1) * squared_vandermonde(num_vars, a_b2)
            * product_of_variables(num_vars, a_b2);
    }
    c.q_tilde = q * product_of_variables(num_vars, c.A);
    std::size_t ignored = 0;
    c.full_identity = c.p == alternating_coset_sum(c.q_tilde, c.A, c.B1, num_vars, ignored);
    return c;
}

InclusionReport inclusion_by_certificates(const Bipartition& a, const Bipartition& b, int n, int max_groebner_n,
                                          const GroebnerLimits& limits)
{
    require_size(a, n, "inclusion_by_certificates");
    require_size(b, n, "inclusion_by_certificates");
    if (!bidominates(a, b))
        throw RejectedInput("inclusion_by_certificates: " + a.to_string() + " does not bidominate " + b.to_string());
    InclusionReport report{a, b, n, {}, true};
    Bipartition upper = a;
    for (const Covering& cov : covering_chain(a, b)) {
        InclusionStep step{upper, cov, std::nullopt, std::nullopt};
        if (cov.type == 3 || cov.type == 4) {
            step.certificate = covering_certificate(cov.type, cov.last_row - cov.first_row + 1, cov.first_row - 1);
            report.included = report.included && step.certificate->verified && step.certificate->full_identity;
        }
        if (n <= max_groebner_n) {
            step.groebner_membership = specht_ideal_contains(upper, cov.lower, n, limits);
            report.included = report.included && *step.groebner_membership;
        }
        upper = cov.lower;
        report.steps.push_back(std::move(step));
    }
    return report;
}

bool radical_membership(const Polynomial& f, const std::vector<Polynomial>& gens, const GroebnerLimits& limits)
{
    const int n = f.num_vars();
    if (n + 1 > kMaxVars)
        throw ResourceExceeded("radical_membership: no room for the auxiliary variable");
    std::vector<Polynomial> lifted;
    for (const auto& g : gens) {
        if (g.num_vars() != n)
            throw RejectedInput("radical_membership: polynomials live in rings of different dimension");
        lifted.push_back(g.with_num_vars(n + 1));
    }
    const Polynomial y = Polynomial::variable(n + 1, n + 1);
    lifted.push_back(Polynomial::constant(n + 1, 1) - y * f.with_num_vars(n + 1));
    return buchberger(lifted, MonomialOrder::grevlex, limits).is_unit_ideal();
}

UniversalGbReport universal_gb_check(const Bipartition& shape, int n, const std::vector<MonomialOrder>& orders,
                                     const GroebnerLimits& limits)
{
    require_size(shape, n, "universal_gb_check");
    if (n > kMaxConjectureN)
        throw ResourceExceeded("universal_gb_check: n = " + std::to_string(n) + " above the supported bound "
                               + std::to_string(kMaxConjectureN));
    UniversalGbReport report;
    report.shape = shape;
    report.n = n;
    for (const auto& s : enumerate_bipartitions(n))
        if (bidominates(shape, s)) {
            report.shapes_below.push_back(s);
            for (auto& g : specht_generators(s, n))
                report.candidate_set.push_back(std::move(g));
        }
    for (MonomialOrder order : orders)
        report.orders.push_back({order, buchberger_criterion(report.candidate_set, order, limits)});
    return report;
}

RadicalReport radical_harness(const Bipartition& shape, int n, const GroebnerLimits& limits)
{
    require_size(shape, n, "radical_harness");
    if (n > kMaxConjectureN)
        throw ResourceExceeded("radical_harness: n = " + std::to_string(n) + " above the supported bound "
                               + std::to_string(kMaxConjectureN));
    const auto gens = specht_generators(shape, n);
    const GroebnerBasis& gb = specht_ideal_gb(shape, n, limits);

    // linear factors of the reference generator
    const Bitableau ref = reference_bitableau(shape);
    std::vector<Polynomial> factors;
    auto column_factors = [&](const Tableau& t) {
        for (const auto& col : t.columns())
            for (std::size_t i = 0; i < col.size(); ++i)
                for (std::size_t j = i + 1; j < col.size(); ++j) {
                    const Polynomial xi = Polynomial::variable(n, col[i]);
                    const Polynomial xj = Polynomial::variable(n, col[j]);
                    factors.push_back(xi - xj);
                    factors.push_back(xi + xj);
                }
    };
    column_factors(ref.first());
    column_factors(ref.second());
    for (int k : ref.second().entries())
        factors.push_back(Polynomial::variable(n, k));

    std::vector<std::pair<std::string, Polynomial>> candidates;
    Polynomial full = Polynomial::constant(n, 1);
    for (const auto& f : factors)
        full *= f;
    candidates.emplace_back("generator", full);
    for (std::size_t skip = 0; skip < factors.size(); ++skip) {
        Polynomial partial = Polynomial::constant(n, 1);
        for (std::size_t k = 0; k < factors.size(); ++k)
            if (k != skip)
                partial *= factors[k];
        candidates.emplace_back("generator without factor " + factors[skip].to_string(), partial);
    }
    for (int i = 1; i <= n; ++i)
        candidates.emplace_back("variable", Polynomial::variable(n, i));
    candidates.emplace_back("product of variables", product_of_variables(n, range(1, n)));

    RadicalReport report;
    report.shape = shape;
    report.n = n;
    std::set<std::string> seen;
    for (auto& [origin, candidate] : candidates) {
        if (!seen.insert(candidate.to_string()).second)
            continue;
        RadicalProbe probe{origin, candidate, radical_membership(candidate, gens, limits),
                           ideal_member(candidate, gb, limits)};
        if (probe.in_radical && !probe.in_ideal)
            report.consistent_with_radical = false;
        report.probes.push_back(std::move(probe));
    }
    return report;
}

} // namespace bnspecht
