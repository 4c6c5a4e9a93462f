#include "bnspecht/errors.hpp"
#include "bnspecht/groebner.hpp"
#include "bnspecht/specht.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace bnspecht;

namespace {

Polynomial P(const char* text, int n)
{
    return parse_polynomial(text, n);
}

Polynomial random_poly(std::mt19937& rng, int n, int terms, int max_exp)
{
    std::vector<Term> ts;
    for (int k = 0; k < terms; ++k) {
        Monomial m;
        for (int i = 1; i <= n; ++i)
            m.set_exponent(i, static_cast<int>(rng() % static_cast<unsigned>(max_exp + 1)));
        ts.push_back({m, Rational(static_cast<int>(rng() % 7) - 3)});
    }
    return Polynomial::from_terms(n, std::move(ts));
}

// Structural invariants of a reduced basis, checked without reusing the builder.
void check_reduced(const GroebnerBasis& gb)
{
    for (std::size_t i = 0; i < gb.generators.size(); ++i) {
        const auto& g = gb.generators[i];
        const Term& lt = g.leading_term(gb.order);
        CHECK(lt.coeff == 1);
        for (std::size_t j = 0; j < gb.generators.size(); ++j) {
            if (i == j)
                continue;
            for (const auto& t : g.terms())
                CHECK_FALSE(gb.generators[j].leading_term(gb.order).monomial.divides(t.monomial));
        }
        if (i > 0)
            CHECK(compare(gb.order, gb.generators[i - 1].leading_term(gb.order).monomial, lt.monomial) > 0);
    }
    CHECK(buchberger_criterion(gb.generators, gb.order).passed);
}

const MonomialOrder kOrders[] = {MonomialOrder::lex, MonomialOrder::deglex, MonomialOrder::grevlex,
                                 MonomialOrder::invlex};

} // namespace

TEST_CASE("buchberger on small ideals")
{
    auto unit = buchberger({Polynomial::constant(2, 1)}, MonomialOrder::lex);
    REQUIRE(unit.generators.size() == 1);
    CHECK(unit.is_unit_ideal());

    auto zero = buchberger({Polynomial(3), Polynomial(3)}, MonomialOrder::lex);
    CHECK(zero.is_zero_ideal());

    auto vars = buchberger(specht_generators({{1}, {1}}, 2), MonomialOrder::lex);
    CHECK(vars.generators == std::vector{P("x1", 2), P("x2", 2)});

    auto diff = buchberger(specht_generators({{1, 1}, {}}, 2), MonomialOrder::lex);
    CHECK(diff.generators == std::vector{P("x1^2 - x2^2", 2)});

    // twisted cubic in lex
    auto cubic = buchberger({P("x2 - x1^2", 3), P("x3 - x1^3", 3)}, MonomialOrder::lex);
    check_reduced(cubic);
    CHECK(cubic.generators == std::vector{P("x1^2 - x2", 3), P("x1*x2 - x3", 3), P("x1*x3 - x2^2", 3), P("x2^3 - x3^2", 3)});

    auto inconsistent = buchberger({P("x1*x2 - 1", 2), P("x1", 2)}, MonomialOrder::grevlex);
    CHECK(inconsistent.is_unit_ideal());
}

TEST_CASE("reduce examples")
{
    const auto vars = buchberger({P("x1", 2), P("x2", 2)}, MonomialOrder::lex);
    CHECK(reduce(P("x1", 2), vars).is_zero());
    const auto diff = buchberger({P("x1^2 - x2^2", 2)}, MonomialOrder::lex);
    CHECK(reduce(P("x1", 2), diff) == P("x1", 2));
    CHECK(reduce(P("x1^3", 2), diff) == P("x1*x2^2", 2));
    CHECK(reduce(P("x1^2 - x2^2", 2), buchberger(specht_generators({{1}, {1}}, 2), MonomialOrder::lex)).is_zero());
    CHECK_THROWS_AS(reduce(P("x1", 3), vars), RejectedInput);
}

TEST_CASE("s_polynomial and criterion")
{
    CHECK(s_polynomial(P("x1^2 - x2", 2), P("x1*x2 - 1", 2), MonomialOrder::lex) == P("-x2^2 + x1", 2));
    auto bad = buchberger_criterion({P("x1^2 - x2", 2), P("x1*x2 - 1", 2)}, MonomialOrder::lex);
    CHECK_FALSE(bad.passed);
    REQUIRE(bad.failing_pair.has_value());
    CHECK(bad.failing_pair->first == 0);
    auto coprime = buchberger_criterion({P("x1^2 + x3", 3), P("x2^2 + x3", 3)}, MonomialOrder::lex);
    CHECK(coprime.passed);
    CHECK(coprime.pairs_skipped_coprime == 1);
    CHECK(coprime.pairs_checked == 0);
}

TEST_CASE("random ideals: reduced, contain inputs, independent of input order")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        std::vector<Polynomial> gens;
        const int count = 2 + static_cast<int>(rng() % 2);
        for (int k = 0; k < count; ++k)
            gens.push_back(random_poly(rng, n, 3, 2));
        for (MonomialOrder order : kOrders) {
            GroebnerLimits limits;
            limits.max_basis = 400;
            GroebnerBasis gb;
            try {
                gb = buchberger(gens, order, limits);
            } catch (const ResourceExceeded&) {
                continue;
            }
            check_reduced(gb);
            for (const auto& g : gens)
                CHECK(ideal_member(g, gb));
            auto shuffled = gens;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            for (auto& g : shuffled)
                g *= Rational(static_cast<int>(rng() % 5) + 1, 3);
            CHECK(buchberger(shuffled, order) == gb);
            // the basis generates the same ideal
            auto both = gens;
            both.insert(both.end(), gb.generators.begin(), gb.generators.end());
            CHECK(buchberger(both, order) == gb);
            CHECK(buchberger(gb.generators, order) == gb);
        }
    }
}

TEST_CASE("normal form is idempotent and linear")
{
    std::mt19937 rng(11);
    const auto gb = buchberger({P("x1^2 - x2*x3", 3), P("x2^2 - x1*x3 + 1", 3)}, MonomialOrder::grevlex);
    for (int trial = 0; trial < 30; ++trial) {
        const Polynomial p = random_poly(rng, 3, 5, 4);
        const Polynomial q = random_poly(rng, 3, 5, 4);
        const Polynomial rp = reduce(p, gb);
        CHECK(reduce(rp, gb) == rp);
        CHECK(reduce(p + q, gb) == reduce(rp + reduce(q, gb), gb));
        CHECK(ideal_member(p - rp, gb));
        for (const auto& t : rp.terms())
            for (const auto& g : gb.generators)
                CHECK_FALSE(g.leading_term(gb.order).monomial.divides(t.monomial));
    }
}

TEST_CASE("resource limits surface as ResourceExceeded")
{
    GroebnerLimits tight;
    tight.max_basis = 1;
    CHECK_THROWS_AS(buchberger({P("x2 - x1^2", 3), P("x3 - x1^3", 3)}, MonomialOrder::lex, tight), ResourceExceeded);
    GroebnerLimits few_terms;
    few_terms.max_terms = 2;
    CHECK_THROWS_AS(reduce(P("x1^3 + x2^3 + x1*x2 + 1", 2), buchberger({P("x1 - x2 - 1", 2)}, MonomialOrder::lex),
                           few_terms),
                    ResourceExceeded);
}

TEST_CASE("Specht ideal bases are consistent across orders, n <= 3")
{
    for (int n = 1; n <= 3; ++n)
        for (const auto& shape : enumerate_bipartitions(n)) {
            const auto gens = specht_generators(shape, n);
            for (MonomialOrder order : kOrders) {
                const auto gb = buchberger(gens, order);
                check_reduced(gb);
                for (const auto& g : gens)
                    CHECK(ideal_member(g, gb));
            }
        }
}
