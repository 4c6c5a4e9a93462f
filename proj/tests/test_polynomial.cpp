#include "bnspecht/errors.hpp"
#include "bnspecht/polynomial.hpp"
#include "bnspecht/signed_permutation.hpp"

#include <doctest.h>

#include <random>

using namespace bnspecht;

namespace {

Polynomial P(const char* text, int n)
{
    return parse_polynomial(text, n);
}

Polynomial random_poly(std::mt19937& rng, int n, int max_terms, int max_exp)
{
    std::uniform_int_distribution<int> coeff(-5, 5), exp(0, max_exp), count(0, max_terms);
    std::vector<Term> terms;
    const int k = count(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<int> e(static_cast<std::size_t>(n));
        for (auto& v : e)
            v = exp(rng);
        terms.push_back({Monomial(e), Rational(coeff(rng), 1 + (t % 3))});
    }
    return Polynomial::from_terms(n, std::move(terms));
}

SignedPermutation random_element(std::mt19937& rng, int n)
{
    std::vector<int> perm(static_cast<std::size_t>(n)), signs(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& s : signs)
        s = (rng() & 1) ? 1 : -1;
    return {perm, signs};
}

std::vector<Rational> random_point(std::mt19937& rng, int n)
{
    std::uniform_int_distribution<int> v(-7, 7), d(1, 4);
    std::vector<Rational> z;
    for (int i = 0; i < n; ++i)
        z.emplace_back(v(rng), d(rng));
    for (auto& q : z)
        q.canonicalize();
    return z;
}

} // namespace

TEST_CASE("arithmetic")
{
    CHECK(P("(x1-x2)*(x1+x2)", 2) == P("x1^2-x2^2", 2));
    auto p = P("3*x1^2*x2 - x3/2 + 5", 3);
    CHECK((p + (-1) * p).is_zero());
    CHECK((p - p).terms().empty());
    const int idx[] = {1, 2, 3};
    auto d3 = vandermonde(3, idx);
    CHECK(d3.term_count() == 6);
    CHECK(d3.degree() == 3);
    for (const auto& t : d3.terms())
        CHECK(t.monomial.degree() == 3);
    CHECK_THROWS_AS(P("x1", 2) + P("x1", 3), RejectedInput);
}

TEST_CASE("canonical text form")
{
    CHECK(P("x1^2 - x2^2", 2).to_string() == "x1^2 - x2^2");
    CHECK(P("5 - x3/2 + 3*x2*x1^2", 3).to_string() == "3*x1^2*x2 - 1/2*x3 + 5");
    CHECK(P("-x2 + x1 - x1", 2).to_string() == "-x2");
    CHECK(Polynomial(3).to_string() == "0");
    CHECK(P("x2*x3*(x1^2-1)", 4).to_string() == "x1^2*x2*x3 - x2*x3");
    std::mt19937 rng(7);
    for (int k = 0; k < 50; ++k) {
        auto q = random_poly(rng, 4, 6, 3);
        CHECK(parse_polynomial(q.to_string(), 4) == q);
    }
}

TEST_CASE("parse errors are position-annotated")
{
    CHECK_THROWS_AS(parse_polynomial("x1 +", 2), RejectedInput);
    CHECK_THROWS_AS(parse_polynomial("x3", 2), RejectedInput);
    CHECK_THROWS_AS(parse_polynomial("x1/x2", 2), RejectedInput);
    CHECK_THROWS_AS(parse_polynomial("(x1", 2), RejectedInput);
    CHECK_THROWS_AS(parse_polynomial("x", 2), RejectedInput);
    CHECK_THROWS_AS(parse_polynomial("2 ** 3", 2), RejectedInput);
    try {
        parse_polynomial("x1 + $", 2);
        FAIL("expected rejection");
    } catch (const RejectedInput& e) {
        CHECK(std::string(e.what()).find("column 6") != std::string::npos);
    }
    CHECK(parse_polynomial("x1*x4").num_vars() == 4);
    CHECK(parse_polynomial("7").num_vars() == 0);
}

TEST_CASE("ring axioms on random triples")
{
    std::mt19937 rng(11);
    for (int k = 0; k < 40; ++k) {
        auto a = random_poly(rng, 3, 5, 3), b = random_poly(rng, 3, 5, 3), c = random_poly(rng, 3, 5, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        // evaluation is a ring homomorphism (independent route)
        auto z = random_point(rng, 3);
        CHECK(evaluate(a * b + c, z) == evaluate(a, z) * evaluate(b, z) + evaluate(c, z));
    }
}

TEST_CASE("vandermonde")
{
    const int one[] = {4};
    CHECK(vandermonde(5, one) == Polynomial::constant(5, 1));
    CHECK(vandermonde(5, std::span<const int>{}) == Polynomial::constant(5, 1));
    const int two[] = {1, 2};
    CHECK(vandermonde(2, two) == P("x1 - x2", 2));
    const int three[] = {9, 2, 5};
    CHECK(vandermonde(9, three) == P("(x9-x2)*(x9-x5)*(x2-x5)", 9));
    const int rep[] = {1, 2, 1};
    CHECK_THROWS_AS(vandermonde(3, rep), RejectedInput);
}

TEST_CASE("substitute squares")
{
    CHECK(substitute_squares(P("x1 - x2", 2)) == P("x1^2 - x2^2", 2));
    CHECK(substitute_squares(Polynomial::constant(3, 1)) == Polynomial::constant(3, 1));
    std::mt19937 rng(3);
    for (int k = 0; k < 30; ++k) {
        auto a = random_poly(rng, 3, 4, 2), b = random_poly(rng, 3, 4, 2);
        CHECK(substitute_squares(a * b) == substitute_squares(a) * substitute_squares(b));
        if (!a.is_zero())
            CHECK(substitute_squares(a).degree() == 2 * a.degree());
    }
}

TEST_CASE("leading monomial and evaluation")
{
    CHECK(P("x1^2 - x2^2", 2).leading_monomial() == Monomial::variable(1, 2));
    CHECK(Polynomial::constant(3, 4).leading_monomial().is_one());
    CHECK_THROWS_AS(Polynomial(2).leading_monomial(), RejectedInput);
    const auto q = P("x1*x2^3 + x1^2", 2);
    CHECK(q.leading_term(MonomialOrder::lex).monomial == Monomial::variable(1, 2));
    CHECK(q.leading_term(MonomialOrder::grevlex).monomial.degree() == 4);
    CHECK(q.leading_term(MonomialOrder::invlex).monomial.exponent(2) == 3);

    const std::vector<Rational> z{3, -3};
    CHECK(evaluate(P("x1^2 - x2^2", 2), z) == 0);
    const std::vector<Rational> w{1, 2};
    CHECK(evaluate(P("x1^2 - x2^2", 2), w) == -3);
    CHECK_THROWS_AS(evaluate(P("x1", 2), std::vector<Rational>{1}), RejectedInput);
}

TEST_CASE("monomial orders are total, multiplicative, and well-founded at 1")
{
    std::mt19937 rng(5);
    for (auto order : {MonomialOrder::lex, MonomialOrder::deglex, MonomialOrder::grevlex, MonomialOrder::invlex}) {
        for (int k = 0; k < 200; ++k) {
            std::uniform_int_distribution<int> e(0, 3);
            auto mono = [&] {
                std::vector<int> v(4);
                for (auto& x : v)
                    x = e(rng);
                return Monomial(v);
            };
            auto a = mono(), b = mono(), c = mono();
            const auto ab = compare(order, a, b);
            CHECK((ab == 0) == (a == b));
            CHECK(compare(order, a * c, b * c) == ab);
            CHECK(compare(order, a, Monomial{}) >= 0);
        }
        CHECK(parse_monomial_order(to_string(order)) == order);
    }
    // x1 > x2 in grevlex and lex, x2 > x1 in invlex
    CHECK(compare(MonomialOrder::grevlex, Monomial::variable(1), Monomial::variable(2)) > 0);
    CHECK(compare(MonomialOrder::invlex, Monomial::variable(1), Monomial::variable(2)) < 0);
    // grevlex vs deglex differ on x1*x3 vs x2^2
    Monomial x1x3 = Monomial::variable(1) * Monomial::variable(3), x2sq = Monomial::variable(2, 2);
    CHECK(compare(MonomialOrder::deglex, x1x3, x2sq) > 0);
    CHECK(compare(MonomialOrder::grevlex, x1x3, x2sq) < 0);
}

TEST_CASE("signed permutation action")
{
    CHECK(act(SignedPermutation::sign_flip(2, 1), P("x1*x2", 2)) == P("-x1*x2", 2));
    CHECK(act(SignedPermutation::transposition(2, 1, 2), P("x1^2*x2", 2)) == P("x2^2*x1", 2));
    // (τ,ρ)·x_i = τ_{ρ(i)} x_{ρ(i)}
    SignedPermutation g({2, 3, 1}, {1, 1, -1});
    CHECK(act(g, P("x1", 3)) == P("x2", 3));
    CHECK(act(g, P("x2", 3)) == P("-x3", 3));
    CHECK(act(g, P("x3", 3)) == P("x1", 3));

    std::mt19937 rng(17);
    for (int k = 0; k < 60; ++k) {
        const int n = 4;
        auto g1 = random_element(rng, n), h1 = random_element(rng, n);
        auto p = random_poly(rng, n, 5, 3);
        CHECK(act(SignedPermutation::identity(n), p) == p);
        CHECK(act(g1 * h1, p) == act(g1, act(h1, p)));
        CHECK(act(g1 * g1.inverse(), p) == p);
        CHECK(g1 * g1.inverse() == SignedPermutation::identity(n));
        auto z = random_point(rng, n);
        const auto ginv_z = act_on_point(g1.inverse(), z);
        CHECK(evaluate(act(g1, p), z) == evaluate(p, ginv_z));
        CHECK(act_on_point(g1 * h1, z) == act_on_point(g1, act_on_point(h1, z)));
    }
    // words of length ≤ 6 in the generators
    for (int k = 0; k < 30; ++k) {
        const int n = 3;
        auto p = random_poly(rng, n, 4, 3);
        SignedPermutation word = SignedPermutation::identity(n);
        Polynomial stepwise = p;
        std::vector<SignedPermutation> gens;
        const int len = static_cast<int>(rng() % 7);
        for (int j = 0; j < len; ++j)
            gens.push_back((rng() & 1) ? SignedPermutation::sign_flip(n, 1 + static_cast<int>(rng() % n))
                                       : SignedPermutation::transposition(n, 1, 2 + static_cast<int>(rng() % (n - 1))));
        for (auto it = gens.rbegin(); it != gens.rend(); ++it)
            stepwise = act(*it, stepwise);
        for (const auto& s : gens)
            word = word * s;
        CHECK(act(word, p) == stepwise);
    }
    CHECK(permutation_sign(std::vector<int>{2, 1, 3}) == -1);
    CHECK(permutation_sign(std::vector<int>{2, 3, 1}) == 1);
    CHECK_THROWS_AS(SignedPermutation({1, 1}, {1, 1}), RejectedInput);
}

TEST_CASE("rationals")
{
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(rational_to_string(Rational(4, 2)) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), RejectedInput);
    CHECK_THROWS_AS(parse_rational("a"), RejectedInput);
}
