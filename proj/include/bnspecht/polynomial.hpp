#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bnspecht {

using Rational = mpq_class;

/// Hard ceiling on the ambient variable count of any polynomial.
inline constexpr int kMaxVars = 16;

/// Exponent vector over x_1 … x_kMaxVars. The built-in ordering is lex with x1 > x2 > ….
class Monomial {
public:
    Monomial() = default;
    /// exps[i] is the exponent of x_{i+1}.
    explicit Monomial(std::span<const int> exps);

    static Monomial variable(int index, int power = 1);

    /// 1-based.
    int exponent(int index) const noexcept { return exps_[static_cast<std::size_t>(index - 1)]; }
    void set_exponent(int index, int power);
    int degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }
    /// Largest index with a positive exponent, 0 for the unit monomial.
    int last_variable() const noexcept;
    /// Number of variables with positive exponent.
    int support_size() const noexcept;

    bool divides(const Monomial& other) const noexcept;
    bool coprime(const Monomial& other) const noexcept;
    /// Requires divides(other).
    Monomial quotient_of(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const noexcept;
    Monomial operator*(const Monomial& other) const;

    bool operator==(const Monomial& other) const noexcept { return exps_ == other.exps_; }
    std::strong_ordering operator<=>(const Monomial& other) const noexcept { return exps_ <=> other.exps_; }

    /// "x1^2*x3", "1" for the unit monomial.
    std::string to_string() const;

private:
    std::array<std::uint16_t, kMaxVars> exps_{};
    int degree_ = 0;
};

enum class MonomialOrder {
    lex,     // x1 > x2 > … > xn
    deglex,  // total degree, ties by lex
    grevlex, // total degree, ties by reverse lex
    invlex,  // lex with xn > … > x1
};

std::strong_ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b) noexcept;
std::string to_string(MonomialOrder order);
/// Accepts "lex", "deglex", "grevlex", "invlex".
MonomialOrder parse_monomial_order(std::string_view name);

struct Term {
    Monomial monomial;
    Rational coeff;

    bool operator==(const Term&) const = default;
};

/// Sparse polynomial in Q[x_1 … x_n]. Terms are kept in descending lex order with
/// nonzero coefficients, so equality is structural.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int num_vars);

    static Polynomial constant(int num_vars, const Rational& c);
    static Polynomial variable(int num_vars, int index);
    static Polynomial monomial(int num_vars, const Monomial& m, const Rational& c = 1);
    /// Terms in any order; duplicates are combined and zeros dropped.
    static Polynomial from_terms(int num_vars, std::vector<Term> terms);

    int num_vars() const noexcept { return num_vars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    std::size_t term_count() const noexcept { return terms_.size(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const noexcept;
    Rational coefficient(const Monomial& m) const;

    /// Lex-maximal monomial. Rejects the zero polynomial.
    const Monomial& leading_monomial() const;
    /// Maximal term under the given order. Rejects the zero polynomial.
    const Term& leading_term(MonomialOrder order) const;

    /// Sum of the terms of total degree d.
    Polynomial homogeneous_component(int d) const;
    /// Indices of the variables that occur in some term, ascending.
    std::vector<int> variables() const;
    /// Same polynomial viewed in a ring with more (or equally many) variables.
    Polynomial with_num_vars(int num_vars) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    /// Multiply by c·m.
    Polynomial times_term(const Monomial& m, const Rational& c) const;
    Polynomial pow(int e) const;

    /// Divide by the leading coefficient under the given order. Zero stays zero.
    Polynomial monic(MonomialOrder order) const;

    bool operator==(const Polynomial& other) const = default;

    std::string to_string() const;

private:
    void check_same_ring(const Polynomial& other) const;

    int num_vars_ = 0;
    std::vector<Term> terms_;
};

Polynomial scale(const Polynomial& p, const Rational& c);

/// Π_{j<k} (x_{i_j} − x_{i_k}). Repeated indices are rejected.
Polynomial vandermonde(int num_vars, std::span<const int> indices);

/// x_i ↦ x_i² for every variable.
Polynomial substitute_squares(const Polynomial& p);

/// Rejects a point whose dimension differs from num_vars().
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// Polynomial text: integers, xN, + - * ^, division by a constant, parentheses.
/// With num_vars = 0 the ring is the smallest one containing every xN used.
Polynomial parse_polynomial(std::string_view text, int num_vars = 0);

/// "p/q" or "p".
std::string rational_to_string(const Rational& q);
/// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);

} // namespace bnspecht
