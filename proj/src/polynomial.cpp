#include "bnspecht/polynomial.hpp"

#include "bnspecht/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace bnspecht {

namespace {

void check_index(int index)
{
    if (index < 1 || index > kMaxVars)
        throw RejectedInput("variable index x" + std::to_string(index) + " outside 1.." + std::to_string(kMaxVars));
}

void check_exponent(long e)
{
    if (e < 0 || e > 0xFFFF)
        throw RejectedInput("exponent " + std::to_string(e) + " out of range");
}

} // namespace

// Monomial ----------------------------------------------------------------------

Monomial::Monomial(std::span<const int> exps)
{
    if (exps.size() > static_cast<std::size_t>(kMaxVars))
        throw RejectedInput("too many variables for a monomial");
    for (std::size_t i = 0; i < exps.size(); ++i) {
        check_exponent(exps[i]);
        exps_[i] = static_cast<std::uint16_t>(exps[i]);
        degree_ += exps[i];
    }
}

Monomial Monomial::variable(int index, int power)
{
    Monomial m;
    m.set_exponent(index, power);
    return m;
}

void Monomial::set_exponent(int index, int power)
{
    check_index(index);
    check_exponent(power);
    auto& slot = exps_[static_cast<std::size_t>(index - 1)];
    degree_ += power - slot;
    slot = static_cast<std::uint16_t>(power);
}

int Monomial::last_variable() const noexcept
{
    for (int i = kMaxVars; i >= 1; --i)
        if (exps_[static_cast<std::size_t>(i - 1)])
            return i;
    return 0;
}

int Monomial::support_size() const noexcept
{
    return static_cast<int>(std::count_if(exps_.begin(), exps_.end(), [](std::uint16_t e) { return e != 0; }));
}

bool Monomial::divides(const Monomial& other) const noexcept
{
    if (degree_ > other.degree_)
        return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept
{
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] && other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const
{
    if (!divides(other))
        throw std::logic_error("monomial quotient: " + to_string() + " does not divide " + other.to_string());
    Monomial q;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        q.exps_[i] = static_cast<std::uint16_t>(other.exps_[i] - exps_[i]);
    q.degree_ = other.degree_ - degree_;
    return q;
}

Monomial Monomial::lcm(const Monomial& other) const noexcept
{
    Monomial l;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        l.exps_[i] = std::max(exps_[i], other.exps_[i]);
        l.degree_ += l.exps_[i];
    }
    return l;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial p;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        const int e = exps_[i] + other.exps_[i];
        check_exponent(e);
        p.exps_[i] = static_cast<std::uint16_t>(e);
    }
    p.degree_ = degree_ + other.degree_;
    return p;
}

std::string Monomial::to_string() const
{
    if (is_one())
        return "1";
    std::string out;
    for (int i = 1; i <= kMaxVars; ++i) {
        const int e = exponent(i);
        if (!e)
            continue;
        if (!out.empty())
            out += '*';
        out += 'x' + std::to_string(i);
        if (e > 1)
            out += '^' + std::to_string(e);
    }
    return out;
}

// Orders ------------------------------------------------------------------------

std::strong_ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b) noexcept
{
    switch (order) {
    case MonomialOrder::lex:
        return a <=> b;
    case MonomialOrder::deglex:
        if (a.degree() != b.degree())
            return a.degree() <=> b.degree();
        return a <=> b;
    case MonomialOrder::grevlex:
        if (a.degree() != b.degree())
            return a.degree() <=> b.degree();
        // smaller exponent in the last differing variable wins
        for (int i = kMaxVars; i >= 1; --i)
            if (a.exponent(i) != b.exponent(i))
                return b.exponent(i) <=> a.exponent(i);
        return std::strong_ordering::equal;
    case MonomialOrder::invlex:
        for (int i = kMaxVars; i >= 1; --i)
            if (a.exponent(i) != b.exponent(i))
                return a.exponent(i) <=> b.exponent(i);
        return std::strong_ordering::equal;
    }
    return std::strong_ordering::equal;
}

std::string to_string(MonomialOrder order)
{
    switch (order) {
    case MonomialOrder::lex:
        return "lex";
    case MonomialOrder::deglex:
        return "deglex";
    case MonomialOrder::grevlex:
        return "grevlex";
    case MonomialOrder::invlex:
        return "invlex";
    }
    return "?";
}

MonomialOrder parse_monomial_order(std::string_view name)
{
    for (auto o : {MonomialOrder::lex, MonomialOrder::deglex, MonomialOrder::grevlex, MonomialOrder::invlex})
        if (name == to_string(o))
            return o;
    throw RejectedInput("unknown monomial order \"" + std::string(name) + "\"");
}

// Polynomial --------------------------------------------------------------------

Polynomial::Polynomial(int num_vars) : num_vars_(num_vars)
{
    if (num_vars < 0 || num_vars > kMaxVars)
        throw RejectedInput("ambient variable count " + std::to_string(num_vars) + " outside 0.."
                            + std::to_string(kMaxVars));
}

Polynomial Polynomial::constant(int num_vars, const Rational& c)
{
    Polynomial p(num_vars);
    if (c != 0)
        p.terms_.push_back({Monomial{}, c});
    if (!p.terms_.empty())
        p.terms_.back().coeff.canonicalize();
    return p;
}

Polynomial Polynomial::variable(int num_vars, int index)
{
    if (index < 1 || index > num_vars)
        throw RejectedInput("variable x" + std::to_string(index) + " outside a ring with " + std::to_string(num_vars)
                            + " variables");
    return monomial(num_vars, Monomial::variable(index));
}

Polynomial Polynomial::monomial(int num_vars, const Monomial& m, const Rational& c)
{
    Polynomial p(num_vars);
    if (m.last_variable() > num_vars)
        throw RejectedInput("monomial " + m.to_string() + " outside a ring with " + std::to_string(num_vars)
                            + " variables");
    if (c != 0)
        p.terms_.push_back({m, c});
    if (!p.terms_.empty())
        p.terms_.back().coeff.canonicalize();
    return p;
}

Polynomial Polynomial::from_terms(int num_vars, std::vector<Term> terms)
{
    Polynomial p(num_vars);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
    for (auto& t : terms) {
        t.coeff.canonicalize();
        if (t.monomial.last_variable() > num_vars)
            throw RejectedInput("monomial " + t.monomial.to_string() + " outside a ring with "
                                + std::to_string(num_vars) + " variables");
        if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
        if (p.terms_.back().coeff == 0)
            p.terms_.pop_back();
    }
    return p;
}

bool Polynomial::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

int Polynomial::degree() const noexcept
{
    int d = -1;
    for (const auto& t : terms_)
        d = std::max(d, t.monomial.degree());
    return d;
}

Rational Polynomial::coefficient(const Monomial& m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.monomial > key; });
    if (it != terms_.end() && it->monomial == m)
        return it->coeff;
    return 0;
}

const Monomial& Polynomial::leading_monomial() const
{
    if (terms_.empty())
        throw RejectedInput("leading monomial of the zero polynomial");
    return terms_.front().monomial;
}

const Term& Polynomial::leading_term(MonomialOrder order) const
{
    if (terms_.empty())
        throw RejectedInput("leading term of the zero polynomial");
    if (order == MonomialOrder::lex)
        return terms_.front();
    return *std::max_element(terms_.begin(), terms_.end(), [order](const Term& a, const Term& b) {
        return compare(order, a.monomial, b.monomial) < 0;
    });
}

Polynomial Polynomial::homogeneous_component(int d) const
{
    Polynomial p(num_vars_);
    for (const auto& t : terms_)
        if (t.monomial.degree() == d)
            p.terms_.push_back(t);
    return p;
}

std::vector<int> Polynomial::variables() const
{
    std::vector<int> out;
    for (int i = 1; i <= num_vars_; ++i)
        if (std::any_of(terms_.begin(), terms_.end(), [i](const Term& t) { return t.monomial.exponent(i) > 0; }))
            out.push_back(i);
    return out;
}

Polynomial Polynomial::with_num_vars(int num_vars) const
{
    Polynomial p(num_vars);
    for (const auto& t : terms_)
        if (t.monomial.last_variable() > num_vars)
            throw RejectedInput("cannot drop variable x" + std::to_string(t.monomial.last_variable())
                                + " that occurs in the polynomial");
    p.terms_ = terms_;
    return p;
}

void Polynomial::check_same_ring(const Polynomial& other) const
{
    if (num_vars_ != other.num_vars_)
        throw RejectedInput("polynomials live in different rings (" + std::to_string(num_vars_) + " vs "
                            + std::to_string(other.num_vars_) + " variables)");
}

Polynomial Polynomial::operator-() const
{
    Polynomial p = *this;
    for (auto& t : p.terms_)
        t.coeff = -t.coeff;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    check_same_ring(other);
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->monomial > b->monomial)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->monomial > a->monomial) {
            merged.push_back(*b++);
        } else {
            Rational c = a->coeff + b->coeff;
            if (c != 0)
                merged.push_back({a->monomial, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    return *this += -other;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.check_same_ring(b);
    std::vector<Term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_)
            products.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
    return Polynomial::from_terms(a.num_vars_, std::move(products));
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.coeff *= c;
    return *this;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const
{
    Polynomial p(num_vars_);
    if (c == 0)
        return p;
    if (m.last_variable() > num_vars_)
        throw RejectedInput("monomial " + m.to_string() + " outside the ring");
    p.terms_.reserve(terms_.size());
    // multiplication by a monomial preserves lex order
    for (const auto& t : terms_)
        p.terms_.push_back({t.monomial * m, t.coeff * c});
    return p;
}

Polynomial Polynomial::pow(int e) const
{
    if (e < 0)
        throw RejectedInput("negative polynomial power");
    Polynomial result = constant(num_vars_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

Polynomial Polynomial::monic(MonomialOrder order) const
{
    if (is_zero())
        return *this;
    Rational inv = 1 / leading_term(order).coeff;
    return *this * inv;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        const bool negative = sgn(t.coeff) < 0;
        Rational mag = abs(t.coeff);
        if (i == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (t.monomial.is_one()) {
            out += rational_to_string(mag);
        } else {
            if (mag != 1)
                out += rational_to_string(mag) + "*";
            out += t.monomial.to_string();
        }
    }
    return out;
}

Polynomial scale(const Polynomial& p, const Rational& c)
{
    return p * c;
}

Polynomial vandermonde(int num_vars, std::span<const int> indices)
{
    std::set<int> seen;
    for (int i : indices) {
        if (!seen.insert(i).second)
            throw RejectedInput("vandermonde: repeated index " + std::to_string(i));
        if (i < 1 || i > num_vars)
            throw RejectedInput("vandermonde: index " + std::to_string(i) + " outside the ring");
    }
    Polynomial p = Polynomial::constant(num_vars, 1);
    for (std::size_t j = 0; j < indices.size(); ++j)
        for (std::size_t k = j + 1; k < indices.size(); ++k)
            p *= Polynomial::variable(num_vars, indices[j]) - Polynomial::variable(num_vars, indices[k]);
    return p;
}

Polynomial substitute_squares(const Polynomial& p)
{
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Monomial m;
        for (int i = 1; i <= p.num_vars(); ++i)
            if (t.monomial.exponent(i))
                m.set_exponent(i, 2 * t.monomial.exponent(i));
        terms.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(p.num_vars(), std::move(terms));
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point)
{
    if (point.size() != static_cast<std::size_t>(p.num_vars()))
        throw RejectedInput("evaluate: point has dimension " + std::to_string(point.size()) + ", ring has "
                            + std::to_string(p.num_vars()) + " variables");
    Rational total = 0;
    for (const auto& t : p.terms()) {
        Rational value = t.coeff;
        for (int i = 1; i <= p.num_vars() && value != 0; ++i) {
            const int e = t.monomial.exponent(i);
            if (!e)
                continue;
            const Rational& z = point[static_cast<std::size_t>(i - 1)];
            mpz_class num, den;
            mpz_pow_ui(num.get_mpz_t(), z.get_num_mpz_t(), static_cast<unsigned long>(e));
            mpz_pow_ui(den.get_mpz_t(), z.get_den_mpz_t(), static_cast<unsigned long>(e));
            value *= Rational(num, den);
        }
        total += value;
    }
    total.canonicalize();
    return total;
}

std::string rational_to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto valid = [](const std::string& part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+'))
            i = 1;
        if (i == part.size())
            return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                return false;
        return true;
    };
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num, true) || !valid(den, false))
        throw RejectedInput("malformed rational \"" + s + "\"");
    const mpz_class d(den);
    if (d == 0)
        throw RejectedInput("zero denominator in \"" + s + "\"");
    Rational q(mpz_class(num[0] == '+' ? num.substr(1) : num), d);
    q.canonicalize();
    return q;
}

// Parsing -----------------------------------------------------------------------

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, int num_vars) : text_(text), ring_(num_vars == 0 ? kMaxVars : num_vars) {}

    Polynomial parse()
    {
        Polynomial p = expression();
        skip_ws();
        if (pos_ < text_.size())
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

    int max_index() const { return max_index_; }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw RejectedInput("parse error at column " + std::to_string(pos_ + 1) + ": " + what + " in \""
                            + std::string(text_) + "\"");
    }
    mpz_class integer()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail("expected an integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }
    int small_integer(long limit, const char* what)
    {
        const std::size_t start = pos_;
        mpz_class v = integer();
        if (v > limit) {
            pos_ = start;
            fail(std::string(what) + " too large");
        }
        return static_cast<int>(v.get_si());
    }

    Polynomial expression()
    {
        Polynomial p = term();
        for (;;) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                p += term();
            } else if (c == '-') {
                ++pos_;
                p -= term();
            } else {
                return p;
            }
        }
    }

    Polynomial term()
    {
        Polynomial p = unary();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                p *= unary();
            } else if (c == '/') {
                ++pos_;
                const std::size_t at = pos_;
                Polynomial d = unary();
                if (!d.is_constant() || d.is_zero()) {
                    pos_ = at;
                    fail("division only by a nonzero constant");
                }
                p *= Rational(1 / d.terms().front().coeff);
            } else {
                return p;
            }
        }
    }

    Polynomial unary()
    {
        const char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Polynomial power()
    {
        Polynomial base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            return base.pow(small_integer(0xFFFF, "exponent"));
        }
        return base;
    }

    Polynomial primary()
    {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expression();
            if (peek() != ')')
                fail("expected ')'");
            ++pos_;
            return p;
        }
        if (c == 'x') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected a variable index after 'x'");
            const std::size_t at = pos_;
            const int index = small_integer(kMaxVars, "variable index");
            if (index < 1 || index > ring_) {
                pos_ = at;
                fail("variable x" + std::to_string(index) + " outside a ring with " + std::to_string(ring_)
                     + " variables");
            }
            max_index_ = std::max(max_index_, index);
            return Polynomial::variable(ring_, index);
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Polynomial::constant(ring_, Rational(integer()));
        if (c == '\0')
            fail("unexpected end of input");
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    int ring_;
    std::size_t pos_ = 0;
    int max_index_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, int num_vars)
{
    if (num_vars < 0 || num_vars > kMaxVars)
        throw RejectedInput("ambient variable count out of range");
    PolyParser parser(text, num_vars);
    Polynomial p = parser.parse();
    return num_vars == 0 ? p.with_num_vars(parser.max_index()) : p;
}

} // namespace bnspecht
