#include "bnspecht/groebner.hpp"

#include "bnspecht/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bnspecht {

namespace {

struct Descending {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(order, a, b) > 0; }
};

// A divisor with its leading data under the working order.
struct Divisor {
    const Polynomial* poly;
    Monomial lm;
    Rational lc;
};

Divisor make_divisor(const Polynomial& p, MonomialOrder order)
{
    const Term& lt = p.leading_term(order);
    return {&p, lt.monomial, lt.coeff};
}

void check_ring(int expected, const Polynomial& p, const char* what)
{
    if (p.num_vars() != expected)
        throw RejectedInput(std::string(what) + ": polynomials live in rings of different dimension");
}

// Full reduction: every term of the result is irreducible by every divisor.
Polynomial full_reduce(const Polynomial& p, const std::vector<Divisor>& divisors, MonomialOrder order,
                       const GroebnerLimits& limits)
{
    std::map<Monomial, Rational, Descending> work(Descending{order});
    for (const auto& t : p.terms())
        work.emplace(t.monomial, t.coeff);
    std::vector<Term> remainder;
    while (!work.empty()) {
        auto top = work.begin();
        const Divisor* hit = nullptr;
        for (const auto& d : divisors)
            if (d.lm.divides(top->first)) {
                hit = &d;
                break;
            }
        if (!hit) {
            remainder.push_back({top->first, top->second});
            work.erase(top);
            continue;
        }
        const Monomial q = hit->lm.quotient_of(top->first);
        const Rational c = top->second / hit->lc;
        for (const auto& t : hit->poly->terms()) {
            const Monomial m = t.monomial * q;
            auto [it, inserted] = work.try_emplace(m, 0);
            it->second -= c * t.coeff;
            if (sgn(it->second) == 0)
                work.erase(it);
        }
        if (work.size() > limits.max_terms)
            throw ResourceExceeded("reduction exceeded " + std::to_string(limits.max_terms) + " terms");
    }
    if (remainder.size() > limits.max_terms)
        throw ResourceExceeded("remainder exceeded " + std::to_string(limits.max_terms) + " terms");
    return Polynomial::from_terms(p.num_vars(), std::move(remainder));
}

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    int sugar;
};

struct Entry {
    Polynomial poly;
    Monomial lm;
    int sugar;
    bool active;
};

// Normal selection: smallest lcm first, then smallest sugar, then age.
struct PairLess {
    MonomialOrder order;
    bool operator()(const Pair& a, const Pair& b) const
    {
        if (auto c = compare(order, a.lcm, b.lcm); c != 0)
            return c < 0;
        if (a.sugar != b.sugar)
            return a.sugar < b.sugar;
        if (a.j != b.j)
            return a.j < b.j;
        return a.i < b.i;
    }
};

class Builder {
public:
    Builder(int num_vars, MonomialOrder order, const GroebnerLimits& limits)
        : num_vars_(num_vars), order_(order), limits_(limits), pairs_(PairLess{order})
    {
    }

    void add(const Polynomial& f, int sugar)
    {
        Polynomial h = full_reduce(f, active_divisors(), order_, limits_);
        if (!h.is_zero())
            update(h.monic(order_), std::max(sugar, h.degree()));
    }

    void run()
    {
        std::size_t processed = 0;
        while (!pairs_.empty()) {
            if (++processed > limits_.max_pairs)
                throw ResourceExceeded("Buchberger exceeded " + std::to_string(limits_.max_pairs) + " S-pairs");
            const Pair pr = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            const Polynomial s = s_polynomial(entries_[pr.i].poly, entries_[pr.j].poly, order_);
            Polynomial h = full_reduce(s, active_divisors(), order_, limits_);
            if (!h.is_zero())
                update(h.monic(order_), pr.sugar);
        }
    }

    GroebnerBasis finish() const
    {
        std::vector<Polynomial> minimal;
        for (const auto& e : entries_)
            if (e.active)
                minimal.push_back(e.poly);
        GroebnerBasis gb{num_vars_, order_, {}};
        for (std::size_t k = 0; k < minimal.size(); ++k) {
            std::vector<Divisor> others;
            for (std::size_t l = 0; l < minimal.size(); ++l)
                if (l != k)
                    others.push_back(make_divisor(minimal[l], order_));
            // the leading term survives, the tail becomes irreducible
            const Term& lt = minimal[k].leading_term(order_);
            Polynomial tail = minimal[k] - Polynomial::monomial(num_vars_, lt.monomial, lt.coeff);
            Polynomial reduced = full_reduce(tail, others, order_, limits_)
                                 + Polynomial::monomial(num_vars_, lt.monomial, lt.coeff);
            gb.generators.push_back(reduced.monic(order_));
        }
        std::sort(gb.generators.begin(), gb.generators.end(), [this](const Polynomial& a, const Polynomial& b) {
            return compare(order_, a.leading_term(order_).monomial, b.leading_term(order_).monomial) > 0;
        });
        return gb;
    }

private:
    std::vector<Divisor> active_divisors() const
    {
        std::vector<Divisor> out;
        for (const auto& e : entries_)
            if (e.active)
                out.push_back({&e.poly, e.lm, 1});
        return out;
    }

    int pair_sugar(std::size_t i, std::size_t j, const Monomial& lcm) const
    {
        const auto& a = entries_[i];
        const auto& b = entries_[j];
        return std::max(a.sugar + lcm.degree() - a.lm.degree(), b.sugar + lcm.degree() - b.lm.degree());
    }

    // Gebauer–Möller installation of a new basis element h (monic, reduced by the active set).
    void update(Polynomial h, int sugar)
    {
        if (entries_.size() >= limits_.max_basis)
            throw ResourceExceeded("Gröbner basis exceeded " + std::to_string(limits_.max_basis) + " elements");
        const Monomial lm_h = h.leading_term(order_).monomial;
        const std::size_t hi = entries_.size();
        entries_.push_back({std::move(h), lm_h, sugar, true});

        std::vector<std::size_t> candidates;
        for (std::size_t g = 0; g < hi; ++g)
            if (entries_[g].active)
                candidates.push_back(g);

        auto lcm_with = [&](std::size_t g) { return lm_h.lcm(entries_[g].lm); };
        auto coprime = [&](std::size_t g) { return lm_h.coprime(entries_[g].lm); };

        // drop (h,g1) when another new pair has an lcm properly dividing it
        std::vector<std::size_t> kept;
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            const std::size_t g1 = candidates[a];
            const Monomial l1 = lcm_with(g1);
            bool keep = coprime(g1);
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < candidates.size() && keep; ++b)
                    if (lcm_with(candidates[b]).divides(l1))
                        keep = false;
                for (std::size_t g2 : kept)
                    if (keep && lcm_with(g2).divides(l1))
                        keep = false;
            }
            if (keep)
                kept.push_back(g1);
        }

        // old pairs whose lcm is strictly divisible through h
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            if (lm_h.divides(it->lcm) && lcm_with(it->i) != it->lcm && lcm_with(it->j) != it->lcm)
                it = pairs_.erase(it);
            else
                ++it;
        }

        for (std::size_t g : kept) {
            if (coprime(g))
                continue;
            const Monomial l = lcm_with(g);
            pairs_.insert({g, hi, l, pair_sugar(g, hi, l)});
        }

        for (std::size_t g = 0; g < hi; ++g)
            if (entries_[g].active && lm_h.divides(entries_[g].lm))
                entries_[g].active = false;
    }

    int num_vars_;
    MonomialOrder order_;
    GroebnerLimits limits_;
    std::vector<Entry> entries_;
    std::set<Pair, PairLess> pairs_;
};

} // namespace

bool GroebnerBasis::is_unit_ideal() const
{
    return generators.size() == 1 && generators.front().is_constant();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order)
{
    check_ring(f.num_vars(), g, "s_polynomial");
    const Term& lf = f.leading_term(order);
    const Term& lg = g.leading_term(order);
    const Monomial l = lf.monomial.lcm(lg.monomial);
    return f.times_term(lf.monomial.quotient_of(l), 1 / lf.coeff)
           - g.times_term(lg.monomial.quotient_of(l), 1 / lg.coeff);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder order, const GroebnerLimits& limits)
{
    const int n = gens.empty() ? 0 : gens.front().num_vars();
    for (const auto& g : gens)
        check_ring(n, g, "buchberger");
    // low degree first keeps early reductions cheap
    std::vector<const Polynomial*> sorted;
    for (const auto& g : gens)
        if (!g.is_zero())
            sorted.push_back(&g);
    std::stable_sort(sorted.begin(), sorted.end(), [order](const Polynomial* a, const Polynomial* b) {
        return compare(order, a->leading_term(order).monomial, b->leading_term(order).monomial) < 0;
    });
    Builder builder(n, order, limits);
    for (const Polynomial* g : sorted)
        builder.add(*g, g->degree());
    builder.run();
    return builder.finish();
}

Polynomial reduce(const Polynomial& p, const GroebnerBasis& gb, const GroebnerLimits& limits)
{
    if (!gb.generators.empty())
        check_ring(gb.num_vars, p, "reduce");
    std::vector<Divisor> divisors;
    for (const auto& g : gb.generators)
        divisors.push_back(make_divisor(g, gb.order));
    return full_reduce(p, divisors, gb.order, limits);
}

Polynomial reduce_by(const Polynomial& p, const std::vector<Polynomial>& divisors, MonomialOrder order,
                     const GroebnerLimits& limits)
{
    std::vector<Divisor> ds;
    for (const auto& d : divisors) {
        check_ring(p.num_vars(), d, "reduce_by");
        if (!d.is_zero())
            ds.push_back(make_divisor(d, order));
    }
    return full_reduce(p, ds, order, limits);
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb, const GroebnerLimits& limits)
{
    return reduce(p, gb, limits).is_zero();
}

CriterionResult buchberger_criterion(const std::vector<Polynomial>& gens, MonomialOrder order,
                                     const GroebnerLimits& limits)
{
    CriterionResult result;
    std::vector<std::size_t> nonzero;
    for (std::size_t k = 0; k < gens.size(); ++k)
        if (!gens[k].is_zero())
            nonzero.push_back(k);
    std::vector<Divisor> ds;
    for (std::size_t k : nonzero)
        ds.push_back(make_divisor(gens[k], order));
    for (std::size_t a = 0; a < nonzero.size(); ++a)
        for (std::size_t b = a + 1; b < nonzero.size(); ++b) {
            if (ds[a].lm.coprime(ds[b].lm)) {
                ++result.pairs_skipped_coprime;
                continue;
            }
            if (++result.pairs_checked > limits.max_pairs)
                throw ResourceExceeded("criterion check exceeded " + std::to_string(limits.max_pairs) + " S-pairs");
            Polynomial r = full_reduce(s_polynomial(gens[nonzero[a]], gens[nonzero[b]], order), ds, order, limits);
            if (!r.is_zero()) {
                result.passed = false;
                result.failing_pair = std::pair{nonzero[a], nonzero[b]};
                result.failing_remainder = std::move(r);
                return result;
            }
        }
    return result;
}

} // namespace bnspecht
