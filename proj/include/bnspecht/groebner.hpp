#pragma once

#include "bnspecht/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace bnspecht {

/// Caps that turn a runaway computation into ResourceExceeded.
struct GroebnerLimits {
    std::size_t max_basis = 5'000;  // polynomials in the intermediate basis
    std::size_t max_terms = 200'000; // terms in any polynomial under reduction
    std::size_t max_pairs = 2'000'000; // S-pairs processed
};

/// Reduced Gröbner basis: monic, no leading monomial divides another, sorted by
/// descending leading monomial under `order`. The zero ideal has no generators.
struct GroebnerBasis {
    int num_vars = 0;
    MonomialOrder order = MonomialOrder::grevlex;
    std::vector<Polynomial> generators;

    bool is_unit_ideal() const;
    bool is_zero_ideal() const { return generators.empty(); }
    bool operator==(const GroebnerBasis&) const = default;
};

/// Buchberger with the Gebauer–Möller pair update, normal selection strategy and
/// sugar tie-break. Zero generators are ignored.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder order, const GroebnerLimits& limits = {});

/// Normal form of p modulo the basis (full reduction, every term irreducible).
Polynomial reduce(const Polynomial& p, const GroebnerBasis& gb, const GroebnerLimits& limits = {});

/// Remainder of multivariate division of p by an arbitrary list (full reduction).
Polynomial reduce_by(const Polynomial& p, const std::vector<Polynomial>& divisors, MonomialOrder order,
                     const GroebnerLimits& limits = {});

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb, const GroebnerLimits& limits = {});

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order);

/// Outcome of testing whether a fixed generating set already satisfies Buchberger's criterion.
struct CriterionResult {
    bool passed = true;
    std::size_t pairs_checked = 0;
    std::size_t pairs_skipped_coprime = 0;
    /// Indices into the input list of a pair whose S-polynomial has nonzero remainder.
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
    Polynomial failing_remainder;
};

/// Checks every S-polynomial of the given set against the set itself; pairs with coprime
/// leading monomials are skipped (they always reduce to zero).
CriterionResult buchberger_criterion(const std::vector<Polynomial>& gens, MonomialOrder order,
                                     const GroebnerLimits& limits = {});

} // namespace bnspecht
