#pragma once

#include "bnspecht/polynomial.hpp"
#include "bnspecht/tableau.hpp"

#include <gmpxx.h>

#include <vector>

namespace bnspecht {

/// Π_j Δ_{T_j}(x) over the columns of T, each read top to bottom.
Polynomial specht_polynomial_sn(const Tableau& t, int num_vars);

/// spe_T(x²)·spe_S(x²)·Π_{k∈S} x_k in Q[x_1 … x_n], n = bt.n().
Polynomial specht_polynomial_bn(const Bitableau& bt);

/// 2·[Σ_j C(λ^⊥_j, 2) + Σ_j C(μ^⊥_j, 2)] + |μ|.
int specht_degree(const Bipartition& shape);

/// One representative per ± class of the S_n-orbit of the reference Specht polynomial,
/// each with positive lex-leading coefficient. A class is fixed by which entry sets sit
/// in which columns, so the enumeration runs over column set-fillings with equally long
/// columns of one component ordered by their minimal entry.
std::vector<Polynomial> specht_generators(const Bipartition& shape, int n);

/// Same count as specht_generators(shape, n).size(), without building polynomials.
mpz_class specht_generator_count(const Bipartition& shape);

/// f^λ by the hook-length formula.
mpz_class num_standard_tableaux(const Partition& shape);
/// s_{λ,μ} = C(n, |λ|)·f^λ·f^μ.
mpz_class num_standard_bitableaux(const Bipartition& shape);

} // namespace bnspecht
