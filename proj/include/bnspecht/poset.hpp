#pragma once

#include "bnspecht/partition.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace bnspecht {

/// Partitions covered by p in the dominance order (Brylawski's single-box moves),
/// deduplicated, in descending lexicographic order.
std::vector<Partition> partition_coverings_below(const Partition& p);

/// One covering move (λ,μ) ⋗ (λ',μ'), tagged with which of the four move types produced it.
///
///  1: a box moves down inside λ;  2: a box moves down inside μ;
///  3: the last boxes of rows first_row..last_row of λ move to the same rows of μ;
///  4: the last boxes of rows first_row..last_row of μ move one row down into λ.
/// For types 1 and 2, last_row is the row that receives the box.
struct Covering {
    Bipartition lower;
    int type = 0;
    int first_row = 0;
    int last_row = 0;
};

/// Every bipartition covered by a, generated from the four move types, in canonical order.
std::vector<Covering> classify_coverings_below(const Bipartition& a);
std::vector<Bipartition> bipartition_coverings_below(const Bipartition& a);

/// Hasse diagram of (BP_n, ⊴). Practical for n ≤ 8.
struct HasseDiagram {
    int n = 0;
    std::vector<Bipartition> vertices;
    /// (upper, lower) vertex indices, upper covers lower.
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::optional<std::size_t> index_of(const Bipartition& b) const;
};

HasseDiagram hasse_diagram(int n);

/// DOT digraph, one node per vertex labelled with its bipartition text, edges from coverer to covered.
std::string to_dot(const HasseDiagram& diagram);

/// Sizes (element counts) of all maximal chains from ((n),∅) down to (∅,(1^n)).
std::set<int> maximal_chain_lengths(const HasseDiagram& diagram);

/// A saturated chain upper = c_0 ⋗ c_1 ⋗ … ⋗ c_r = lower; requires upper ⊵ lower.
std::vector<Covering> covering_chain(const Bipartition& upper, const Bipartition& lower);

} // namespace bnspecht
