#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bnspecht {

/// Integer partition in canonical form: non-increasing positive parts, no trailing zeros.
///
/// Rows are addressed 1-based through row(); any row past the length reads as 0.
class Partition {
public:
    Partition() = default;
    /// Trailing zeros are stripped; anything else that is not non-increasing and
    /// non-negative is rejected.
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /// Sorts the values non-increasingly and drops zeros. Negative values are rejected.
    static Partition from_unsorted(std::vector<int> values);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// 1-based row length, 0 for k > length() and for k == 0 callers must not ask.
    int row(int k) const noexcept
    {
        return k >= 1 && k <= length() ? parts_[static_cast<std::size_t>(k - 1)] : 0;
    }

    /// Σ_{j ≤ k} row(j).
    int prefix_sum(int k) const noexcept;

    bool operator==(const Partition&) const = default;
    std::strong_ordering operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Pair (λ, μ) of partitions; an element of BP_n for n = |λ| + |μ|.
struct Bipartition {
    Partition left;
    Partition right;

    int size() const noexcept { return left.size() + right.size(); }

    bool operator==(const Bipartition&) const = default;
    auto operator<=>(const Bipartition&) const = default;

    /// "((3,2),(2,1))", with "()" for an empty component.
    std::string to_string() const;
};

/// Deterministic vertex order: |left| descending, then left and right each in
/// descending lexicographic order. Returns true if a comes strictly before b.
bool canonical_before(const Bipartition& a, const Bipartition& b);

// Orders ----------------------------------------------------------------------

/// λ ⊵ μ in the dominance order. Sizes must agree.
bool dominates(const Partition& p, const Partition& q);

/// a ⊵ b in the bidominance order. Sizes must agree.
bool bidominates(const Bipartition& a, const Bipartition& b);

/// a ⪯ b in the order of Dipper–James–Murphy used for Hecke algebras of type B.
bool hecke_leq(const Bipartition& a, const Bipartition& b);

/// a ⪯ b in the order coming from induced representations.
bool induced_leq(const Bipartition& a, const Bipartition& b);

// Shape operations -------------------------------------------------------------

Partition conjugate(const Partition& p);
/// Componentwise sum λ ⊎ μ.
Partition glue(const Partition& lambda, const Partition& mu);
/// Sorted multiset union λ ∨ μ.
Partition concatenate(const Partition& lambda, const Partition& mu);
/// The t-cut of λ: ρ = (t,…,t, λ_j, …), σ = (λ_1 − t, …, λ_{j−1} − t) with j the first row shorter than t.
Bipartition cut(const Partition& lambda, int t);

/// True iff λ is a hook (n−d,1^d), a two-row shape (n−d,d), or (a,a,1).
bool is_cm_shape(const Partition& lambda);

// Enumeration -------------------------------------------------------------------

/// Partitions of n in descending lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

/// All of BP_n in canonical order (see canonical_before).
std::vector<Bipartition> enumerate_bipartitions(int n);

// Text --------------------------------------------------------------------------

/// Parses "(a,b,...)" or "()"; whitespace-insensitive.
Partition parse_partition(std::string_view text);
/// Parses "((a,b,...),(c,...))"; whitespace-insensitive. Errors carry the column.
Bipartition parse_bipartition(std::string_view text);

} // namespace bnspecht
