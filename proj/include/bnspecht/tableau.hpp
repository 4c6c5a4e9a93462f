#pragma once

#include "bnspecht/partition.hpp"

#include <string>
#include <vector>

namespace bnspecht {

/// A filling of a Young diagram by distinct positive integers, stored row by row.
class Tableau {
public:
    Tableau() = default;
    /// Row lengths must form a partition; entries must be positive and distinct.
    explicit Tableau(std::vector<std::vector<int>> rows);
    /// Columns listed left to right, each top to bottom; lengths must be non-increasing.
    static Tableau from_columns(const std::vector<std::vector<int>>& columns);

    const Partition& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    /// Column j (0-based), read top to bottom.
    std::vector<int> column(int j) const;
    std::vector<std::vector<int>> columns() const;
    /// All entries, ascending.
    std::vector<int> entries() const;
    int size() const noexcept { return shape_.size(); }

    bool operator==(const Tableau& other) const { return rows_ == other.rows_; }

    /// Rows separated by '/', entries by spaces: "1 2 10 9/4 8 7/6".
    std::string to_string() const;

private:
    std::vector<std::vector<int>> rows_;
    Partition shape_;
};

/// Pair (T, S) whose entries together are exactly {1, …, n}.
class Bitableau {
public:
    Bitableau() = default;
    Bitableau(Tableau first, Tableau second);

    const Tableau& first() const noexcept { return first_; }
    const Tableau& second() const noexcept { return second_; }
    int n() const noexcept { return first_.size() + second_.size(); }
    Bipartition shape() const { return {first_.shape(), second_.shape()}; }

    bool operator==(const Bitableau& other) const = default;

    std::string to_string() const;

private:
    Tableau first_;
    Tableau second_;
};

/// T ⊎ S: the columns of T and S, longest first; equal lengths keep their left-to-right
/// order in (T, S), so every column of T precedes an equally long column of S.
Tableau glue_bitableau(const Bitableau& bt);

/// Inverse of glue_bitableau for a prescribed bipartition; requires shape(t) = λ ⊎ μ.
Bitableau split_tableau(const Tableau& t, const Bipartition& shape);

/// Columns of T filled top to bottom, left to right with 1, 2, …, then the columns of S.
Bitableau reference_bitableau(const Bipartition& shape);

/// Every bitableau of the given shape (n! of them), in lexicographic order of the
/// column-major entry sequence.
std::vector<Bitableau> all_bitableaux(const Bipartition& shape);

} // namespace bnspecht
