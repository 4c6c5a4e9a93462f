#include "bnspecht/tableau.hpp"

#include "bnspecht/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bnspecht {

namespace {

// Column lengths of a shape, i.e. its conjugate as a plain vector.
std::vector<int> column_lengths(const Partition& p)
{
    return conjugate(p).parts();
}

std::vector<std::vector<int>> rows_from_columns(const std::vector<std::vector<int>>& columns)
{
    std::vector<std::vector<int>> rows;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (j > 0 && columns[j].size() > columns[j - 1].size())
            throw RejectedInput("column lengths must be non-increasing");
        for (std::size_t r = 0; r < columns[j].size(); ++r) {
            if (rows.size() <= r)
                rows.emplace_back();
            rows[r].push_back(columns[j][r]);
        }
    }
    return rows;
}

// Shape (λ⊎μ)'s columns in glue order: (component, column index) pairs, longest first,
// ties broken by occurrence in (T, S).
std::vector<std::pair<int, int>> glue_column_order(const Bipartition& shape)
{
    const auto t_cols = column_lengths(shape.left);
    const auto s_cols = column_lengths(shape.right);
    std::vector<std::pair<int, int>> order;
    for (std::size_t j = 0; j < t_cols.size(); ++j)
        order.emplace_back(0, static_cast<int>(j));
    for (std::size_t j = 0; j < s_cols.size(); ++j)
        order.emplace_back(1, static_cast<int>(j));
    auto len = [&](const std::pair<int, int>& c) {
        return c.first == 0 ? t_cols[static_cast<std::size_t>(c.second)] : s_cols[static_cast<std::size_t>(c.second)];
    };
    std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) { return len(a) > len(b); });
    return order;
}

} // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows))
{
    while (!rows_.empty() && rows_.back().empty())
        rows_.pop_back();
    std::vector<int> lengths;
    std::set<int> seen;
    for (const auto& row : rows_) {
        lengths.push_back(static_cast<int>(row.size()));
        for (int v : row) {
            if (v <= 0)
                throw RejectedInput("tableau entries must be positive");
            if (!seen.insert(v).second)
                throw RejectedInput("tableau entry " + std::to_string(v) + " repeated");
        }
    }
    shape_ = Partition(std::move(lengths));
}

Tableau Tableau::from_columns(const std::vector<std::vector<int>>& columns)
{
    return Tableau(rows_from_columns(columns));
}

std::vector<int> Tableau::column(int j) const
{
    std::vector<int> col;
    for (const auto& row : rows_)
        if (static_cast<int>(row.size()) > j)
            col.push_back(row[static_cast<std::size_t>(j)]);
    return col;
}

std::vector<std::vector<int>> Tableau::columns() const
{
    std::vector<std::vector<int>> cols;
    for (int j = 0; j < shape_.row(1); ++j)
        cols.push_back(column(j));
    return cols;
}

std::vector<int> Tableau::entries() const
{
    std::vector<int> out;
    for (const auto& row : rows_)
        out.insert(out.end(), row.begin(), row.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::string Tableau::to_string() const
{
    std::string out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r)
            out += '/';
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c)
                out += ' ';
            out += std::to_string(rows_[r][c]);
        }
    }
    return out;
}

Bitableau::Bitableau(Tableau first, Tableau second) : first_(std::move(first)), second_(std::move(second))
{
    auto all = first_.entries();
    auto more = second_.entries();
    all.insert(all.end(), more.begin(), more.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] != static_cast<int>(i + 1))
            throw RejectedInput("bitableau entries must be exactly 1.." + std::to_string(all.size()));
}

std::string Bitableau::to_string() const
{
    return "(" + first_.to_string() + " | " + second_.to_string() + ")";
}

Tableau glue_bitableau(const Bitableau& bt)
{
    const auto t_cols = bt.first().columns();
    const auto s_cols = bt.second().columns();
    std::vector<std::vector<int>> glued;
    for (const auto& [component, j] : glue_column_order(bt.shape()))
        glued.push_back(component == 0 ? t_cols[static_cast<std::size_t>(j)] : s_cols[static_cast<std::size_t>(j)]);
    return Tableau::from_columns(glued);
}

Bitableau split_tableau(const Tableau& t, const Bipartition& shape)
{
    if (t.shape() != glue(shape.left, shape.right))
        throw RejectedInput("split_tableau: tableau shape " + t.shape().to_string() + " is not the glueing of "
                            + shape.to_string());
    const auto order = glue_column_order(shape);
    const auto cols = t.columns();
    std::vector<std::vector<int>> t_cols(column_lengths(shape.left).size());
    std::vector<std::vector<int>> s_cols(column_lengths(shape.right).size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        auto& slot = order[k].first == 0 ? t_cols : s_cols;
        slot[static_cast<std::size_t>(order[k].second)] = cols[k];
    }
    return {Tableau::from_columns(t_cols), Tableau::from_columns(s_cols)};
}

Bitableau reference_bitableau(const Bipartition& shape)
{
    int next = 1;
    auto fill = [&next](const Partition& p) {
        std::vector<std::vector<int>> cols;
        for (int len : column_lengths(p)) {
            std::vector<int> col(static_cast<std::size_t>(len));
            for (auto& v : col)
                v = next++;
            cols.push_back(std::move(col));
        }
        return Tableau::from_columns(cols);
    };
    Tableau t = fill(shape.left);
    Tableau s = fill(shape.right);
    return {std::move(t), std::move(s)};
}

std::vector<Bitableau> all_bitableaux(const Bipartition& shape)
{
    const int n = shape.size();
    const auto t_lens = column_lengths(shape.left);
    const auto s_lens = column_lengths(shape.right);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Bitableau> out;
    do {
        std::size_t pos = 0;
        auto take = [&](const std::vector<int>& lens) {
            std::vector<std::vector<int>> cols;
            for (int len : lens) {
                cols.emplace_back(perm.begin() + static_cast<std::ptrdiff_t>(pos),
                                  perm.begin() + static_cast<std::ptrdiff_t>(pos + static_cast<std::size_t>(len)));
                pos += static_cast<std::size_t>(len);
            }
            return Tableau::from_columns(cols);
        };
        Tableau t = take(t_lens);
        Tableau s = take(s_lens);
        out.emplace_back(std::move(t), std::move(s));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace bnspecht
