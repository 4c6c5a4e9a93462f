#include "bnspecht/poset.hpp"

#include "bnspecht/errors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

namespace bnspecht {

namespace {

struct BoxMove {
    Partition lower;
    int from_row; // i: loses a box
    int to_row;   // k: gains a box
};

// Brylawski: p covers q iff p arises from q by moving one box from row k up to row i
// with k = i+1 or q_i = q_k. Enumerated here from the upper side.
std::vector<BoxMove> box_moves_below(const Partition& p)
{
    std::vector<BoxMove> out;
    const int len = p.length();
    for (int i = 1; i <= len; ++i) {
        for (int k = i + 1; k <= len + 1; ++k) {
            std::vector<int> parts(static_cast<std::size_t>(len + 1), 0);
            for (int r = 1; r <= len; ++r)
                parts[static_cast<std::size_t>(r - 1)] = p.row(r);
            parts[static_cast<std::size_t>(i - 1)] -= 1;
            parts[static_cast<std::size_t>(k - 1)] += 1;
            if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
                continue;
            Partition q(std::move(parts));
            if (k == i + 1 || q.row(i) == q.row(k))
                out.push_back({std::move(q), i, k});
        }
    }
    return out;
}

bool all_equal(const Partition& p, int from, int to)
{
    for (int r = from + 1; r <= to; ++r)
        if (p.row(r) != p.row(from))
            return false;
    return true;
}

Partition with_rows_shifted(const Partition& p, int from, int to, int delta, int extra_rows)
{
    std::vector<int> parts(static_cast<std::size_t>(std::max(p.length(), to) + extra_rows), 0);
    for (int r = 1; r <= p.length(); ++r)
        parts[static_cast<std::size_t>(r - 1)] = p.row(r);
    for (int r = from; r <= to; ++r)
        parts[static_cast<std::size_t>(r - 1)] += delta;
    return Partition(std::move(parts));
}

bool is_partition_shape(const Partition& p, int from, int to, int delta)
{
    // Whether shifting rows from..to by delta keeps a non-increasing non-negative sequence.
    const int len = std::max(p.length(), to) + 1;
    int prev = std::numeric_limits<int>::max();
    for (int r = 1; r <= len; ++r) {
        int v = p.row(r) + (r >= from && r <= to ? delta : 0);
        if (v < 0 || v > prev)
            return false;
        prev = v;
    }
    return true;
}

} // namespace

std::vector<Partition> partition_coverings_below(const Partition& p)
{
    std::vector<Partition> out;
    for (auto& move : box_moves_below(p))
        out.push_back(std::move(move.lower));
    std::sort(out.begin(), out.end(), std::greater<>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Covering> classify_coverings_below(const Bipartition& a)
{
    const Partition& lam = a.left;
    const Partition& mu = a.right;
    std::vector<Covering> out;

    // (1) a box moves inside λ from row i to row k; needs i ≥ 2 and μ_{i-1} = … = μ_k.
    for (auto& move : box_moves_below(lam)) {
        const int i = move.from_row, k = move.to_row;
        if (i >= 2 && all_equal(mu, i - 1, k))
            out.push_back({{std::move(move.lower), mu}, 1, i, k});
    }

    // (2) a box moves inside μ from row i to row k; needs λ_i = … = λ_{k+1}.
    for (auto& move : box_moves_below(mu)) {
        const int i = move.from_row, k = move.to_row;
        if (all_equal(lam, i, k + 1))
            out.push_back({{lam, std::move(move.lower)}, 2, i, k});
    }

    // (3) partial column from λ to μ in rows i..k, k maximal with λ_k = λ_i;
    //     needs μ_i = μ_k and μ_{i-1} > μ_i (μ_0 = ∞).
    for (int i = 1; i <= lam.length(); ++i) {
        int k = i;
        while (lam.row(k + 1) == lam.row(i))
            ++k;
        if (mu.row(i) != mu.row(k))
            continue;
        if (i > 1 && mu.row(i - 1) <= mu.row(i))
            continue;
        if (!is_partition_shape(lam, i, k, -1) || !is_partition_shape(mu, i, k, +1))
            continue;
        out.push_back({{with_rows_shifted(lam, i, k, -1, 0), with_rows_shifted(mu, i, k, +1, 0)}, 3, i, k});
    }

    // (4) partial column from μ rows i..k to λ rows i+1..k+1, k maximal with μ_k = μ_i;
    //     needs λ_{i+1} = λ_{k+1} (and λ_i > λ_{i+1} so λ' stays a partition).
    for (int i = 1; i <= mu.length(); ++i) {
        int k = i;
        while (mu.row(k + 1) == mu.row(i))
            ++k;
        if (lam.row(i + 1) != lam.row(k + 1))
            continue;
        if (!is_partition_shape(mu, i, k, -1) || !is_partition_shape(lam, i + 1, k + 1, +1))
            continue;
        out.push_back(
            {{with_rows_shifted(lam, i + 1, k + 1, +1, 0), with_rows_shifted(mu, i, k, -1, 0)}, 4, i, k});
    }

    std::sort(out.begin(), out.end(),
              [](const Covering& x, const Covering& y) { return canonical_before(x.lower, y.lower); });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Covering& x, const Covering& y) { return x.lower == y.lower; }),
              out.end());
    return out;
}

std::vector<Bipartition> bipartition_coverings_below(const Bipartition& a)
{
    std::vector<Bipartition> out;
    for (auto& c : classify_coverings_below(a))
        out.push_back(std::move(c.lower));
    return out;
}

std::optional<std::size_t> HasseDiagram::index_of(const Bipartition& b) const
{
    auto it = std::lower_bound(vertices.begin(), vertices.end(), b, canonical_before);
    if (it == vertices.end() || *it != b)
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

HasseDiagram hasse_diagram(int n)
{
    HasseDiagram d;
    d.n = n;
    d.vertices = enumerate_bipartitions(n);
    for (std::size_t u = 0; u < d.vertices.size(); ++u) {
        for (const auto& lower : bipartition_coverings_below(d.vertices[u])) {
            auto v = d.index_of(lower);
            if (!v)
                throw std::logic_error("covering produced a bipartition outside BP_n: " + lower.to_string());
            d.edges.emplace_back(u, *v);
        }
    }
    return d;
}

std::string to_dot(const HasseDiagram& diagram)
{
    std::string out = "digraph BP" + std::to_string(diagram.n) + " {\n  rankdir=TB;\n";
    for (std::size_t v = 0; v < diagram.vertices.size(); ++v)
        out += "  v" + std::to_string(v) + " [label=\"" + diagram.vertices[v].to_string() + "\"];\n";
    for (const auto& [u, v] : diagram.edges)
        out += "  v" + std::to_string(u) + " -> v" + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

std::set<int> maximal_chain_lengths(const HasseDiagram& diagram)
{
    const std::size_t count = diagram.vertices.size();
    std::vector<std::vector<std::size_t>> below(count);
    for (const auto& [u, v] : diagram.edges)
        below[u].push_back(v);
    // Every maximal chain runs from the unique maximum to the unique minimum.
    std::vector<std::optional<std::set<int>>> memo(count);
    std::function<const std::set<int>&(std::size_t)> lengths = [&](std::size_t v) -> const std::set<int>& {
        if (memo[v])
            return *memo[v];
        std::set<int> result;
        if (below[v].empty())
            result.insert(1);
        for (std::size_t w : below[v])
            for (int len : lengths(w))
                result.insert(len + 1);
        memo[v] = std::move(result);
        return *memo[v];
    };
    if (count == 0)
        return {};
    return lengths(0);
}

std::vector<Covering> covering_chain(const Bipartition& upper, const Bipartition& lower)
{
    if (!bidominates(upper, lower))
        throw RejectedInput("covering_chain: " + upper.to_string() + " does not bidominate " + lower.to_string());
    std::vector<Covering> chain;
    Bipartition current = upper;
    while (current != lower) {
        bool advanced = false;
        for (auto& c : classify_coverings_below(current)) {
            if (bidominates(c.lower, lower)) {
                current = c.lower;
                chain.push_back(std::move(c));
                advanced = true;
                break;
            }
        }
        if (!advanced)
            throw std::logic_error("no covering step from " + current.to_string() + " towards " + lower.to_string());
    }
    return chain;
}

} // namespace bnspecht
