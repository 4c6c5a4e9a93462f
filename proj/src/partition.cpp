#include "bnspecht/partition.hpp"

#include "bnspecht/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace bnspecht {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw RejectedInput("partition parts must be positive: " + to_string());
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw RejectedInput("partition parts must be non-increasing: " + to_string());
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> values)
{
    if (std::any_of(values.begin(), values.end(), [](int v) { return v < 0; }))
        throw RejectedInput("partition parts must be non-negative");
    std::sort(values.begin(), values.end(), std::greater<>());
    return Partition(std::move(values));
}

int Partition::prefix_sum(int k) const noexcept
{
    int total = 0;
    for (int j = 1; j <= std::min(k, length()); ++j)
        total += parts_[static_cast<std::size_t>(j - 1)];
    return total;
}

std::string Partition::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::string Bipartition::to_string() const
{
    return "(" + left.to_string() + "," + right.to_string() + ")";
}

bool canonical_before(const Bipartition& a, const Bipartition& b)
{
    if (a.left.size() != b.left.size())
        return a.left.size() > b.left.size();
    if (a.left != b.left)
        return a.left > b.left;
    return a.right > b.right;
}

namespace {

void require_same_size(int a, int b, const char* what)
{
    if (a != b)
        throw RejectedInput(std::string(what) + ": size mismatch (" + std::to_string(a) + " vs "
                            + std::to_string(b) + ")");
}

} // namespace

bool dominates(const Partition& p, const Partition& q)
{
    require_same_size(p.size(), q.size(), "dominates");
    const int rows = std::max(p.length(), q.length());
    int sp = 0, sq = 0;
    for (int k = 1; k <= rows; ++k) {
        sp += p.row(k);
        sq += q.row(k);
        if (sq > sp)
            return false;
    }
    return true;
}

bool bidominates(const Bipartition& a, const Bipartition& b)
{
    require_same_size(a.size(), b.size(), "bidominates");
    const int rows = std::max({a.left.length(), a.right.length(), b.left.length(), b.right.length()}) + 1;
    int sa = 0, sb = 0; // Σ_{j<k} (λ_j + μ_j)
    for (int k = 1; k <= rows; ++k) {
        if (sb + b.left.row(k) > sa + a.left.row(k))
            return false;
        sa += a.left.row(k) + a.right.row(k);
        sb += b.left.row(k) + b.right.row(k);
        if (sb > sa)
            return false;
    }
    return true;
}

bool hecke_leq(const Bipartition& a, const Bipartition& b)
{
    require_same_size(a.size(), b.size(), "hecke_leq");
    const int rows = std::max({a.left.length(), a.right.length(), b.left.length(), b.right.length()});
    for (int k = 1; k <= rows; ++k) {
        if (a.left.prefix_sum(k) > b.left.prefix_sum(k))
            return false;
        if (a.left.size() + a.right.prefix_sum(k) > b.left.size() + b.right.prefix_sum(k))
            return false;
    }
    return true;
}

bool induced_leq(const Bipartition& a, const Bipartition& b)
{
    require_same_size(a.size(), b.size(), "induced_leq");
    if (a.left.size() != b.left.size())
        return a.left.size() < b.left.size();
    return dominates(b.left, a.left) && dominates(b.right, a.right);
}

Partition conjugate(const Partition& p)
{
    std::vector<int> cols(p.empty() ? 0 : static_cast<std::size_t>(p.row(1)), 0);
    for (int part : p.parts())
        for (int c = 0; c < part; ++c)
            ++cols[static_cast<std::size_t>(c)];
    return Partition(std::move(cols));
}

Partition glue(const Partition& lambda, const Partition& mu)
{
    const int rows = std::max(lambda.length(), mu.length());
    std::vector<int> parts(static_cast<std::size_t>(rows));
    for (int k = 1; k <= rows; ++k)
        parts[static_cast<std::size_t>(k - 1)] = lambda.row(k) + mu.row(k);
    return Partition(std::move(parts));
}

Partition concatenate(const Partition& lambda, const Partition& mu)
{
    std::vector<int> parts = lambda.parts();
    parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
    return Partition::from_unsorted(std::move(parts));
}

Bipartition cut(const Partition& lambda, int t)
{
    if (t < 0)
        throw RejectedInput("cut: threshold must be non-negative");
    const int m = lambda.length();
    int j = m + 1;
    if (t > 0) {
        for (int i = 1; i <= m; ++i) {
            if (lambda.row(i) < t) {
                j = i;
                break;
            }
        }
    }
    std::vector<int> rho(static_cast<std::size_t>(j - 1), t);
    std::vector<int> sigma;
    for (int i = 1; i < j; ++i)
        sigma.push_back(lambda.row(i) - t);
    for (int i = j; i <= m; ++i)
        rho.push_back(lambda.row(i));
    return {Partition(std::move(rho)), Partition(std::move(sigma))};
}

bool is_cm_shape(const Partition& lambda)
{
    const auto& p = lambda.parts();
    if (p.size() <= 2)
        return true; // (n), (n-d,d)
    if (std::all_of(p.begin() + 1, p.end(), [](int v) { return v == 1; }))
        return true; // hook
    return p.size() == 3 && p[0] == p[1] && p[2] == 1;
}

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0)
        throw RejectedInput("enumerate_partitions: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Bipartition> enumerate_bipartitions(int n)
{
    if (n < 0)
        throw RejectedInput("enumerate_bipartitions: n must be non-negative");
    std::vector<Bipartition> out;
    for (int left = n; left >= 0; --left)
        for (const auto& lambda : enumerate_partitions(left))
            for (const auto& mu : enumerate_partitions(n - left))
                out.push_back({lambda, mu});
    return out;
}

// Text --------------------------------------------------------------------------

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool at_end()
    {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    int number()
    {
        skip_ws();
        const std::size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000)
                fail("part too large");
            ++pos_;
        }
        if (pos_ == start)
            fail("expected a non-negative integer");
        return static_cast<int>(value);
    }
    [[noreturn]] void fail(const std::string& what)
    {
        throw RejectedInput("parse error at column " + std::to_string(pos_ + 1) + ": " + what + " in \""
                            + std::string(text_) + "\"");
    }

    Partition partition()
    {
        expect('(');
        std::vector<int> parts;
        if (peek() != ')') {
            parts.push_back(number());
            while (peek() == ',') {
                ++pos_;
                parts.push_back(number());
            }
        }
        const std::size_t at = pos_;
        expect(')');
        try {
            return Partition(std::move(parts));
        } catch (const RejectedInput& e) {
            pos_ = at;
            fail(e.what());
        }
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Partition parse_partition(std::string_view text)
{
    Cursor cur(text);
    Partition p = cur.partition();
    if (!cur.at_end())
        cur.fail("trailing characters");
    return p;
}

Bipartition parse_bipartition(std::string_view text)
{
    Cursor cur(text);
    cur.expect('(');
    Partition left = cur.partition();
    cur.expect(',');
    Partition right = cur.partition();
    cur.expect(')');
    if (!cur.at_end())
        cur.fail("trailing characters");
    return {std::move(left), std::move(right)};
}

} // namespace bnspecht
