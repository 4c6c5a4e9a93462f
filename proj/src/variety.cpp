#include "bnspecht/variety.hpp"

#include "bnspecht/errors.hpp"
#include "bnspecht/specht.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace bnspecht {

namespace {

const std::vector<Polynomial>& cached_generators(const Bipartition& bp)
{
    static std::mutex mutex;
    static std::map<Bipartition, std::vector<Polynomial>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(bp);
    if (it == cache.end())
        it = cache.emplace(bp, specht_generators(bp, bp.size())).first;
    return it->second;
}

void append_block(RationalPoint& z, int value, int count)
{
    for (int k = 0; k < count; ++k)
        z.emplace_back(value);
}

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\n");
    return std::string(s.substr(first, last - first + 1));
}

} // namespace

RationalPoint parse_point(std::string_view text)
{
    RationalPoint z;
    if (trim(text).empty())
        return z;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        try {
            z.push_back(parse_rational(trim(piece)));
        } catch (const RejectedInput& e) {
            throw RejectedInput("parse error at column " + std::to_string(start + 1) + ": " + e.what());
        }
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return z;
}

std::string to_string(const RationalPoint& z)
{
    std::string out = "(";
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (i)
            out += ',';
        out += rational_to_string(z[i]);
    }
    return out + ")";
}

Partition sn_orbit_type(const RationalPoint& z)
{
    std::map<Rational, int> multiplicity;
    for (const auto& v : z) {
        Rational c = v;
        c.canonicalize();
        ++multiplicity[c];
    }
    std::vector<int> parts;
    for (const auto& [value, m] : multiplicity)
        parts.push_back(m);
    return Partition::from_unsorted(std::move(parts));
}

Bipartition bn_orbit_type(const RationalPoint& z)
{
    RationalPoint squares;
    int zeros = 0;
    for (const auto& v : z) {
        squares.push_back(v * v);
        if (sgn(v) == 0)
            ++zeros;
    }
    return cut(sn_orbit_type(squares), zeros);
}

bool orbit_set_nonempty(const Bipartition& bp)
{
    for (int i = 2; i <= bp.right.length() + 1; ++i)
        if (bp.left.row(i) != bp.left.row(1))
            return false;
    return true;
}

RationalPoint orbit_representative(const Bipartition& bp)
{
    if (!orbit_set_nonempty(bp))
        throw EmptyOrbitSet("orbit set of " + bp.to_string() + " is empty");
    const int m = bp.right.length();
    const int lead = bp.left.row(1);
    RationalPoint z;
    int next = 1;
    for (int i = 1; i <= m; ++i)
        append_block(z, next++, lead + bp.right.row(i));
    append_block(z, 0, lead);
    for (int i = m + 2; i <= bp.left.length(); ++i)
        append_block(z, next++, bp.left.row(i));
    return z;
}

bool variety_contains_by_evaluation(const Bipartition& bp, const RationalPoint& z)
{
    if (static_cast<int>(z.size()) != bp.size())
        throw RejectedInput("point " + to_string(z) + " does not have dimension " + std::to_string(bp.size()));
    for (const auto& g : cached_generators(bp))
        if (sgn(evaluate(g, z)) != 0)
            return false;
    return true;
}

bool variety_contains_by_order(const Bipartition& bp, const RationalPoint& z)
{
    if (static_cast<int>(z.size()) != bp.size())
        throw RejectedInput("point " + to_string(z) + " does not have dimension " + std::to_string(bp.size()));
    return !bidominates(bp, bn_orbit_type(z));
}

bool variety_contains(const Bipartition& bp, const RationalPoint& z)
{
    return variety_contains_by_evaluation(bp, z);
}

std::vector<OrbitClass> decompose_variety(const Bipartition& bp)
{
    std::vector<OrbitClass> out;
    for (const auto& c : enumerate_bipartitions(bp.size()))
        if (orbit_set_nonempty(c) && !bidominates(bp, c))
            out.push_back({c, true});
    return out;
}

RationalPoint witness_z1(const Bipartition& bp)
{
    const Partition lam = glue(bp.left, bp.right);
    RationalPoint z;
    for (int i = 1; i <= lam.length(); ++i)
        append_block(z, i, lam.row(i));
    return z;
}

RationalPoint witness_z2(const Bipartition& bp)
{
    const int m = std::max(bp.left.length(), bp.right.length());
    RationalPoint z;
    append_block(z, 0, bp.left.row(1));
    for (int i = 1; i <= m; ++i)
        append_block(z, i, bp.right.row(i) + bp.left.row(i + 1));
    return z;
}

Bipartition phi(int t, const Partition& Lambda)
{
    if (t < 0)
        throw RejectedInput("phi: t must be non-negative");
    std::vector<int> parts = Lambda.parts();
    parts.push_back(t);
    return cut(Partition::from_unsorted(std::move(parts)), t);
}

Partition lambda_t(const Partition& lambda, int t)
{
    if (t < 0 || t > lambda.row(1))
        throw RejectedInput("lambda_t: need 0 <= t <= " + std::to_string(lambda.row(1)));
    if (t == 0)
        return lambda;
    int s = 0;
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda.row(i) >= t)
            s = i;
    std::vector<int> parts;
    for (int i = 1; i < s; ++i)
        parts.push_back(lambda.row(i));
    parts.push_back(lambda.row(s) + lambda.row(s + 1) - t);
    for (int i = s + 2; i <= lambda.length(); ++i)
        parts.push_back(lambda.row(i));
    return Partition(std::move(parts));
}

} // namespace bnspecht
