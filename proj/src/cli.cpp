#include "bnspecht/cli.hpp"

#include "bnspecht/errors.hpp"
#include "bnspecht/serialize.hpp"
#include "bnspecht/specht.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <new>
#include <sstream>

namespace bnspecht::cli {

namespace {

constexpr int kMaxPosetN = 12;
constexpr std::size_t kMaxListedGenerators = 20'000;

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

CommandResult failure(Status status, const std::string& message)
{
    Json j;
    j["status"] = to_string(status);
    j["message"] = message;
    return {status, dump(j)};
}

void require_n(const Bipartition& bp, int n, const char* flag)
{
    if (bp.size() != n)
        throw RejectedInput(std::string(flag) + " " + bp.to_string() + " is a bipartition of " + std::to_string(bp.size())
                            + ", not of --n " + std::to_string(n));
}

/// A point of V(I_a) outside V(I_b), taken as the representative of a nonempty orbit
/// class c with b ⊵ c and a ⋭ c.
std::optional<RationalPoint> separating_point(const Bipartition& a, const Bipartition& b, int n)
{
    for (const auto& c : enumerate_bipartitions(n)) {
        if (!orbit_set_nonempty(c) || !bidominates(b, c) || bidominates(a, c))
            continue;
        const RationalPoint z = orbit_representative(c);
        if (variety_contains_by_evaluation(a, z) && !variety_contains_by_evaluation(b, z))
            return z;
    }
    return std::nullopt;
}

struct Options {
    GroebnerLimits limits;

    // shared subcommand arguments
    int n = 0;
    std::string a, b, shape, relation = "bidom", method = "groebner", point, poly, orders = "lex,deglex,grevlex";
    bool dot = false, json = false, all = false;
    int covering_case = 0, ca = 0, cb = 0;
};

std::string order_symbol(const std::string& relation)
{
    return relation == "bidom" ? "⊵" : "⪰";
}

Json cmd_order(const Options& o)
{
    const Bipartition a = parse_bipartition(o.a);
    const Bipartition b = parse_bipartition(o.b);
    if (a.size() != b.size())
        throw RejectedInput("--a and --b are bipartitions of different sizes (" + std::to_string(a.size()) + " and "
                            + std::to_string(b.size()) + ")");
    std::function<bool(const Bipartition&, const Bipartition&)> geq;
    if (o.relation == "bidom")
        geq = [](const Bipartition& x, const Bipartition& y) { return bidominates(x, y); };
    else if (o.relation == "hecke")
        geq = [](const Bipartition& x, const Bipartition& y) { return hecke_leq(y, x); };
    else
        geq = [](const Bipartition& x, const Bipartition& y) { return induced_leq(y, x); };
    const bool ab = geq(a, b);
    const bool ba = geq(b, a);
    Json j;
    j["relation"] = o.relation;
    j["a"] = to_json(a);
    j["b"] = to_json(b);
    j["a_geq_b"] = ab;
    j["b_geq_a"] = ba;
    j["comparable"] = ab || ba;
    j["summary"] = "a " + order_symbol(o.relation) + " b: " + (ab ? "true" : "false");
    return j;
}

Json cmd_specht(const Options& o)
{
    const Bipartition shape = parse_bipartition(o.shape);
    require_n(shape, o.n, "--shape");
    const mpz_class count = specht_generator_count(shape);
    Json j;
    j["shape"] = to_json(shape);
    j["n"] = o.n;
    j["degree"] = specht_degree(shape);
    j["generator_count"] = count.get_str();
    Json gens = Json::array();
    auto emit = [&](const Bitableau& bt) {
        gens.push_back({{"bitableau", to_json(bt)}, {"polynomial", to_json(specht_polynomial_bn(bt))}});
    };
    if (o.all) {
        if (count > kMaxListedGenerators)
            throw ResourceExceeded("specht --all: " + count.get_str() + " generators exceed the listing cap of "
                                   + std::to_string(kMaxListedGenerators));
        for (const auto& g : specht_generators(shape, o.n))
            gens.push_back({{"polynomial", to_json(g)}});
    } else {
        emit(reference_bitableau(shape));
    }
    j["generators"] = gens;
    return j;
}

Json cmd_ideal_inc(const Options& o)
{
    const Bipartition a = parse_bipartition(o.a);
    const Bipartition b = parse_bipartition(o.b);
    require_n(a, o.n, "--a");
    require_n(b, o.n, "--b");
    Json j;
    j["a"] = to_json(a);
    j["b"] = to_json(b);
    j["n"] = o.n;
    j["method"] = o.method;
    j["question"] = "I_b ⊆ I_a";
    const bool order = bidominates(a, b);
    j["a_bidominates_b"] = order;

    Json witness;
    bool included = false;
    if (o.method == "groebner") {
        const GroebnerBasis& gb = specht_ideal_gb(a, o.n, o.limits);
        included = true;
        witness["groebner_basis_a"] = to_json(gb);
        for (const auto& g : specht_generators(b, o.n)) {
            const Polynomial r = reduce(g, gb, o.limits);
            if (!r.is_zero()) {
                included = false;
                witness["nonmember"] = g.to_string();
                witness["normal_form"] = r.to_string();
                break;
            }
        }
    } else if (order) {
        const InclusionReport report = inclusion_by_certificates(a, b, o.n, 0, o.limits);
        included = report.included;
        witness["chain"] = to_json(report);
    }
    if (!included) {
        const auto z = separating_point(a, b, o.n);
        witness["separating_point"] = z ? to_json(*z) : Json(nullptr);
        if (z)
            witness["separating_orbit_type"] = bn_orbit_type(*z).to_string();
    }
    j["included"] = included;
    j["witness"] = witness;
    return j;
}

Json cmd_variety(const Options& o)
{
    const Bipartition shape = parse_bipartition(o.shape);
    require_n(shape, o.n, "--shape");
    return decomposition_json(shape);
}

Json cmd_orbit_type(const Options& o)
{
    const RationalPoint z = parse_point(o.point);
    Json j;
    j["point"] = to_json(z);
    j["n"] = z.size();
    j["zero_count"] = std::count_if(z.begin(), z.end(), [](const Rational& q) { return sgn(q) == 0; });
    j["sn_orbit_type"] = to_json(sn_orbit_type(z));
    j["orbit_type"] = to_json(bn_orbit_type(z));
    return j;
}

Json cmd_gamma(const Options& o)
{
    return detection_json(parse_polynomial(o.poly, o.n), o.n);
}

Json cmd_certify(const Options& o)
{
    return to_json(covering_certificate(o.covering_case, o.ca, o.cb));
}

Json cmd_conjecture(const Options& o)
{
    const Bipartition shape = parse_bipartition(o.shape);
    require_n(shape, o.n, "--shape");
    std::vector<MonomialOrder> orders;
    std::stringstream in(o.orders);
    for (std::string name; std::getline(in, name, ',');)
        orders.push_back(parse_monomial_order(name));
    if (orders.empty())
        throw RejectedInput("--orders lists no monomial order");
    Json j;
    j["universal_gb"] = to_json(universal_gb_check(shape, o.n, orders, o.limits));
    j["radical"] = to_json(radical_harness(shape, o.n, o.limits));
    return j;
}

Json cmd_rank_bound(const Options& o)
{
    const Bipartition shape = parse_bipartition(o.shape);
    require_n(shape, o.n, "--shape");
    mpz_class order;
    mpz_fac_ui(order.get_mpz_t(), static_cast<unsigned long>(o.n));
    order <<= o.n;
    Json j;
    j["shape"] = to_json(shape);
    j["n"] = o.n;
    j["rank_bound"] = rank_bound(shape, o.n).get_str();
    j["group_order"] = order.get_str();
    return j;
}

} // namespace

std::string to_string(Status s)
{
    switch (s) {
    case Status::ok:
        return "ok";
    case Status::rejected_input:
        return "rejected-input";
    case Status::resource_exceeded:
        return "resource-exceeded";
    }
    return "ok";
}

int CommandResult::exit_code() const noexcept
{
    switch (status) {
    case Status::ok:
        return 0;
    case Status::rejected_input:
        return 2;
    case Status::resource_exceeded:
        return 3;
    }
    return 0;
}

CommandResult run(const std::vector<std::string>& args)
{
    Options o;
    CLI::App app{"Bipartitions, bidominance and B_n-Specht ideals", "bnspecht"};
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->always_capture_default();
    app.add_option("--max-basis", o.limits.max_basis, "Cap on Gröbner basis size");
    app.add_option("--max-terms", o.limits.max_terms, "Cap on terms of a polynomial under reduction");

    const auto bipartition_text = [](CLI::App* sub, const char* flag, std::string& target, const char* what) {
        sub->add_option(flag, target, what)->required();
    };

    auto* poset = app.add_subcommand("poset", "Hasse diagram of BP_n under bidominance");
    poset->add_option("--n", o.n)->required()->check(CLI::Range(1, kMaxPosetN));
    auto* dot = poset->add_flag("--dot", o.dot, "Graphviz output");
    poset->add_flag("--json", o.json, "JSON output (default)")->excludes(dot);

    auto* order = app.add_subcommand("order", "Compare two bipartitions");
    bipartition_text(order, "--a", o.a, "Bipartition \"((..),(..))\"");
    bipartition_text(order, "--b", o.b, "Bipartition \"((..),(..))\"");
    order->add_option("--relation", o.relation)->check(CLI::IsMember({"bidom", "hecke", "induced"}));

    auto* specht = app.add_subcommand("specht", "B_n-Specht polynomials of a shape");
    bipartition_text(specht, "--shape", o.shape, "Bipartition of n");
    specht->add_option("--n", o.n)->required()->check(CLI::Range(1, kMaxVars));
    specht->add_flag("--all", o.all, "List one generator per ± class, not only the reference one");

    auto* inc = app.add_subcommand("ideal-inc", "Decide I_b ⊆ I_a");
    bipartition_text(inc, "--a", o.a, "Upper bipartition");
    bipartition_text(inc, "--b", o.b, "Lower bipartition");
    inc->add_option("--n", o.n)->required()->check(CLI::Range(1, kMaxVars));
    inc->add_option("--method", o.method)->check(CLI::IsMember({"groebner", "certificate"}));

    auto* variety = app.add_subcommand("variety", "Orbit-class decomposition of V(I_shape)");
    bipartition_text(variety, "--shape", o.shape, "Bipartition of n");
    variety->add_option("--n", o.n)->required()->check(CLI::Range(1, kMaxVars));

    auto* orbit = app.add_subcommand("orbit-type", "Orbit type of a rational point");
    orbit->add_option("--point", o.point, "Comma-separated rationals")->required();

    auto* gamma_cmd = app.add_subcommand("gamma", "Specht subideals of a B_n-invariant ideal");
    gamma_cmd->add_option("--poly", o.poly, "Polynomial text")->required();
    gamma_cmd->add_option("--n", o.n)->required()->check(CLI::Range(1, kMaxVars));

    auto* certify = app.add_subcommand("certify-cover", "Symmetrization certificate of a covering step");
    certify->add_option("--case", o.covering_case)->required()->check(CLI::IsMember({3, 4}));
    certify->add_option("--a", o.ca)->required()->check(CLI::PositiveNumber);
    certify->add_option("--b", o.cb)->required()->check(CLI::NonNegativeNumber);

    auto* conj = app.add_subcommand("conjecture", "Universal Gröbner basis and radical probes");
    bipartition_text(conj, "--shape", o.shape, "Bipartition of n");
    conj->add_option("--n", o.n)->required()->check(CLI::Range(1, kMaxConjectureN));
    conj->add_option("--orders", o.orders, "Comma-separated: lex, deglex, grevlex, invlex");

    auto* rank = app.add_subcommand("rank-bound", "Rank bound for an invariant ideal containing I_shape");
    bipartition_text(rank, "--shape", o.shape, "Bipartition of n");
    rank->add_option("--n", o.n)->required()->check(CLI::Range(1, 10));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (poset->parsed()) {
            const HasseDiagram d = hasse_diagram(o.n);
            return {Status::ok, o.dot ? to_dot(d) : dump(to_json(d))};
        }
        Json payload;
        if (order->parsed())
            payload = cmd_order(o);
        else if (specht->parsed())
            payload = cmd_specht(o);
        else if (inc->parsed())
            payload = cmd_ideal_inc(o);
        else if (variety->parsed())
            payload = cmd_variety(o);
        else if (orbit->parsed())
            payload = cmd_orbit_type(o);
        else if (gamma_cmd->parsed())
            payload = cmd_gamma(o);
        else if (certify->parsed())
            payload = cmd_certify(o);
        else if (conj->parsed())
            payload = cmd_conjecture(o);
        else
            payload = cmd_rank_bound(o);
        return {Status::ok, dump(payload)};
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        return {Status::ok, subs.empty() ? app.help() : subs.front()->help()};
    } catch (const CLI::CallForAllHelp&) {
        return {Status::ok, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        return failure(Status::rejected_input, e.what());
    } catch (const ResourceExceeded& e) {
        return failure(Status::resource_exceeded, e.what());
    } catch (const std::bad_alloc&) {
        return failure(Status::resource_exceeded, "out of memory");
    } catch (const std::invalid_argument& e) {
        return failure(Status::rejected_input, e.what());
    }
}

} // namespace bnspecht::cli
