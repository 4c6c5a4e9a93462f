#include "bnspecht/serialize.hpp"

#include "bnspecht/errors.hpp"

#include <algorithm>

namespace bnspecht {

namespace {

Json indices(const std::vector<int>& v)
{
    Json j = Json::array();
    for (int x : v)
        j.push_back(x);
    return j;
}

Json polynomial_text(const Polynomial& p)
{
    return p.to_string();
}

Json criterion_json(const CriterionResult& c)
{
    Json j;
    j["passed"] = c.passed;
    j["pairs_checked"] = c.pairs_checked;
    j["pairs_skipped_coprime"] = c.pairs_skipped_coprime;
    if (c.failing_pair) {
        j["failing_pair"] = {c.failing_pair->first, c.failing_pair->second};
        j["failing_remainder"] = c.failing_remainder.to_string();
    } else {
        j["failing_pair"] = nullptr;
    }
    return j;
}

} // namespace

Json to_json(const Partition& p)
{
    return indices(p.parts());
}

Json to_json(const Bipartition& bp)
{
    Json j;
    j["text"] = bp.to_string();
    j["left"] = to_json(bp.left);
    j["right"] = to_json(bp.right);
    return j;
}

Json to_json(const Polynomial& p)
{
    Json j;
    j["text"] = p.to_string();
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        Json exps = Json::object();
        for (int i = 1; i <= t.monomial.last_variable(); ++i)
            if (t.monomial.exponent(i) > 0)
                exps["x" + std::to_string(i)] = t.monomial.exponent(i);
        terms.push_back({{"coeff", rational_to_string(t.coeff)}, {"exps", exps}});
    }
    j["terms"] = terms;
    return j;
}

Polynomial polynomial_from_json(const Json& j, int num_vars)
{
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw RejectedInput("polynomial JSON needs a \"terms\" array");
    std::vector<Term> terms;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_string())
            throw RejectedInput("polynomial JSON term needs a string \"coeff\"");
        Monomial m;
        if (t.contains("exps")) {
            if (!t["exps"].is_object())
                throw RejectedInput("polynomial JSON \"exps\" must be an object");
            for (const auto& [name, e] : t["exps"].items()) {
                if (name.size() < 2 || name[0] != 'x' || !e.is_number_integer())
                    throw RejectedInput("polynomial JSON exponent entry \"" + name + "\" is malformed");
                int index = 0;
                try {
                    index = std::stoi(name.substr(1));
                } catch (const std::exception&) {
                    throw RejectedInput("polynomial JSON variable \"" + name + "\" is malformed");
                }
                if (index < 1 || index > num_vars)
                    throw RejectedInput("polynomial JSON variable " + name + " outside the ring");
                if (e.get<int>() < 0)
                    throw RejectedInput("polynomial JSON exponent must be non-negative");
                m.set_exponent(index, e.get<int>());
            }
        }
        terms.push_back({m, parse_rational(t["coeff"].get<std::string>())});
    }
    return Polynomial::from_terms(num_vars, std::move(terms));
}

Json to_json(const Tableau& t)
{
    Json rows = Json::array();
    for (const auto& row : t.rows())
        rows.push_back(indices(row));
    return rows;
}

Json to_json(const Bitableau& bt)
{
    return {{"first", to_json(bt.first())}, {"second", to_json(bt.second())}};
}

Json to_json(const RationalPoint& z)
{
    Json j = Json::array();
    for (const auto& v : z)
        j.push_back(rational_to_string(v));
    return j;
}

Json to_json(const HasseDiagram& d)
{
    Json j;
    j["n"] = d.n;
    Json vertices = Json::array();
    for (std::size_t i = 0; i < d.vertices.size(); ++i) {
        Json v = to_json(d.vertices[i]);
        v["id"] = i;
        vertices.push_back(v);
    }
    j["vertices"] = vertices;
    Json edges = Json::array();
    for (const auto& [upper, lower] : d.edges)
        edges.push_back({{"upper", upper}, {"lower", lower}});
    j["edges"] = edges;
    return j;
}

Json to_json(const GroebnerBasis& gb)
{
    Json j;
    j["n"] = gb.num_vars;
    j["order"] = to_string(gb.order);
    Json gens = Json::array();
    for (const auto& g : gb.generators)
        gens.push_back(polynomial_text(g));
    j["generators"] = gens;
    return j;
}

Json to_json(const CoveringCertificate& c)
{
    Json j;
    j["case"] = c.covering_case;
    j["a"] = c.a;
    j["b"] = c.b;
    j["A"] = indices(c.A);
    j["B1"] = indices(c.B1);
    j["B2"] = indices(c.B2);
    j["cosets"] = c.cosets;
    j["P_star"] = polynomial_text(c.p_star);
    j["Q_star"] = polynomial_text(c.q_star);
    j["Q_bar"] = polynomial_text(c.q_bar);
    j["verified"] = c.verified;
    j["full_identity"] = c.full_identity;
    return j;
}

Json to_json(const InclusionReport& r)
{
    Json j;
    j["upper"] = to_json(r.upper);
    j["lower"] = to_json(r.lower);
    j["n"] = r.n;
    Json steps = Json::array();
    for (const auto& s : r.steps) {
        Json step;
        step["from"] = s.upper.to_string();
        step["to"] = s.covering.lower.to_string();
        step["type"] = s.covering.type;
        step["first_row"] = s.covering.first_row;
        step["last_row"] = s.covering.last_row;
        step["certificate"] = s.certificate ? to_json(*s.certificate) : Json(nullptr);
        step["groebner_membership"] = s.groebner_membership ? Json(*s.groebner_membership) : Json(nullptr);
        steps.push_back(step);
    }
    j["steps"] = steps;
    j["included"] = r.included;
    return j;
}

Json to_json(const UniversalGbReport& r)
{
    Json j;
    j["shape"] = r.shape.to_string();
    j["n"] = r.n;
    Json below = Json::array();
    for (const auto& s : r.shapes_below)
        below.push_back(s.to_string());
    j["shapes_below"] = below;
    j["candidate_set_size"] = r.candidate_set.size();
    Json orders = Json::array();
    for (const auto& o : r.orders) {
        Json entry = criterion_json(o.criterion);
        entry["order"] = to_string(o.order);
        orders.push_back(entry);
    }
    j["orders"] = orders;
    return j;
}

Json to_json(const RadicalReport& r)
{
    Json j;
    j["shape"] = r.shape.to_string();
    j["n"] = r.n;
    Json probes = Json::array();
    for (const auto& p : r.probes)
        probes.push_back({{"origin", p.origin},
                          {"candidate", p.candidate.to_string()},
                          {"in_radical", p.in_radical},
                          {"in_ideal", p.in_ideal}});
    j["probes"] = probes;
    j["consistent_with_radical"] = r.consistent_with_radical;
    return j;
}

Json decomposition_json(const Bipartition& bp)
{
    Json j;
    j["bipartition"] = bp.to_string();
    j["n"] = bp.size();
    Json classes = Json::array();
    Json reps = Json::array();
    for (const auto& c : decompose_variety(bp)) {
        Json entry;
        entry["text"] = c.bipartition.to_string();
        entry["left"] = to_json(c.bipartition.left);
        entry["right"] = to_json(c.bipartition.right);
        entry["nonempty"] = c.nonempty;
        classes.push_back(entry);
        reps.push_back(to_json(orbit_representative(c.bipartition)));
    }
    j["classes"] = classes;
    j["representatives"] = reps;
    return j;
}

Json detection_json(const Polynomial& P, int n)
{
    const auto report = detect_specht_subideal(P, n);
    Json j;
    j["polynomial"] = P.to_string();
    j["n"] = n;
    j["degree"] = report.degree;
    j["weight"] = report.weight;
    Json monomials = Json::array();
    for (const auto& d : report.monomials) {
        Json entry;
        entry["m"] = d.monomial.to_string();
        entry["gamma"] = d.gamma ? Json(d.gamma->to_string()) : Json(nullptr);
        entry["gamma_star"] = d.gamma_star ? Json(d.gamma_star->to_string()) : Json(nullptr);
        entry["applicable"] = d.applicable;
        entry["maximal"] = d.maximal;
        monomials.push_back(entry);
    }
    j["monomials"] = monomials;
    const auto ex = excluded_orbit_classes(P, n);
    if (!ex) {
        j["conclusion"] = false;
        j["maxima"] = Json::array();
        j["excluded_classes"] = Json::array();
        j["rank_bound"] = nullptr;
        return j;
    }
    j["conclusion"] = true;
    Json maxima = Json::array();
    std::optional<mpz_class> best;
    for (const auto& m : ex->maxima) {
        maxima.push_back(m.to_string());
        const mpz_class bound = rank_bound(m, n);
        if (!best || bound < *best)
            best = bound;
    }
    j["maxima"] = maxima;
    Json excluded = Json::array();
    for (const auto& bp : ex->excluded)
        excluded.push_back(bp.to_string());
    j["excluded_classes"] = excluded;
    j["rank_bound"] = best->get_str();
    return j;
}

} // namespace bnspecht
