#include "mpp/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "mpp/errors.hpp"

namespace mpp::io {

namespace {

void require_keys(const Json& j, const std::set<std::string>& allowed, const std::set<std::string>& required, const std::string& what)
{
    if (!j.is_object()) throw ParseError(what + " must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (!allowed.count(key)) throw ParseError(what + ": unknown key \"" + key + "\"");
    }
    for (const auto& key : required) {
        if (!j.contains(key)) throw ParseError(what + ": missing key \"" + key + "\"");
    }
}

std::vector<std::string> string_list(const Json& j, const std::string& what)
{
    if (!j.is_array()) throw ParseError(what + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw ParseError(what + " must be an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Json rational_to_json(const Rational& q)
{
    return to_string(q);
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("rationals must be strings \"n\" or \"n/d\"");
}

MarkedPoset poset_from_json(const Json& j)
{
    require_keys(j, {"elements", "covers", "marking"}, {"elements", "covers", "marking"}, "poset");
    auto elements = string_list(j["elements"], "elements");
    std::vector<std::pair<std::string, std::string>> covers;
    if (!j["covers"].is_array()) throw ParseError("covers must be an array of pairs");
    for (const auto& c : j["covers"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
            throw ParseError("each cover must be a pair of element names");
        }
        covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    if (!j["marking"].is_object()) throw ParseError("marking must be an object");
    std::map<std::string, Rational> marking;
    for (const auto& [name, value] : j["marking"].items()) marking[name] = rational_from_json(value);
    try {
        return MarkedPoset(std::move(elements), std::move(covers), std::move(marking));
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
}

Json poset_to_json(const MarkedPoset& poset)
{
    Json j;
    j["elements"] = poset.elements();
    Json covers = Json::array();
    for (const auto& [p, q] : poset.covers()) covers.push_back({poset.name(p), poset.name(q)});
    j["covers"] = covers;
    Json marking = Json::object();
    for (Element a : poset.marked()) marking[poset.name(a)] = rational_to_json(poset.lambda(a));
    j["marking"] = marking;
    return j;
}

Parameter parameter_from_json(const MarkedPoset& poset, const Json& j)
{
    require_keys(j, {"t"}, {"t"}, "parameter");
    if (!j["t"].is_object()) throw ParseError("parameter: \"t\" must be an object");
    std::map<std::string, Rational> values;
    for (const auto& [name, value] : j["t"].items()) values[name] = rational_from_json(value);
    return Parameter(poset, values);
}

Json parameter_to_json(const MarkedPoset& poset, const Parameter& t)
{
    Json values = Json::object();
    for (Element p : poset.unmarked()) values[poset.name(p)] = rational_to_json(t[p]);
    return Json{{"t", values}};
}

Partition partition_from_json(const MarkedPoset& poset, const Json& j)
{
    require_keys(j, {"C", "O"}, {"C", "O"}, "partition");
    return Partition::from_names(poset, string_list(j["C"], "C"), string_list(j["O"], "O"));
}

Json partition_to_json(const MarkedPoset& poset, const Partition& part)
{
    auto names = [&](const std::set<Element>& s) {
        std::vector<std::string> out;
        for (Element p : poset.sorted_by_name({s.begin(), s.end()})) out.push_back(poset.name(p));
        return out;
    };
    return Json{{"C", names(part.C)}, {"O", names(part.O)}};
}

Json vector_to_json(const VectorQ& v)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(rational_to_json(v(i)));
    return out;
}

Json points_to_json(const std::vector<VectorQ>& points)
{
    Json out = Json::array();
    for (const auto& p : points) out.push_back(vector_to_json(p));
    return out;
}

Json hrep_to_json(const HRep<Rational>& h)
{
    auto rows = [](const std::vector<LinearConstraint<Rational>>& cs) {
        Json out = Json::array();
        for (const auto& c : cs) {
            out.push_back(Json{{"coefficients", vector_to_json(c.coefficients)}, {"rhs", rational_to_json(c.rhs)}, {"origin", c.origin}});
        }
        return out;
    };
    Json j;
    j["coordinates"] = h.coordinates();
    j["equations"] = rows(h.equations());
    j["inequalities"] = rows(h.inequalities());
    if (h.trivially_infeasible()) j["infeasible"] = true;
    return j;
}

HRep<Rational> hrep_from_json(const Json& j)
{
    require_keys(j, {"coordinates", "equations", "inequalities", "infeasible"}, {"coordinates", "inequalities"}, "hrep");
    HRep<Rational> h(string_list(j["coordinates"], "coordinates"));
    auto read = [&](const Json& rows, bool equation) {
        if (!rows.is_array()) throw ParseError("hrep constraints must be an array");
        for (const auto& r : rows) {
            require_keys(r, {"coefficients", "rhs", "origin"}, {"coefficients", "rhs"}, "constraint");
            if (!r["coefficients"].is_array() || static_cast<Eigen::Index>(r["coefficients"].size()) != h.ambient_dimension()) {
                throw ParseError("constraint has the wrong number of coefficients");
            }
            VectorQ a(h.ambient_dimension());
            for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = rational_from_json(r["coefficients"][static_cast<std::size_t>(i)]);
            const std::string origin = r.contains("origin") ? r["origin"].get<std::string>() : "plumbing";
            if (equation) h.add_equation(a, rational_from_json(r["rhs"]), origin);
            else h.add_inequality(a, rational_from_json(r["rhs"]), origin);
        }
    };
    if (j.contains("equations")) read(j["equations"], true);
    read(j["inequalities"], false);
    if (j.value("infeasible", false)) h.mark_infeasible();
    return h;
}

Json vrep_to_json(const VRep<Rational>& v)
{
    Json j;
    j["coordinates"] = v.coordinates;
    j["vertices"] = points_to_json(v.vertices);
    j["rays"] = points_to_json(v.rays);
    return j;
}

Json fvector_to_json(const std::vector<std::size_t>& f)
{
    Json out = Json::array();
    for (auto x : f) out.push_back(x);
    return out;
}

Json ehrhart_to_json(const EhrhartData& e)
{
    Json counts = Json::array();
    for (std::size_t k = 0; k < e.counts.size(); ++k) counts.push_back(Json::array({k, e.counts[k]}));
    Json coefficients = Json::array();
    for (const auto& c : e.coefficients) coefficients.push_back(rational_to_json(c));
    return Json{{"dimension", e.dimension}, {"counts", counts}, {"coefficients", coefficients}};
}

std::string to_off(const HRep<Rational>& h, const FaceLattice<Rational>& lattice)
{
    const auto& v = lattice.vrep().vertices;
    if (h.ambient_dimension() > 3) throw InputError("OFF export needs at most 3 coordinates");
    std::vector<std::vector<std::size_t>> polygons;
    const int d = lattice.dim();
    const int facet_dim = d == 3 ? 2 : d;
    for (auto idx : lattice.faces_of_dimension(facet_dim)) {
        const auto& face = lattice[idx];
        std::vector<std::size_t> ids;
        for (auto j = face.vertices.find_first(); j != VertexSet::npos; j = face.vertices.find_next(j)) ids.push_back(j);
        if (ids.size() >= 3) {
            // Order the polygon cyclically through its edges.
            std::vector<std::size_t> cycle{ids.front()};
            std::set<std::size_t> used{ids.front()};
            for (std::size_t step = 1; step < ids.size(); ++step) {
                for (auto e : lattice.faces_of_dimension(1)) {
                    const auto& ev = lattice[e].vertices;
                    if (!ev.is_subset_of(face.vertices) || !ev.test(cycle.back())) continue;
                    const auto other = ev.find_first() == cycle.back() ? ev.find_next(cycle.back()) : ev.find_first();
                    if (!used.count(other)) {
                        cycle.push_back(other);
                        used.insert(other);
                        break;
                    }
                }
            }
            ids = cycle;
        }
        polygons.push_back(ids);
    }
    std::ostringstream out;
    out << "OFF\n" << v.size() << ' ' << polygons.size() << " 0\n";
    for (const auto& p : v) {
        for (Eigen::Index i = 0; i < 3; ++i) {
            out << (i ? " " : "") << (i < p.size() ? p(i).convert_to<double>() : 0.0);
        }
        out << '\n';
    }
    for (const auto& poly : polygons) {
        out << poly.size();
        for (auto id : poly) out << ' ' << id;
        out << '\n';
    }
    return out.str();
}

}  // namespace mpp::io
