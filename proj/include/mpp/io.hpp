#ifndef MPP_IO_HPP
#define MPP_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "mpp/family.hpp"
#include "mpp/geometry/face_lattice.hpp"
#include "mpp/geometry/lattice_points.hpp"
#include "mpp/geometry/polyhedron.hpp"
#include "mpp/poset.hpp"

namespace mpp::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; throws ParseError on I/O or syntax errors.
Json read_json_file(const std::string& path);

/// {"elements": [...], "covers": [[p, q], ...], "marking": {"a": "n/d", ...}}; unknown keys are rejected.
MarkedPoset poset_from_json(const Json& j);
Json poset_to_json(const MarkedPoset& poset);

/// {"t": {"p": "1/2", ...}}
Parameter parameter_from_json(const MarkedPoset& poset, const Json& j);
Json parameter_to_json(const MarkedPoset& poset, const Parameter& t);

/// {"C": [...], "O": [...]}
Partition partition_from_json(const MarkedPoset& poset, const Json& j);
Json partition_to_json(const MarkedPoset& poset, const Partition& part);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json vector_to_json(const VectorQ& v);
Json points_to_json(const std::vector<VectorQ>& points);

Json hrep_to_json(const HRep<Rational>& h);
HRep<Rational> hrep_from_json(const Json& j);
Json vrep_to_json(const VRep<Rational>& v);
Json fvector_to_json(const std::vector<std::size_t>& f);
Json ehrhart_to_json(const EhrhartData& e);

/// OFF export of a polytope of dimension ≤ 3 with ambient dimension ≤ 3.
std::string to_off(const HRep<Rational>& h, const FaceLattice<Rational>& lattice);

}  // namespace mpp::io

#endif
