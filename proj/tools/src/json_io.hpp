#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "glidekit/composition.hpp"
#include "glidekit/glides.hpp"
#include "glidekit/graded_ring.hpp"
#include "glidekit/qsym.hpp"
#include "glidekit/rational.hpp"
#include "glidekit/schur.hpp"
#include "glidekit/sparse_poly.hpp"

namespace glidekit::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "glidekit/1";

/// "1,3" -> (1,3); "" -> (). Throws Error(kParse) or kInvalidComposition.
Composition parse_composition(std::string_view text);
/// "0,1,0,3" -> the weak composition; "" -> the length-0 string.
WeakComposition parse_weak_composition(std::string_view text);
/// Splits on sep; the empty string yields no items.
std::vector<std::string> split(std::string_view text, char sep);

Json to_json(const Composition& alpha);
Json to_json(const WeakComposition& w);
Json to_json(const BarredString& s);
Json to_json(const Partition& p);
Json to_json(const Rational& q);
Json to_json(const Integer& z);
/// [{"exp": [...], "coeff": "p/q"}, ...] in canonical exponent order.
Json to_json(const SparsePoly& f);
/// [{"composition": [...], "coeff": "p/q"}, ...] in canonical order.
Json to_json(const QSymElement& f);
Json to_json(const std::map<Composition, Rational>& coords);

Composition composition_from_json(const Json& j);
WeakComposition weak_composition_from_json(const Json& j);
Partition partition_from_json(const Json& j);
PartitionTuple partition_tuple_from_json(const Json& j);
Rational rational_from_json(const Json& j);
/// Accepts an array of {"composition", "coeff"} or an object
/// {"degree_bound": D, "terms": [...]}.
QSymElement qsym_from_json(const Json& j);
SparsePoly poly_from_json(const Json& j, std::size_t num_vars);
/// {"unit": label, "basis": [{"label", "degree"}], "constants": {"a|b": {"c": "q"}},
///  "counit": {"label": "q"}}. Product keys join the two labels with '|'.
GradedRingData ring_from_json(const Json& j);
Json to_json(const GradedRingData& ring);

}  // namespace glidekit::cli
