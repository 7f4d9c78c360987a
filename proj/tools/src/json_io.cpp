#include "json_io.hpp"

#include <charconv>

#include "glidekit/error.hpp"

namespace glidekit::cli {

namespace {

[[noreturn]] void bad_json(const std::string& what) { throw Error(ErrorCode::kParse, what); }

int parse_int(std::string_view item, std::string_view context) {
  int value = 0;
  const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
  if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
    throw Error(ErrorCode::kParse, "malformed integer list '" + std::string(context) + "'");
  }
  return value;
}

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_int(item, text));
  return out;
}

std::vector<int> ints_from_json(const Json& j) {
  if (!j.is_array()) bad_json("expected an integer array, got " + j.dump());
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) bad_json("expected an integer, got " + v.dump());
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = text.find(sep, pos);
    out.emplace_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

Composition parse_composition(std::string_view text) { return Composition(parse_ints(text)); }

WeakComposition parse_weak_composition(std::string_view text) { return WeakComposition(parse_ints(text)); }

Json to_json(const Composition& alpha) { return Json(alpha.vec()); }
Json to_json(const WeakComposition& w) { return Json(w.vec()); }
Json to_json(const BarredString& s) { return Json(std::vector<int>(s.entries().begin(), s.entries().end())); }
Json to_json(const Partition& p) { return Json(p.vec()); }
Json to_json(const Rational& q) { return Json(to_string(q)); }
Json to_json(const Integer& z) { return Json(to_string(z)); }

Json to_json(const SparsePoly& f) {
  Json out = Json::array();
  for (const auto& [w, c] : f.terms()) out.push_back(Json{{"exp", to_json(w)}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const std::map<Composition, Rational>& coords) {
  Json out = Json::array();
  for (const auto& [alpha, c] : coords) out.push_back(Json{{"composition", to_json(alpha)}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const QSymElement& f) { return to_json(f.coords()); }

Composition composition_from_json(const Json& j) { return Composition(ints_from_json(j)); }
WeakComposition weak_composition_from_json(const Json& j) { return WeakComposition(ints_from_json(j)); }
Partition partition_from_json(const Json& j) { return Partition(ints_from_json(j)); }

PartitionTuple partition_tuple_from_json(const Json& j) {
  if (!j.is_array()) bad_json("expected an array of partitions");
  std::vector<Partition> parts;
  for (const auto& p : j) parts.push_back(partition_from_json(p));
  return PartitionTuple(std::move(parts));
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad_json("expected a rational string such as \"-3/2\", got " + j.dump());
}

QSymElement qsym_from_json(const Json& j) {
  const Json* terms = &j;
  std::optional<int> bound;
  if (j.is_object()) {
    if (!j.contains("terms")) bad_json("QSym object needs a \"terms\" array");
    terms = &j.at("terms");
    if (j.contains("degree_bound") && !j.at("degree_bound").is_null()) bound = j.at("degree_bound").get<int>();
  }
  if (!terms->is_array()) bad_json("QSym terms must be an array");
  QSymElement out(bound);
  for (const auto& t : *terms) {
    if (!t.is_object() || !t.contains("composition") || !t.contains("coeff")) {
      bad_json("QSym term needs \"composition\" and \"coeff\": " + t.dump());
    }
    out.add_term(composition_from_json(t.at("composition")), rational_from_json(t.at("coeff")));
  }
  return out;
}

SparsePoly poly_from_json(const Json& j, std::size_t num_vars) {
  if (!j.is_array()) bad_json("polynomial must be an array of terms");
  SparsePoly out(num_vars);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coeff")) {
      bad_json("polynomial term needs \"exp\" and \"coeff\": " + t.dump());
    }
    out.add_term(weak_composition_from_json(t.at("exp")), rational_from_json(t.at("coeff")));
  }
  return out;
}

GradedRingData ring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("unit")) {
    throw Error(ErrorCode::kInvalidRing, "ring JSON needs \"unit\" and \"basis\"");
  }
  std::vector<RingLabel> basis;
  for (const auto& b : j.at("basis")) {
    if (!b.contains("label") || !b.contains("degree")) throw Error(ErrorCode::kInvalidRing, "basis entry needs label and degree");
    basis.push_back({b.at("label").get<std::string>(), b.at("degree").get<int>()});
  }
  GradedRingData::Constants constants;
  if (j.contains("constants")) {
    for (const auto& [key, combo] : j.at("constants").items()) {
      const auto bar = key.find('|');
      if (bar == std::string::npos) throw Error(ErrorCode::kInvalidRing, "constant key '" + key + "' must be \"a|b\"");
      LabelCombination c;
      for (const auto& [label, q] : combo.items()) c[label] = rational_from_json(q);
      constants[{key.substr(0, bar), key.substr(bar + 1)}] = std::move(c);
    }
  }
  LabelCombination counit;
  if (j.contains("counit")) {
    for (const auto& [label, q] : j.at("counit").items()) counit[label] = rational_from_json(q);
  }
  return GradedRingData::create(std::move(basis), j.at("unit").get<std::string>(), std::move(constants),
                                std::move(counit));
}

Json to_json(const GradedRingData& ring) {
  Json basis = Json::array();
  basis.push_back(Json{{"label", ring.unit()}, {"degree", 0}});
  for (const auto& l : ring.labels()) basis.push_back(Json{{"label", l.name}, {"degree", l.degree}});
  Json constants = Json::object();
  for (const auto& [key, combo] : ring.constants()) {
    Json c = Json::object();
    for (const auto& [label, q] : combo) c[label] = to_json(q);
    constants[key.first + "|" + key.second] = std::move(c);
  }
  return Json{{"unit", ring.unit()}, {"basis", basis}, {"constants", constants}};
}

}  // namespace glidekit::cli
