#include "fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "glidekit/error.hpp"
#include "glidekit/ktheory.hpp"
#include "glidekit/poset.hpp"

namespace glidekit::cli {

Fixture parse_fixture(const std::string& file_name, const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, file_name + ": " + e.what());
  }
  for (const char* key : {"id", "kind", "input", "expected"}) {
    if (!j.contains(key)) throw Error(ErrorCode::kParse, file_name + ": missing \"" + key + "\"");
  }
  return Fixture{file_name, j.at("id").get<std::string>(), j.value("description", ""), j.at("kind").get<std::string>(),
                 j.at("input"), j.at("expected")};
}

std::vector<Fixture> load_embedded_fixtures() {
  std::vector<Fixture> out;
  for (const auto& f : embedded_fixtures()) out.push_back(parse_fixture(f.file_name, f.content));
  return out;
}

std::vector<Fixture> load_fixture_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error(ErrorCode::kParse, "fixture directory '" + dir + "' does not exist");
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<Fixture> out;
  for (const auto& p : paths) {
    std::ifstream in(p);
    std::ostringstream text;
    text << in.rdbuf();
    out.push_back(parse_fixture(p.filename().string(), text.str()));
  }
  return out;
}

namespace {

const std::set<std::string>& unordered_kinds() {
  static const std::set<std::string> kinds{"poset_elements", "poset_covers", "c_set",
                                           "c_tilde_set",    "mobius",       "glide_polynomial",
                                           "knutson_class",  "overlapping_shuffle", "m_product"};
  return kinds;
}

Json sorted(const Json& j) {
  if (!j.is_array()) return j;
  std::vector<std::string> dumps;
  for (const auto& e : j) dumps.push_back(e.dump());
  std::sort(dumps.begin(), dumps.end());
  Json out = Json::array();
  for (const auto& d : dumps) out.push_back(Json::parse(d));
  return out;
}

Json strings_json(std::span<const WeakComposition> ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(to_json(w));
  return out;
}

Json evaluate(const std::string& kind, const Json& in) {
  if (kind == "poset_elements" || kind == "poset_covers" || kind == "poset_join" || kind == "poset_meet" ||
      kind == "mobius" || kind == "mobius_value") {
    const GlidePoset poset = build_poset(composition_from_json(in.at("alpha")), in.at("n").get<std::size_t>());
    if (kind == "poset_elements") return strings_json(poset.elements());
    if (kind == "poset_covers") {
      Json out = Json::array();
      for (const auto& [a, b] : poset.covers()) out.push_back(Json::array({to_json(poset.element(a)), to_json(poset.element(b))}));
      return out;
    }
    if (kind == "poset_join") {
      return to_json(join(weak_composition_from_json(in.at("p")), weak_composition_from_json(in.at("q"))));
    }
    if (kind == "poset_meet") {
      const MeetResult m = meet(poset, weak_composition_from_json(in.at("p")), weak_composition_from_json(in.at("q")));
      if (std::holds_alternative<Bottom>(m)) return Json(nullptr);
      return to_json(std::get<WeakComposition>(m));
    }
    const MobiusTable mu = mobius(poset);
    if (kind == "mobius_value") return to_json(mu.at(poset, weak_composition_from_json(in.at("string"))));
    Json out = Json::array();
    for (std::size_t i = 0; i < poset.size(); ++i) {
      out.push_back(Json{{"string", to_json(poset.element(i))}, {"mu", to_json(mu[i])}});
    }
    return out;
  }
  if (kind == "c_set") {
    return strings_json(enumerate_C(composition_from_json(in.at("alpha")), in.at("n").get<std::size_t>()));
  }
  if (kind == "c_tilde_set") {
    Json out = Json::array();
    for (const auto& s : enumerate_C_tilde(composition_from_json(in.at("alpha")), in.at("n").get<std::size_t>())) {
      out.push_back(to_json(s));
    }
    return out;
  }
  if (kind == "glide_polynomial") {
    const GlideMethod method = parse_glide_method(in.value("method", "closed"));
    return to_json(glide_polynomial(composition_from_json(in.at("alpha")), in.at("n").get<std::size_t>(), method));
  }
  if (kind == "knutson_class") {
    return to_json(knutson_class(composition_from_json(in.at("alpha")), in.at("n").get<std::size_t>(),
                                 in.at("m").get<int>()).poly());
  }
  if (kind == "overlapping_shuffle") {
    Json out = Json::array();
    for (const auto& [gamma, mult] :
         overlapping_shuffle(composition_from_json(in.at("a")), composition_from_json(in.at("b")))) {
      out.push_back(Json{{"composition", to_json(gamma)}, {"multiplicity", to_json(mult)}});
    }
    return out;
  }
  if (kind == "m_product") {
    return to_json(m_multiply(QSymElement::monomial(composition_from_json(in.at("a"))),
                              QSymElement::monomial(composition_from_json(in.at("b")))));
  }
  if (kind == "lr_coefficient") {
    return to_json(lr_coefficient(partition_from_json(in.at("lambda")), partition_from_json(in.at("mu")),
                                  partition_from_json(in.at("nu"))));
  }
  if (kind == "ssyt_counts") {
    const SkewShape shape(partition_from_json(in.at("outer")), partition_from_json(in.at("inner")));
    const auto tableaux = ssyt_enumerate(shape, weak_composition_from_json(in.at("content")));
    const auto ballot = std::count_if(tableaux.begin(), tableaux.end(), [](const Tableau& t) { return is_ballot(t); });
    return Json{{"tableaux", tableaux.size()}, {"ballot", ballot}};
  }
  if (kind == "ballot") {
    const SkewShape shape(partition_from_json(in.at("outer")), partition_from_json(in.at("inner")));
    return Json(is_ballot(Tableau(shape, in.at("rows").get<std::vector<std::vector<int>>>())));
  }
  if (kind == "buk") {
    return to_json(buk_structure_constant(partition_tuple_from_json(in.at("lambda")),
                                          partition_tuple_from_json(in.at("mu")),
                                          partition_tuple_from_json(in.at("nu")), in.at("k").get<std::size_t>()));
  }
  if (kind == "grassmannian") {
    return to_json(grassmannian_to_partition(Permutation(in.at("permutation").get<std::vector<int>>()),
                                             in.at("k").get<std::size_t>()));
  }
  if (kind == "projective_class") {
    return to_json(projective_structure_class(in.at("r").get<int>(), in.at("m").get<int>()).poly());
  }
  if (kind == "line_bundle") {
    std::vector<Rational> coeffs;
    for (const auto& c : in.at("coeffs")) coeffs.push_back(rational_from_json(c));
    return to_json(line_bundle_to_y(coeffs, in.at("m").get<int>()).poly());
  }
  if (kind == "binomial_identity") {
    return Json(check_binomial_identity(in.at("N").get<int>(), in.at("l").get<int>()));
  }
  throw Error(ErrorCode::kParse, "unknown fixture kind '" + kind + "'");
}

}  // namespace

Json evaluate_fixture(const Fixture& fixture) {
  try {
    return evaluate(fixture.kind, fixture.input);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, fixture.file_name + ": " + e.what());
  }
}

bool compare_fixture(const Fixture& fixture, const Json& actual) {
  if (unordered_kinds().contains(fixture.kind)) return sorted(fixture.expected) == sorted(actual);
  return fixture.expected == actual;
}

bool VerifyReport::all_passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const FixtureRow& r) { return r.passed; });
}

std::size_t VerifyReport::passed_count() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const FixtureRow& r) { return r.passed; }));
}

VerifyReport verify_fixtures(const std::vector<Fixture>& fixtures) {
  VerifyReport report;
  for (const auto& f : fixtures) {
    FixtureRow row{f.id, f.kind, f.description, false, "", nullptr};
    try {
      row.actual = evaluate_fixture(f);
      row.passed = compare_fixture(f, row.actual);
    } catch (const Error& e) {
      row.error = std::string(e.code_name()) + ": " + e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

Json to_json(const VerifyReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row{{"id", r.id}, {"kind", r.kind}, {"status", r.passed ? "PASS" : "FAIL"}};
    if (!r.error.empty()) row["error"] = r.error;
    if (!r.passed && r.error.empty()) row["actual"] = r.actual;
    rows.push_back(std::move(row));
  }
  return Json{{"total", report.rows.size()},
              {"passed", report.passed_count()},
              {"all_passed", report.all_passed()},
              {"rows", rows}};
}

std::string to_table(const VerifyReport& report) {
  std::size_t id_width = 2;
  std::size_t kind_width = 4;
  for (const auto& r : report.rows) {
    id_width = std::max(id_width, r.id.size());
    kind_width = std::max(kind_width, r.kind.size());
  }
  std::ostringstream os;
  auto line = [&](const std::string& status, const std::string& id, const std::string& kind, const std::string& note) {
    os << status << "  " << id << std::string(id_width - id.size(), ' ') << "  " << kind
       << std::string(kind_width - kind.size(), ' ') << "  " << note << '\n';
  };
  line("STATUS", "ID", "KIND", "DESCRIPTION");
  for (const auto& r : report.rows) {
    line(r.passed ? "PASS  " : "FAIL  ", r.id, r.kind, r.error.empty() ? r.description : r.error);
  }
  os << report.passed_count() << "/" << report.rows.size() << " fixtures passed\n";
  return os.str();
}

}  // namespace glidekit::cli
