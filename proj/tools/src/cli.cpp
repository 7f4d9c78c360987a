#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"

#include "glidekit/error.hpp"
#include "glidekit/ktheory.hpp"
#include "glidekit/poset.hpp"
#include "fixtures.hpp"

namespace glidekit::cli {

namespace {

struct UsageError {
  std::string flag;
  std::string message;
};

constexpr const char* kFooter =
    "Compositions and partitions are comma lists such as 1,3 or 2,1,0; the empty\n"
    "string \"\" is the empty composition. Tuples of partitions or ring labels are\n"
    "separated by semicolons, e.g. \"1,0,0;2,1,0\". Rationals are printed as \"p/q\".\n"
    "Exit codes: 0 success, 1 domain error, 2 usage error.";

template <typename F>
auto parse_flag(const std::string& flag, F&& parse) -> decltype(parse()) {
  try {
    return parse();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw UsageError{flag, e.what()};
    throw;
  }
}

Composition composition_flag(const std::string& flag, const std::string& text) {
  return parse_flag(flag, [&] { return parse_composition(text); });
}

Json read_json_file(const std::string& flag, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError{flag, "cannot open '" + path + "'"};
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError{flag, "'" + path + "' is not valid JSON: " + e.what()};
  }
}

struct Options {
  bool pretty = false;
  bool timing = false;
  unsigned jobs = 1;

  std::string alpha;
  std::size_t n = 0;
  int m = 0;
  std::string method = "closed";
  bool hasse = false;
  bool mobius = false;
  std::string p;
  std::string q;
  std::string a;
  std::string b;
  int degree = -1;
  std::string input;
  bool chern = false;
  std::string lambda;
  std::string mu;
  std::string nu;
  std::size_t k = 0;
  std::string m_tuple;
  std::string n_tuple;
  std::string theta;
  std::string kappa;
  std::string ring_file;
  int schur_k = -1;
  int cap = 8;
  int cp_max = -1;
  bool direct = false;
  std::string fixtures;
  std::string format = "json";
};

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

Json qsym_bound_json(const QSymElement& f) {
  return f.degree_bound() ? Json(*f.degree_bound()) : Json(nullptr);
}

using Handler = std::function<void(const Options&, CommandResult&)>;

void cmd_poset(const Options& o, CommandResult& r) {
  const Composition alpha = composition_flag("--alpha", o.alpha);
  r.inputs = Json{{"alpha", to_json(alpha)}, {"n", o.n}};
  const GlidePoset poset = build_poset(alpha, o.n);
  r.inputs["hasse"] = o.hasse;
  r.inputs["mobius"] = o.mobius;
  Json elements = Json::array();
  for (const auto& e : poset.elements()) elements.push_back(to_json(e));
  r.result = Json{{"size", poset.size()}, {"elements", elements}};
  if (o.hasse) {
    Json covers = Json::array();
    for (const auto& [lo, hi] : poset.covers()) covers.push_back(Json::array({lo, hi}));
    r.result["covers"] = covers;
  }
  if (o.mobius) {
    const MobiusTable mu = mobius(poset);
    Json values = Json::object();
    for (std::size_t i = 0; i < poset.size(); ++i) {
      values[join_ints(poset.element(i).vec())] = to_json(mu[i]);
    }
    r.result["mobius"] = values;
  }
  if (!o.p.empty() || !o.q.empty()) {
    if (o.p.empty() || o.q.empty()) throw UsageError{o.p.empty() ? "--p" : "--q", "--p and --q must be given together"};
    const WeakComposition p = parse_flag("--p", [&] { return parse_weak_composition(o.p); });
    const WeakComposition q = parse_flag("--q", [&] { return parse_weak_composition(o.q); });
    r.inputs["p"] = to_json(p);
    r.inputs["q"] = to_json(q);
    if (!poset.contains(p) || !poset.contains(q)) {
      throw Error(ErrorCode::kNotInPoset, "--p and --q must be elements of the poset");
    }
    const MeetResult m = meet(poset, p, q);
    r.result["join"] = to_json(join(p, q));
    r.result["meet"] = std::holds_alternative<Bottom>(m) ? Json(nullptr) : to_json(std::get<WeakComposition>(m));
  }
}

void cmd_glide(const Options& o, CommandResult& r) {
  const Composition alpha = composition_flag("--alpha", o.alpha);
  const GlideMethod method = parse_flag("--method", [&] { return parse_glide_method(o.method); });
  r.inputs = Json{{"alpha", to_json(alpha)}, {"n", o.n}, {"method", std::string(glide_method_name(method))}};
  r.result = to_json(glide_polynomial(alpha, o.n, method));
}

std::optional<int> degree_option(const Options& o) {
  if (o.degree < 0) return std::nullopt;
  return o.degree;
}

void cmd_mprod(const Options& o, CommandResult& r) {
  const Composition a = composition_flag("--a", o.a);
  const Composition b = composition_flag("--b", o.b);
  const auto bound = degree_option(o);
  r.inputs = Json{{"a", to_json(a)}, {"b", to_json(b)}, {"degree", bound ? Json(*bound) : Json(nullptr)}};
  const QSymElement product = m_multiply(QSymElement::monomial(a, 1, bound), QSymElement::monomial(b, 1, bound));
  r.result = Json{{"degree_bound", qsym_bound_json(product)}, {"terms", to_json(product)}};
}

void cmd_shuffle(const Options& o, CommandResult& r) {
  const Composition a = composition_flag("--a", o.a);
  const Composition b = composition_flag("--b", o.b);
  r.inputs = Json{{"a", to_json(a)}, {"b", to_json(b)}};
  r.result = Json::array();
  for (const auto& [gamma, mult] : overlapping_shuffle(a, b)) {
    r.result.push_back(Json{{"composition", to_json(gamma)}, {"multiplicity", to_json(mult)}});
  }
}

void cmd_glide_expand(const Options& o, CommandResult& r) {
  const Json doc = read_json_file("--input", o.input);
  const QSymElement f = parse_flag("--input", [&] { return qsym_from_json(doc); });
  r.inputs = Json{{"input", Json{{"degree_bound", qsym_bound_json(f)}, {"terms", to_json(f)}}}, {"degree", o.degree}};
  r.result = to_json(glide_expand(f, o.degree));
}

void cmd_glide_struct(const Options& o, CommandResult& r) {
  const Composition a = composition_flag("--a", o.a);
  const Composition b = composition_flag("--b", o.b);
  r.inputs = Json{{"a", to_json(a)}, {"b", to_json(b)}, {"degree", o.degree}};
  r.result = to_json(glide_structure_constants(a, b, o.degree));
}

void cmd_kclass(const Options& o, CommandResult& r) {
  const Composition alpha = composition_flag("--alpha", o.alpha);
  r.inputs = Json{{"alpha", to_json(alpha)}, {"n", o.n}, {"m", o.m}, {"chern", o.chern}};
  const KRingElement cls = knutson_class(alpha, o.n, o.m);
  r.result = Json{{"n", cls.n()}, {"m", cls.m()}, {"class", to_json(cls.poly())}};
  if (o.chern) {
    const SparsePoly x = chern_substitute(cls);
    r.result["chern"] = to_json(x);
    r.result["chern_quasisymmetric"] = is_quasisymmetric(x, cls.n());
  }
}

Partition partition_flag(const std::string& flag, const std::string& text) {
  return parse_flag(flag, [&] { return parse_partition(text); });
}

PartitionTuple tuple_flag(const std::string& flag, const std::string& text) {
  return parse_flag(flag, [&] { return parse_partition_tuple(text); });
}

Json tuple_json(const PartitionTuple& t) {
  Json out = Json::array();
  for (const auto& p : t.parts()) out.push_back(to_json(p));
  return out;
}

void cmd_lr(const Options& o, CommandResult& r) {
  const Partition lambda = partition_flag("--lambda", o.lambda);
  const Partition mu = partition_flag("--mu", o.mu);
  const Partition nu = partition_flag("--nu", o.nu);
  r.inputs = Json{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"nu", to_json(nu)}};
  r.result = Json{{"coefficient", to_json(lr_coefficient(lambda, mu, nu))}};
}

void cmd_buk(const Options& o, CommandResult& r) {
  const PartitionTuple lambda = tuple_flag("--lambda", o.lambda);
  const PartitionTuple mu = tuple_flag("--m", o.m_tuple);
  const PartitionTuple nu = tuple_flag("--n", o.n_tuple);
  r.inputs = Json{{"k", o.k}, {"lambda", tuple_json(lambda)}, {"m", tuple_json(mu)}, {"n", tuple_json(nu)}};
  r.result = Json{{"coefficient", to_json(buk_structure_constant(lambda, mu, nu, o.k, o.jobs))}};
}

void cmd_rprod(const Options& o, CommandResult& r) {
  const int sources = (o.ring_file.empty() ? 0 : 1) + (o.schur_k >= 0 ? 1 : 0) + (o.cp_max >= 0 ? 1 : 0);
  if (sources != 1) throw UsageError{"--ring", "give exactly one of --ring, --schur, --cp"};
  Json ring_input;
  std::optional<GradedRingData> ring;
  if (!o.ring_file.empty()) {
    const Json doc = read_json_file("--ring", o.ring_file);
    ring = ring_from_json(doc);
    ring_input = Json{{"file", o.ring_file}};
  } else if (o.schur_k >= 0) {
    ring = schur_ring_data(static_cast<std::size_t>(o.schur_k), o.cap);
    ring_input = Json{{"schur", o.schur_k}, {"cap", o.cap}};
  } else {
    ring = cp_infinity_ring(o.cp_max);
    ring_input = Json{{"cp", o.cp_max}};
  }
  const LabelTuple theta = split(o.theta, ';');
  const LabelTuple kappa = split(o.kappa, ';');
  r.inputs = Json{{"ring", ring_input}, {"theta", theta}, {"kappa", kappa}, {"n", o.n}, {"direct", o.direct}};
  const auto product = o.direct ? qsym_r_product_direct(theta, kappa, *ring) : qsym_r_product(theta, kappa, *ring, o.n);
  r.result = Json::array();
  for (const auto& [tuple, c] : product) r.result.push_back(Json{{"tuple", tuple}, {"coeff", to_json(c)}});
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CommandResult r;
  Options o;
  CLI::App app{"glidekit: exact computations with quasisymmetric monomial glides", "glidekit"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.add_flag("--pretty", o.pretty, "Indent JSON output");
  app.add_flag("--timing", o.timing, "Add elapsed_ms to the output");
  app.add_option("--jobs", o.jobs, "Worker threads for data-parallel paths")->check(CLI::PositiveNumber);

  std::map<CLI::App*, Handler> handlers;
  auto sub = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->footer(kFooter);
    handlers[s] = std::move(h);
    return s;
  };

  auto* poset = sub("poset", "String poset elements, covers and Mobius values", cmd_poset);
  poset->add_option("--alpha", o.alpha, "Composition")->required();
  poset->add_option("--n", o.n, "String length")->required();
  poset->add_flag("--hasse", o.hasse, "Include cover relations as index pairs");
  poset->add_flag("--mobius", o.mobius, "Include Mobius values keyed by element");
  poset->add_option("--p", o.p, "Element for join/meet");
  poset->add_option("--q", o.q, "Element for join/meet");

  auto* glide = sub("glide", "Monomial glide polynomial in y_1..y_n", cmd_glide);
  glide->add_option("--alpha", o.alpha, "Composition")->required();
  glide->add_option("--n", o.n, "Number of variables")->required();
  glide->add_option("--method", o.method, "poset | barred | closed");

  auto* mprod = sub("mprod", "Product of two monomial quasisymmetric functions", cmd_mprod);
  mprod->add_option("--a", o.a, "Composition")->required();
  mprod->add_option("--b", o.b, "Composition")->required();
  mprod->add_option("--degree", o.degree, "Drop terms above this degree");

  auto* shuffle = sub("shuffle", "Overlapping shuffle with multiplicities", cmd_shuffle);
  shuffle->add_option("--a", o.a, "Composition")->required();
  shuffle->add_option("--b", o.b, "Composition")->required();

  auto* expand = sub("glide-expand", "Expand an M-basis element in the glide basis", cmd_glide_expand);
  expand->add_option("--input", o.input, "JSON file with M-basis terms")->required();
  expand->add_option("--degree", o.degree, "Truncation degree")->required()->check(CLI::NonNegativeNumber);

  auto* gstruct = sub("glide-struct", "Glide-basis expansion of a product of two glides", cmd_glide_struct);
  gstruct->add_option("--a", o.a, "Composition")->required();
  gstruct->add_option("--b", o.b, "Composition")->required();
  gstruct->add_option("--degree", o.degree, "Truncation degree")->required()->check(CLI::NonNegativeNumber);

  auto* kclass = sub("kclass", "K-class of the union of products of projective subspaces", cmd_kclass);
  kclass->add_option("--alpha", o.alpha, "Composition")->required();
  kclass->add_option("--n", o.n, "Number of factors")->required();
  kclass->add_option("--m", o.m, "Dimension of each projective factor")->required();
  kclass->add_flag("--chern", o.chern, "Also apply the Chern character substitution");

  auto* lr = sub("lr", "Littlewood-Richardson coefficient", cmd_lr);
  lr->add_option("--lambda", o.lambda, "Partition")->required();
  lr->add_option("--mu", o.mu, "Partition")->required();
  lr->add_option("--nu", o.nu, "Partition")->required();

  auto* buk = sub("buk", "Structure constant for tuples of partitions", cmd_buk);
  buk->add_option("--k", o.k, "Partition length")->required();
  buk->add_option("--lambda", o.lambda, "First tuple")->required();
  buk->add_option("--m", o.m_tuple, "Second tuple")->required();
  buk->add_option("--n", o.n_tuple, "Target tuple")->required();

  auto* rprod = sub("rprod", "Product of M_Theta and M_Kappa over a graded ring", cmd_rprod);
  rprod->add_option("--theta", o.theta, "Label tuple")->required();
  rprod->add_option("--kappa", o.kappa, "Label tuple")->required();
  rprod->add_option("--n", o.n, "Number of tensor slots (>= total length)");
  rprod->add_option("--ring", o.ring_file, "Ring JSON file");
  rprod->add_option("--schur", o.schur_k, "Use the Schur ring on partitions of this length");
  rprod->add_option("--cap", o.cap, "Degree cap for --schur");
  rprod->add_option("--cp", o.cp_max, "Use the CP^infinity cell ring truncated at this power");
  rprod->add_flag("--direct", o.direct, "Use the collision shuffle instead of the tensor power");

  auto* verify = sub("verify-paper", "Recompute every stored fixture and compare exactly", nullptr);
  verify->add_option("--fixtures", o.fixtures, "Read fixtures from this directory instead of the built-in set");
  verify->add_option("--format", o.format, "json | table")->check(CLI::IsMember({"json", "table"}));

  std::vector<const char*> argv{"glidekit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    r.out = app.help();
    return r;
  } catch (const CLI::CallForAllHelp&) {
    r.out = app.help("", CLI::AppFormatMode::All);
    return r;
  } catch (const CLI::ParseError& e) {
    r.exit_code = kExitUsage;
    r.err = Json{{"schema", kSchema}, {"error", {{"code", "Usage"}, {"message", e.what()}}}}.dump() + "\n";
    return r;
  }

  CLI::App* chosen = app.get_subcommands().front();
  r.command = chosen->get_name();
  if (chosen->get_name() == "rprod" && o.n == 0) {
    o.n = split(o.theta, ';').size() + split(o.kappa, ';').size();
  }
  const int indent = o.pretty ? 2 : -1;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (chosen == verify) {
      const auto fixtures = o.fixtures.empty() ? load_embedded_fixtures() : load_fixture_dir(o.fixtures);
      const VerifyReport report = verify_fixtures(fixtures);
      r.inputs = Json{{"fixtures", o.fixtures.empty() ? Json("built-in") : Json(o.fixtures)}};
      r.result = to_json(report);
      if (!report.all_passed()) r.exit_code = kExitDomain;
      if (o.format == "table") {
        r.out = to_table(report);
        return r;
      }
    } else {
      handlers.at(chosen)(o, r);
    }
  } catch (const UsageError& e) {
    r.exit_code = kExitUsage;
    r.err = Json{{"schema", kSchema}, {"command", r.command}, {"error", {{"code", "Usage"}, {"flag", e.flag}, {"message", e.message}}}}.dump() + "\n";
    return r;
  } catch (const Error& e) {
    r.exit_code = kExitDomain;
    r.err = Json{{"schema", kSchema}, {"command", r.command},
                 {"error", {{"code", std::string(e.code_name())}, {"message", e.what()}}}}.dump() + "\n";
    return r;
  } catch (const nlohmann::json::exception& e) {
    r.exit_code = kExitUsage;
    r.err = Json{{"schema", kSchema}, {"command", r.command}, {"error", {{"code", "Usage"}, {"message", e.what()}}}}.dump() + "\n";
    return r;
  } catch (const std::exception& e) {
    r.exit_code = kExitDomain;
    r.err = Json{{"schema", kSchema}, {"command", r.command}, {"error", {{"code", "Internal"}, {"message", e.what()}}}}.dump() + "\n";
    return r;
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  Json doc{{"schema", kSchema}, {"command", r.command}, {"inputs", r.inputs}, {"exact", r.exact}, {"result", r.result}};
  if (o.timing) doc["elapsed_ms"] = r.elapsed_ms;
  r.out = doc.dump(indent) + "\n";
  return r;
}

}  // namespace glidekit::cli
