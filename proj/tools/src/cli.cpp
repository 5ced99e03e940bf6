#include "rootcircles/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "rootcircles/audit.hpp"
#include "rootcircles/p1_bundles.hpp"
#include "rootcircles/reports.hpp"

namespace rootcircles::cli {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : s) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  out.push_back(current);
  return out;
}

Int parse_int(const std::string& token) {
  if (token.empty())
    throw std::invalid_argument("empty integer token");
  size_t consumed = 0;
  Int value = 0;
  try {
    value = std::stoll(token, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument("'" + token + "' is not an integer");
  }
  if (consumed != token.size())
    throw std::invalid_argument("'" + token + "' is not an integer");
  return value;
}

std::vector<Int> parse_int_list(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer list");
  std::vector<Int> out;
  for (const auto& token : split(s, ',')) out.push_back(parse_int(token));
  return out;
}

const char* kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::projective:
      return "projective";
    case ModelKind::quadric:
      return "quadric";
    case ModelKind::grassmannian:
      return "grassmannian";
    case ModelKind::flag:
      return "flag";
    case ModelKind::spinor:
      return "spinor";
    case ModelKind::lagrangian:
      return "lagrangian";
  }
  throw std::logic_error("unreachable model kind");
}

// What one parsed invocation resolved to: the parabolic, the label used in
// headers and JSON, and whether the rank-3 D-series note applies.
struct Resolved {
  Parabolic p;
  std::string label;
};

Resolved resolve_model(const std::string& model_str,
                       const std::string& type_str,
                       const std::string& cross_str) {
  const bool named = !model_str.empty();
  const bool generic = !type_str.empty() || !cross_str.empty();
  if (named && generic)
    throw std::invalid_argument(
        "choose either --model or --type/--cross, not both");
  if (named) {
    const auto spec = parse_model(model_str);
    return {make_model(spec), format_model(spec)};
  }
  if (type_str.empty() || cross_str.empty())
    throw std::invalid_argument(
        "a model is required: --model name:params, or --type Xn --cross "
        "i,j,...");
  const auto type = parse_lie_type(type_str);
  std::set<int> crossed;
  for (Int k : parse_int_list(cross_str)) crossed.insert(static_cast<int>(k));
  auto p = make_parabolic(build_root_system(type), crossed);
  std::ostringstream label;
  label << to_string(type) << " crossed {";
  bool first = true;
  for (int k : crossed) {
    if (!first) label << ",";
    first = false;
    label << k;
  }
  label << "}";
  return {std::move(p), label.str()};
}

bool is_rank3_d(const Parabolic& p) {
  return p.rs.type.family == Family::D && p.rs.type.rank == 3;
}

constexpr const char* kD3Note =
    "note: D3 is the rank-3 member of the D series (isomorphic to A3)";

std::string crossed_set(const Parabolic& p) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int k : p.crossed) {
    if (!first) os << ",";
    first = false;
    os << k;
  }
  os << "}";
  return os.str();
}

std::string nodes_line(const AlphaString& s) {
  std::ostringstream os;
  for (size_t i = 0; i < s.nodes.size(); ++i) {
    if (i) os << " ";
    os << to_string(Root{s.nodes[i].v});
  }
  return os.str();
}

ordered_json splitting_json(const SplittingType& s) {
  auto o = ordered_json::object();
  for (const auto& [degree, mult] : s.summands)
    o[std::to_string(degree)] = mult;
  return o;
}

ordered_json report_json(const Resolved& model, const FlatnessReport& flat,
                         const std::vector<size_t>& selected) {
  ordered_json doc;
  doc["model"] = model.label;
  doc["dim_g"] = model.p.rs.dim_g();
  doc["dim_gp"] = dim_gp(model.p);
  auto alphas = ordered_json::array();
  for (size_t index : selected) {
    const auto& r = flat.per_alpha[index];
    ordered_json entry;
    entry["alpha"] = to_string(r.alpha);
    auto strings = ordered_json::array();
    for (const auto& s : r.strings) {
      ordered_json item;
      auto nodes = ordered_json::array();
      for (const auto& node : s.nodes) nodes.push_back(to_string(Root{node.v}));
      item["nodes"] = std::move(nodes);
      item["n_s"] = s.n_s;
      item["d_s"] = s.d_s;
      strings.push_back(std::move(item));
    }
    entry["strings"] = std::move(strings);
    entry["tangent"] = splitting_json(r.tangent);
    entry["curvature"] = splitting_json(r.curvature);
    entry["h0"] = r.h0_curvature;
    entry["alpha_slot_max_degree"] = r.alpha_slot_max_degree;
    entry["contraction_vanishes"] = r.contraction_vanishes;
    alphas.push_back(std::move(entry));
  }
  doc["alphas"] = std::move(alphas);
  doc["verdict"] = flat.verdict;
  return doc;
}

void print_model_header(std::ostream& out, const Resolved& model) {
  out << "model: " << model.label;
  // named models also show the underlying type and crossed nodes
  const std::string type_str = to_string(model.p.rs.type);
  if (model.label.find(type_str + " crossed") != 0)
    out << " (" << type_str << ", crossed " << crossed_set(model.p) << ")";
  out << "\n";
  if (is_rank3_d(model.p)) out << kD3Note << "\n";
  out << "dim g = " << model.p.rs.dim_g() << ", dim g/p = " << dim_gp(model.p)
      << "\n";
}

void print_report_text(std::ostream& out, const Resolved& model,
                       const FlatnessReport& flat,
                       const std::vector<size_t>& selected) {
  print_model_header(out, model);
  for (size_t index : selected) {
    const auto& r = flat.per_alpha[index];
    out << "alpha = " << to_string(r.alpha) << "\n";
    size_t counter = 0;
    for (const auto& s : r.strings)
      out << "  string " << ++counter << ": " << nodes_line(s) << "  [n="
          << s.n_s << ", d=" << s.d_s << "]\n";
    out << "  tangent   = " << to_string(r.tangent) << "\n";
    out << "  curvature = " << to_string(r.curvature) << "\n";
    out << "  h0(curvature) = " << r.h0_curvature << "\n";
    out << "  contraction slot max degree = " << r.alpha_slot_max_degree
        << " -> contraction "
        << (r.contraction_vanishes ? "vanishes" : "survives") << "\n";
  }
  out << "verdict: " << (flat.verdict ? "flat" : "curvature obstruction")
      << "\n";
}

void print_flatness_text(std::ostream& out, const Resolved& model,
                         const FlatnessReport& flat) {
  print_model_header(out, model);
  for (const auto& r : flat.per_alpha)
    out << "alpha " << to_string(r.alpha) << ": tangent "
        << to_string(r.tangent) << ", slot max degree "
        << r.alpha_slot_max_degree << " -> "
        << (r.contraction_vanishes ? "vanishes" : "survives") << "\n";
  out << "verdict: " << (flat.verdict ? "flat" : "curvature obstruction")
      << "\n";
}

// --------------------------------------------------------------------------
// subcommand handlers
// --------------------------------------------------------------------------

struct Options {
  std::string model;
  std::string type;
  std::string cross;
  std::string alpha;
  bool all_alphas = false;
  std::string format = "text";
  std::string rep;
};

void require_format(const Options& opt) {
  if (opt.format != "text" && opt.format != "json")
    throw std::invalid_argument("--format must be text or json (got '" +
                                opt.format + "')");
}

int run_report(const Options& opt, bool all_alphas_forced, std::ostream& out,
               std::ostream& err) {
  require_format(opt);
  const auto model = resolve_model(opt.model, opt.type, opt.cross);
  const bool all = all_alphas_forced || opt.all_alphas;
  if (all && !opt.alpha.empty())
    throw std::invalid_argument("choose either --alpha or --all-alphas");
  if (!all && opt.alpha.empty())
    throw std::invalid_argument(
        "choose a circle: --alpha c1,...,cr or --all-alphas");

  const auto flat = flatness_report(model.p);
  std::vector<size_t> selected;
  if (all) {
    for (size_t i = 0; i < flat.per_alpha.size(); ++i) selected.push_back(i);
  } else {
    const auto coeffs = parse_int_list(opt.alpha);
    const Root alpha{Vec(coeffs.begin(), coeffs.end())};
    std::optional<size_t> found;
    for (size_t i = 0; i < model.p.omitted.size(); ++i)
      if (model.p.omitted[i].c == alpha.c) found = i;
    if (!found) {
      std::ostringstream os;
      os << "alpha " << to_string(alpha)
         << " is not an omitted root of " << model.label
         << "; omitted roots:";
      for (const auto& r : model.p.omitted) os << " " << to_string(r);
      throw std::invalid_argument(os.str());
    }
    selected.push_back(*found);
  }

  if (opt.format == "json") {
    if (is_rank3_d(model.p)) err << kD3Note << "\n";
    out << report_json(model, flat, selected).dump(2) << "\n";
  } else {
    print_report_text(out, model, flat, selected);
  }
  return 0;
}

int run_audit(const Options& opt, std::ostream& out) {
  if (opt.model.empty())
    throw std::invalid_argument("audit needs --model (flag, grassmannian, "
                                "projective, spinor or lagrangian)");
  const auto spec = parse_model(opt.model);
  std::vector<AuditRow> rows;
  switch (spec.kind) {
    case ModelKind::projective:
      rows = audit_flag(FlagShape{{1, spec.params[0]}});
      break;
    case ModelKind::grassmannian:
      rows = audit_flag(
          FlagShape{{spec.params[0], spec.params[1] - spec.params[0]}});
      break;
    case ModelKind::flag: {
      FlagShape shape;
      shape.blocks = spec.params;
      rows = audit_flag(shape);
      break;
    }
    case ModelKind::spinor:
      rows = audit_spinor(spec.params[0]);
      break;
    case ModelKind::lagrangian:
      rows = audit_lagrangian(spec.params[0]);
      break;
    default:
      throw std::invalid_argument("no closed-form audit for model '" +
                                  format_model(spec) + "'");
  }
  out << "model: " << format_model(spec) << "\n";
  for (const auto& row : rows)
    out << "circle " << row.circle << "  " << row.quantity << "  claimed "
        << row.claimed << "  computed " << row.computed << "  "
        << to_string(row.match) << "\n";
  return 0;
}

int run_p1(const Options& opt, std::ostream& out) {
  const auto values = parse_int_list(opt.rep);
  if (values.size() != 2)
    throw std::invalid_argument("--rep needs exactly two integers k,m (got '" +
                                opt.rep + "')");
  const auto rep = make_bstring_rep(values[0], values[1]);
  const auto cm = canonical_matrices(rep);
  out << "string representation: top weight " << rep.top_weight << ", "
      << rep.node_count << (rep.node_count == 1 ? " node" : " nodes") << "\n";
  out << "weights:";
  for (Int w : weights(rep)) out << " " << w;
  out << "\n";
  out << "X superdiagonal:";
  if (rep.node_count == 1) out << " (none)";
  for (Int i = 0; i + 1 < rep.node_count; ++i)
    out << " " << cm.x[static_cast<size_t>(i)][static_cast<size_t>(i) + 1];
  out << "\n";
  out << "bundle: " << to_string(to_splitting(rep)) << "\n";
  out << "equivariantly trivial: "
      << (is_equivariantly_trivial(rep) ? "yes" : "no") << "\n";
  return 0;
}

int run_roots(const Options& opt, std::ostream& out) {
  const auto type = parse_lie_type(opt.type);
  const auto rs = build_root_system(type);
  out << "type " << to_string(type) << " (dim g = " << rs.dim_g()
      << ", rank " << rs.rank() << ")\n";
  out << "cartan matrix:\n";
  for (const auto& row : rs.cartan) {
    out << "  [";
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out << " ";
      out << row[j];
    }
    out << "]\n";
  }
  out << "symmetrizer: " << to_string(Root{rs.symmetrizer}) << "\n";
  out << "positive roots (" << rs.positive_roots.size() << "):\n";
  for (const auto& r : rs.positive_roots) out << "  " << to_string(r) << "\n";
  out << "highest root: " << to_string(rs.positive_roots.back()) << "\n";
  if (type.family == Family::D && type.rank == 3) out << kD3Note << "\n";
  return 0;
}

}  // namespace

ModelSpec parse_model(const std::string& token) {
  const auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse model '" + token + "': " + why);
  };
  const auto colon = token.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= token.size())
    fail("expected name:params");
  const std::string name = token.substr(0, colon);
  std::vector<int> params;
  try {
    for (Int v : parse_int_list(token.substr(colon + 1)))
      params.push_back(static_cast<int>(v));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }

  const auto arity = [&](size_t want) {
    if (params.size() != want)
      fail("expected " + std::to_string(want) +
           (want == 1 ? " parameter" : " parameters"));
  };
  ModelSpec spec;
  if (name == "projective") {
    spec.kind = ModelKind::projective;
    arity(1);
    if (params[0] < 1) fail("projective dimension must be >= 1");
  } else if (name == "quadric") {
    spec.kind = ModelKind::quadric;
    arity(1);
    if (params[0] < 3) fail("quadric dimension must be >= 3");
  } else if (name == "grassmannian") {
    spec.kind = ModelKind::grassmannian;
    arity(2);
    const int k = params[0], n = params[1];
    if (n < 2 || k < 1 || k >= n) fail("grassmannian needs 1 <= k < n");
    if (k == 1 || k == n - 1) {
      spec.kind = ModelKind::projective;
      params = {n - 1};
    }
  } else if (name == "flag") {
    spec.kind = ModelKind::flag;
    if (params.size() < 2) fail("flag needs at least two block sizes");
    for (int b : params)
      if (b < 1) fail("flag block sizes must be positive");
  } else if (name == "spinor") {
    spec.kind = ModelKind::spinor;
    arity(1);
    if (params[0] < 3) fail("spinor rank must be >= 3");
  } else if (name == "lagrangian") {
    spec.kind = ModelKind::lagrangian;
    arity(1);
    if (params[0] < 2) fail("lagrangian rank must be >= 2");
  } else {
    fail("unknown model name '" + name + "'");
  }
  spec.params = std::move(params);
  return spec;
}

std::string format_model(const ModelSpec& spec) {
  std::ostringstream os;
  os << kind_name(spec.kind) << ":";
  for (size_t i = 0; i < spec.params.size(); ++i) {
    if (i) os << ",";
    os << spec.params[i];
  }
  return os.str();
}

Parabolic make_model(const ModelSpec& spec) {
  switch (spec.kind) {
    case ModelKind::projective:
      return projective_space(spec.params[0]);
    case ModelKind::quadric:
      return quadric(spec.params[0]);
    case ModelKind::grassmannian:
      return grassmannian(spec.params[0], spec.params[1]);
    case ModelKind::flag: {
      FlagShape shape;
      shape.blocks = spec.params;
      return flag_variety(shape);
    }
    case ModelKind::spinor:
      return spinor_variety(spec.params[0]);
    case ModelKind::lagrangian:
      return lagrangian_grassmannian(spec.params[0]);
  }
  throw std::logic_error("unreachable model kind");
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact splitting types of tangent and curvature bundles of "
               "G/P along root circles"};
  app.name("rootcircles");
  app.require_subcommand(1);

  Options opt;

  auto* report = app.add_subcommand(
      "report", "alpha-strings, tangent and curvature splittings per circle");
  report->add_option("--model", opt.model, "named model, e.g. projective:3");
  report->add_option("--type", opt.type, "Lie type, e.g. D4");
  report->add_option("--cross", opt.cross, "crossed nodes, e.g. 1,4");
  report->add_option("--alpha", opt.alpha,
                     "coefficients of one omitted root, e.g. -1,0");
  report->add_flag("--all-alphas", opt.all_alphas, "report every circle");
  report->add_option("--format", opt.format, "text or json");

  auto* flatness = app.add_subcommand(
      "flatness", "per-circle contraction check and the flatness verdict");
  flatness->add_option("--model", opt.model, "named model");
  flatness->add_option("--type", opt.type, "Lie type");
  flatness->add_option("--cross", opt.cross, "crossed nodes");
  flatness->add_option("--format", opt.format, "text or json");

  auto* audit = app.add_subcommand(
      "audit", "closed-form splitting counts vs the computed ones");
  audit->add_option("--model", opt.model,
                    "flag, grassmannian, projective, spinor or lagrangian");

  auto* p1 = app.add_subcommand(
      "p1", "string representation calculus on the projective line");
  p1->add_option("--rep", opt.rep, "top weight and node count, e.g. 2,3")
      ->required();

  auto* roots = app.add_subcommand("roots", "root system of one simple type");
  roots->add_option("--type", opt.type, "Lie type, e.g. B2")->required();

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("rootcircles");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(argv_store.size());
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(report)) return run_report(opt, false, out, err);
    if (app.got_subcommand(flatness)) {
      require_format(opt);
      if (opt.format == "json") return run_report(opt, true, out, err);
      const auto model = resolve_model(opt.model, opt.type, opt.cross);
      print_flatness_text(out, model, flatness_report(model.p));
      return 0;
    }
    if (app.got_subcommand(audit)) return run_audit(opt, out);
    if (app.got_subcommand(p1)) return run_p1(opt, out);
    if (app.got_subcommand(roots)) return run_roots(opt, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace rootcircles::cli
