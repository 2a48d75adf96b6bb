// Command-line front end. Exit codes: 0 ok, 1 parse error, 2 precondition
// failure, 3 verification failure.

#include "toricforge/catalog.hpp"
#include "toricforge/error.hpp"
#include "toricforge/io.hpp"
#include "toricforge/report.hpp"
#include "toricforge/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace toricforge;

namespace {

enum Exit { Ok = 0, ParseFailure = 1, Precondition = 2, VerificationFailure = 3 };

struct Config {
  std::string solid;
  std::string input;
  std::string vertex;
  std::string triple;
  std::string offset;
  std::string normal;
  std::string format = "json";
  int precision = 0;
  double tol = 1e-9;
  std::uint64_t seed = 20240601;
  bool criteria = false;
  std::vector<std::string> catalog_args;
};

int exit_for(ErrorCode c) {
  return c == ErrorCode::Parse || c == ErrorCode::UnknownSolid ? ParseFailure : Precondition;
}

void emit_error(const Config& cfg, ErrorCode code, const std::string& message) {
  if (cfg.format == "md") {
    std::cerr << "error " << error_code_name(code) << ": " << message << "\n";
    return;
  }
  Json j = {{"error", {{"code", std::string(error_code_name(code))}, {"message", message}}}};
  std::cerr << j.dump(2) << "\n";
}

void emit(const Config& cfg, const Report& r) {
  if (cfg.format == "md")
    std::cout << r.markdown;
  else
    std::cout << r.json.dump(2) << "\n";
}

Instance load_instance(const Config& cfg) {
  if (!cfg.solid.empty() && !cfg.input.empty()) throw Error(ErrorCode::InvalidArgument, "give either --solid or --input");
  if (!cfg.solid.empty()) {
    SolidEntry e = get_solid(cfg.solid);
    return Instance{e.name, e.polytope, e.lattice};
  }
  if (cfg.input.empty()) throw Error(ErrorCode::InvalidArgument, "an instance is required: --solid NAME or --input FILE");
  std::ifstream f(cfg.input);
  if (!f) throw Error(ErrorCode::Parse, "cannot read '" + cfg.input + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_instance_text(ss.str());
}

int parse_vertex(const std::string& text, const Instance& in) {
  std::string s = text;
  if (s.rfind("nu", 0) == 0 || s.rfind("ν", 0) == 0) s = s.substr(s[0] == 'n' ? 2 : std::string("ν").size());
  int v = 0;
  try {
    std::size_t used = 0;
    v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "field '--vertex': expected nuK or K, got '" + text + "'");
  }
  int count = static_cast<int>(in.polytope.vertices().size());
  if (v < 1 || v > count)
    throw Error(ErrorCode::InvalidArgument, "vertex " + text + " out of range 1.." + std::to_string(count));
  return v - 1;
}

IndexSet parse_triple(const std::string& text, const Instance& in) {
  IndexSet out;
  std::stringstream ss(text);
  std::string item;
  int m = static_cast<int>(in.polytope.num_facets());
  while (std::getline(ss, item, ',')) {
    int j = 0;
    try {
      std::size_t used = 0;
      j = std::stoi(item, &used);
      while (used < item.size() && item[used] == ' ') ++used;
      if (used != item.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "field '--triple': expected comma-separated facet indices, got '" + text + "'");
    }
    if (j < 1 || j > m) throw Error(ErrorCode::InvalidArgument, "facet " + std::to_string(j) + " out of range");
    out.push_back(j - 1);
  }
  std::sort(out.begin(), out.end());
  if (out.size() != in.polytope.dim() || std::adjacent_find(out.begin(), out.end()) != out.end())
    throw Error(ErrorCode::DimMismatch, "--triple needs " + std::to_string(in.polytope.dim()) + " distinct facets");
  return out;
}

Scalar parse_scalar_flag(const std::string& text, const std::string& flag) {
  try {
    return Scalar::parse(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, "field '" + flag + "': " + e.what());
  }
}

VerifyOptions verify_options(const Config& cfg) {
  VerifyOptions o;
  o.tol = cfg.tol;
  o.seed = cfg.seed;
  o.precision = cfg.precision;
  return o;
}

int run_catalog(const Config& cfg) {
  const auto& args = cfg.catalog_args;
  if (args.empty() || args[0] == "list") {
    emit(cfg, catalog_list_report());
    return Ok;
  }
  if (args[0] == "show") {
    std::string name = args.size() > 1 ? args[1] : cfg.solid;
    if (name.empty()) throw Error(ErrorCode::Parse, "catalog show needs a solid name");
    emit(cfg, catalog_show_report(get_solid(name)));
    return Ok;
  }
  throw Error(ErrorCode::Parse, "unknown catalog action '" + args[0] + "'");
}

int run_verify(const Config& cfg) {
  VerifyOptions o = verify_options(cfg);
  if (cfg.criteria) {
    auto results = acceptance_criteria(o);
    Report r = criteria_report(results);
    emit(cfg, r);
    return r.json["pass"].get<bool>() ? Ok : VerificationFailure;
  }
  std::vector<std::pair<std::string, std::vector<Check>>> groups;
  if (cfg.solid == "all") {
    for (const auto& name : solid_names()) groups.emplace_back(name, verify_solid(name, o));
  } else if (!cfg.solid.empty() && cfg.input.empty()) {
    get_solid(cfg.solid);
    groups.emplace_back(cfg.solid, verify_solid(cfg.solid, o));
  } else {
    Instance in = load_instance(cfg);
    groups.emplace_back(in.name, verify_instance(DelzantInput::make(in.polytope, in.lattice), o));
  }
  Report r = checks_report("Verification", groups);
  emit(cfg, r);
  return r.json["pass"].get<bool>() ? Ok : VerificationFailure;
}

Report full_report(const Instance& in) {
  Report c = classify_report(in);
  Report r;
  r.json["input"] = c.json["input"];
  c.json.erase("input");
  r.json["classification"] = c.json;
  r.markdown = c.markdown;
  bool ok = c.json["quasirational"].get<bool>();
  if (!ok) return r;
  Report d = delzant_report(in);
  d.json.erase("input");
  r.json["delzant"] = d.json;
  r.markdown += "\n" + d.markdown;
  if (in.polytope.dim() == 3) {
    Report s = stratification_json_report(in);
    s.json.erase("input");
    r.json["stratification"] = s.json;
    r.markdown += "\n" + s.markdown;
    Report a = charts_report(in, std::nullopt, std::nullopt);
    a.json.erase("input");
    r.json["atlas"] = a.json;
    r.markdown += "\n" + a.markdown;
  }
  return r;
}

int dispatch(const std::string& verb, const Config& cfg) {
  if (verb == "catalog") return run_catalog(cfg);
  if (verb == "verify") return run_verify(cfg);
  Instance in = load_instance(cfg);
  if (verb == "classify") {
    emit(cfg, classify_report(in));
  } else if (verb == "delzant") {
    emit(cfg, delzant_report(in));
  } else if (verb == "charts") {
    std::optional<int> v;
    std::optional<IndexSet> t;
    if (!cfg.vertex.empty()) v = parse_vertex(cfg.vertex, in);
    if (!cfg.triple.empty()) {
      if (!v) throw Error(ErrorCode::InvalidArgument, "--triple requires --vertex");
      t = parse_triple(cfg.triple, in);
    }
    emit(cfg, charts_report(in, v, t));
  } else if (verb == "link") {
    if (cfg.vertex.empty()) throw Error(ErrorCode::InvalidArgument, "link requires --vertex");
    int v = parse_vertex(cfg.vertex, in);
    PlaneOverride o;
    if (!cfg.offset.empty()) o.offset = parse_scalar_flag(cfg.offset, "--offset");
    if (!cfg.normal.empty()) {
      Vec n;
      std::stringstream ss(cfg.normal);
      std::string item;
      while (std::getline(ss, item, ',')) n.push_back(parse_scalar_flag(item, "--normal"));
      if (n.size() != in.polytope.dim()) throw Error(ErrorCode::DimMismatch, "--normal has the wrong length");
      o.normal = n;
    }
    emit(cfg, link_report(in, v, o));
  } else if (verb == "report") {
    emit(cfg, full_report(in));
  }
  return Ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasifold toric geometry for convex polytopes"};
  app.require_subcommand(1, 1);
  Config cfg;
  if (const char* env = std::getenv("TORICFORGE_PRECISION")) cfg.precision = std::atoi(env);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--solid", cfg.solid, "catalog solid (or 'all' for verify)");
    sub->add_option("--input", cfg.input, "polytope JSON file");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "md"}));
    sub->add_option("--precision", cfg.precision, "float precision in bits");
    sub->add_option("--tol", cfg.tol, "float tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed for sampled points");
  };

  auto* catalog = app.add_subcommand("catalog", "list or show catalog solids");
  catalog->add_option("action", cfg.catalog_args, "list | show NAME");
  add_common(catalog);
  auto* classify = app.add_subcommand("classify", "simplicity, rationality, face census");
  add_common(classify);
  auto* delzant = app.add_subcommand("delzant", "kernel and moment level set");
  add_common(delzant);
  auto* charts = app.add_subcommand("charts", "chart group and tau at a vertex, or the atlas");
  add_common(charts);
  charts->add_option("--vertex", cfg.vertex, "vertex: nuK or K (1-based)");
  charts->add_option("--triple", cfg.triple, "facet triple, e.g. 5,9,14");
  auto* link = app.add_subcommand("link", "link and fiber at a singular vertex");
  add_common(link);
  link->add_option("--vertex", cfg.vertex, "singular vertex: nuK or K (1-based)");
  link->add_option("--offset", cfg.offset, "cutting plane offset, e.g. 2/phi");
  link->add_option("--normal", cfg.normal, "cutting plane normal, comma separated");
  auto* report = app.add_subcommand("report", "all reports for an instance");
  add_common(report);
  auto* verify = app.add_subcommand("verify", "verification suite");
  add_common(verify);
  verify->add_flag("--criteria", cfg.criteria, "run the numbered acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error(cfg, ErrorCode::Parse, e.what());
    return ParseFailure;
  }
  if (cfg.precision < 0) {
    emit_error(cfg, ErrorCode::InvalidArgument, "--precision must be positive");
    return Precondition;
  }

  std::string verb = app.get_subcommands().front()->get_name();
  try {
    return dispatch(verb, cfg);
  } catch (const Error& e) {
    emit_error(cfg, e.code(), e.what());
    return exit_for(e.code());
  } catch (const std::exception& e) {
    emit_error(cfg, ErrorCode::InvalidArgument, e.what());
    return Precondition;
  }
}
