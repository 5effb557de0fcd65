#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qsuper/calculus.hpp"
#include "qsuper/classical.hpp"
#include "qsuper/cli.hpp"
#include "qsuper/hopf.hpp"
#include "qsuper/logext_algebra.hpp"
#include "qsuper/suites.hpp"
#include "qsuper/superalgebra.hpp"

namespace qsuper::cli {

ParamConfig SessionConfig::params() const { return ParamConfig(m, n, z); }

AlgebraPtr SessionConfig::make_algebra() const {
  if (algebra == AlgebraChoice::M) return LogAlgebra::create(params());
  return SuperspaceAlgebra::create(params());
}

nlohmann::json SessionConfig::to_json() const {
  return {{"m", m}, {"n", n}, {"z", z}, {"algebra", algebra == AlgebraChoice::M ? "M" : "A"}};
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    int r = std::stoi(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (const std::exception&) {
    throw ConfigError("invalid integer for " + key + ": '" + v + "'");
  }
}

std::vector<int> to_int_list(const std::string& v) {
  std::vector<int> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_int("z", trim(item)));
  if (out.empty()) throw ConfigError("z must not be empty");
  return out;
}

}  // namespace

void apply_setting(SessionConfig& cfg, const std::string& key, const std::string& raw) {
  std::string v = trim(raw);
  if (key == "m") {
    cfg.m = to_int(key, v);
  } else if (key == "n") {
    cfg.n = to_int(key, v);
  } else if (key == "z") {
    cfg.z = to_int_list(v);
  } else if (key == "algebra") {
    if (v == "A") {
      cfg.algebra = AlgebraChoice::A;
    } else if (v == "M") {
      cfg.algebra = AlgebraChoice::M;
    } else {
      throw ConfigError("algebra must be A or M, got '" + v + "'");
    }
  } else if (key == "order") {
    cfg.order = to_int(key, v);
    if (cfg.order < 1) throw ConfigError("order must be at least 1");
  } else if (key == "samples") {
    cfg.samples = to_int(key, v);
    if (cfg.samples < 1) throw ConfigError("samples must be at least 1");
  } else if (key == "seed") {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
    } catch (const std::exception&) {
      throw ConfigError("invalid seed '" + v + "'");
    }
  } else if (key == "format") {
    if (v == "text") {
      cfg.format = OutputFormat::Text;
    } else if (v == "json") {
      cfg.format = OutputFormat::Json;
    } else {
      throw ConfigError("format must be text or json, got '" + v + "'");
    }
  } else {
    throw ConfigError("unknown setting '" + key + "'");
  }
}

void apply_config_file(SessionConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
    apply_setting(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

namespace {

struct Command {
  std::string name;
  std::string expr;
  int index = 0;
  std::string suite;
};

void print_value(std::ostream& out, const SessionConfig& cfg, const std::string& input, const Value& v) {
  if (cfg.format == OutputFormat::Json) {
    out << to_json(v, cfg, input).dump(2) << "\n";
  } else {
    out << to_text(v) << "\n";
  }
}

int run_verify(std::ostream& out, const SessionConfig& cfg, const std::string& suite) {
  VerifyOptions opt;
  opt.samples = cfg.samples;
  opt.seed = cfg.seed;
  auto reports = run_suite(suite, cfg.params(), opt, cfg.order);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (cfg.format == OutputFormat::Json) {
    auto list = nlohmann::json::array();
    for (const auto& r : reports) {
      list.push_back({{"suite", r.suite()},
                      {"config", r.config()},
                      {"passed", r.passed()},
                      {"checks", r.checks()},
                      {"failed", r.failed()},
                      {"counterexamples", r.failures()},
                      {"notes", r.notes()}});
    }
    nlohmann::json doc{{"config", cfg.to_json()}, {"suite", suite}, {"samples", cfg.samples},
                       {"seed", cfg.seed},        {"passed", ok},   {"reports", list}};
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << r.summary() << "\n";
      for (const auto& f : r.failures()) out << "  counterexample: " << f << "\n";
      for (const auto& n : r.notes()) out << "  note: " << n << "\n";
    }
    out << (ok ? "PASS" : "FAIL") << " verify " << suite << "\n";
  }
  return ok ? 0 : 1;
}

int dispatch(const Command& cmd, const SessionConfig& cfg, std::ostream& out) {
  if (cmd.name == "verify") return run_verify(out, cfg, cmd.suite);
  AlgebraPtr alg = cfg.make_algebra();
  std::string input = cmd.expr;
  Value v;
  if (cmd.name == "omega") {
    input = "omega(" + std::to_string(cmd.index) + ")";
    v = evaluate(input, cfg, alg);
  } else {
    Value arg = evaluate(cmd.expr, cfg, alg);
    const std::string& c = cmd.name;
    if (c == "normalize") {
      v = arg;
    } else if (c == "limit") {
      v = arg.is_tensor() ? Value::of(classical_limit(*arg.tensor)) : Value::of(classical_limit(*arg.element));
    } else {
      if (c == "partial" || c == "vf") {
        int size = cfg.m + cfg.n;
        if (cmd.index < 1 || cmd.index > size)
          throw ConfigError("index " + std::to_string(cmd.index) + " out of range 1.." + std::to_string(size));
      }
      const Element& u = arg.as_element(c.c_str());
      if (c == "d") {
        v = Value::of(exterior_d(u));
      } else if (c == "partial") {
        v = Value::of(partial_closed(cmd.index, u));
      } else if (c == "vf") {
        v = evaluate("T(" + std::to_string(cmd.index) + ", " + cmd.expr + ")", cfg, alg);
      } else if (c == "coproduct") {
        v = Value::of(coproduct(u));
      } else if (c == "antipode") {
        v = Value::of(antipode(u));
      } else if (c == "counit") {
        v = Value::of(Element::scalar(alg, counit(u)));
      }
    }
  }
  print_value(out, cfg, input, v);
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum superspace and logarithmic extension: normal forms, Hopf maps, calculus and verification"};
  app.name("qsuper");
  app.require_subcommand(1, 1);

  std::string config_path, z, algebra, format;
  int m = 0, n = 0, order = 0, samples = 0;
  uint64_t seed = 0;
  auto* o_config = app.add_option("--config", config_path, "key=value file (m, n, z, algebra, order, samples, seed, format)");
  auto* o_m = app.add_option("--m", m, "number of even generators");
  auto* o_n = app.add_option("--n", n, "number of odd generators");
  auto* o_z = app.add_option("--z", z, "comma separated weights, z1 = 1");
  auto* o_alg = app.add_option("--algebra", algebra, "A (superspace) or M (logarithmic extension)");
  auto* o_order = app.add_option("--order", order, "truncation order of the logarithm series check");
  auto* o_samples = app.add_option("--samples", samples, "random samples per check");
  auto* o_seed = app.add_option("--seed", seed, "random seed");
  auto* o_format = app.add_option("--format", format, "text or json");

  Command cmd;
  auto expr_cmd = [&](const std::string& name, const std::string& help) {
    auto* sc = app.add_subcommand(name, help)->fallthrough();
    sc->add_option("expr", cmd.expr, "expression")->required();
    return sc;
  };
  auto indexed_cmd = [&](const std::string& name, const std::string& help, bool with_expr) {
    auto* sc = app.add_subcommand(name, help)->fallthrough();
    sc->add_option("index", cmd.index, "generator index")->required();
    if (with_expr) sc->add_option("expr", cmd.expr, "expression")->required();
    return sc;
  };
  expr_cmd("normalize", "print the normal form of an expression");
  expr_cmd("d", "exterior derivative");
  indexed_cmd("partial", "partial derivative with respect to generator INDEX", true);
  expr_cmd("coproduct", "coproduct of an element");
  expr_cmd("antipode", "antipode of an element");
  expr_cmd("counit", "counit of an element");
  indexed_cmd("omega", "Maurer-Cartan form of generator INDEX", false);
  indexed_cmd("vf", "apply the vector field of generator INDEX", true);
  expr_cmd("limit", "classical limit p -> 1, h -> 0");
  auto* verify = app.add_subcommand("verify", "run a verification suite")->fallthrough();
  verify->add_option("suite", cmd.suite, "hopf | weyl | bicovariance | cartan | m-calculus | theta | m-vf | classical | all")
      ->required()
      ->check(CLI::IsMember(suite_names()));

  // Every flag is long, so a lone dash opens an expression such as "-a2"; such
  // arguments move behind "--" to keep them positional.
  std::vector<std::string> ordered, negatives;
  bool literal = false;
  for (const auto& a : args) {
    if (literal || a == "--") {
      if (!literal) literal = true;
      else negatives.push_back(a);
    } else if (a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h") {
      negatives.push_back(a);
    } else {
      ordered.push_back(a);
    }
  }
  if (!negatives.empty()) {
    ordered.push_back("--");
    ordered.insert(ordered.end(), negatives.begin(), negatives.end());
  }

  try {
    std::vector<std::string> reversed(ordered.rbegin(), ordered.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }
  cmd.name = app.get_subcommands().front()->get_name();

  SessionConfig cfg;
  try {
    if (o_config->count()) apply_config_file(cfg, config_path);
    if (o_m->count()) cfg.m = m;
    if (o_n->count()) cfg.n = n;
    if (o_z->count()) apply_setting(cfg, "z", z);
    if (o_alg->count()) apply_setting(cfg, "algebra", algebra);
    if (o_order->count()) apply_setting(cfg, "order", std::to_string(order));
    if (o_samples->count()) apply_setting(cfg, "samples", std::to_string(samples));
    if (o_seed->count()) cfg.seed = seed;
    if (o_format->count()) apply_setting(cfg, "format", format);
    cfg.params();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  }

  try {
    return dispatch(cmd, cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace qsuper::cli
