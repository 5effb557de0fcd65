// Acceptance run: one PASS/FAIL line per criterion over the two reference
// shapes and twenty seeded random shapes. Exit status 0 only if all pass.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "qsuper/calculus.hpp"
#include "qsuper/cartan.hpp"
#include "qsuper/classical.hpp"
#include "qsuper/cli.hpp"
#include "qsuper/format.hpp"
#include "qsuper/hopf.hpp"
#include "qsuper/logext_algebra.hpp"
#include "qsuper/logext_calculus.hpp"
#include "qsuper/random.hpp"
#include "qsuper/superalgebra.hpp"

using namespace qsuper;

namespace {

constexpr int kSamples = 500;
constexpr double kSuiteBudget = 60.0;

struct Outcome {
  bool ok = true;
  long checks = 0;
  double slowest = 0;
  std::vector<std::string> problems;

  void fail(std::string why) {
    ok = false;
    if (problems.size() < 8) problems.push_back(std::move(why));
  }
  void absorb(const Report& r, double seconds) {
    checks += r.checks();
    slowest = std::max(slowest, seconds);
    if (!r.passed()) {
      fail(r.summary());
      for (const auto& f : r.failures()) fail("  " + f);
    }
    if (seconds > kSuiteBudget) {
      std::ostringstream os;
      os << r.suite() << " on " << r.config() << " took " << std::fixed << std::setprecision(1) << seconds << " s";
      fail(os.str());
    }
  }
};

using Suite = std::function<Report(const ParamConfig&)>;

VerifyOptions options(int degree_bound = 3) {
  VerifyOptions opt;
  opt.samples = kSamples;
  opt.degree_bound = degree_bound;
  opt.seed = 7;
  return opt;
}

// Applies `task` to every index in [0, count) on one worker per hardware
// thread, so per-suite timings stay comparable to a sequential run.
template <class T>
std::vector<T> for_each_index(std::size_t count, const std::function<T(std::size_t)>& task) {
  std::vector<T> out(count);
  std::atomic<std::size_t> next{0};
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::min<std::size_t>(workers, count); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) out[i] = task(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

using Timed = std::vector<std::pair<Report, double>>;

Outcome over_configs(const std::vector<ParamConfig>& configs, const std::vector<Suite>& suites) {
  auto results = for_each_index<Timed>(configs.size(), [&](std::size_t i) {
    Timed out;
    for (const auto& suite : suites) {
      auto t0 = std::chrono::steady_clock::now();
      Report r = suite(configs[i]);
      out.emplace_back(std::move(r), std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return out;
  });
  Outcome o;
  for (auto& timed : results)
    for (auto& [r, s] : timed) o.absorb(r, s);
  return o;
}

bool is_reference(const ParamConfig& cfg, const std::vector<ParamConfig>& configs) {
  return cfg == configs[0] || cfg == configs[1];
}

Report derivative_oracle(const ParamConfig& cfg, bool exhaustive) {
  Report rep("derivative-oracle", cfg.describe());
  for (AlgebraPtr alg : {AlgebraPtr(SuperspaceAlgebra::create(cfg)), AlgebraPtr(LogAlgebra::create(cfg))}) {
    const int n = alg->size();
    auto check = [&](const Element& u, int i) {
      rep.expect(partial_closed(i, u) == partial_oracle(i, u), "closed partial = rewriting oracle",
                 [&] { return "i = " + std::to_string(i) + ", u = " + to_string(u); });
    };
    if (exhaustive) {
      for (const auto& m : small_monomials(*alg, 4))
        for (int i = 1; i <= n; ++i) check(Element::monomial(alg, m), i);
    }
    Sampler s(alg, 7);
    for (int t = 0; t < kSamples; ++t) check(Element::monomial(alg, s.monomial(4)), s.uniform(1, n));
  }
  return rep;
}

Outcome tensor_modes(const ParamConfig& c0) {
  Outcome o;
  auto bad = first_broken_relation(c0, TensorMode::Bicharacter);
  if (!bad) {
    o.fail("bicharacter mode preserved every relation");
  } else {
    o.checks += 1;
    if (bad->residual.is_zero()) o.fail("reported residual is zero");
    Assignment at = Assignment::classical(c0.size());
    bool vanishes = true;
    for (const auto& [k, c] : bad->residual.terms()) vanishes = vanishes && c.specialize(at) == 0;
    if (!vanishes) o.fail("residual of " + bad->relation + " does not vanish at p2 = 1: " + to_string(bad->residual));
    std::cout << "  bicharacter residual of " << bad->relation << ": " << to_string(bad->residual) << "\n";
  }
  o.checks += 1;
  if (auto sign_only = first_broken_relation(c0, TensorMode::SignOnly))
    o.fail("sign-only mode breaks " + sign_only->relation + ": " + to_string(sign_only->residual));
  return o;
}

Outcome log_series(const std::vector<ParamConfig>& configs) {
  Outcome o;
  for (const auto& cfg : {configs[0], configs[1]}) {
    for (int order = 1; order <= 8; ++order) {
      auto t0 = std::chrono::steady_clock::now();
      Report r = log_series_truncation_check(order, cfg);
      o.absorb(r, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
  }
  return o;
}

std::vector<std::string> read_lines(const std::filesystem::path& p) {
  std::vector<std::string> out;
  std::ifstream in(p);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome command_layer(const std::vector<ParamConfig>& configs, const std::filesystem::path& golden) {
  Outcome o;
  std::vector<std::filesystem::path> cases;
  for (const auto& entry : std::filesystem::directory_iterator(golden))
    if (entry.path().extension() == ".args") cases.push_back(entry.path());
  std::sort(cases.begin(), cases.end());
  if (cases.empty()) o.fail("no golden cases under " + golden.string());
  for (const auto& args_file : cases) {
    auto base = args_file;
    base.replace_extension();
    std::ostringstream out, err;
    int code = cli::run_command(read_lines(args_file), out, err);
    int want = 0;
    if (std::filesystem::exists(base.string() + ".exit")) want = std::stoi(slurp(base.string() + ".exit"));
    ++o.checks;
    std::string name = base.filename().string();
    if (code != want) o.fail("golden " + name + ": exit " + std::to_string(code));
    if (out.str() != slurp(base.string() + ".out")) o.fail("golden " + name + ": stdout differs");
    if (std::filesystem::exists(base.string() + ".err") && err.str() != slurp(base.string() + ".err"))
      o.fail("golden " + name + ": stderr differs");
  }

  using Run = std::pair<int, std::string>;
  auto runs = for_each_index<Run>(configs.size(), [&](std::size_t i) {
    const auto& cfg = configs[i];
    std::string z;
    for (int v : cfg.z_vector()) z += (z.empty() ? "" : ",") + std::to_string(v);
    std::vector<std::string> args{"verify", "all", "--m", std::to_string(cfg.m()), "--n", std::to_string(cfg.n()),
                                  "--z", z, "--seed", "7"};
    std::ostringstream out, err;
    int code = cli::run_command(args, out, err);
    return Run{code, cfg.describe() + "\n" + out.str() + err.str()};
  });
  for (const auto& [code, text] : runs) {
    ++o.checks;
    if (code != 0) o.fail("verify all exited " + std::to_string(code) + " on " + text);
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path golden = argc > 1 ? argv[1] : "tests/golden";
  const auto configs = standard_configs();
  const VerifyOptions opt = options();

  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "Hopf axioms and relation preservation on the superspace",
       [&] { return over_configs(configs, {[&](const ParamConfig& c) { return verify_hopf(c, opt); }}); }},
      {2, "bicharacter residual nonzero but classically zero, sign-only residual absent",
       [&] { return tensor_modes(configs[0]); }},
      {3, "closed partial derivatives match the rewriting oracle",
       [&] {
         return over_configs(configs, {[&](const ParamConfig& c) { return derivative_oracle(c, is_reference(c, configs)); }});
       }},
      {4, "calculus: d^2 = 0, graded Leibniz, Weyl relations, bicovariance",
       [&] {
         return over_configs(configs, {[&](const ParamConfig& c) { return verify_weyl(c, opt); },
                                       [&](const ParamConfig& c) { return verify_bicovariance(c, opt); }});
       }},
      {5, "Maurer-Cartan relations and vector field Hopf structure",
       [&] {
         return over_configs(configs, {[&](const ParamConfig& c) { return verify_mc_relations(c, opt); },
                                       [&](const ParamConfig& c) { return verify_T_hopf(c, opt); }});
       }},
      {6, "Hopf axioms and relation preservation on the logarithmic extension",
       [&] { return over_configs(configs, {[&](const ParamConfig& c) { return verify_hopf_m(c, opt); }}); }},
      {7, "logarithm series truncation for N = 1..8", [&] { return log_series(configs); }},
      {8, "logarithmic extension calculus, Maurer-Cartan forms and vector fields",
       [&] {
         return over_configs(configs, {[&](const ParamConfig& c) { return verify_m_calculus(c, opt); },
                                       [&](const ParamConfig& c) { return verify_theta(c, opt); },
                                       [&](const ParamConfig& c) { return verify_m_vf(c, opt); }});
       }},
      {9, "classical limit of every relation family",
       [&] { return over_configs(configs, {[&](const ParamConfig& c) { return verify_classical(c, opt); }}); }},
      {10, "golden files and verify all through the command layer", [&] { return command_layer(configs, golden); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.ok;
    std::cout << "criterion " << std::setw(2) << c.id << ": " << (o.ok ? "PASS" : "FAIL") << "  " << c.title << " ("
              << o.checks << " checks, slowest suite " << std::fixed << std::setprecision(1) << o.slowest << " s, total "
              << secs << " s)\n";
    for (const auto& p : o.problems) std::cout << "    " << p << "\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
