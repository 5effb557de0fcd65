#include "qsuper/suites.hpp"

#include "qsuper/calculus.hpp"
#include "qsuper/cartan.hpp"
#include "qsuper/classical.hpp"
#include "qsuper/hopf.hpp"
#include "qsuper/logext_calculus.hpp"

namespace qsuper {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hopf",  "weyl", "bicovariance", "cartan",   "m-calculus",
                                              "theta", "m-vf", "classical",    "all"};
  return names;
}

std::vector<Report> run_suite(const std::string& name, const ParamConfig& cfg, const VerifyOptions& opt, int order) {
  if (name == "hopf") return {verify_hopf(cfg, opt), verify_hopf_m(cfg, opt)};
  if (name == "weyl") return {verify_weyl(cfg, opt)};
  if (name == "bicovariance") return {verify_bicovariance(cfg, opt)};
  if (name == "cartan") return {verify_mc_relations(cfg, opt), verify_T_hopf(cfg, opt)};
  if (name == "m-calculus") return {verify_m_calculus(cfg, opt), log_series_truncation_check(order, cfg)};
  if (name == "theta") return {verify_theta(cfg, opt)};
  if (name == "m-vf") return {verify_m_vf(cfg, opt)};
  if (name == "classical") return {verify_classical(cfg, opt)};
  if (name == "all") {
    std::vector<Report> out;
    for (const auto& n : suite_names()) {
      if (n == "all") continue;
      auto part = run_suite(n, cfg, opt, order);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw ConfigError("unknown suite '" + name + "'");
}

}  // namespace qsuper
