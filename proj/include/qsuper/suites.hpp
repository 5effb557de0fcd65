#pragma once

// Named verification suites, as exposed by the command line.

#include <string>
#include <vector>

#include "qsuper/coeff.hpp"
#include "qsuper/report.hpp"

namespace qsuper {

/// hopf, weyl, bicovariance, cartan, m-calculus, theta, m-vf, classical, all.
const std::vector<std::string>& suite_names();

/// Runs one named suite (or all of them). `order` is the truncation order of
/// the logarithm series check that runs with m-calculus. Throws ConfigError
/// for unknown names.
std::vector<Report> run_suite(const std::string& name, const ParamConfig& cfg, const VerifyOptions& opt, int order);

}  // namespace qsuper
