#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qsuper {

struct VerifyOptions {
  int samples = 100;
  int degree_bound = 3;
  uint64_t seed = 1;
};

/// Outcome of a verification suite. Failures are data: the first few
/// counterexamples are kept verbatim.
class Report {
 public:
  explicit Report(std::string suite, std::string config = {}) : suite_(std::move(suite)), config_(std::move(config)) {}

  template <class Describe>
  bool expect(bool ok, const std::string& check, Describe&& describe) {
    ++checks_;
    if (!ok) {
      ++failed_;
      if (failures_.size() < kKeep) failures_.push_back(check + ": " + describe());
    }
    return ok;
  }
  bool expect(bool ok, const std::string& check) {
    return expect(ok, check, [] { return std::string("identity does not hold"); });
  }

  void note(std::string text) { notes_.push_back(std::move(text)); }
  void merge(const Report& other);

  bool passed() const { return failed_ == 0; }
  long checks() const { return checks_; }
  long failed() const { return failed_; }
  const std::string& suite() const { return suite_; }
  const std::string& config() const { return config_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

  /// "PASS hopf [m=1 n=1 z=(1,2)] 1234 checks" or FAIL with the first counterexample.
  std::string summary() const;

 private:
  static constexpr std::size_t kKeep = 5;
  std::string suite_;
  std::string config_;
  long checks_ = 0;
  long failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

}  // namespace qsuper
