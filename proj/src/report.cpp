#include "qsuper/report.hpp"

namespace qsuper {

void Report::merge(const Report& other) {
  checks_ += other.checks_;
  failed_ += other.failed_;
  for (const auto& f : other.failures_) {
    if (failures_.size() < kKeep) failures_.push_back("[" + other.suite_ + "] " + f);
  }
  for (const auto& n : other.notes_) notes_.push_back(n);
}

std::string Report::summary() const {
  std::string s = (passed() ? "PASS " : "FAIL ") + suite_;
  if (!config_.empty()) s += " [" + config_ + "]";
  s += " " + std::to_string(checks_) + " checks";
  if (!passed()) {
    s += ", " + std::to_string(failed_) + " failed";
    if (!failures_.empty()) s += "\n  first counterexample: " + failures_.front();
  }
  return s;
}

}  // namespace qsuper
