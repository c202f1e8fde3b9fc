#pragma once

// Machine-readable fibering certificates: named hypothesis checks with
// pass/fail status and data, explicitly recorded axioms, computed
// dimensions, and a conclusion that exists only when every check passed.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace fib {

struct CheckResult {
  std::string name;
  bool passed = false;
  nlohmann::json data;
};

class FiberingCertificate {
 public:
  explicit FiberingCertificate(std::string manifold)
      : manifold_(std::move(manifold)) {}

  void add_check(std::string name, bool passed,
                 nlohmann::json data = nlohmann::json::object());
  void add_axiom(std::string axiom);
  void add_note(std::string note);
  void set_dim(const std::string& key, long value);
  void merge_sub_certificate(const std::string& prefix,
                             const FiberingCertificate& sub);

  bool all_checks_passed() const;
  /// Records the conclusion only when every check passed; returns whether
  /// it was recorded.
  bool conclude(std::string conclusion);

  const std::string& manifold() const { return manifold_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  const std::optional<std::string>& conclusion() const { return conclusion_; }

  nlohmann::json to_json() const;
  std::string render_text() const;

 private:
  std::string manifold_;
  std::vector<CheckResult> checks_;
  std::vector<std::string> axioms_;
  std::vector<std::string> notes_;
  nlohmann::json dims_ = nlohmann::json::object();
  std::optional<std::string> conclusion_;
};

}  // namespace fib
