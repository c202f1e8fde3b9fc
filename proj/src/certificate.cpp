#include "fibcert/certificate.hpp"

#include <algorithm>
#include <sstream>

namespace fib {

void FiberingCertificate::add_check(std::string name, bool passed,
                                    nlohmann::json data) {
  checks_.push_back(CheckResult{std::move(name), passed, std::move(data)});
}

void FiberingCertificate::add_axiom(std::string axiom) {
  axioms_.push_back(std::move(axiom));
}

void FiberingCertificate::add_note(std::string note) {
  notes_.push_back(std::move(note));
}

void FiberingCertificate::set_dim(const std::string& key, long value) {
  dims_[key] = value;
}

void FiberingCertificate::merge_sub_certificate(const std::string& prefix,
                                                const FiberingCertificate& sub) {
  for (const CheckResult& c : sub.checks_) {
    checks_.push_back(CheckResult{prefix + "." + c.name, c.passed, c.data});
  }
  for (const std::string& a : sub.axioms_) {
    if (std::find(axioms_.begin(), axioms_.end(), a) == axioms_.end()) {
      axioms_.push_back(a);
    }
  }
  for (const std::string& n : sub.notes_) notes_.push_back(n);
}

bool FiberingCertificate::all_checks_passed() const {
  for (const CheckResult& c : checks_) {
    if (!c.passed) return false;
  }
  return true;
}

bool FiberingCertificate::conclude(std::string conclusion) {
  if (!all_checks_passed()) return false;
  conclusion_ = std::move(conclusion);
  return true;
}

nlohmann::json FiberingCertificate::to_json() const {
  nlohmann::json j;
  j["manifold"] = manifold_;
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : checks_) {
    checks.push_back({{"name", c.name},
                      {"status", c.passed ? "pass" : "fail"},
                      {"data", c.data}});
  }
  j["checks"] = checks;
  j["axioms"] = axioms_;
  j["dims"] = dims_;
  if (conclusion_) {
    j["conclusion"] = *conclusion_;
  } else {
    j["conclusion"] = nullptr;
  }
  if (!notes_.empty()) j["notes"] = notes_;
  return j;
}

std::string FiberingCertificate::render_text() const {
  std::ostringstream out;
  out << "certificate: " << manifold_ << "\n";
  for (const CheckResult& c : checks_) {
    out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
    if (!c.data.empty()) out << "  " << c.data.dump();
    out << "\n";
  }
  if (!dims_.empty()) out << "  dims: " << dims_.dump() << "\n";
  for (const std::string& a : axioms_) out << "  axiom: " << a << "\n";
  for (const std::string& n : notes_) out << "  note: " << n << "\n";
  if (conclusion_) {
    out << "  conclusion: " << *conclusion_ << "\n";
  } else {
    out << "  conclusion: (none; hypotheses not established)\n";
  }
  return out.str();
}

}  // namespace fib
