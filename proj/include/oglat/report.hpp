#pragma once

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oglat {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;
  std::int64_t runtime_ms = 0;
};

// Ordered list of named checks; overall pass is the conjunction.
class VerificationReport {
 public:
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<CheckResult>& checks() const { return checks_; }

  void add(CheckResult c) {
    for (const auto& existing : checks_)
      if (existing.name == c.name)
        throw std::invalid_argument("VerificationReport: duplicate check name " + c.name);
    checks_.push_back(std::move(c));
  }

  void add(const std::string& name, bool pass, const std::string& witness,
           std::int64_t runtime_ms = 0) {
    add(CheckResult{name, pass, witness, runtime_ms});
  }

  // Runs fn, records its outcome and wall time under one name. fn returns
  // {pass, witness}; exceptions become failing checks with the message as
  // witness.
  template <typename Fn>
  void timed(const std::string& name, Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string witness;
    try {
      auto [p, w] = fn();
      pass = p;
      witness = std::move(w);
    } catch (const std::exception& e) {
      pass = false;
      witness = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    add(name, pass, witness, ms);
  }

  bool pass() const {
    for (const auto& c : checks_)
      if (!c.pass) return false;
    return true;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json doc;
    doc["suite"] = suite_;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
      nlohmann::ordered_json item;
      item["name"] = c.name;
      item["pass"] = c.pass;
      item["witness"] = c.witness;
      item["runtime_ms"] = c.runtime_ms;
      doc["checks"].push_back(std::move(item));
    }
    doc["pass"] = pass();
    return doc;
  }

 private:
  std::string suite_;
  std::vector<CheckResult> checks_;
};

inline void emit_text(const VerificationReport& r, std::ostream& os) {
  std::size_t width = 4;
  for (const auto& c : r.checks()) width = std::max(width, c.name.size());
  os << "suite: " << r.suite() << "\n";
  for (const auto& c : r.checks()) {
    os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(static_cast<int>(width))
       << c.name << "  [" << c.runtime_ms << " ms]  " << c.witness << "\n";
  }
  os << r.checks().size() << " checks, overall: " << (r.pass() ? "PASS" : "FAIL") << "\n";
}

// Atomic JSON emission: write to a temporary in the target directory, then
// rename over the destination.
inline void write_json_atomic(const nlohmann::ordered_json& doc,
                              const std::filesystem::path& path) {
  std::filesystem::path dir = path.parent_path();
  std::filesystem::path tmp =
      (dir.empty() ? std::filesystem::path(".") : dir) / (path.filename().string() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("write_json_atomic: cannot open " + tmp.string());
    out << doc.dump(2) << "\n";
    if (!out) throw std::runtime_error("write_json_atomic: write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline void emit_json(const VerificationReport& r, const std::filesystem::path& path) {
  write_json_atomic(r.to_json(), path);
}

}  // namespace oglat
