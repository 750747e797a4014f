#pragma once

#include <json.hpp>

#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace diracidx {

using Json = nlohmann::json;

enum class CheckStatus { pass, fail, error };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "error";
  }
}

inline CheckStatus check_status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "error") return CheckStatus::error;
  throw std::invalid_argument("unknown check status: " + s);
}

struct CheckRecord {
  std::string id;
  std::string description;
  CheckStatus status = CheckStatus::pass;
  std::optional<double> residual;  // recorded even on pass when meaningful
  Json payload;                    // structured values; null when unused

  bool operator==(const CheckRecord& o) const {
    return id == o.id && description == o.description && status == o.status &&
           residual == o.residual && payload == o.payload;
  }
};

// Uniform result container for the verification suites. Checks keep their
// insertion order; ids must be unique within a report so merged reports stay
// addressable.
class ValidationReport {
 public:
  ValidationReport() = default;
  explicit ValidationReport(std::string suite) : suite_(std::move(suite)) {
    config_ = Json::object();
  }

  const std::string& suite() const { return suite_; }
  void set_suite(std::string s) { suite_ = std::move(s); }

  Json& config() { return config_; }
  const Json& config() const { return config_; }
  void set_config(Json c) { config_ = std::move(c); }

  const std::vector<CheckRecord>& checks() const { return checks_; }

  std::optional<double> elapsed_ms;
  std::optional<std::string> timestamp;

  bool merged_flag() const { return merged_; }

  CheckRecord& add(std::string id, std::string description, bool pass,
                   std::optional<double> residual = std::nullopt,
                   Json payload = Json()) {
    return push({std::move(id), std::move(description),
                 pass ? CheckStatus::pass : CheckStatus::fail, residual,
                 std::move(payload)});
  }

  CheckRecord& add_error(std::string id, std::string description,
                         std::string what) {
    Json payload;
    payload["error"] = std::move(what);
    return push({std::move(id), std::move(description), CheckStatus::error,
                 std::nullopt, std::move(payload)});
  }

  bool passed() const {
    for (const auto& c : checks_)
      if (c.status != CheckStatus::pass) return false;
    return true;
  }

  int count(CheckStatus s) const {
    int n = 0;
    for (const auto& c : checks_)
      if (c.status == s) ++n;
    return n;
  }

  const CheckRecord* find(const std::string& id) const {
    for (const auto& c : checks_)
      if (c.id == id) return &c;
    return nullptr;
  }

  // Order-preserving concatenation. Sub-configs are echoed under each input's
  // suite name; already-merged inputs are spliced so merging stays associative.
  static ValidationReport merge(const std::vector<ValidationReport>& reports,
                                const std::string& name = "merged") {
    ValidationReport out(name);
    out.merged_ = true;
    for (const auto& rep : reports) {
      for (const auto& c : rep.checks_) out.push(c);
      if (rep.merged_) {
        for (auto it = rep.config_.begin(); it != rep.config_.end(); ++it) {
          if (out.config_.contains(it.key()))
            throw std::invalid_argument("merge: duplicate suite id: " + it.key());
          out.config_[it.key()] = it.value();
        }
      } else {
        if (out.config_.contains(rep.suite_))
          throw std::invalid_argument("merge: duplicate suite id: " + rep.suite_);
        out.config_[rep.suite_] = rep.config_;
      }
    }
    return out;
  }

  Json to_json() const {
    Json j;
    j["suite"] = suite_;
    j["status"] = passed() ? "pass" : "fail";
    j["config"] = config_;
    if (merged_) j["merged"] = true;
    Json arr = Json::array();
    for (const auto& c : checks_) {
      Json cj;
      cj["id"] = c.id;
      cj["description"] = c.description;
      cj["status"] = to_string(c.status);
      if (c.residual) cj["residual"] = *c.residual;
      if (!c.payload.is_null()) cj["payload"] = c.payload;
      arr.push_back(std::move(cj));
    }
    j["checks"] = std::move(arr);
    if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
    if (timestamp) j["timestamp"] = *timestamp;
    return j;
  }

  static ValidationReport from_json(const Json& j) {
    ValidationReport r(j.at("suite").get<std::string>());
    r.config_ = j.value("config", Json::object());
    r.merged_ = j.value("merged", false);
    for (const auto& cj : j.at("checks")) {
      CheckRecord c;
      c.id = cj.at("id").get<std::string>();
      c.description = cj.at("description").get<std::string>();
      c.status = check_status_from_string(cj.at("status").get<std::string>());
      if (cj.contains("residual")) c.residual = cj.at("residual").get<double>();
      if (cj.contains("payload")) c.payload = cj.at("payload");
      r.push(std::move(c));
    }
    if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
    if (j.contains("timestamp")) r.timestamp = j.at("timestamp").get<std::string>();
    return r;
  }

  std::string render_text() const {
    std::ostringstream os;
    os << "suite: " << suite_ << "   ["
       << (passed() ? "PASS" : "FAIL") << "]\n";
    for (const auto& c : checks_) {
      const char* tag = c.status == CheckStatus::pass   ? "PASS "
                        : c.status == CheckStatus::fail ? "FAIL "
                                                        : "ERROR";
      os << "  [" << tag << "] " << c.id;
      if (c.residual) os << "  residual=" << *c.residual;
      os << "  -- " << c.description << "\n";
    }
    os << "  checks: " << checks_.size() << "  pass: " << count(CheckStatus::pass)
       << "  fail: " << count(CheckStatus::fail)
       << "  error: " << count(CheckStatus::error) << "\n";
    return os.str();
  }

  bool operator==(const ValidationReport& o) const {
    return suite_ == o.suite_ && config_ == o.config_ && checks_ == o.checks_ &&
           merged_ == o.merged_ && elapsed_ms == o.elapsed_ms &&
           timestamp == o.timestamp;
  }

 private:
  CheckRecord& push(CheckRecord c) {
    if (!ids_.insert(c.id).second)
      throw std::invalid_argument("duplicate check id: " + c.id);
    checks_.push_back(std::move(c));
    return checks_.back();
  }

  std::string suite_;
  Json config_ = Json::object();
  std::vector<CheckRecord> checks_;
  std::set<std::string> ids_;
  bool merged_ = false;
};

}  // namespace diracidx
