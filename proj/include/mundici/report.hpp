#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mundici {

// pass: the property held on everything checked.
// fail: a definite counterexample was found (carried in witness).
// unknown: the check could not decide within its bounds (parametric carrier
// searches, truncated disjunction families); never silently coerced to fail.
enum class Outcome { Pass, Fail, Unknown };

const char* outcome_name(Outcome o);

struct Witness {
  std::string law;     // which law or invariant broke
  std::string detail;  // concrete counterexample, rendered by the carrier
};

struct Report {
  std::string check;
  std::string subject;
  Outcome outcome = Outcome::Pass;
  std::string mode = "exhaustive";  // "exhaustive" or "sampled"
  long long checked = 0;
  std::uint64_t seed = 0;
  std::string note;
  std::optional<Witness> witness;

  bool pass() const { return outcome == Outcome::Pass; }

  void fail_with(const std::string& law, const std::string& detail) {
    if (outcome == Outcome::Fail) return;  // first counterexample wins
    outcome = Outcome::Fail;
    witness = Witness{law, detail};
  }

  void mark_unknown(const std::string& law, const std::string& detail) {
    if (outcome != Outcome::Pass) return;
    outcome = Outcome::Unknown;
    witness = Witness{law, detail};
  }

  // Folds a sub-report in: counts accumulate, the first non-pass dominates.
  void absorb(const Report& sub);

  std::string text() const;  // single human-readable line
  std::string json() const;  // object per the schema in the README
};

struct CheckOptions {
  long long budget = 200;
  std::uint64_t seed = 0;
  int max_len = 3;
};

std::string reports_json(const std::vector<Report>& reports, const std::string& command);
bool all_pass(const std::vector<Report>& reports);

}  // namespace mundici
