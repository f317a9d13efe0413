#include "mundici/report.hpp"

#include <sstream>

#include <json.hpp>

namespace mundici {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Unknown: return "unknown";
  }
  return "?";
}

void Report::absorb(const Report& sub) {
  checked += sub.checked;
  if (sub.mode == "sampled") mode = "sampled";
  if (outcome == Outcome::Pass && sub.outcome != Outcome::Pass) {
    outcome = sub.outcome;
    witness = sub.witness;
    if (witness && !sub.subject.empty()) witness->detail = sub.subject + ": " + witness->detail;
  } else if (outcome == Outcome::Unknown && sub.outcome == Outcome::Fail) {
    outcome = Outcome::Fail;
    witness = sub.witness;
    if (witness && !sub.subject.empty()) witness->detail = sub.subject + ": " + witness->detail;
  }
}

std::string Report::text() const {
  std::ostringstream out;
  out << "[" << (outcome == Outcome::Pass ? "PASS" : (outcome == Outcome::Fail ? "FAIL" : "UNKNOWN"))
      << "] " << check;
  if (!subject.empty()) out << " on " << subject;
  out << " (" << mode << ", " << checked << " checks";
  if (mode == "sampled") out << ", seed " << seed;
  out << ")";
  if (witness) out << " :: " << witness->law << ": " << witness->detail;
  if (!note.empty()) out << " -- " << note;
  return out.str();
}

static nlohmann::json report_obj(const Report& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["subject"] = r.subject;
  j["outcome"] = outcome_name(r.outcome);
  j["pass"] = r.pass();
  j["mode"] = r.mode;
  j["checked"] = r.checked;
  if (r.mode == "sampled") j["seed"] = r.seed;
  if (!r.note.empty()) j["note"] = r.note;
  if (r.witness) {
    j["witness"] = {{"law", r.witness->law}, {"detail", r.witness->detail}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

std::string Report::json() const { return report_obj(*this).dump(); }

std::string reports_json(const std::vector<Report>& reports, const std::string& command) {
  nlohmann::json j;
  j["command"] = command;
  j["pass"] = all_pass(reports);
  j["reports"] = nlohmann::json::array();
  for (const auto& r : reports) j["reports"].push_back(report_obj(r));
  return j.dump(2);
}

bool all_pass(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.pass()) return false;
  return true;
}

}  // namespace mundici
