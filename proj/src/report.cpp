#include "topcube/report.hpp"

namespace topcube {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::inconclusive: return 3;
  }
  return 2;
}

Report::Report(std::string check, Json params) : check_(std::move(check)), params_(std::move(params)) {}

void Report::fail(Json witness) {
  if (verdict_ == Verdict::fail) return;
  verdict_ = Verdict::fail;
  witness_ = witness.is_null() ? Json("unspecified") : std::move(witness);
}

void Report::inconclusive(Json bound) {
  if (verdict_ != Verdict::pass) return;
  verdict_ = Verdict::inconclusive;
  witness_ = bound.is_null() ? Json("bound reached") : std::move(bound);
}

void Report::absorb(const Report& sub) {
  if (sub.verdict() == Verdict::fail)
    fail(Json{{"check", sub.check()}, {"witness", sub.witness()}});
  else if (sub.verdict() == Verdict::inconclusive)
    inconclusive(Json{{"check", sub.check()}, {"bound", sub.witness()}});
  for (const auto& n : sub.notes()) notes_.push_back(n);
  subchecks_.push_back(sub.to_json());
}

Json Report::to_json() const {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["check"] = check_;
  j["params"] = params_;
  j["verdict"] = std::string(to_string(verdict_));
  j["witness"] = witness_;
  if (!data_.is_null()) j["data"] = data_;
  if (!notes_.empty()) j["notes"] = notes_;
  if (!subchecks_.empty()) j["checks"] = subchecks_;
  j["elapsed_ms"] = elapsed_ms_;
  return j;
}

}  // namespace topcube
