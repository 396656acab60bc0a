#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace topcube {

using Json = nlohmann::json;

enum class Verdict { pass, fail, inconclusive };

std::string_view to_string(Verdict v);
/// Process exit code for a verdict: 0 pass, 1 fail, 3 inconclusive.
int exit_code(Verdict v);

/// Structured outcome of a verification. A failing report always carries a
/// witness and an inconclusive one always carries the bound that was hit.
class Report {
 public:
  static constexpr int kSchemaVersion = 1;

  explicit Report(std::string check, Json params = Json::object());

  const std::string& check() const { return check_; }
  const Json& params() const { return params_; }
  Json& params() { return params_; }
  Verdict verdict() const { return verdict_; }
  bool passed() const { return verdict_ == Verdict::pass; }
  const Json& witness() const { return witness_; }
  const std::vector<std::string>& notes() const { return notes_; }
  double elapsed_ms() const { return elapsed_ms_; }

  /// Result payload of a passing report (counts, member lists).
  void set_witness(Json w) { witness_ = std::move(w); }
  /// Supporting detail kept regardless of verdict (per-coordinate tables).
  Json& data() { return data_; }
  const Json& data() const { return data_; }
  /// Downgrade to fail. The first failure witness wins.
  void fail(Json witness);
  /// Downgrade to inconclusive unless already failed.
  void inconclusive(Json bound);
  void note(std::string text) { notes_.push_back(std::move(text)); }
  void set_elapsed_ms(double ms) { elapsed_ms_ = ms; }

  /// Fold a sub-check into this one: verdicts combine as fail > inconclusive
  /// > pass and the sub-report is listed under "checks".
  void absorb(const Report& sub);

  Json to_json() const;

 private:
  std::string check_;
  Json params_;
  Verdict verdict_ = Verdict::pass;
  Json witness_;
  Json data_;
  std::vector<std::string> notes_;
  std::vector<Json> subchecks_;
  double elapsed_ms_ = 0;
};

/// Run fn() and stamp the wall time onto the returned report.
template <typename Fn>
Report timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  Report r = fn();
  const auto stop = std::chrono::steady_clock::now();
  r.set_elapsed_ms(std::chrono::duration<double, std::milli>(stop - start).count());
  return r;
}

}  // namespace topcube
