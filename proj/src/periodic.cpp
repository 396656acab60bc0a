#include "topcube/periodic.hpp"

#include <algorithm>
#include <numeric>

namespace topcube {

namespace {

PeriodicSet::Bits parse_word(std::string_view w, const char* what) {
  PeriodicSet::Bits out;
  out.reserve(w.size());
  for (char c : w) {
    if (c != '0' && c != '1') throw Error(std::string("invalid character in ") + what + " word");
    out.push_back(c == '1');
  }
  return out;
}

std::string render(const PeriodicSet::Bits& b) {
  std::string out;
  out.reserve(b.size());
  for (bool v : b) out.push_back(v ? '1' : '0');
  return out;
}

// Smallest d dividing |w| such that w is a power of its length-d prefix.
std::size_t primitive_root_length(const PeriodicSet::Bits& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return d;
  }
  return n;
}

template <typename Op>
PeriodicSet combine(const PeriodicSet& a, const PeriodicSet& b, Op op) {
  const std::size_t pre = std::max(a.pre().size(), b.pre().size());
  const std::size_t per = std::lcm(a.period().size(), b.period().size());
  PeriodicSet::Bits p(pre), q(per);
  for (std::size_t i = 0; i < pre; ++i) p[i] = op(a.contains(i), b.contains(i));
  for (std::size_t i = 0; i < per; ++i) q[i] = op(a.contains(pre + i), b.contains(pre + i));
  return PeriodicSet(std::move(p), std::move(q));
}

}  // namespace

PeriodicSet::PeriodicSet() : period_{false} {}

PeriodicSet::PeriodicSet(Bits pre, Bits period) : pre_(std::move(pre)), period_(std::move(period)) {
  if (period_.empty()) throw Error("period word must be nonempty");
  canonicalize();
}

PeriodicSet PeriodicSet::parse(std::string_view pre, std::string_view period) {
  return PeriodicSet(parse_word(pre, "pre"), parse_word(period, "period"));
}

PeriodicSet PeriodicSet::naturals() { return PeriodicSet({}, {true}); }

PeriodicSet PeriodicSet::singleton(std::uint64_t k) {
  Bits pre(k + 1, false);
  pre[k] = true;
  return PeriodicSet(std::move(pre), {false});
}

PeriodicSet PeriodicSet::finite(const std::vector<std::uint64_t>& elements) {
  if (elements.empty()) return empty();
  Bits pre(*std::max_element(elements.begin(), elements.end()) + 1, false);
  for (auto e : elements) pre[e] = true;
  return PeriodicSet(std::move(pre), {false});
}

PeriodicSet PeriodicSet::residue(std::uint64_t modulus, std::uint64_t residue) {
  if (modulus == 0 || residue >= modulus) throw Error("residue class needs 0 <= residue < modulus");
  Bits period(modulus, false);
  period[residue] = true;
  return PeriodicSet({}, std::move(period));
}

PeriodicSet PeriodicSet::from(std::uint64_t k) { return PeriodicSet(Bits(k, false), {true}); }

void PeriodicSet::canonicalize() {
  period_.resize(primitive_root_length(period_));
  // Absorb trailing pre bits that agree with the periodic continuation; the
  // period rotates right by one at each step and stays primitive.
  while (!pre_.empty() && pre_.back() == period_.back()) {
    pre_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

std::string PeriodicSet::pre_string() const { return render(pre_); }
std::string PeriodicSet::period_string() const { return render(period_); }

bool PeriodicSet::contains(std::uint64_t i) const {
  if (i < pre_.size()) return pre_[i];
  return period_[(i - pre_.size()) % period_.size()];
}

bool PeriodicSet::is_finite() const { return period_.size() == 1 && !period_[0]; }
bool PeriodicSet::is_cofinite() const { return period_.size() == 1 && period_[0]; }

std::uint64_t PeriodicSet::cardinality() const {
  if (!is_finite()) throw Error("cardinality of an infinite set");
  return static_cast<std::uint64_t>(std::count(pre_.begin(), pre_.end(), true));
}

std::optional<std::uint64_t> PeriodicSet::min() const { return nth(0); }

std::optional<std::uint64_t> PeriodicSet::nth(std::uint64_t k) const {
  std::uint64_t seen = 0;
  for (std::uint64_t i = 0; i < pre_.size(); ++i)
    if (pre_[i] && seen++ == k) return i;
  const auto per_count = static_cast<std::uint64_t>(std::count(period_.begin(), period_.end(), true));
  if (per_count == 0) return std::nullopt;
  const std::uint64_t rest = k - seen;
  const std::uint64_t whole = rest / per_count;
  std::uint64_t within = rest % per_count;
  for (std::uint64_t j = 0; j < period_.size(); ++j)
    if (period_[j] && within-- == 0) return pre_.size() + whole * period_.size() + j;
  return std::nullopt;  // unreachable
}

PeriodicSet PeriodicSet::first(std::uint64_t count) const {
  if (count == 0) return empty();
  if (is_finite() && cardinality() <= count) return *this;
  const std::uint64_t last = *nth(count - 1);
  Bits pre(last + 1);
  for (std::uint64_t i = 0; i <= last; ++i) pre[i] = contains(i);
  return PeriodicSet(std::move(pre), {false});
}

std::vector<std::uint64_t> PeriodicSet::members_below(std::uint64_t bound) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < bound; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

PeriodicSet PeriodicSet::complement() const {
  Bits p(pre_.size()), q(period_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = !pre_[i];
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = !period_[i];
  return PeriodicSet(std::move(p), std::move(q));
}

PeriodicSet PeriodicSet::with(std::uint64_t k) const { return *this | singleton(k); }
PeriodicSet PeriodicSet::without(std::uint64_t k) const { return *this - singleton(k); }

bool operator<(const PeriodicSet& a, const PeriodicSet& b) {
  if (a.pre_.size() != b.pre_.size()) return a.pre_.size() < b.pre_.size();
  if (a.period_.size() != b.period_.size()) return a.period_.size() < b.period_.size();
  if (a.pre_ != b.pre_) return a.pre_ < b.pre_;
  return a.period_ < b.period_;
}

PeriodicSet operator|(const PeriodicSet& a, const PeriodicSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

PeriodicSet operator&(const PeriodicSet& a, const PeriodicSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

PeriodicSet operator-(const PeriodicSet& a, const PeriodicSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

PeriodicSet operator~(const PeriodicSet& a) { return a.complement(); }

bool subset_of(const PeriodicSet& a, const PeriodicSet& b) { return (a & b) == a; }

std::string to_string(const PeriodicSet& s) {
  return s.pre_string() + "(" + s.period_string() + ")";
}

}  // namespace topcube
