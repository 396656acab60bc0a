#include "topcube/lattice.hpp"

#include <algorithm>
#include <bit>

#include "topcube/json_io.hpp"

namespace topcube {

namespace {

// Worklist closure of `words` under & and |. Each new element is paired
// with every element that precedes it.
template <typename Word>
void close_under_meet_join(std::vector<Word>& words) {
  auto add = [&](Word w) {
    if (std::find(words.begin(), words.end(), w) == words.end()) words.push_back(w);
  };
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Word a = words[i], b = words[j];
      add(a & b);
      add(a | b);
    }
  }
}

// fams sorted and free of duplicates.
bool closed_under_binary(std::span<const Family> fams) {
  auto has = [&](const Family& f) { return std::binary_search(fams.begin(), fams.end(), f); };
  for (const auto& a : fams)
    for (const auto& b : fams)
      if (!has(meet(a, b)) || !has(join(a, b))) return false;
  return true;
}

}  // namespace

FiniteSublattice::FiniteSublattice(GroundSet u, std::vector<Family> elements)
    : u_(u), elements_(std::move(elements)) {
  if (elements_.empty()) throw Error("a sublattice needs at least one element");
  for (const auto& f : elements_)
    if (f.universe() != u) throw UniverseMismatch();
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (!closed_under_binary(elements_)) throw Error("element set is not closed under meet and join");
}

bool FiniteSublattice::contains(const Family& f) const {
  return std::binary_search(elements_.begin(), elements_.end(), f);
}

FiniteSublattice lat_generate(GroundSet u, std::span<const Family> gens) {
  if (gens.empty()) throw Error("lat_generate needs at least one generator");
  std::vector<std::uint64_t> words;
  for (const auto& g : gens) {
    if (g.universe() != u) throw UniverseMismatch();
    if (std::find(words.begin(), words.end(), g.word()) == words.end()) words.push_back(g.word());
  }
  close_under_meet_join(words);
  std::vector<Family> elems;
  elems.reserve(words.size());
  for (auto w : words) elems.emplace_back(u, w);
  return FiniteSublattice(u, std::move(elems));
}

Family lat_generate_sets(GroundSet u, std::span<const PointSet> gens) {
  if (gens.empty()) throw Error("lat_generate_sets needs at least one generator");
  std::vector<std::uint32_t> masks;
  for (const auto& g : gens) {
    if (g.universe() != u) throw UniverseMismatch();
    if (std::find(masks.begin(), masks.end(), g.mask()) == masks.end()) masks.push_back(g.mask());
  }
  close_under_meet_join(masks);
  std::uint64_t word = 0;
  for (auto m : masks) word |= std::uint64_t{1} << m;
  return Family(u, word);
}

std::vector<Family> relations_set(GroundSet u, std::span<const Family> s) {
  for (const auto& b : s)
    if (b.universe() != u) throw UniverseMismatch();
  std::vector<Family> out;
  for (const Family& a : enumerate_families(u))
    if (std::all_of(s.begin(), s.end(), [&](const Family& b) { return comparable(a, b); }))
      out.push_back(a);
  return out;
}

bool is_complete_family_set(std::span<const Family> fams) {
  if (fams.empty()) return true;
  std::vector<Family> sorted(fams.begin(), fams.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto has = [&](std::uint64_t w) {
    return std::binary_search(sorted.begin(), sorted.end(), Family(sorted[0].universe(), w));
  };
  constexpr std::size_t kExhaustiveLimit = 20;
  if (sorted.size() > kExhaustiveLimit) return closed_under_binary(sorted);
  // Meet and join of every nonempty subset, built incrementally from the
  // subset without its lowest element.
  const std::size_t k = sorted.size();
  std::vector<std::uint64_t> meets(std::size_t{1} << k), joins(std::size_t{1} << k);
  for (std::size_t mask = 1; mask < meets.size(); ++mask) {
    const std::size_t low = mask & (~mask + 1);
    const auto idx = static_cast<std::size_t>(std::countr_zero(low));
    const std::size_t rest = mask ^ low;
    const std::uint64_t w = sorted[idx].word();
    meets[mask] = rest == 0 ? w : (meets[rest] & w);
    joins[mask] = rest == 0 ? w : (joins[rest] | w);
    if (!has(meets[mask]) || !has(joins[mask])) return false;
  }
  return true;
}

bool is_complete_sublattice(const FiniteSublattice& p) { return is_complete_family_set(p.elements()); }

bool is_join_complete_family_set(std::span<const Family> fams) {
  auto has = [&](const Family& f) { return std::find(fams.begin(), fams.end(), f) != fams.end(); };
  for (const auto& a : fams)
    for (const auto& b : fams)
      if (!has(join(a, b))) return false;
  return true;
}

bool is_chain(std::span<const Family> fams) {
  for (std::size_t i = 0; i < fams.size(); ++i)
    for (std::size_t j = i + 1; j < fams.size(); ++j)
      if (!comparable(fams[i], fams[j])) return false;
  return true;
}

std::vector<Family> chain_completion_finite(GroundSet u, std::span<const Family> chain) {
  if (chain.empty()) throw Error("chain completion needs a nonempty chain");
  for (const auto& f : chain)
    if (f.universe() != u) throw UniverseMismatch();
  if (!is_chain(chain)) throw Error("input families are not totally ordered");
  const auto relations = relations_set(u, chain);

  std::vector<Family> out(chain.begin(), chain.end());
  Family bottom = chain[0], top = chain[0];
  for (const auto& f : chain) {
    bottom = meet(bottom, f);
    top = join(top, f);
  }
  out.push_back(bottom);
  out.push_back(top);

  for (const Family& b : relations) {
    std::optional<Family> below, above;
    for (const Family& w : chain) {
      if (w == b) continue;
      if (leq(w, b)) below = below ? join(*below, w) : w;
      if (leq(b, w)) above = above ? meet(*above, w) : w;
    }
    if (below) out.push_back(*below);
    if (above) out.push_back(*above);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Report chain_completion_omega(const OmegaChain& c, std::span<const PeriodicSet> coords,
                              std::size_t bound) {
  Report r("chain-completion-omega", Json{{"chain", c.stages.name}, {"bound", bound}});
  Json table = Json::array();
  Json unstable = Json::array();
  for (const auto& a : coords) {
    const auto trace = membership_trace(c.stages, a, bound);
    for (std::size_t m = 1; m < trace.size(); ++m)
      if (trace[m - 1] && !trace[m])
        throw Error("chain is not increasing on coordinate " + to_string(a) + " at stage " +
                    std::to_string(m));
    const auto first_true = std::find(trace.begin(), trace.end(), true);
    const bool eventually = first_true != trace.end();
    const bool limit = c.union_expr.contains(a);
    Json row{{"coord", to_json(a)}, {"limit", limit}};
    if (eventually) row["stable_true_from"] = std::distance(trace.begin(), first_true);
    if (eventually && !limit) {
      row["status"] = "fail";
      r.fail(Json{{"coord", to_json(a)},
                  {"reason", "member of a stage but not of the declared union"}});
    } else if (!eventually && limit) {
      row["status"] = "inconclusive";
      unstable.push_back(to_json(a));
    } else {
      row["status"] = "pass";
    }
    table.push_back(std::move(row));
  }
  if (!unstable.empty()) r.inconclusive(Json{{"bound", bound}, {"unstabilized", unstable}});
  r.data()["coords"] = std::move(table);
  if (r.passed()) r.set_witness(Json{{"union", to_json(c.union_expr)}});
  return r;
}

Report join_completeness_witness(const std::vector<PeriodicSet>& gens, const PeriodicSet& candidate) {
  if (candidate.is_finite()) throw Error("a finite candidate cannot witness join incompleteness");
  const auto k = FamilyExpr::lat_gen_singletons(gens);
  Json gens_json = Json::array();
  for (const auto& g : gens) gens_json.push_back(to_json(g));
  Report r("join-completeness-witness",
           Json{{"gens", gens_json}, {"candidate", to_json(candidate)}});

  // Exact: every {k} ⊆ candidate is in K iff candidate ⊆ support of K.
  if (!subset_of(candidate, k.singleton_support())) {
    r.fail(Json{{"reason", "some singleton of the candidate is not in the lattice"}});
    return r;
  }
  // Cross-check the first singletons by direct membership.
  constexpr std::uint64_t kSampled = 64;
  for (std::uint64_t i = 0; i < kSampled; ++i) {
    const auto point = *candidate.nth(i);
    if (!k.contains(PeriodicSet::singleton(point))) {
      r.fail(Json{{"reason", "singleton missing from the lattice"}, {"point", point}});
      return r;
    }
  }
  if (k.contains(candidate)) {
    r.fail(Json{{"reason", "candidate is itself in the lattice"}, {"candidate", to_json(candidate)}});
    return r;
  }
  r.set_witness(Json{{"lattice", to_json(k)},
                     {"singletons_checked", kSampled},
                     {"candidate_in_lattice", false}});
  return r;
}

}  // namespace topcube
