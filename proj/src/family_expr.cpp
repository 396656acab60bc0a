#include "topcube/family_expr.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "topcube/json_io.hpp"

namespace topcube {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_generators(const std::vector<PeriodicSet>& gens, bool allow_empty, const char* kind) {
  if (!allow_empty && gens.empty()) throw Error(std::string(kind) + " needs at least one generator");
  if (gens.size() > FamilyExpr::kMaxGenerators)
    throw Error(std::string(kind) + " accepts at most 16 generators");
  std::set<PeriodicSet> seen(gens.begin(), gens.end());
  if (seen.size() != gens.size()) throw Error(std::string(kind) + " generators must be distinct");
}

// Union of the meets contained in a.
PeriodicSet covered_part(const std::vector<PeriodicSet>& meets, const PeriodicSet& a, bool& any) {
  PeriodicSet acc;
  any = false;
  for (const auto& m : meets) {
    if (subset_of(m, a)) {
      acc = acc | m;
      any = true;
    }
  }
  return acc;
}

PeriodicSet singleton_members(const std::vector<PeriodicSet>& sets) {
  PeriodicSet out;
  for (const auto& s : sets)
    if (s.is_finite() && s.cardinality() == 1) out = out | s;
  return out;
}

}  // namespace

std::vector<PeriodicSet> finite_meets(const std::vector<PeriodicSet>& gens) {
  const std::size_t g = gens.size();
  if (g == 0) return {};
  std::vector<PeriodicSet> table(std::size_t{1} << g);
  std::set<PeriodicSet> distinct;
  for (std::size_t mask = 1; mask < table.size(); ++mask) {
    const std::size_t low = mask & (~mask + 1);
    const auto idx = static_cast<std::size_t>(std::countr_zero(low));
    const std::size_t rest = mask ^ low;
    table[mask] = rest == 0 ? gens[idx] : (table[rest] & gens[idx]);
    distinct.insert(table[mask]);
  }
  return {distinct.begin(), distinct.end()};
}

FamilyExpr FamilyExpr::listed(std::vector<PeriodicSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return FamilyExpr(std::make_shared<FamilyNode>(FamilyNode{ListedSets{std::move(sets)}}));
}

FamilyExpr FamilyExpr::down_pow(PeriodicSet bound) {
  return FamilyExpr(std::make_shared<FamilyNode>(FamilyNode{DownPow{std::move(bound)}}));
}

FamilyExpr FamilyExpr::top_gen(std::vector<PeriodicSet> subbase) {
  require_generators(subbase, false, "TopGen");
  auto meets = finite_meets(subbase);
  return FamilyExpr(
      std::make_shared<FamilyNode>(FamilyNode{TopGen{std::move(subbase), std::move(meets)}}));
}

FamilyExpr FamilyExpr::lat_gen(std::vector<PeriodicSet> gens) {
  require_generators(gens, false, "LatGen");
  auto meets = finite_meets(gens);
  return FamilyExpr(
      std::make_shared<FamilyNode>(FamilyNode{LatGen{std::move(gens), std::move(meets)}}));
}

FamilyExpr FamilyExpr::lat_gen_singletons(std::vector<PeriodicSet> gens) {
  require_generators(gens, true, "LatGenSing");
  auto meets = finite_meets(gens);
  return FamilyExpr(std::make_shared<FamilyNode>(
      FamilyNode{LatGenSingletons{std::move(gens), std::move(meets)}}));
}

FamilyExpr FamilyExpr::union_of(FamilyExpr a, FamilyExpr b) {
  return FamilyExpr(std::make_shared<FamilyNode>(FamilyNode{UnionOf{std::move(a), std::move(b)}}));
}

FamilyExpr FamilyExpr::chain_initials(PeriodicSet enumeration, std::vector<PeriodicSet> extras) {
  if (enumeration.is_finite()) throw Error("ChainInitials enumeration must be infinite");
  std::sort(extras.begin(), extras.end());
  extras.erase(std::unique(extras.begin(), extras.end()), extras.end());
  return FamilyExpr(std::make_shared<FamilyNode>(
      FamilyNode{ChainInitials{std::move(enumeration), std::move(extras)}}));
}

FamilyExpr FamilyExpr::down_pow_chain(PeriodicSet base, PeriodicSet enumeration) {
  if (enumeration.is_finite()) throw Error("DownPowChain enumeration must be infinite");
  return FamilyExpr(std::make_shared<FamilyNode>(
      FamilyNode{DownPowChain{std::move(base), std::move(enumeration)}}));
}

bool FamilyExpr::contains(const PeriodicSet& a) const {
  return std::visit(
      overloaded{
          [&](const ListedSets& n) { return std::binary_search(n.sets.begin(), n.sets.end(), a); },
          [&](const DownPow& n) { return subset_of(a, n.bound); },
          [&](const TopGen& n) {
            // Basic opens are the meets plus ∅ and ℕ; a is open iff it is the
            // union of the basic opens inside it.
            if (a.is_empty() || a == PeriodicSet::naturals()) return true;
            bool any = false;
            return covered_part(n.meets, a, any) == a;
          },
          [&](const LatGen& n) {
            bool any = false;
            const auto cover = covered_part(n.meets, a, any);
            return any && cover == a;
          },
          [&](const LatGenSingletons& n) {
            // Finitely many singletons fill whatever the meets leave uncovered;
            // ∅ is the meet of two distinct singletons.
            bool any = false;
            return (a - covered_part(n.meets, a, any)).is_finite();
          },
          [&](const UnionOf& n) { return n.a.contains(a) || n.b.contains(a); },
          [&](const ChainInitials& n) {
            if (std::binary_search(n.extras.begin(), n.extras.end(), a)) return true;
            if (!a.is_finite() || a.is_empty()) return false;
            return n.enumeration.first(a.cardinality()) == a;
          },
          [&](const DownPowChain& n) {
            const auto rest = a - n.base;
            return rest.is_finite() && subset_of(rest, n.enumeration);
          },
      },
      node_->body);
}

PeriodicSet FamilyExpr::singleton_support() const {
  return std::visit(
      overloaded{
          [](const ListedSets& n) { return singleton_members(n.sets); },
          [](const DownPow& n) { return n.bound; },
          [](const TopGen& n) { return singleton_members(n.meets); },
          [](const LatGen& n) { return singleton_members(n.meets); },
          [](const LatGenSingletons&) { return PeriodicSet::naturals(); },
          [](const UnionOf& n) { return n.a.singleton_support() | n.b.singleton_support(); },
          [](const ChainInitials& n) {
            return singleton_members(n.extras) | n.enumeration.first(1);
          },
          [](const DownPowChain& n) { return n.base | n.enumeration; },
      },
      node_->body);
}

std::vector<PeriodicSet> FamilyExpr::landmarks(std::size_t depth) const {
  std::vector<PeriodicSet> out;
  std::visit(overloaded{
                 [&](const ListedSets& n) { out = n.sets; },
                 [&](const DownPow& n) { out = {n.bound}; },
                 [&](const TopGen& n) {
                   out = n.meets;
                   out.push_back(PeriodicSet::empty());
                   out.push_back(PeriodicSet::naturals());
                 },
                 [&](const LatGen& n) { out = n.meets; },
                 [&](const LatGenSingletons& n) { out = n.meets; },
                 [&](const UnionOf& n) {
                   out = n.a.landmarks(depth);
                   auto more = n.b.landmarks(depth);
                   out.insert(out.end(), more.begin(), more.end());
                 },
                 [&](const ChainInitials& n) {
                   out = n.extras;
                   out.push_back(n.enumeration);
                   for (std::size_t m = 0; m <= depth + 1; ++m)
                     out.push_back(n.enumeration.first(m + 1));
                 },
                 [&](const DownPowChain& n) {
                   out = {n.base, n.base | n.enumeration};
                   for (std::size_t m = 0; m <= depth + 1; ++m)
                     out.push_back(n.base | n.enumeration.first(m));
                 },
             },
             node_->body);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool operator==(const FamilyExpr& a, const FamilyExpr& b) {
  if (a.node_ == b.node_) return true;
  return to_json(a) == to_json(b);
}

Report check_topology_symbolic(const FamilyExpr& e, const TopologyProbe& probe) {
  Report r("topology-axioms-symbolic",
           Json{{"family", to_json(e)},
                {"pair_probes", probe.pairs.size()},
                {"union_probes", probe.unions.size()}});
  if (!e.contains(PeriodicSet::empty())) {
    r.fail(Json{{"axiom", "contains-empty"}});
    return r;
  }
  if (!e.contains(PeriodicSet::naturals())) {
    r.fail(Json{{"axiom", "contains-whole"}});
    return r;
  }
  for (const auto& [a, b] : probe.pairs) {
    if (!e.contains(a) || !e.contains(b)) continue;
    if (!e.contains(a & b)) {
      r.fail(Json{{"axiom", "intersection"}, {"a", to_json(a)}, {"b", to_json(b)}, {"missing", to_json(a & b)}});
      return r;
    }
    if (!e.contains(a | b)) {
      r.fail(Json{{"axiom", "union"}, {"a", to_json(a)}, {"b", to_json(b)}, {"missing", to_json(a | b)}});
      return r;
    }
  }
  const auto support = e.singleton_support();
  for (const auto& t : probe.unions) {
    if (!subset_of(t, support)) continue;
    if (!e.contains(t)) {
      r.fail(Json{{"axiom", "arbitrary-union"},
                  {"missing", to_json(t)},
                  {"reason", "every singleton of the set is a member but the set is not"}});
      return r;
    }
  }
  return r;
}

}  // namespace topcube

namespace topcube {

std::vector<bool> membership_trace(const FamilySequence& seq, const PeriodicSet& a,
                                   std::size_t depth) {
  std::vector<bool> out;
  out.reserve(depth + 1);
  for (std::size_t m = 0; m <= depth; ++m) out.push_back(seq(m).contains(a));
  return out;
}

}  // namespace topcube
