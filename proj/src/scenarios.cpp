#include "topcube/scenarios.hpp"

namespace topcube::scenarios {

PeriodicSet initial_segment(const PeriodicSet& enumeration, std::size_t m) {
  return enumeration.first(m + 1);
}

OmegaChain initial_segment_chain(const PeriodicSet& enumeration) {
  FamilySequence stages{
      "initial-segment-chain",
      [enumeration](std::size_t m) {
        std::vector<PeriodicSet> sets{PeriodicSet::empty(), PeriodicSet::naturals()};
        for (std::size_t i = 0; i <= m; ++i) sets.push_back(initial_segment(enumeration, i));
        return FamilyExpr::listed(std::move(sets));
      },
      true,
      std::nullopt};
  auto union_expr =
      FamilyExpr::chain_initials(enumeration, {PeriodicSet::empty(), PeriodicSet::naturals()});
  return OmegaChain{std::move(stages), std::move(union_expr)};
}

FamilyExpr initial_segment_limit(const PeriodicSet& enumeration) {
  return FamilyExpr::chain_initials(enumeration,
                                    {PeriodicSet::empty(), PeriodicSet::naturals(), enumeration});
}

OmegaChain growing_powerset_chain(const PeriodicSet& base, const PeriodicSet& enumeration,
                                  std::size_t initial) {
  const auto top = FamilyExpr::listed({PeriodicSet::naturals()});
  FamilySequence stages{
      "growing-powerset-chain",
      [=](std::size_t m) {
        return FamilyExpr::union_of(FamilyExpr::down_pow(base | enumeration.first(initial + m)), top);
      },
      true,
      std::nullopt};
  return OmegaChain{std::move(stages), growing_powerset_union(base, enumeration)};
}

FamilyExpr growing_powerset_union(const PeriodicSet& base, const PeriodicSet& enumeration) {
  return FamilyExpr::union_of(FamilyExpr::down_pow_chain(base, enumeration),
                              FamilyExpr::listed({PeriodicSet::naturals()}));
}

TopologyProbe growing_chain_probe(const PeriodicSet& base, const PeriodicSet& enumeration,
                                  std::size_t pairs) {
  TopologyProbe probe;
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto prefix = enumeration.first(i + 1);
    const auto next = PeriodicSet::singleton(*enumeration.nth(i + 1));
    probe.pairs.emplace_back(prefix, next);
    probe.pairs.emplace_back(base | prefix, next);
    probe.pairs.emplace_back(base, prefix);
  }
  probe.unions = {enumeration, base | enumeration};
  return probe;
}

std::vector<PeriodicSet> cofinite_pair() {
  return {PeriodicSet::naturals().without(0), PeriodicSet::naturals().without(1)};
}

FamilySequence constant_sequence(const FamilyExpr& e) {
  return FamilySequence{"constant", [e](std::size_t) { return e; }, true, std::size_t{0}};
}

}  // namespace topcube::scenarios
