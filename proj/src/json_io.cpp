#include "topcube/json_io.hpp"

#include <set>

#include "topcube/topology.hpp"

namespace topcube {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Json list(const std::vector<PeriodicSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(to_json(s));
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const PointSet& s) { return s.points(); }

Json to_json(const Family& f) {
  Json sets = Json::array();
  for (const auto& s : f.members()) sets.push_back(to_json(s));
  return Json{{"n", f.universe().size()}, {"sets", sets}};
}

Json topology_to_json(const Family& f) {
  if (!is_topology(f)) throw Error("family is not a topology");
  Json j = to_json(f);
  j["topology"] = true;
  return j;
}

Json to_json(const PeriodicSet& s) {
  return Json{{"pre", s.pre_string()}, {"period", s.period_string()}};
}

Json to_json(const std::vector<Family>& fams) {
  Json out = Json::array();
  for (const auto& f : fams) out.push_back(to_json(f));
  return out;
}

Json to_json(const FamilyExpr& e) {
  return std::visit(
      overloaded{
          [](const ListedSets& n) { return Json{{"kind", "Explicit"}, {"sets", list(n.sets)}}; },
          [](const DownPow& n) { return Json{{"kind", "DownPow"}, {"set", to_json(n.bound)}}; },
          [](const TopGen& n) { return Json{{"kind", "TopGen"}, {"subbase", list(n.subbase)}}; },
          [](const LatGen& n) { return Json{{"kind", "LatGen"}, {"gens", list(n.gens)}}; },
          [](const LatGenSingletons& n) {
            return Json{{"kind", "LatGenSing"}, {"gens", list(n.gens)}};
          },
          [](const UnionOf& n) {
            return Json{{"kind", "UnionFam"}, {"a", to_json(n.a)}, {"b", to_json(n.b)}};
          },
          [](const ChainInitials& n) {
            return Json{{"kind", "ChainInitials"},
                        {"enum", to_json(n.enumeration)},
                        {"extras", list(n.extras)}};
          },
          [](const DownPowChain& n) {
            return Json{{"kind", "DownPowChain"},
                        {"base", to_json(n.base)},
                        {"enum", to_json(n.enumeration)}};
          },
      },
      e.node().body);
}

Family family_from_json(const Json& j) {
  const Json& n = field(j, "n");
  if (!n.is_number_unsigned()) throw Error("family 'n' must be a positive integer");
  const GroundSet u(n.get<unsigned>());
  const Json& sets = field(j, "sets");
  if (!sets.is_array()) throw Error("family 'sets' must be an array");
  std::uint64_t word = 0;
  for (const auto& s : sets) {
    if (!s.is_array()) throw Error("each set must be an array of points");
    std::uint32_t mask = 0;
    for (const auto& p : s) {
      if (!p.is_number_unsigned()) throw Error("points must be non-negative integers");
      const auto point = p.get<std::uint64_t>();
      if (point >= u.size()) throw Error("point " + std::to_string(point) + " out of range");
      const std::uint32_t bit = 1u << point;
      if (mask & bit) throw Error("point " + std::to_string(point) + " repeated within a set");
      mask |= bit;
    }
    const std::uint64_t member = std::uint64_t{1} << mask;
    if (word & member) throw Error("duplicate set in family");
    word |= member;
  }
  return Family(u, word);
}

PeriodicSet periodic_from_json(const Json& j) {
  const Json& pre = field(j, "pre");
  const Json& period = field(j, "period");
  if (!pre.is_string() || !period.is_string()) throw Error("'pre' and 'period' must be strings");
  const auto per = period.get<std::string>();
  if (per.empty()) throw Error("period must be nonempty");
  return PeriodicSet::parse(pre.get<std::string>(), per);
}

std::vector<PeriodicSet> periodic_list_from_json(const Json& j) {
  if (!j.is_array()) throw Error("expected an array of periodic sets");
  std::vector<PeriodicSet> out;
  for (const auto& s : j) out.push_back(periodic_from_json(s));
  return out;
}

FamilyExpr family_expr_from_json(const Json& j) {
  const Json& kind_field = field(j, "kind");
  if (!kind_field.is_string()) throw Error("'kind' must be a string");
  const auto kind = kind_field.get<std::string>();
  if (kind == "Explicit") {
    const auto sets = periodic_list_from_json(field(j, "sets"));
    if (std::set<PeriodicSet>(sets.begin(), sets.end()).size() != sets.size())
      throw Error("duplicate set in Explicit family");
    return FamilyExpr::listed(sets);
  }
  if (kind == "DownPow") return FamilyExpr::down_pow(periodic_from_json(field(j, "set")));
  if (kind == "TopGen") return FamilyExpr::top_gen(periodic_list_from_json(field(j, "subbase")));
  if (kind == "LatGen") return FamilyExpr::lat_gen(periodic_list_from_json(field(j, "gens")));
  if (kind == "LatGenSing")
    return FamilyExpr::lat_gen_singletons(periodic_list_from_json(field(j, "gens")));
  if (kind == "UnionFam")
    return FamilyExpr::union_of(family_expr_from_json(field(j, "a")),
                                family_expr_from_json(field(j, "b")));
  if (kind == "ChainInitials") {
    std::vector<PeriodicSet> extras;
    if (j.contains("extras")) extras = periodic_list_from_json(j.at("extras"));
    return FamilyExpr::chain_initials(periodic_from_json(field(j, "enum")), std::move(extras));
  }
  if (kind == "DownPowChain")
    return FamilyExpr::down_pow_chain(periodic_from_json(field(j, "base")),
                                      periodic_from_json(field(j, "enum")));
  throw Error("unknown family kind '" + kind + "'");
}

}  // namespace topcube
