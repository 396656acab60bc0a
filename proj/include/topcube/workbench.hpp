#pragma once

// Command layer behind the CLI. Each command returns a Report; the CLI maps
// its verdict to the exit code (0 pass, 1 fail, 3 inconclusive) and usage
// errors (topcube::Error) to 2.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "topcube/finite.hpp"
#include "topcube/periodic.hpp"
#include "topcube/report.hpp"
#include "topcube/topology.hpp"

namespace topcube {

struct CommandOptions {
  std::optional<unsigned> n;
  std::optional<unsigned> x;
  std::uint64_t seed = 0;
  std::optional<std::size_t> bound;
  std::optional<std::vector<PeriodicSet>> coords;
  std::optional<std::string> fixture;
  std::optional<std::string> atoms;
  std::optional<std::string> gens;
  std::optional<std::string> candidate;
  /// Number of random samples where a check draws any.
  std::optional<std::size_t> samples;
  std::filesystem::path fixture_dir = TOPCUBE_FIXTURE_DIR;
};

inline const std::vector<std::string>& verify_check_ids() {
  static const std::vector<std::string> ids{"lemma3.2", "thm3.3-chain", "thm5.3",
                                            "thm5.4",   "lemma6.1",     "thm6.2",
                                            "thm6.3",   "cor6.4",       "thm6.6"};
  return ids;
}

inline const std::vector<std::string>& demo_ids() {
  static const std::vector<std::string> ids{"example5.1", "thm4.5-chain", "lemma4.1-witness",
                                            "remark3.4"};
  return ids;
}

/// Number of topologies on n points, n in 1..4.
Report cmd_count(unsigned n);
/// Throws Error on an unknown id or invalid options.
Report cmd_verify(const std::string& check, const CommandOptions& opts);
Report cmd_demo(const std::string& demo, const CommandOptions& opts);

/// Loads fixtures/<name>.json, or `name` itself when it is a path to a file.
Json load_fixture(const std::string& name, const CommandOptions& opts);

/// A random nonempty collection of pairwise disjoint topologies other than I.
std::vector<Topology> random_disjoint_collection(GroundSet u, std::mt19937_64& rng);

/// A random chain of between 1 and max_length families. Requires n <= 4.
std::vector<Family> random_chain(GroundSet u, std::size_t max_length, std::mt19937_64& rng);

}  // namespace topcube
