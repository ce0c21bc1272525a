#pragma once

// Incremental design of minimum-correlated maximal code sets: DoP prefixes
// are grown one element at a time, each stage pruned to the maximal cliques
// of its compatibility graph, then closed into complete codes.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ooc/clique.hpp"
#include "ooc/code_model.hpp"

namespace ooc {

struct DesignConfig {
  std::vector<CodeParams> parameter_list;
  /// Cap on cliques carried from one stage to the next (largest first,
  /// then discovery order). Unset means no cap.
  std::optional<std::size_t> max_sets;
};

/// Everything a single-parameter run produced.
struct DesignReport {
  CodeParams params;
  /// Complete, standard, lambda_a-admissible codes reached by the search.
  std::vector<Dopr> pool;
  /// Distinct maximal cliques over `pool`.
  std::vector<CliqueSet> cliques;
  Family family;
  std::vector<std::string> diagnostics;
};

/// Anything other than lambda_a = lambda_c = 1 runs, but is untested ground.
bool is_experimental(const CodeParams& params);

/// Every one-element extension of each clique member, inside the standard
/// ranges, whose prefix code keeps auto-correlation <= params.lambda_a.
/// Requires each member to hold fewer than w - 1 elements.
std::vector<PartialDopr> extend_clique_codes(std::span<const PartialDopr> clique,
                                             const CodeParams& params);

DesignReport design_fixed_report(const CodeParams& params,
                                 std::optional<std::size_t> max_sets = std::nullopt);

/// Requires n > w >= 3. Infeasible parameters give an empty family.
Family design_fixed(const CodeParams& params, std::optional<std::size_t> max_sets = std::nullopt);

/// Designs each parameter set, then picks sets across classes whose
/// pairwise inter-set correlation stays within lambda_c + 1.
Family design_multi(const DesignConfig& config);

/// Sets ordered by their smallest code; codes already sorted.
void canonicalize(Family& family);

}  // namespace ooc
