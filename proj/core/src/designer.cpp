#include "ooc/designer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ooc/correlation.hpp"
#include "ooc/edop.hpp"

namespace ooc {

namespace {

using PartialClique = std::vector<PartialDopr>;

std::vector<PartialClique> stage_cliques(const std::vector<PartialDopr>& pool, int threshold) {
  if (pool.empty()) return {};
  std::vector<EdopMatrix> m;
  m.reserve(pool.size());
  for (const auto& p : pool) m.push_back(edop_partial(p));
  const auto g = build_graph(std::span<const EdopMatrix>(m), threshold);

  std::vector<PartialClique> out;
  for (const auto& c : enumerate_cliques(g)) {
    PartialClique members;
    for (std::size_t i : c) members.push_back(pool[i]);
    out.push_back(std::move(members));
  }
  return out;
}

// Closes each prefix and keeps the ones that are already the standard
// rotation of an admissible code.
std::vector<Dopr> finalize(const std::vector<PartialDopr>& pool, const CodeParams& params,
                           std::vector<std::string>& diagnostics) {
  const auto [lo, hi] = last_element_range(params.n, params.w);
  std::vector<Dopr> out;
  for (const auto& p : pool) {
    Dopr code = p.completed();
    const int last = code.dops().back();
    if (last < lo || last > hi) {
      diagnostics.push_back("discarded " + to_string(code) + ": last element outside [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
      continue;
    }
    if (!is_standard(code)) {
      diagnostics.push_back("discarded " + to_string(code) + ": not the standard rotation of " +
                            to_string(standardize(code).dopr()));
      continue;
    }
    if (autocorrelation(code) > params.lambda_a) {
      diagnostics.push_back("discarded " + to_string(code) + ": auto-correlation above limit");
      continue;
    }
    out.push_back(std::move(code));
  }
  return out;
}

std::vector<std::vector<Dopr>> final_cliques(const std::vector<Dopr>& pool, int threshold) {
  if (pool.empty()) return {};
  const auto g = build_graph(std::span<const Dopr>(pool), threshold);
  std::vector<std::vector<Dopr>> out;
  for (const auto& c : enumerate_cliques(g)) {
    std::vector<Dopr> members;
    for (std::size_t i : c) members.push_back(pool[i]);
    out.push_back(std::move(members));
  }
  return out;
}

// Adds codes from the shared pool that fit every member, so each clique is
// maximal against everything the search reached.
std::size_t complete(std::vector<Dopr>& clique, const std::vector<Dopr>& pool,
                     const std::vector<EdopMatrix>& pool_edop, int threshold) {
  std::vector<EdopMatrix> members;
  for (const auto& c : clique) members.push_back(edop_full(c));
  std::size_t added = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (std::find(clique.begin(), clique.end(), pool[i]) != clique.end()) continue;
    const bool fits = std::all_of(members.begin(), members.end(), [&](const auto& m) {
      return crosscorr_edop(m, pool_edop[i]).lambda_cxy <= threshold;
    });
    if (fits) {
      clique.push_back(pool[i]);
      members.push_back(pool_edop[i]);
      ++added;
    }
  }
  std::sort(clique.begin(), clique.end());
  return added;
}

}  // namespace

bool is_experimental(const CodeParams& params) {
  return params.lambda_a != 1 || params.lambda_c != 1;
}

std::vector<PartialDopr> extend_clique_codes(std::span<const PartialDopr> clique,
                                             const CodeParams& params) {
  std::vector<PartialDopr> out;
  for (const auto& p : clique) {
    const int u = p.known();
    if (u >= params.w - 1) {
      throw std::invalid_argument("prefix " + join(p.dops()) + " is already w-1 elements long");
    }
    const int limit = max_element_at(params.n, params.w, u + 1);
    const int room = params.n - (params.w - u - 1) - p.sum();
    for (int e = 1; e <= std::min(limit, room); ++e) {
      // Adjacent equal gaps already force auto-correlation 2.
      if (params.lambda_a == 1 && e == p.dops().back()) continue;
      PartialDopr next = p.extended(e);
      if (autocorr_edop(edop_partial(next)).lambda_ax <= params.lambda_a) {
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

DesignReport design_fixed_report(const CodeParams& params, std::optional<std::size_t> max_sets) {
  params.validate();
  if (params.w < 3) {
    throw std::invalid_argument("design needs w >= 3, got " + to_string(params));
  }
  DesignReport report;
  report.params = params;
  if (is_experimental(params)) {
    report.diagnostics.push_back("experimental thresholds " + to_string(params));
  }

  std::vector<std::vector<PartialDopr>> pools;
  if (auto pairs = enumerate_first_pairs(params); !pairs.empty()) {
    pools.push_back(std::move(pairs));
  } else {
    report.diagnostics.push_back("no admissible first pair");
  }

  for (int u = 2; u < params.w - 1 && !pools.empty(); ++u) {
    std::vector<PartialClique> carried;
    std::set<PartialClique> seen;
    for (const auto& pool : pools) {
      for (auto& c : stage_cliques(pool, params.lambda_c)) {
        if (seen.insert(c).second) carried.push_back(std::move(c));
      }
    }
    if (max_sets && carried.size() > *max_sets) {
      std::stable_sort(carried.begin(), carried.end(),
                       [](const auto& a, const auto& b) { return a.size() > b.size(); });
      report.diagnostics.push_back("stage " + std::to_string(u) + ": kept " +
                                   std::to_string(*max_sets) + " of " +
                                   std::to_string(carried.size()) + " cliques");
      carried.resize(*max_sets);
    }
    pools.clear();
    for (const auto& c : carried) {
      if (auto next = extend_clique_codes(c, params); !next.empty()) pools.push_back(std::move(next));
    }
  }

  std::vector<std::vector<Dopr>> found;
  std::set<Dopr> reached;
  for (const auto& pool : pools) {
    auto finals = finalize(pool, params, report.diagnostics);
    reached.insert(finals.begin(), finals.end());
    for (auto& c : final_cliques(finals, params.lambda_c)) found.push_back(std::move(c));
  }
  report.pool.assign(reached.begin(), reached.end());

  std::vector<EdopMatrix> pool_edop;
  pool_edop.reserve(report.pool.size());
  for (const auto& c : report.pool) pool_edop.push_back(edop_full(c));

  std::set<std::vector<Dopr>> seen;
  for (auto& c : found) {
    if (const auto added = complete(c, report.pool, pool_edop, params.lambda_c); added > 0) {
      report.diagnostics.push_back("extended a clique by " + std::to_string(added) +
                                   " code(s) from other branches");
    }
    if (!seen.insert(c).second) continue;
    report.cliques.push_back(make_clique_set(std::move(c), params));
  }

  report.family = select_family(report.cliques, params.lambda_c);
  canonicalize(report.family);
  return report;
}

Family design_fixed(const CodeParams& params, std::optional<std::size_t> max_sets) {
  return design_fixed_report(params, max_sets).family;
}

Family design_multi(const DesignConfig& config) {
  if (config.parameter_list.empty()) throw std::invalid_argument("no code parameters given");
  if (config.parameter_list.size() == 1) {
    return design_fixed(config.parameter_list.front(), config.max_sets);
  }
  std::vector<CliqueSet> sets;
  int lambda_c = 1;
  for (const auto& params : config.parameter_list) {
    auto f = design_fixed(params, config.max_sets);
    lambda_c = std::max(lambda_c, params.lambda_c);
    sets.insert(sets.end(), f.sets.begin(), f.sets.end());
  }
  Family family = select_family(sets, lambda_c);
  canonicalize(family);
  return family;
}

void canonicalize(Family& family) {
  for (auto& s : family.sets) std::sort(s.codes.begin(), s.codes.end());
  std::sort(family.sets.begin(), family.sets.end(), [](const CliqueSet& a, const CliqueSet& b) {
    if (a.params != b.params) return a.params < b.params;
    return a.codes < b.codes;
  });
}

}  // namespace ooc
