#include "ooc/clique.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "ooc/correlation.hpp"

namespace ooc {

std::size_t NodeSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t NodeSet::count_and(const NodeSet& other) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return c;
}

NodeSet& NodeSet::operator&=(const NodeSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

bool NodeSet::any() const {
  return std::any_of(words_.begin(), words_.end(), [](auto w) { return w != 0; });
}

std::vector<std::size_t> NodeSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

CodeGraph::CodeGraph(std::size_t nodes, int threshold)
    : rows_(nodes, NodeSet(nodes)), threshold_(threshold) {}

void CodeGraph::connect(std::size_t i, std::size_t j) {
  if (i == j) return;
  rows_[i].set(j);
  rows_[j].set(i);
}

CodeGraph build_graph(std::span<const EdopMatrix> codes, int threshold) {
  CodeGraph g(codes.size(), threshold);
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (std::size_t j = i + 1; j < codes.size(); ++j) {
      if (crosscorr_edop(codes[i], codes[j]).lambda_cxy <= threshold) g.connect(i, j);
    }
  }
  return g;
}

CodeGraph build_graph(std::span<const Dopr> codes, int threshold) {
  std::vector<EdopMatrix> m;
  m.reserve(codes.size());
  for (const auto& c : codes) m.push_back(edop_full(c));
  return build_graph(std::span<const EdopMatrix>(m), threshold);
}

namespace {

// Highest degree inside `working`, lowest index on ties.
std::size_t pick_highest(const CodeGraph& g, const NodeSet& working, std::size_t* degree) {
  std::size_t best = g.size();
  std::size_t best_degree = 0;
  for (std::size_t v : working.members()) {
    const std::size_t d = g.neighbours(v).count_and(working);
    if (best == g.size() || d > best_degree) {
      best = v;
      best_degree = d;
    }
  }
  *degree = best_degree;
  return best;
}

Clique grow(const CodeGraph& g, NodeSet working, std::size_t v, std::size_t d) {
  Clique taken;
  for (;;) {
    taken.push_back(v);
    working.reset(v);
    NodeSet next = working;
    next &= g.neighbours(v);
    if (d == 0) break;
    if (d == 1) {
      taken.push_back(next.members().front());
      break;
    }
    working = std::move(next);
    v = pick_highest(g, working, &d);
  }
  std::sort(taken.begin(), taken.end());
  return taken;
}

NodeSet all_nodes(const CodeGraph& g) {
  NodeSet s(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) s.set(i);
  return s;
}

}  // namespace

Clique greedy_clique(const CodeGraph& g) {
  if (g.size() == 0) throw std::invalid_argument("greedy clique search on an empty graph");
  const NodeSet working = all_nodes(g);
  std::size_t d = 0;
  const std::size_t v = pick_highest(g, working, &d);
  return grow(g, working, v, d);
}

Clique greedy_clique_from(const CodeGraph& g, std::size_t start) {
  if (start >= g.size()) throw std::out_of_range("greedy clique start outside graph");
  // The forced first node's degree is taken in the whole graph; thereafter
  // the working graph is its neighbourhood.
  std::size_t d = g.degree(start);
  return grow(g, all_nodes(g), start, d);
}

std::vector<Clique> enumerate_cliques(const CodeGraph& g) {
  if (g.size() == 0) throw std::invalid_argument("clique enumeration on an empty graph");
  std::size_t top = 0;
  for (std::size_t i = 0; i < g.size(); ++i) top = std::max(top, g.degree(i));

  std::vector<Clique> out;
  std::set<Clique> seen;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.degree(i) != top) continue;
    Clique c = greedy_clique_from(g, i);
    if (seen.insert(c).second) out.push_back(std::move(c));
  }
  return out;
}

bool is_clique(const CodeGraph& g, const Clique& c) {
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      if (!g.adjacent(c[a], c[b])) return false;
    }
  }
  return true;
}

bool is_maximal(const CodeGraph& g, const Clique& c) {
  if (g.size() == 0) return true;
  NodeSet common = all_nodes(g);
  for (std::size_t v : c) {
    common &= g.neighbours(v);
    common.reset(v);
  }
  for (std::size_t v : c) common.reset(v);
  return !common.any();
}

CliqueSet make_clique_set(std::vector<Dopr> codes, const CodeParams& params) {
  if (codes.empty()) throw std::invalid_argument("a clique set needs at least one code");
  std::sort(codes.begin(), codes.end());
  CliqueSet s;
  s.params = params;
  s.bound = johnson_bound(params.n, params.w, std::max(params.lambda_a, params.lambda_c));
  s.verified_lambda_a = set_lambda_a(codes);
  s.verified_lambda_c = codes.size() >= 2 ? set_lambda_c(codes) : 0;
  s.codes = std::move(codes);
  return s;
}

bool verify_maximality(const CliqueSet& set, std::span<const Dopr> candidates) {
  std::set<StandardDopr> members;
  std::vector<EdopMatrix> member_edop;
  for (const auto& c : set.codes) {
    members.insert(standardize(c));
    member_edop.push_back(edop_full(c));
  }
  for (const auto& cand : candidates) {
    if (cand.n() != set.params.n || cand.weight() != set.params.w) continue;
    if (members.count(standardize(cand))) continue;
    const auto m = edop_full(cand);
    const bool fits = std::all_of(member_edop.begin(), member_edop.end(), [&](const auto& x) {
      return crosscorr_edop(x, m).lambda_cxy <= set.params.lambda_c;
    });
    if (fits) return false;
  }
  return true;
}

int interset_crosscorr(const CliqueSet& a, const CliqueSet& b) {
  return interset_crosscorr(std::span<const Dopr>(a.codes), std::span<const Dopr>(b.codes));
}

CliqueSetMatrix clique_set_matrix(std::span<const CliqueSet> sets, int lambda_c) {
  CliqueSetMatrix m;
  m.size = sets.size();
  m.values.assign(m.size * m.size, 0);
  m.normalized = CodeGraph(m.size, lambda_c + 1);
  for (std::size_t i = 0; i < m.size; ++i) {
    for (std::size_t j = i; j < m.size; ++j) {
      const int v = interset_crosscorr(sets[i], sets[j]);
      m.values[i * m.size + j] = v;
      m.values[j * m.size + i] = v;
      if (i != j && v <= lambda_c + 1) m.normalized.connect(i, j);
    }
  }
  return m;
}

int family_interset_lambda(std::span<const CliqueSet> sets) {
  int best = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      best = std::max(best, interset_crosscorr(sets[i], sets[j]));
    }
  }
  return best;
}

Family select_family(std::span<const CliqueSet> cliques, int lambda_c) {
  Family f;
  if (cliques.empty()) return f;
  const auto matrix = clique_set_matrix(cliques, lambda_c);
  for (std::size_t i : greedy_clique(matrix.normalized)) f.sets.push_back(cliques[i]);
  f.interset_lambda = family_interset_lambda(f.sets);
  return f;
}

}  // namespace ooc
