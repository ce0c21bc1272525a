#pragma once

// Compatibility graphs over candidate codes and the greedy highest-degree
// maximal-clique search used to build code sets and families of sets.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ooc/code_model.hpp"
#include "ooc/edop.hpp"

namespace ooc {

/// Fixed-size bit set over graph nodes.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::size_t size) : words_((size + 63) / 64, 0), size_(size) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  std::size_t count() const;
  /// |this & other|
  std::size_t count_and(const NodeSet& other) const;
  NodeSet& operator&=(const NodeSet& other);
  bool any() const;
  std::vector<std::size_t> members() const;

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

/// Symmetric compatibility graph; node i is the i-th input code.
class CodeGraph {
 public:
  CodeGraph() = default;
  CodeGraph(std::size_t nodes, int threshold);

  std::size_t size() const { return rows_.size(); }
  int threshold() const { return threshold_; }
  bool adjacent(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  void connect(std::size_t i, std::size_t j);
  const NodeSet& neighbours(std::size_t i) const { return rows_[i]; }
  std::size_t degree(std::size_t i) const { return rows_[i].count(); }

 private:
  std::vector<NodeSet> rows_;
  int threshold_ = 0;
};

/// Ascending node indices.
using Clique = std::vector<std::size_t>;

/// Edge between i != j iff crosscorr_edop(codes[i], codes[j]) <= threshold.
CodeGraph build_graph(std::span<const EdopMatrix> codes, int threshold);
CodeGraph build_graph(std::span<const Dopr> codes, int threshold);

/// Greedy search: take a highest-degree node of the working graph (lowest
/// index on ties), shrink the working graph to its neighbourhood minus the
/// nodes already taken, and repeat. Stops when the chosen node has degree 1
/// (its single neighbour joins the clique) or degree 0.
Clique greedy_clique(const CodeGraph& g);
/// Same, with the first node forced.
Clique greedy_clique_from(const CodeGraph& g, std::size_t start);

/// One greedy run from each node of maximum degree in the whole graph,
/// duplicates removed, in order of starting node.
std::vector<Clique> enumerate_cliques(const CodeGraph& g);

bool is_clique(const CodeGraph& g, const Clique& c);
/// True iff no node outside `c` is adjacent to every member.
bool is_maximal(const CodeGraph& g, const Clique& c);

/// A maximal set of mutually compatible codes together with its checked
/// correlation values. verified_lambda_c is 0 for a single-code set.
struct CliqueSet {
  std::vector<Dopr> codes;
  CodeParams params;
  std::uint64_t bound = 0;
  int verified_lambda_a = 0;
  int verified_lambda_c = 0;

  friend bool operator==(const CliqueSet&, const CliqueSet&) = default;
};

/// Sorts the codes and fills in bound and verified values.
CliqueSet make_clique_set(std::vector<Dopr> codes, const CodeParams& params);

/// True iff no code of `candidates` outside `set` is within params.lambda_c of
/// every member. Codes are compared by standard form.
bool verify_maximality(const CliqueSet& set, std::span<const Dopr> candidates);

int interset_crosscorr(const CliqueSet& a, const CliqueSet& b);

struct CliqueSetMatrix {
  /// M x M inter-set values, row-major; the diagonal holds each set's
  /// self value.
  std::vector<int> values;
  std::size_t size = 0;
  /// Edge iff value <= lambda_c + 1, off-diagonal only.
  CodeGraph normalized;

  int at(std::size_t i, std::size_t j) const { return values[i * size + j]; }
};

CliqueSetMatrix clique_set_matrix(std::span<const CliqueSet> sets, int lambda_c);

/// Maximal sets whose pairwise inter-set correlation is at most the
/// within-set constraint plus one. interset_lambda is 0 for fewer than two
/// sets.
struct Family {
  std::vector<CliqueSet> sets;
  int interset_lambda = 0;

  friend bool operator==(const Family&, const Family&) = default;
};

/// Greedy clique over the normalized clique-set matrix.
Family select_family(std::span<const CliqueSet> cliques, int lambda_c);

/// Max pairwise inter-set value of the family's sets (0 below two sets).
int family_interset_lambda(std::span<const CliqueSet> sets);

}  // namespace ooc
