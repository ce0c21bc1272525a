#pragma once

// Extended difference-of-positions (EDoP) matrices. Row i lists the cyclic
// differences from the i-th one-bit to every other one-bit of the code, so
// correlation reduces to counting common entries between rows.

#include <cstddef>
#include <span>
#include <vector>

#include "ooc/code_model.hpp"

namespace ooc {

class EdopMatrix {
 public:
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int n() const { return n_; }
  bool partial() const { return partial_; }

  /// Row in constructive (cyclic) order: entry k is d_{i+1} + ... + d_{i+k+1}.
  std::span<const int> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  /// Same row, ascending.
  std::span<const int> sorted_row(std::size_t i) const {
    return {sorted_.data() + i * cols_, cols_};
  }
  /// All entries, row-major.
  std::span<const int> entries() const { return entries_; }

  int at(std::size_t i, std::size_t k) const { return entries_[i * cols_ + k]; }

  friend bool operator==(const EdopMatrix&, const EdopMatrix&) = default;

 private:
  friend EdopMatrix edop_full(const Dopr& dopr);
  friend EdopMatrix edop_partial(const PartialDopr& partial);
  static EdopMatrix build(std::span<const int> dops, int n, bool partial);

  std::vector<int> entries_;
  std::vector<int> sorted_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int n_ = 0;
  bool partial_ = false;
};

/// EDoP matrix with a leading zero column. Row i is the WPR of the circular
/// shift that puts the i-th one-bit at position 0 (in cyclic, not ascending,
/// order).
struct ZeroAugmentedEdop {
  std::vector<std::vector<int>> rows;
  int n = 0;
};

/// w x (w-1) matrix of a complete code. Requires w >= 2.
EdopMatrix edop_full(const Dopr& dopr);

/// (u+1) x u matrix of a prefix with u known elements: the EDoP of the
/// weight-(u+1) code 0, d1, d1+d2, ... at the target length.
EdopMatrix edop_partial(const PartialDopr& partial);

ZeroAugmentedEdop zero_augment(const EdopMatrix& m);

/// True iff the entry multiset is closed under a -> n - a.
bool check_complement_closure(const EdopMatrix& m);

/// The prefix-oriented arrangement of the same differences: row 0 holds
/// forward sums from the first bit, row i > 0 holds n - (d_k + ... + d_i)
/// for k <= i and d_{i+1} + ... + d_k for k > i. Rows are cyclic
/// rotations of the canonical rows, so truncating a prefix deletes trailing
/// rows and columns.
std::vector<std::vector<int>> prefix_layout(std::span<const int> dops, int n);

}  // namespace ooc
