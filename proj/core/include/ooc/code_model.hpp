#pragma once

// Representations of one-dimensional unipolar codes: binary, weighted
// positions (WPR) and difference of positions (DoPR), plus the canonical
// rotation used as a code's identity.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ooc {

/// Code length n, weight w and the auto/cross-correlation constraints.
struct CodeParams {
  int n = 0;
  int w = 0;
  int lambda_a = 1;
  int lambda_c = 1;

  /// Throws std::invalid_argument naming the violated constraint
  /// (n > w > max(lambda_a, lambda_c) >= 1).
  void validate() const;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
  friend auto operator<=>(const CodeParams&, const CodeParams&) = default;
};

std::string to_string(const CodeParams& params);

class BinaryCode {
 public:
  /// Entries must be 0 or 1.
  explicit BinaryCode(std::vector<std::uint8_t> bits);
  /// Same, but throws if the number of one-bits differs from declared_weight.
  BinaryCode(std::vector<std::uint8_t> bits, int declared_weight);

  /// Parses "0101..." (whitespace and commas ignored).
  static BinaryCode parse(std::string_view text);

  int length() const { return static_cast<int>(bits_.size()); }
  int weight() const { return weight_; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }

  std::string str() const;

  friend bool operator==(const BinaryCode&, const BinaryCode&) = default;

 private:
  std::vector<std::uint8_t> bits_;
  int weight_ = 0;
};

/// Weighted-positions representation: ascending indices of the one-bits.
class Wpr {
 public:
  Wpr(std::vector<int> positions, int n);

  int n() const { return n_; }
  int weight() const { return static_cast<int>(positions_.size()); }
  std::span<const int> positions() const { return positions_; }

  /// Cyclic shift by `amount` chips, re-sorted.
  Wpr shifted(int amount) const;

  friend bool operator==(const Wpr&, const Wpr&) = default;

 private:
  std::vector<int> positions_;
  int n_ = 0;
};

/// Difference-of-positions representation: the cyclic gaps between
/// consecutive one-bits. Every element is >= 1 and the elements sum to n.
class Dopr {
 public:
  Dopr(std::vector<int> dops, int n);

  int n() const { return n_; }
  int weight() const { return static_cast<int>(dops_.size()); }
  std::span<const int> dops() const { return dops_; }
  int operator[](std::size_t i) const { return dops_[i]; }

  /// Rotation starting at element `start`.
  Dopr rotated(std::size_t start) const;

  friend bool operator==(const Dopr&, const Dopr&) = default;
  friend auto operator<=>(const Dopr&, const Dopr&) = default;

 private:
  std::vector<int> dops_;
  int n_ = 0;
};

std::string to_string(const Dopr& dopr);
std::string join(std::span<const int> values, char separator = ',');

/// A Dopr known to be in canonical rotation: the last element is maximal,
/// and among such rotations the leading w-1 elements are lexicographically
/// smallest.
class StandardDopr {
 public:
  const Dopr& dopr() const { return dopr_; }
  operator const Dopr&() const { return dopr_; }  // NOLINT(google-explicit-constructor)
  int n() const { return dopr_.n(); }
  int weight() const { return dopr_.weight(); }
  std::span<const int> dops() const { return dopr_.dops(); }

  friend bool operator==(const StandardDopr&, const StandardDopr&) = default;
  friend auto operator<=>(const StandardDopr&, const StandardDopr&) = default;

 private:
  friend StandardDopr standardize(const Dopr& dopr);
  explicit StandardDopr(Dopr dopr) : dopr_(std::move(dopr)) {}

  Dopr dopr_;
};

/// The first u (< w) elements of a weight-w, length-n DoPR.
class PartialDopr {
 public:
  PartialDopr(std::vector<int> dops, int n, int w);

  int n() const { return n_; }
  int target_weight() const { return w_; }
  int known() const { return static_cast<int>(dops_.size()); }
  std::span<const int> dops() const { return dops_; }
  int sum() const;

  /// Appends one element; throws if the result would not be a valid prefix.
  PartialDopr extended(int next) const;

  /// Closes the code with d_w = n - sum. Requires known() == w - 1.
  Dopr completed() const;

  /// The weight-(u+1) code with positions 0, d1, d1+d2, ..., at length n.
  Dopr prefix_code() const;

  friend bool operator==(const PartialDopr&, const PartialDopr&) = default;
  friend auto operator<=>(const PartialDopr&, const PartialDopr&) = default;

 private:
  std::vector<int> dops_;
  int n_ = 0;
  int w_ = 0;
};

Wpr wpr_from_binary(const BinaryCode& code);
BinaryCode binary_from_wpr(const Wpr& wpr);
Dopr dopr_from_wpr(const Wpr& wpr);
/// Anchors the first one-bit at position 0.
Wpr wpr_from_dopr(const Dopr& dopr);

StandardDopr standardize(const Dopr& dopr);
bool is_standard(const Dopr& dopr);

// Element ranges of a standard DoPR.

/// Largest admissible value of the non-last element at 1-based `position`:
/// floor((n-w+1)/2) for the first floor((w-1)/2) positions, else
/// floor((n-w+2)/2).
int max_element_at(int n, int w, int position);
/// [ceil(n/w), n-w+1]
std::pair<int, int> last_element_range(int n, int w);
bool within_standard_ranges(const Dopr& dopr);

/// All unequal (d1, d2) pairs inside the standard-form ranges whose
/// three-bit prefix code has auto-correlation <= params.lambda_a, in
/// lexicographic order. Requires w >= 3.
std::vector<PartialDopr> enumerate_first_pairs(const CodeParams& params);

}  // namespace ooc
