#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "ooc/code_model.hpp"
#include "ooc/edop.hpp"

namespace ooc {

/// Value of a comparison counter that was not requested.
inline constexpr std::uint64_t kNotCounted = std::numeric_limits<std::uint64_t>::max();

enum class Counting { kOff, kOn };

struct CorrelationReport {
  int lambda_ax = 0;
  /// Overlap at shifts 1..n-1; filled by the brute-force path only.
  std::vector<int> per_shift;
  std::uint64_t comparisons = kNotCounted;
};

struct CrossReport {
  int lambda_cxy = 0;
  /// Overlap at shifts 0..n-1; filled by the brute-force path only.
  std::vector<int> per_shift;
  std::uint64_t comparisons = kNotCounted;
};

/// Max over non-zero shifts m of sum_t x_t x_{t+m}. Requires w >= 2.
/// Counts one comparison per bit product (n(n-1) in total).
CorrelationReport autocorr_bruteforce(const BinaryCode& code, Counting counting = Counting::kOff);

/// One plus the largest number of common entries between two distinct rows.
/// Counts one comparison per step of the sorted-row merge.
CorrelationReport autocorr_edop(const EdopMatrix& m, Counting counting = Counting::kOff);

/// Max over all shifts m of sum_t x_t y_{t+m}. Codes must have equal length
/// and weight >= 2 each. Counts n^2 comparisons.
CrossReport crosscorr_bruteforce(const BinaryCode& x, const BinaryCode& y,
                                 Counting counting = Counting::kOff);

/// One plus the largest number of common entries between a row of `mx` and
/// a row of `my`. Lengths and weights may differ.
CrossReport crosscorr_edop(const EdopMatrix& mx, const EdopMatrix& my,
                           Counting counting = Counting::kOff);

/// Number of common values of two ascending sequences, each with distinct
/// entries. Adds the merge steps to `comparisons` when it is non-null.
std::size_t count_common(std::span<const int> a, std::span<const int> b,
                         std::uint64_t* comparisons = nullptr);

int autocorrelation(const Dopr& code);
int crosscorrelation(const Dopr& x, const Dopr& y);

/// Max auto-correlation over the set. Throws on an empty set.
int set_lambda_a(std::span<const Dopr> codes);
/// Max cross-correlation over unordered pairs. Throws with fewer than two codes.
int set_lambda_c(std::span<const Dopr> codes);
/// Max cross-correlation over (x in a, y in b). Throws if either is empty.
int interset_crosscorr(std::span<const Dopr> a, std::span<const Dopr> b);

/// floor((1/w) floor((n-1)/(w-1) ... floor((n-lambda)/(w-lambda)))),
/// evaluated innermost first. Requires n > w > lambda >= 1.
std::uint64_t johnson_bound(int n, int w, int lambda);

}  // namespace ooc
