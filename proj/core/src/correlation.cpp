#include "ooc/correlation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ooc {

std::size_t count_common(std::span<const int> a, std::span<const int> b,
                         std::uint64_t* comparisons) {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t common = 0;
  std::uint64_t steps = 0;
  while (i < a.size() && j < b.size()) {
    ++steps;
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  if (comparisons) *comparisons += steps;
  return common;
}

CorrelationReport autocorr_bruteforce(const BinaryCode& code, Counting counting) {
  if (code.weight() < 2) {
    throw std::invalid_argument("auto-correlation needs weight >= 2, got " +
                                std::to_string(code.weight()));
  }
  const auto n = static_cast<std::size_t>(code.length());
  CorrelationReport report;
  report.per_shift.resize(n - 1);
  std::uint64_t comparisons = 0;
  for (std::size_t m = 1; m < n; ++m) {
    int overlap = 0;
    for (std::size_t t = 0; t < n; ++t) overlap += code[t] & code[(t + m) % n];
    comparisons += n;
    report.per_shift[m - 1] = overlap;
  }
  report.lambda_ax = *std::max_element(report.per_shift.begin(), report.per_shift.end());
  if (counting == Counting::kOn) report.comparisons = comparisons;
  return report;
}

CorrelationReport autocorr_edop(const EdopMatrix& m, Counting counting) {
  std::uint64_t comparisons = 0;
  std::size_t best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = i + 1; k < m.rows(); ++k) {
      best = std::max(best, count_common(m.sorted_row(i), m.sorted_row(k), &comparisons));
    }
  }
  CorrelationReport report;
  report.lambda_ax = 1 + static_cast<int>(best);
  if (counting == Counting::kOn) report.comparisons = comparisons;
  return report;
}

CrossReport crosscorr_bruteforce(const BinaryCode& x, const BinaryCode& y, Counting counting) {
  if (x.length() != y.length()) {
    throw std::invalid_argument("shift cross-correlation needs equal lengths, got " +
                                std::to_string(x.length()) + " and " + std::to_string(y.length()));
  }
  if (x.weight() < 2 || y.weight() < 2) {
    throw std::invalid_argument("cross-correlation needs weights >= 2");
  }
  const auto n = static_cast<std::size_t>(x.length());
  CrossReport report;
  report.per_shift.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    int overlap = 0;
    for (std::size_t t = 0; t < n; ++t) overlap += x[t] & y[(t + m) % n];
    report.per_shift[m] = overlap;
  }
  report.lambda_cxy = *std::max_element(report.per_shift.begin(), report.per_shift.end());
  if (counting == Counting::kOn) report.comparisons = static_cast<std::uint64_t>(n) * n;
  return report;
}

CrossReport crosscorr_edop(const EdopMatrix& mx, const EdopMatrix& my, Counting counting) {
  std::uint64_t comparisons = 0;
  std::size_t best = 0;
  for (std::size_t i = 0; i < mx.rows(); ++i) {
    for (std::size_t k = 0; k < my.rows(); ++k) {
      best = std::max(best, count_common(mx.sorted_row(i), my.sorted_row(k), &comparisons));
    }
  }
  CrossReport report;
  report.lambda_cxy = 1 + static_cast<int>(best);
  if (counting == Counting::kOn) report.comparisons = comparisons;
  return report;
}

int autocorrelation(const Dopr& code) { return autocorr_edop(edop_full(code)).lambda_ax; }

int crosscorrelation(const Dopr& x, const Dopr& y) {
  return crosscorr_edop(edop_full(x), edop_full(y)).lambda_cxy;
}

int set_lambda_a(std::span<const Dopr> codes) {
  if (codes.empty()) throw std::invalid_argument("set auto-correlation of an empty set");
  int best = 0;
  for (const auto& c : codes) best = std::max(best, autocorrelation(c));
  return best;
}

int set_lambda_c(std::span<const Dopr> codes) {
  if (codes.size() < 2) {
    throw std::invalid_argument("set cross-correlation needs at least two codes");
  }
  std::vector<EdopMatrix> m;
  m.reserve(codes.size());
  for (const auto& c : codes) m.push_back(edop_full(c));
  int best = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      best = std::max(best, crosscorr_edop(m[i], m[j]).lambda_cxy);
    }
  }
  return best;
}

int interset_crosscorr(std::span<const Dopr> a, std::span<const Dopr> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("inter-set correlation of an empty set");
  std::vector<EdopMatrix> mb;
  mb.reserve(b.size());
  for (const auto& y : b) mb.push_back(edop_full(y));
  int best = 0;
  for (const auto& x : a) {
    const auto mx = edop_full(x);
    for (const auto& my : mb) best = std::max(best, crosscorr_edop(mx, my).lambda_cxy);
  }
  return best;
}

std::uint64_t johnson_bound(int n, int w, int lambda) {
  if (!(n > w && w > lambda && lambda >= 1)) {
    throw std::invalid_argument("Johnson bound needs n > w > lambda >= 1, got n = " +
                                std::to_string(n) + ", w = " + std::to_string(w) +
                                ", lambda = " + std::to_string(lambda));
  }
  std::uint64_t value = 1;
  for (int i = lambda; i >= 1; --i) {
    const auto factor = static_cast<std::uint64_t>(n - i);
    if (value > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw std::overflow_error("Johnson bound exceeds 64 bits");
    }
    value = value * factor / static_cast<std::uint64_t>(w - i);
  }
  return value / static_cast<std::uint64_t>(w);
}

}  // namespace ooc
