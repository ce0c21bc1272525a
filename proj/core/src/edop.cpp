#include "ooc/edop.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ooc {

EdopMatrix EdopMatrix::build(std::span<const int> dops, int n, bool partial) {
  const std::size_t w = dops.size();
  if (w < 2) throw std::invalid_argument("EDoP matrix needs a code of weight >= 2");

  EdopMatrix m;
  m.rows_ = w;
  m.cols_ = w - 1;
  m.n_ = n;
  m.partial_ = partial;
  m.entries_.resize(m.rows_ * m.cols_);
  for (std::size_t i = 0; i < w; ++i) {
    int acc = 0;
    for (std::size_t k = 0; k + 1 < w; ++k) {
      acc += dops[(i + k) % w];
      m.entries_[i * m.cols_ + k] = acc;
    }
  }
  m.sorted_ = m.entries_;
  for (std::size_t i = 0; i < w; ++i) {
    auto first = m.sorted_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_);
    std::sort(first, first + static_cast<std::ptrdiff_t>(m.cols_));
  }
  return m;
}

EdopMatrix edop_full(const Dopr& dopr) { return EdopMatrix::build(dopr.dops(), dopr.n(), false); }

EdopMatrix edop_partial(const PartialDopr& partial) {
  const Dopr prefix = partial.prefix_code();
  return EdopMatrix::build(prefix.dops(), prefix.n(), true);
}

ZeroAugmentedEdop zero_augment(const EdopMatrix& m) {
  ZeroAugmentedEdop z;
  z.n = m.n();
  z.rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<int> row{0};
    const auto r = m.row(i);
    row.insert(row.end(), r.begin(), r.end());
    z.rows.push_back(std::move(row));
  }
  return z;
}

bool check_complement_closure(const EdopMatrix& m) {
  std::map<int, int> count;
  for (int e : m.entries()) ++count[e];
  return std::all_of(count.begin(), count.end(), [&](const auto& kv) {
    const auto it = count.find(m.n() - kv.first);
    return it != count.end() && it->second == kv.second;
  });
}

std::vector<std::vector<int>> prefix_layout(std::span<const int> dops, int n) {
  const std::size_t u = dops.size();
  std::vector<std::vector<int>> rows(u + 1, std::vector<int>(u));
  // span(a, b) = d_a + ... + d_b, 1-based inclusive.
  auto span_sum = [&](std::size_t a, std::size_t b) {
    int s = 0;
    for (std::size_t j = a; j <= b; ++j) s += dops[j - 1];
    return s;
  };
  for (std::size_t i = 0; i <= u; ++i) {
    for (std::size_t k = 1; k <= u; ++k) {
      rows[i][k - 1] = k > i ? span_sum(i + 1, k) : n - span_sum(k, i);
    }
  }
  return rows;
}

}  // namespace ooc
