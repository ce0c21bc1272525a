#include "ooc/code_model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ooc/correlation.hpp"
#include "ooc/edop.hpp"

namespace ooc {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

void CodeParams::validate() const {
  if (w < 1) fail("weight must be positive (w >= 1), got w = " + std::to_string(w));
  if (n <= w) fail("code length must exceed weight (n > w), got " + to_string(*this));
  if (lambda_a < 1 || lambda_c < 1) {
    fail("correlation constraints must be >= 1, got " + to_string(*this));
  }
  if (lambda_a >= w) fail("auto-correlation constraint must be below weight (lambda_a <= w-1), got " + to_string(*this));
  if (lambda_c >= w) fail("cross-correlation constraint must be below weight (lambda_c <= w-1), got " + to_string(*this));
}

std::string to_string(const CodeParams& params) {
  std::ostringstream out;
  out << "(n=" << params.n << ", w=" << params.w << ", lambda_a=" << params.lambda_a
      << ", lambda_c=" << params.lambda_c << ")";
  return out.str();
}

// --- BinaryCode -------------------------------------------------------------

BinaryCode::BinaryCode(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) fail("binary code must not be empty");
  for (auto b : bits_) {
    if (b > 1) fail("binary code entries must be 0 or 1");
    weight_ += b;
  }
}

BinaryCode::BinaryCode(std::vector<std::uint8_t> bits, int declared_weight)
    : BinaryCode(std::move(bits)) {
  if (weight_ != declared_weight) {
    fail("binary code has weight " + std::to_string(weight_) + ", declared w = " +
         std::to_string(declared_weight));
  }
}

BinaryCode BinaryCode::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  for (char c : text) {
    if (c == '0' || c == '1') {
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c != ' ' && c != ',' && c != '\t' && c != '[' && c != ']') {
      fail(std::string("unexpected character '") + c + "' in binary code");
    }
  }
  return BinaryCode(std::move(bits));
}

std::string BinaryCode::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

// --- Wpr --------------------------------------------------------------------

Wpr::Wpr(std::vector<int> positions, int n) : positions_(std::move(positions)), n_(n) {
  if (n_ < 1) fail("code length must be positive");
  if (positions_.empty()) fail("WPR must hold at least one position");
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (positions_[i] < 0 || positions_[i] >= n_) {
      fail("WPR position " + std::to_string(positions_[i]) + " outside [0, n-1] for n = " +
           std::to_string(n_));
    }
    if (i > 0 && positions_[i] <= positions_[i - 1]) {
      fail("WPR positions must be strictly increasing");
    }
  }
}

Wpr Wpr::shifted(int amount) const {
  std::vector<int> out(positions_.size());
  const int a = ((amount % n_) + n_) % n_;
  std::transform(positions_.begin(), positions_.end(), out.begin(),
                 [&](int p) { return (p + a) % n_; });
  std::sort(out.begin(), out.end());
  return Wpr(std::move(out), n_);
}

// --- Dopr -------------------------------------------------------------------

Dopr::Dopr(std::vector<int> dops, int n) : dops_(std::move(dops)), n_(n) {
  if (dops_.empty()) fail("DoPR must hold at least one element");
  long long total = 0;
  for (int d : dops_) {
    if (d < 1) fail("DoPR elements must be >= 1, got " + std::to_string(d));
    total += d;
  }
  if (total != n_) {
    fail("DoPR elements must sum to the code length: sum = " + std::to_string(total) +
         ", n = " + std::to_string(n_));
  }
}

Dopr Dopr::rotated(std::size_t start) const {
  std::vector<int> out(dops_.size());
  std::rotate_copy(dops_.begin(), dops_.begin() + static_cast<std::ptrdiff_t>(start % dops_.size()),
                   dops_.end(), out.begin());
  return Dopr(std::move(out), n_);
}

std::string join(std::span<const int> values, char separator) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s.push_back(separator);
    s += std::to_string(values[i]);
  }
  return s;
}

std::string to_string(const Dopr& dopr) { return "(" + join(dopr.dops()) + ")"; }

// --- PartialDopr ------------------------------------------------------------

PartialDopr::PartialDopr(std::vector<int> dops, int n, int w)
    : dops_(std::move(dops)), n_(n), w_(w) {
  const int u = known();
  if (u < 1) fail("partial DoPR needs at least one element");
  if (u >= w_) fail("partial DoPR must hold fewer than w elements");
  for (int d : dops_) {
    if (d < 1) fail("DoPR elements must be >= 1");
  }
  if (sum() > n_ - (w_ - u)) {
    fail("partial DoPR leaves no room for the remaining elements: sum = " +
         std::to_string(sum()) + ", n = " + std::to_string(n_));
  }
}

int PartialDopr::sum() const { return std::accumulate(dops_.begin(), dops_.end(), 0); }

PartialDopr PartialDopr::extended(int next) const {
  auto dops = dops_;
  dops.push_back(next);
  return PartialDopr(std::move(dops), n_, w_);
}

Dopr PartialDopr::completed() const {
  if (known() != w_ - 1) fail("only a (w-1)-element prefix can be completed");
  auto dops = dops_;
  dops.push_back(n_ - sum());
  return Dopr(std::move(dops), n_);
}

Dopr PartialDopr::prefix_code() const {
  auto dops = dops_;
  dops.push_back(n_ - sum());
  return Dopr(std::move(dops), n_);
}

// --- conversions ------------------------------------------------------------

Wpr wpr_from_binary(const BinaryCode& code) {
  if (code.weight() < 1) fail("binary code has no one-bits");
  std::vector<int> positions;
  positions.reserve(static_cast<std::size_t>(code.weight()));
  for (int i = 0; i < code.length(); ++i) {
    if (code[static_cast<std::size_t>(i)]) positions.push_back(i);
  }
  return Wpr(std::move(positions), code.length());
}

BinaryCode binary_from_wpr(const Wpr& wpr) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(wpr.n()), 0);
  for (int p : wpr.positions()) bits[static_cast<std::size_t>(p)] = 1;
  return BinaryCode(std::move(bits));
}

Dopr dopr_from_wpr(const Wpr& wpr) {
  const auto p = wpr.positions();
  const std::size_t w = p.size();
  std::vector<int> dops(w);
  for (std::size_t i = 0; i + 1 < w; ++i) dops[i] = p[i + 1] - p[i];
  dops[w - 1] = wpr.n() + p[0] - p[w - 1];
  return Dopr(std::move(dops), wpr.n());
}

Wpr wpr_from_dopr(const Dopr& dopr) {
  const auto d = dopr.dops();
  std::vector<int> positions(d.size());
  positions[0] = 0;
  for (std::size_t i = 1; i < d.size(); ++i) positions[i] = positions[i - 1] + d[i - 1];
  return Wpr(std::move(positions), dopr.n());
}

// --- standard form ----------------------------------------------------------

StandardDopr standardize(const Dopr& dopr) {
  const auto d = dopr.dops();
  const std::size_t w = d.size();
  const int top = *std::max_element(d.begin(), d.end());

  // Rotation starting at s ends with d[s-1]; keep those ending on the maximum
  // and pick the lexicographically smallest.
  std::size_t best = w;
  auto less = [&](std::size_t a, std::size_t b) {
    for (std::size_t k = 0; k < w; ++k) {
      const int x = d[(a + k) % w];
      const int y = d[(b + k) % w];
      if (x != y) return x < y;
    }
    return false;
  };
  for (std::size_t s = 0; s < w; ++s) {
    if (d[(s + w - 1) % w] != top) continue;
    if (best == w || less(s, best)) best = s;
  }
  return StandardDopr(dopr.rotated(best));
}

bool is_standard(const Dopr& dopr) { return standardize(dopr).dopr() == dopr; }

int max_element_at(int n, int w, int position) {
  return position <= (w - 1) / 2 ? (n - w + 1) / 2 : (n - w + 2) / 2;
}

std::pair<int, int> last_element_range(int n, int w) { return {(n + w - 1) / w, n - w + 1}; }

bool within_standard_ranges(const Dopr& dopr) {
  const int n = dopr.n();
  const int w = dopr.weight();
  const auto d = dopr.dops();
  for (int i = 1; i < w; ++i) {
    if (d[static_cast<std::size_t>(i - 1)] > max_element_at(n, w, i)) return false;
  }
  const auto [lo, hi] = last_element_range(n, w);
  return d.back() >= lo && d.back() <= hi;
}

std::vector<PartialDopr> enumerate_first_pairs(const CodeParams& params) {
  params.validate();
  if (params.w < 3) fail("first-pair enumeration needs w >= 3");
  const int n = params.n;
  const int w = params.w;
  const int room = n - (w - 2);

  std::vector<PartialDopr> out;
  for (int d1 = 1; d1 <= max_element_at(n, w, 1); ++d1) {
    for (int d2 = 1; d2 <= max_element_at(n, w, 2); ++d2) {
      if (d1 + d2 > room) continue;
      // Equal gaps repeat an EDoP entry; only admissible when lambda_a > 1.
      if (d1 == d2 && params.lambda_a == 1) continue;
      PartialDopr pair({d1, d2}, n, w);
      if (autocorr_edop(edop_partial(pair)).lambda_ax <= params.lambda_a) {
        out.push_back(std::move(pair));
      }
    }
  }
  return out;
}

}  // namespace ooc
