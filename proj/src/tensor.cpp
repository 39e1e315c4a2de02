#include "sigpath/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace sigpath {

namespace {

std::vector<std::size_t> make_offsets(int dim, int depth) {
  std::vector<std::size_t> off(static_cast<std::size_t>(depth) + 2, 0);
  std::size_t size = 1;
  for (int k = 0; k <= depth; ++k) {
    off[static_cast<std::size_t>(k) + 1] = off[static_cast<std::size_t>(k)] + size;
    size *= static_cast<std::size_t>(dim);
  }
  return off;
}

void require_same_shape(const TruncatedTensor& a, const TruncatedTensor& b) {
  if (!a.same_shape(b)) {
    throw std::invalid_argument(
        "tensor shape mismatch: (" + std::to_string(a.dim()) + "," + std::to_string(a.depth()) +
        ") vs (" + std::to_string(b.dim()) + "," + std::to_string(b.depth()) + ")");
  }
}

}  // namespace

TruncatedTensor::TruncatedTensor(int dim, int depth) : dim_(dim), depth_(depth) {
  if (dim < 1) throw std::invalid_argument("tensor dim must be >= 1");
  if (depth < 1) throw std::invalid_argument("tensor depth must be >= 1");
  offset_ = make_offsets(dim, depth);
  coef_.assign(offset_.back(), 0.0);
}

std::size_t TruncatedTensor::level_size(int k) const {
  return offset_[static_cast<std::size_t>(k) + 1] - offset_[static_cast<std::size_t>(k)];
}

std::span<double> TruncatedTensor::level(int k) {
  if (k < 0 || k > depth_) throw std::out_of_range("tensor level out of range");
  return {coef_.data() + offset_[static_cast<std::size_t>(k)], level_size(k)};
}

std::span<const double> TruncatedTensor::level(int k) const {
  if (k < 0 || k > depth_) throw std::out_of_range("tensor level out of range");
  return {coef_.data() + offset_[static_cast<std::size_t>(k)], level_size(k)};
}

bool TruncatedTensor::all_finite() const {
  return std::all_of(coef_.begin(), coef_.end(), [](double c) { return std::isfinite(c); });
}

TruncatedTensor& TruncatedTensor::operator+=(const TruncatedTensor& rhs) {
  require_same_shape(*this, rhs);
  for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += rhs.coef_[i];
  return *this;
}

TruncatedTensor& TruncatedTensor::operator-=(const TruncatedTensor& rhs) {
  require_same_shape(*this, rhs);
  for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] -= rhs.coef_[i];
  return *this;
}

TruncatedTensor& TruncatedTensor::operator*=(double s) {
  for (double& c : coef_) c *= s;
  return *this;
}

TruncatedTensor operator+(TruncatedTensor lhs, const TruncatedTensor& rhs) { return lhs += rhs; }
TruncatedTensor operator-(TruncatedTensor lhs, const TruncatedTensor& rhs) { return lhs -= rhs; }
TruncatedTensor operator*(double s, TruncatedTensor t) { return t *= s; }
TruncatedTensor operator*(TruncatedTensor t, double s) { return t *= s; }
TruncatedTensor operator-(TruncatedTensor t) { return t *= -1.0; }

GroupElement::GroupElement(TruncatedTensor t) : t_(std::move(t)) {
  if (t_.scalar() != 1.0) {
    throw std::invalid_argument("group element must have level-0 coefficient exactly 1");
  }
}

GroupElement unit(int dim, int depth) {
  TruncatedTensor t(dim, depth);
  t.set_scalar(1.0);
  return GroupElement(std::move(t));
}

TruncatedTensor tensor_product(const TruncatedTensor& g, const TruncatedTensor& h) {
  require_same_shape(g, h);
  const int d = g.dim();
  const int N = g.depth();
  TruncatedTensor out(d, N);
  for (int k = 0; k <= N; ++k) {
    std::span<double> ok = out.level(k);
    for (int i = 0; i <= k; ++i) {
      std::span<const double> gi = g.level(i);
      std::span<const double> hk = h.level(k - i);
      // word concatenation: out[u.v] += g[u] * h[v]
      std::size_t pos = 0;
      for (std::size_t u = 0; u < gi.size(); ++u) {
        const double gu = gi[u];
        if (gu == 0.0) {
          pos += hk.size();
          continue;
        }
        for (std::size_t v = 0; v < hk.size(); ++v, ++pos) ok[pos] += gu * hk[v];
      }
    }
  }
  return out;
}

GroupElement tensor_product(const GroupElement& g, const GroupElement& h) {
  return GroupElement(tensor_product(g.tensor(), h.tensor()));
}

GroupElement exp(const TruncatedTensor& v) {
  if (v.scalar() != 0.0) {
    throw std::invalid_argument("exp expects a tensor with zero level-0 coefficient");
  }
  TruncatedTensor acc(v.dim(), v.depth());
  acc.set_scalar(1.0);
  TruncatedTensor term = acc;  // v^(x)k / k!, starting at k = 0
  for (int k = 1; k <= v.depth(); ++k) {
    term = tensor_product(term, v);
    term *= 1.0 / static_cast<double>(k);
    acc += term;
  }
  return GroupElement(std::move(acc));
}

TruncatedTensor log(const GroupElement& g) {
  TruncatedTensor u = g.tensor();
  u.set_scalar(0.0);  // u = g - 1
  TruncatedTensor acc(g.dim(), g.depth());
  TruncatedTensor power = u;
  double sign = 1.0;
  for (int k = 1; k <= g.depth(); ++k) {
    acc += (sign / static_cast<double>(k)) * power;
    power = tensor_product(power, u);
    sign = -sign;
  }
  return acc;
}

TruncatedTensor bracket(const TruncatedTensor& g, const TruncatedTensor& h) {
  return tensor_product(g, h) - tensor_product(h, g);
}

double inner_product(const TruncatedTensor& a, const TruncatedTensor& b) {
  require_same_shape(a, b);
  double s = 0.0;
  std::span<const double> fa = a.flat();
  std::span<const double> fb = b.flat();
  for (std::size_t i = 0; i < fa.size(); ++i) s += fa[i] * fb[i];
  return s;
}

double squared_norm(const TruncatedTensor& a) { return inner_product(a, a); }

double euclidean_norm(const TruncatedTensor& a) { return std::sqrt(squared_norm(a)); }

double group_like_defect(const TruncatedTensor& g) {
  double defect = std::abs(g.scalar() - 1.0);
  if (g.depth() < 2) return defect;
  const int d = g.dim();
  std::span<const double> l1 = g.level(1);
  std::span<const double> l2 = g.level(2);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const double sym = 0.5 * (l2[static_cast<std::size_t>(i) * d + j] +
                                l2[static_cast<std::size_t>(j) * d + i]);
      defect = std::max(defect, std::abs(sym - 0.5 * l1[static_cast<std::size_t>(i)] *
                                                   l1[static_cast<std::size_t>(j)]));
    }
  }
  return defect;
}

bool is_group_like(const TruncatedTensor& g, double tol) { return group_like_defect(g) <= tol; }

bool is_group_like(const GroupElement& g, double tol) { return is_group_like(g.tensor(), tol); }

namespace {

// Shuffle product of two words, accumulated as multiplicities of result
// words at level |u| + |v|.
void shuffle_words(std::span<const int> u, std::span<const int> v, std::vector<int>& prefix,
                   std::map<std::vector<int>, double>& out) {
  if (u.empty() && v.empty()) {
    out[prefix] += 1.0;
    return;
  }
  if (!u.empty()) {
    prefix.push_back(u.front());
    shuffle_words(u.subspan(1), v, prefix, out);
    prefix.pop_back();
  }
  if (!v.empty()) {
    prefix.push_back(v.front());
    shuffle_words(u, v.subspan(1), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

double shuffle_defect(const TruncatedTensor& g) {
  const int d = g.dim();
  const int N = g.depth();
  double defect = std::abs(g.scalar() - 1.0);
  for (int ku = 1; ku < N; ++ku) {
    for (int kv = 1; ku + kv <= N; ++kv) {
      for (std::size_t iu = 0; iu < g.level_size(ku); ++iu) {
        std::vector<int> wu = index_to_word(iu, ku, d);
        for (std::size_t iv = 0; iv < g.level_size(kv); ++iv) {
          std::vector<int> wv = index_to_word(iv, kv, d);
          std::map<std::vector<int>, double> terms;
          std::vector<int> prefix;
          shuffle_words(wu, wv, prefix, terms);
          double rhs = 0.0;
          for (const auto& [word, mult] : terms) {
            rhs += mult * g.level(ku + kv)[word_to_index(word, d)];
          }
          defect = std::max(defect, std::abs(g.level(ku)[iu] * g.level(kv)[iv] - rhs));
        }
      }
    }
  }
  return defect;
}

std::size_t word_to_index(std::span<const int> word, int dim) {
  std::size_t idx = 0;
  for (int letter : word) {
    if (letter < 1 || letter > dim) throw std::invalid_argument("word letter out of range");
    idx = idx * static_cast<std::size_t>(dim) + static_cast<std::size_t>(letter - 1);
  }
  return idx;
}

std::vector<int> index_to_word(std::size_t index, int level, int dim) {
  std::vector<int> word(static_cast<std::size_t>(level));
  for (int j = level - 1; j >= 0; --j) {
    word[static_cast<std::size_t>(j)] = static_cast<int>(index % static_cast<std::size_t>(dim)) + 1;
    index /= static_cast<std::size_t>(dim);
  }
  if (index != 0) throw std::invalid_argument("index out of range for level");
  return word;
}

TruncatedTensor from_level1(int dim, int depth, std::span<const double> v) {
  if (static_cast<int>(v.size()) != dim) {
    throw std::invalid_argument("level-1 vector length must equal dim");
  }
  TruncatedTensor t(dim, depth);
  std::copy(v.begin(), v.end(), t.level(1).begin());
  return t;
}

std::vector<double> level1_of(const TruncatedTensor& g) {
  std::span<const double> l1 = g.level(1);
  return {l1.begin(), l1.end()};
}

}  // namespace sigpath
