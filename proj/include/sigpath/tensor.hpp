#ifndef SIGPATH_TENSOR_HPP
#define SIGPATH_TENSOR_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace sigpath {

/// Element of the truncated tensor algebra T^N(R^d).
///
/// Coefficients are stored as one dense block per level k = 0..N, level k
/// holding d^k entries.  The coefficient of the word i1...ik (letters
/// 1-based) sits at lexicographic index sum_j (i_j - 1) * d^(k-j), so the
/// last letter of a word at flat index m is m % d + 1 and its prefix word
/// has index m / d one level down.
class TruncatedTensor {
public:
  /// Zero element of T^N(R^d).  Rejects dim < 1 or depth < 1.
  TruncatedTensor(int dim, int depth);

  int dim() const { return dim_; }
  int depth() const { return depth_; }

  std::size_t level_size(int k) const;
  std::span<double> level(int k);
  std::span<const double> level(int k) const;

  double scalar() const { return coef_[0]; }
  void set_scalar(double v) { coef_[0] = v; }

  std::span<double> flat() { return coef_; }
  std::span<const double> flat() const { return coef_; }

  bool same_shape(const TruncatedTensor& other) const {
    return dim_ == other.dim_ && depth_ == other.depth_;
  }
  bool all_finite() const;

  TruncatedTensor& operator+=(const TruncatedTensor& rhs);
  TruncatedTensor& operator-=(const TruncatedTensor& rhs);
  TruncatedTensor& operator*=(double s);

private:
  int dim_ = 1;
  int depth_ = 1;
  std::vector<std::size_t> offset_;  // offset_[k] = start of level k, offset_[depth+1] = total
  std::vector<double> coef_;
};

TruncatedTensor operator+(TruncatedTensor lhs, const TruncatedTensor& rhs);
TruncatedTensor operator-(TruncatedTensor lhs, const TruncatedTensor& rhs);
TruncatedTensor operator*(double s, TruncatedTensor t);
TruncatedTensor operator*(TruncatedTensor t, double s);
TruncatedTensor operator-(TruncatedTensor t);

/// Element of the group G^N(R^d) sitting inside T^N(R^d): a tensor whose
/// level-0 coefficient is pinned to 1.  Group-likeness beyond that pin is a
/// soft invariant checked by is_group_like; construction only enforces the
/// pin, so perturbed elements (finite differences, deserialized data) can
/// still be represented.
class GroupElement {
public:
  /// Wraps a tensor, requiring scalar() == 1 exactly.
  explicit GroupElement(TruncatedTensor t);

  int dim() const { return t_.dim(); }
  int depth() const { return t_.depth(); }
  const TruncatedTensor& tensor() const { return t_; }
  std::span<const double> level(int k) const { return t_.level(k); }

private:
  TruncatedTensor t_;
};

/// Neutral element (1, 0, ..., 0).
GroupElement unit(int dim, int depth);

/// Truncated tensor product: level k of the result is
/// sum_{i=0}^{k} level_i(g) (x) level_{k-i}(h); terms above the depth are
/// dropped.  Shapes must match.
TruncatedTensor tensor_product(const TruncatedTensor& g, const TruncatedTensor& h);
GroupElement tensor_product(const GroupElement& g, const GroupElement& h);

/// Tensor exponential 1 + sum_{k=1}^{N} v^(x)k / k! for a tensor with zero
/// level-0 coefficient (rejected otherwise).
GroupElement exp(const TruncatedTensor& v);

/// Tensor logarithm sum_{k=1}^{N} (-1)^(k+1) (g - 1)^(x)k / k; inverse of
/// exp on the group.
TruncatedTensor log(const GroupElement& g);

/// Lie bracket [g,h] = g (x) h - h (x) g.
TruncatedTensor bracket(const TruncatedTensor& g, const TruncatedTensor& h);

/// Flat Euclidean pairing over all coefficients (all levels, level 0
/// included).
double inner_product(const TruncatedTensor& a, const TruncatedTensor& b);
double squared_norm(const TruncatedTensor& a);
double euclidean_norm(const TruncatedTensor& a);

/// Max-abs deviation from the two group-likeness conditions checked here:
/// level 0 equal to 1, and the symmetric part of level 2 equal to half the
/// square of level 1.  (Necessary, not sufficient.)
double group_like_defect(const TruncatedTensor& g);
bool is_group_like(const TruncatedTensor& g, double tol);
bool is_group_like(const GroupElement& g, double tol);

/// Max-abs defect of the full shuffle identities
/// g_u * g_v = sum_{w in sh(u,v)} g_w over all word pairs that fit in the
/// depth.  Cost grows fast with depth; intended as a slow diagnostic for
/// N <= 3.
double shuffle_defect(const TruncatedTensor& g);

/// Lexicographic index of a word (letters 1-based).
std::size_t word_to_index(std::span<const int> word, int dim);
/// Word of the given level at a lexicographic index.
std::vector<int> index_to_word(std::size_t index, int level, int dim);

/// Tensor with the given vector as level 1 and all other levels zero.
TruncatedTensor from_level1(int dim, int depth, std::span<const double> v);
/// Copy of level 1 as a plain vector.
std::vector<double> level1_of(const TruncatedTensor& g);

}  // namespace sigpath

#endif  // SIGPATH_TENSOR_HPP
