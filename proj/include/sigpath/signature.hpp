#ifndef SIGPATH_SIGNATURE_HPP
#define SIGPATH_SIGNATURE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "sigpath/tensor.hpp"

namespace sigpath {

/// Sampled path x: [0,T] -> R^d with x(0) = 0, linearly interpolated
/// between nodes.  Times are strictly increasing starting at 0.
class PiecewisePath {
public:
  /// points is row-major, node_count x dim.
  PiecewisePath(std::vector<double> times, std::vector<double> points, int dim);

  int dim() const { return dim_; }
  std::size_t node_count() const { return times_.size(); }
  double time(std::size_t k) const { return times_[k]; }
  std::span<const double> times() const { return times_; }
  std::span<const double> point(std::size_t k) const {
    return {points_.data() + k * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }

  /// Value at an arbitrary parameter, clamped to [0, T].
  std::vector<double> at(double t) const;

  /// Sum of segment lengths.
  double arc_length() const;

private:
  std::vector<double> times_;
  std::vector<double> points_;  // node_count x dim
  int dim_;
};

/// Piecewise-constant controls a(t) in R^d on the uniform grid
/// t_k = k T / D: value k applies on [t_k, t_{k+1}).
class ControlPath {
public:
  ControlPath(int dim, std::size_t segments, double horizon);

  int dim() const { return dim_; }
  std::size_t segments() const { return values_.size() / static_cast<std::size_t>(dim_); }
  double horizon() const { return horizon_; }
  double dt() const { return horizon_ / static_cast<double>(segments()); }

  std::span<double> value(std::size_t k) {
    return {values_.data() + k * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }
  std::span<const double> value(std::size_t k) const {
    return {values_.data() + k * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }

  bool all_finite() const;

private:
  int dim_;
  double horizon_;
  std::vector<double> values_;  // segments x dim
};

/// Grid-sampled trajectory of group elements, node k at time k T / D.
class SignatureCurve {
public:
  SignatureCurve(std::vector<GroupElement> elements, double horizon);

  std::size_t node_count() const { return elements_.size(); }
  double horizon() const { return horizon_; }
  double time(std::size_t k) const {
    return horizon_ * static_cast<double>(k) / static_cast<double>(elements_.size() - 1);
  }
  const GroupElement& at(std::size_t k) const { return elements_[k]; }
  const GroupElement& endpoint() const { return elements_.back(); }

private:
  std::vector<GroupElement> elements_;
  double horizon_;
};

/// Right-translation vector field U_i: xi (x) e_i (prefix shift of the
/// coefficient blocks).  i is 1-based.
TruncatedTensor vector_field(const GroupElement& xi, int i);

/// Signature of a piecewise-linear path up to the given depth: the product
/// of segment exponentials exp(dx_1) (x) ... (x) exp(dx_D).
GroupElement signature_of_path(const PiecewisePath& path, int depth);

/// One step of the controlled flow: xi (x) exp(a dt).  dt must be positive.
GroupElement flow_step(const GroupElement& xi, std::span<const double> a, double dt);

/// Full forward flow from the unit element under piecewise-constant
/// controls; exact per step (group product, no integrator error).
SignatureCurve flow(const ControlPath& controls, int depth);

/// Integrate the controls into a path: x(t_{k+1}) = x(t_k) + a(t_k) T / D.
PiecewisePath path_from_controls(const ControlPath& controls);

/// (T/D) sum_k |a(t_k)|_2.
double length(const ControlPath& controls);
/// (T/D)/2 sum_k |a(t_k)|_2^2.
double energy(const ControlPath& controls);

}  // namespace sigpath

#endif  // SIGPATH_SIGNATURE_HPP
