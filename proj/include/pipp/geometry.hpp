#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pipp {

/// Axis-aligned closed box [lower, upper] in d dimensions.
class Box {
 public:
  Box(std::vector<double> lower, std::vector<double> upper);

  /// The unit cube [0,1]^d.
  static Box unit(int dim = 2);

  int dim() const { return static_cast<int>(lower_.size()); }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  double side(int axis) const { return upper_[axis] - lower_[axis]; }
  double volume() const;

  bool contains(std::span<const double> p) const;
  bool contains(const Box& other) const;

  /// Box grown by `margin` on every side.
  Box expanded(double margin) const;

  friend bool operator==(const Box&, const Box&) = default;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

/// Finite configuration of distinct points inside a window. Coordinates are
/// stored flat, point i occupying [i*dim, (i+1)*dim).
class PointPattern {
 public:
  explicit PointPattern(Box window);
  PointPattern(Box window, std::vector<double> flat_coords);
  PointPattern(Box window, const std::vector<std::vector<double>>& points);

  const Box& window() const { return window_; }
  int dim() const { return window_.dim(); }
  std::size_t size() const { return coords_.size() / window_.dim(); }
  bool empty() const { return coords_.empty(); }
  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim(), static_cast<std::size_t>(dim())};
  }
  const std::vector<double>& coords() const { return coords_; }

  /// Points within the closed box `window`.
  std::size_t count_in(const Box& window) const;

  /// Pattern with point i removed (x \ x_i).
  PointPattern without(std::size_t i) const;

  /// Smallest pairwise distance; +inf for fewer than two points.
  double min_pair_distance() const;

  friend bool operator==(const PointPattern&, const PointPattern&) = default;

 private:
  void validate() const;

  Box window_;
  std::vector<double> coords_;
};

double distance(std::span<const double> a, std::span<const double> b);

/// Sub-pattern of the points of `x` inside `window`; `window` must lie
/// inside `x.window()`.
PointPattern clip(const PointPattern& x, const Box& window);

}  // namespace pipp
