#include "pipp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pipp/errors.hpp"

namespace pipp {

Box::Box(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty() || lower_.size() != upper_.size())
    throw ConfigError("box corners must be non-empty and of equal dimension");
  for (std::size_t k = 0; k < lower_.size(); ++k) {
    if (!std::isfinite(lower_[k]) || !std::isfinite(upper_[k]) ||
        !(lower_[k] < upper_[k]))
      throw ConfigError("box needs finite corners with lower < upper");
  }
}

Box Box::unit(int dim) {
  return Box(std::vector<double>(dim, 0.0), std::vector<double>(dim, 1.0));
}

double Box::volume() const {
  double v = 1.0;
  for (int k = 0; k < dim(); ++k) v *= side(k);
  return v;
}

bool Box::contains(std::span<const double> p) const {
  for (int k = 0; k < dim(); ++k)
    if (p[k] < lower_[k] || p[k] > upper_[k]) return false;
  return true;
}

bool Box::contains(const Box& other) const {
  if (other.dim() != dim()) return false;
  for (int k = 0; k < dim(); ++k)
    if (other.lower_[k] < lower_[k] || other.upper_[k] > upper_[k]) return false;
  return true;
}

Box Box::expanded(double margin) const {
  std::vector<double> lo = lower_, hi = upper_;
  for (int k = 0; k < dim(); ++k) {
    lo[k] -= margin;
    hi[k] += margin;
  }
  return Box(std::move(lo), std::move(hi));
}

double distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return std::sqrt(s);
}

PointPattern::PointPattern(Box window) : window_(std::move(window)) {}

PointPattern::PointPattern(Box window, std::vector<double> flat_coords)
    : window_(std::move(window)), coords_(std::move(flat_coords)) {
  validate();
}

PointPattern::PointPattern(Box window,
                           const std::vector<std::vector<double>>& points)
    : window_(std::move(window)) {
  coords_.reserve(points.size() * window_.dim());
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != window_.dim())
      throw ConfigError("point dimension does not match window");
    coords_.insert(coords_.end(), p.begin(), p.end());
  }
  validate();
}

void PointPattern::validate() const {
  const int d = dim();
  if (coords_.size() % d != 0)
    throw ConfigError("coordinate count is not a multiple of the dimension");
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!window_.contains(point(i)))
      throw ConfigError("point lies outside the pattern window");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    auto pa = point(a), pb = point(b);
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(),
                                        pb.end());
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t i = 1; i < n; ++i) {
    auto pa = point(order[i - 1]), pb = point(order[i]);
    if (std::equal(pa.begin(), pa.end(), pb.begin()))
      throw ConfigError("pattern contains duplicate points");
  }
}

std::size_t PointPattern::count_in(const Box& window) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < size(); ++i)
    if (window.contains(point(i))) ++c;
  return c;
}

PointPattern PointPattern::without(std::size_t i) const {
  PointPattern out(window_);
  out.coords_ = coords_;
  const auto first = out.coords_.begin() + static_cast<std::ptrdiff_t>(i * dim());
  out.coords_.erase(first, first + dim());
  return out;
}

double PointPattern::min_pair_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      best = std::min(best, distance(point(i), point(j)));
  return best;
}

PointPattern clip(const PointPattern& x, const Box& window) {
  if (!x.window().contains(window))
    throw ConfigError("clip window must lie inside the pattern window");
  std::vector<double> kept;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto p = x.point(i);
    if (window.contains(p)) kept.insert(kept.end(), p.begin(), p.end());
  }
  return PointPattern(window, std::move(kept));
}

}  // namespace pipp
