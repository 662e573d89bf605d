// SPDX-License-Identifier: Apache-2.0
//
// Projective points, point configurations, spanned flats and hyperplane search.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "castreg/field.hpp"
#include "castreg/matrix.hpp"

namespace castreg {

/// A point of P^N in canonical form: first nonzero coordinate equal to 1.
struct ProjectivePoint {
  std::vector<Elem> coords;

  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// Throws ZeroVector.
ProjectivePoint normalize_point(const Field& field, std::span<const Elem> raw);

/// Limits on the combinatorial enumerations. Defaults match desk-scale inputs.
struct GuardRails {
  std::size_t max_points = 64;
  std::size_t max_dimension = 8;
};

/// A distinct, spanning set of points of P^N.
class PointConfig {
 public:
  /// Canonicalizes every point. Throws DuplicatePoint, Degenerate, ZeroVector or
  /// BadParams (N < 1, wrong coordinate count).
  static PointConfig make(const Field& field, std::size_t ambient_dim,
                          std::span<const std::vector<Elem>> raw_points);

  const Field& field() const { return field_; }
  /// N, the dimension of the ambient projective space.
  std::size_t ambient_dim() const { return ambient_dim_; }
  /// d, the number of points.
  std::size_t size() const { return points_.size(); }
  const ProjectivePoint& point(std::size_t i) const { return points_.at(i); }
  const std::vector<ProjectivePoint>& points() const { return points_; }

 private:
  PointConfig(Field field, std::size_t n, std::vector<ProjectivePoint> pts)
      : field_(std::move(field)), ambient_dim_(n), points_(std::move(pts)) {}

  Field field_;
  std::size_t ambient_dim_;
  std::vector<ProjectivePoint> points_;
};

/// Coordinate matrix of the chosen points, one row each.
Matrix coordinate_matrix(const PointConfig& config, std::span<const std::size_t> indices);

/// Projective dimension of the span of the given points. Throws IndexOutOfRange.
int span_dim(const PointConfig& config, std::span<const std::size_t> indices);

/// A linear subspace of P^N spanned by configuration points.
struct Flat {
  std::size_t dim = 0;
  Matrix basis;                       // dim+1 rows, reduced row echelon form
  std::vector<std::size_t> incident;  // ascending configuration indices

  std::size_t incident_count() const { return incident.size(); }
  bool contains(std::size_t index) const;
};

/// Every distinct i-plane spanned by i+1 independent configuration points,
/// sorted by the row-major encoding of the canonical basis.
std::vector<Flat> enumerate_flats(const PointConfig& config, std::size_t i, const GuardRails& rails = {});

/// Levels 0..max_i of spanned flats; levels[i] equals enumerate_flats(config, i).
std::vector<std::vector<Flat>> enumerate_flat_levels(const PointConfig& config, std::size_t max_i,
                                                     const GuardRails& rails = {});

/// The span of the given configuration points as a Flat (with incidence filled in).
Flat span_flat(const PointConfig& config, std::span<const std::size_t> indices);

/// A hyperplane of P^N, canonical (first nonzero coefficient 1).
struct Hyperplane {
  std::vector<Elem> coeffs;

  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

Elem evaluate(const Field& field, const Hyperplane& h, const ProjectivePoint& x);
bool lies_on(const Field& field, const Hyperplane& h, const ProjectivePoint& x);

/// First hyperplane (in canonical order of the projectivized solution space) through
/// every `through` point and missing every `avoid` point.
/// Throws BadConstraint when an avoid point lies in the span of the through points
/// (or the sets overlap), Exhausted when no hyperplane over this field qualifies.
Hyperplane hyperplane_search(const PointConfig& config, std::span<const std::size_t> through,
                             std::span<const std::size_t> avoid);

}  // namespace castreg
