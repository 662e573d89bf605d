// SPDX-License-Identifier: Apache-2.0
#include "castreg/geometry.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "castreg/error.hpp"

namespace castreg {

ProjectivePoint normalize_point(const Field& field, std::span<const Elem> raw) {
  auto lead = std::find_if(raw.begin(), raw.end(), [](Elem x) { return !x.is_zero(); });
  if (lead == raw.end()) throw Error(ErrorCode::ZeroVector, "all coordinates are zero");
  for (Elem x : raw) {
    if (!field.contains(x)) throw Error(ErrorCode::FieldMismatch, "coordinate not in " + field.describe());
  }
  const Elem scale = field.inv(*lead);
  ProjectivePoint p;
  p.coords.reserve(raw.size());
  for (Elem x : raw) p.coords.push_back(field.mul(x, scale));
  return p;
}

PointConfig PointConfig::make(const Field& field, std::size_t n, std::span<const std::vector<Elem>> raw_points) {
  if (n < 1) throw Error(ErrorCode::BadParams, "ambient dimension must be at least 1");
  std::vector<ProjectivePoint> pts;
  std::map<ProjectivePoint, std::size_t> seen;
  for (std::size_t i = 0; i < raw_points.size(); ++i) {
    if (raw_points[i].size() != n + 1) {
      throw Error(ErrorCode::BadParams, "point " + std::to_string(i) + " does not have " + std::to_string(n + 1) +
                                            " coordinates");
    }
    auto p = normalize_point(field, raw_points[i]);
    auto [it, inserted] = seen.emplace(p, i);
    if (!inserted) {
      throw Error(ErrorCode::DuplicatePoint,
                  "points " + std::to_string(it->second) + " and " + std::to_string(i) + " coincide");
    }
    pts.push_back(std::move(p));
  }
  PointConfig config(field, n, std::move(pts));
  std::vector<std::size_t> all(config.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (config.size() == 0 || span_dim(config, all) < static_cast<int>(n)) {
    throw Error(ErrorCode::Degenerate, "points do not span P^" + std::to_string(n));
  }
  return config;
}

Matrix coordinate_matrix(const PointConfig& config, std::span<const std::size_t> indices) {
  Matrix m(config.field(), 0, config.ambient_dim() + 1);
  for (auto i : indices) {
    if (i >= config.size()) throw Error(ErrorCode::IndexOutOfRange, "point index " + std::to_string(i));
    m.append_row(config.point(i).coords);
  }
  return m;
}

int span_dim(const PointConfig& config, std::span<const std::size_t> indices) {
  return static_cast<int>(rank(coordinate_matrix(config, indices))) - 1;
}

bool Flat::contains(std::size_t index) const { return std::binary_search(incident.begin(), incident.end(), index); }

namespace {

Matrix nonzero_rows(const RrefResult& red) {
  Matrix b(red.reduced.field(), 0, red.reduced.cols());
  for (std::size_t r = 0; r < red.rank; ++r) b.append_row(red.reduced.row(r));
  return b;
}

std::vector<std::size_t> incident_points(const PointConfig& config, const RrefResult& red) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < config.size(); ++j) {
    if (in_row_space(red, config.point(j).coords)) out.push_back(j);
  }
  return out;
}

std::vector<std::uint64_t> basis_key(const Matrix& basis) {
  std::vector<std::uint64_t> key;
  key.reserve(basis.entries().size());
  for (Elem x : basis.entries()) key.push_back(x.value);
  return key;
}

}  // namespace

Flat span_flat(const PointConfig& config, std::span<const std::size_t> indices) {
  auto red = rref(coordinate_matrix(config, indices));
  Flat f{red.rank == 0 ? 0 : red.rank - 1, nonzero_rows(red), {}};
  f.incident = incident_points(config, red);
  return f;
}

std::vector<std::vector<Flat>> enumerate_flat_levels(const PointConfig& config, std::size_t max_i,
                                                     const GuardRails& rails) {
  if (config.size() > rails.max_points || config.ambient_dim() > rails.max_dimension) {
    std::ostringstream os;
    os << "configuration with d=" << config.size() << ", N=" << config.ambient_dim()
       << " exceeds guard rails (d<=" << rails.max_points << ", N<=" << rails.max_dimension << ")";
    throw Error(ErrorCode::TooLarge, os.str());
  }
  if (max_i >= config.ambient_dim()) {
    throw Error(ErrorCode::BadParams, "flat dimension must be below the ambient dimension");
  }
  const Field& field = config.field();
  std::vector<std::vector<Flat>> levels;

  std::map<std::vector<std::uint64_t>, Flat> current;
  for (std::size_t j = 0; j < config.size(); ++j) {
    Matrix b(field, 0, config.ambient_dim() + 1);
    b.append_row(config.point(j).coords);
    auto key = basis_key(b);
    current.emplace(std::move(key), Flat{0, std::move(b), {j}});
  }

  for (std::size_t i = 0;; ++i) {
    std::vector<Flat> level;
    level.reserve(current.size());
    for (auto& [key, flat] : current) level.push_back(std::move(flat));
    levels.push_back(std::move(level));
    if (i == max_i) break;

    std::map<std::vector<std::uint64_t>, RrefResult> next;
    for (const Flat& f : levels.back()) {
      for (std::size_t q = 0; q < config.size(); ++q) {
        if (f.contains(q)) continue;
        Matrix ext = f.basis;
        ext.append_row(config.point(q).coords);
        auto red = rref(ext);
        auto key = basis_key(red.reduced);
        if (next.find(key) == next.end()) next.emplace(std::move(key), std::move(red));
      }
    }
    current.clear();
    for (auto& [key, red] : next) {
      Flat g{i + 1, red.reduced, incident_points(config, red)};
      current.emplace(key, std::move(g));
    }
  }
  return levels;
}

std::vector<Flat> enumerate_flats(const PointConfig& config, std::size_t i, const GuardRails& rails) {
  auto levels = enumerate_flat_levels(config, i, rails);
  return std::move(levels.back());
}

Elem evaluate(const Field& field, const Hyperplane& h, const ProjectivePoint& x) {
  Elem acc = field.zero();
  for (std::size_t k = 0; k < h.coeffs.size(); ++k) acc = field.add(acc, field.mul(h.coeffs[k], x.coords[k]));
  return acc;
}

bool lies_on(const Field& field, const Hyperplane& h, const ProjectivePoint& x) {
  return evaluate(field, h, x).is_zero();
}

Hyperplane hyperplane_search(const PointConfig& config, std::span<const std::size_t> through,
                             std::span<const std::size_t> avoid) {
  const Field& field = config.field();
  const std::size_t n1 = config.ambient_dim() + 1;
  for (auto i : through)
    if (i >= config.size()) throw Error(ErrorCode::IndexOutOfRange, "point index " + std::to_string(i));
  for (auto i : avoid) {
    if (i >= config.size()) throw Error(ErrorCode::IndexOutOfRange, "point index " + std::to_string(i));
    if (std::find(through.begin(), through.end(), i) != through.end()) {
      throw Error(ErrorCode::BadConstraint, "point " + std::to_string(i) + " is both required and avoided");
    }
  }

  const Matrix through_m = coordinate_matrix(config, through);
  const auto red = rref(through_m);
  if (red.rank >= n1) throw Error(ErrorCode::BadConstraint, "required points span the whole space");
  for (auto i : avoid) {
    if (in_row_space(red, config.point(i).coords)) {
      throw Error(ErrorCode::BadConstraint, "avoided point " + std::to_string(i) + " lies in the required span");
    }
  }

  const Matrix kernel = kernel_basis(through_m);
  const std::size_t k = kernel.rows();
  // kernel_values[a][m] = K_m . x_a
  std::vector<std::vector<Elem>> kernel_values(avoid.size(), std::vector<Elem>(k));
  for (std::size_t a = 0; a < avoid.size(); ++a) {
    const auto& x = config.point(avoid[a]).coords;
    for (std::size_t m = 0; m < k; ++m) {
      Elem acc = field.zero();
      for (std::size_t c = 0; c < n1; ++c) acc = field.add(acc, field.mul(kernel.at(m, c), x[c]));
      kernel_values[a][m] = acc;
    }
  }

  const std::uint64_t q = field.order();
  std::vector<Elem> lambda(k);
  for (std::size_t lead = k; lead-- > 0;) {
    std::fill(lambda.begin(), lambda.end(), field.zero());
    lambda[lead] = field.one();
    while (true) {
      bool ok = true;
      for (std::size_t a = 0; a < avoid.size() && ok; ++a) {
        Elem acc = field.zero();
        for (std::size_t m = lead; m < k; ++m) {
          if (!lambda[m].is_zero()) acc = field.add(acc, field.mul(lambda[m], kernel_values[a][m]));
        }
        ok = !acc.is_zero();
      }
      if (ok) {
        std::vector<Elem> c(n1, field.zero());
        for (std::size_t m = lead; m < k; ++m) {
          if (lambda[m].is_zero()) continue;
          for (std::size_t col = 0; col < n1; ++col)
            c[col] = field.add(c[col], field.mul(lambda[m], kernel.at(m, col)));
        }
        return Hyperplane{normalize_point(field, c).coords};
      }
      // advance the tail lambda[lead+1..k-1] as a base-q counter, last position least significant
      bool advanced = false;
      for (std::size_t pos = k; pos-- > lead + 1;) {
        if (lambda[pos].value + 1 < q) {
          lambda[pos] = Elem{lambda[pos].value + 1};
          advanced = true;
          break;
        }
        lambda[pos] = field.zero();
      }
      if (!advanced) break;
    }
  }
  throw Error(ErrorCode::Exhausted, "no hyperplane over " + field.describe() + " meets the constraints");
}

}  // namespace castreg
