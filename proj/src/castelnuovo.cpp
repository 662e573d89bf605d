// SPDX-License-Identifier: Apache-2.0
#include "castreg/castelnuovo.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "castreg/bounds.hpp"
#include "castreg/error.hpp"
#include "castreg/hilbert.hpp"

namespace castreg {

std::string_view to_string(SeparatorMethod m) {
  switch (m) {
    case SeparatorMethod::LinearAlgebra: return "linalg";
    case SeparatorMethod::Greedy: return "greedy";
    case SeparatorMethod::Lemma21: return "lemma21";
    case SeparatorMethod::Lemma22N3: return "lemma22_n3";
    case SeparatorMethod::Lemma22N4: return "lemma22_n4";
    case SeparatorMethod::Lemma22N5: return "lemma22_n5";
    case SeparatorMethod::Lemma24: return "lemma24";
    case SeparatorMethod::Lemma25: return "lemma25";
  }
  return "?";
}

std::string_view to_string(VerifyReason r) {
  switch (r) {
    case VerifyReason::Ok: return "Ok";
    case VerifyReason::VanishesAtP: return "VanishesAtP";
    case VerifyReason::Uncovered: return "Uncovered";
    case VerifyReason::DegreeMismatch: return "DegreeMismatch";
    case VerifyReason::Malformed: return "Malformed";
  }
  return "?";
}

SeparatorContext::SeparatorContext(PointConfig config, const GuardRails& rails)
    : config_(std::move(config)),
      levels_(enumerate_flat_levels(config_, config_.ambient_dim() - 1, rails)),
      profile_(position_profile(levels_)) {}

namespace {

[[noreturn]] void stuck(const std::string& step) { throw Error(ErrorCode::ConstructionStuck, step); }
[[noreturn]] void unmet(const std::string& why) { throw Error(ErrorCode::PreconditionFailed, why); }

void check_point(const PointConfig& config, std::size_t p) {
  if (p >= config.size()) throw Error(ErrorCode::IndexOutOfRange, "point index " + std::to_string(p));
}

std::int64_t ceil_ratio(std::size_t a, std::size_t b) {
  return ceil_div(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
}

Hyperplane hyperplane_of(const Flat& flat) {
  const Matrix k = kernel_basis(flat.basis);
  if (k.rows() != 1) throw std::logic_error("flat is not a hyperplane");
  return Hyperplane{normalize_point(flat.basis.field(), k.row(0)).coords};
}

std::vector<std::size_t> with(std::vector<std::size_t> base, std::size_t extra) {
  base.push_back(extra);
  return base;
}

// Running union of hyperplanes that must avoid a fixed point P.
class Cover {
 public:
  Cover(const PointConfig& config, std::size_t p) : config_(config), p_(p), covered_(config.size(), false) {}

  std::size_t add(const Hyperplane& h) {
    const Field& f = config_.field();
    if (lies_on(f, h, config_.point(p_))) throw std::logic_error("hyperplane through the separated point");
    std::size_t fresh = 0;
    for (std::size_t j = 0; j < config_.size(); ++j) {
      if (!covered_[j] && lies_on(f, h, config_.point(j))) {
        covered_[j] = true;
        ++fresh;
      }
    }
    hyperplanes_.push_back(h);
    return fresh;
  }

  bool covered(std::size_t j) const { return covered_[j]; }

  std::vector<std::size_t> remaining() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < config_.size(); ++j)
      if (j != p_ && !covered_[j]) out.push_back(j);
    return out;
  }

  std::size_t remaining_count() const { return remaining().size(); }

  /// True iff the flat contains neither P nor an already covered point.
  bool fresh_flat(const Flat& flat) const {
    return std::none_of(flat.incident.begin(), flat.incident.end(),
                        [&](std::size_t j) { return j == p_ || covered_[j]; });
  }

  std::size_t count_fresh(const Flat& flat) const {
    return static_cast<std::size_t>(std::count_if(flat.incident.begin(), flat.incident.end(),
                                                  [&](std::size_t j) { return j != p_ && !covered_[j]; }));
  }

  std::size_t size() const { return hyperplanes_.size(); }
  std::vector<Hyperplane> take() { return std::move(hyperplanes_); }

 private:
  const PointConfig& config_;
  std::size_t p_;
  std::vector<bool> covered_;
  std::vector<Hyperplane> hyperplanes_;
};

// Hyperplane through the given points avoiding P; ConstructionStuck on failure.
Hyperplane through_avoiding(const PointConfig& config, const std::vector<std::size_t>& through, std::size_t p,
                            const std::string& step) {
  try {
    const std::size_t avoid[] = {p};
    return hyperplane_search(config, through, avoid);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Exhausted || e.code() == ErrorCode::BadConstraint) stuck(step + ": " + e.what());
    throw;
  }
}

// Splits `rest` into `groups` consecutive chunks (earlier chunks larger) and covers each
// chunk by one hyperplane avoiding P.
void cover_in_groups(const PointConfig& config, Cover& cover, std::size_t p, const std::vector<std::size_t>& rest,
                     std::size_t groups, const std::string& step) {
  std::size_t start = 0;
  for (std::size_t g = 0; g < groups && start < rest.size(); ++g) {
    const std::size_t left = rest.size() - start;
    const std::size_t len = (left + (groups - g) - 1) / (groups - g);
    std::vector<std::size_t> chunk(rest.begin() + static_cast<std::ptrdiff_t>(start),
                                   rest.begin() + static_cast<std::ptrdiff_t>(start + len));
    cover.add(through_avoiding(config, chunk, p, step));
    start += len;
  }
}

// Greedy Castelnuovo covering: each hyperplane passes through up to `cap` uncovered
// points (lowest indices first) whose span misses P.
void greedy_cover(const PointConfig& config, Cover& cover, std::size_t p, std::size_t cap, const std::string& step) {
  const Field& field = config.field();
  while (true) {
    const auto rest = cover.remaining();
    if (rest.empty()) return;
    std::vector<std::size_t> group;
    for (std::size_t r : rest) {
      if (group.size() == cap) break;
      const auto red = rref(coordinate_matrix(config, with(group, r)));
      if (red.rank != group.size() + 1) continue;  // already in the span
      if (in_row_space(red, config.point(p).coords)) continue;
      group.push_back(r);
    }
    if (group.empty()) stuck(step + ": no point can be covered without P");
    (void)field;
    cover.add(through_avoiding(config, group, p, step));
  }
}

SeparatorCertificate finish(Cover& cover, std::size_t p, SeparatorMethod method, std::optional<GeneralForm> form = {}) {
  SeparatorCertificate cert;
  cert.point = p;
  cert.hyperplanes = cover.take();
  cert.form = std::move(form);
  cert.degree = cert.hyperplanes.size() + (cert.form ? cert.form->degree : 0);
  cert.method = method;
  return cert;
}

void check_bound(const SeparatorCertificate& cert, std::int64_t bound, const std::string& name) {
  if (static_cast<std::int64_t>(cert.degree) > bound) {
    stuck(name + ": construction used degree " + std::to_string(cert.degree) + " > " + std::to_string(bound));
  }
}

void check_sound(const PointConfig& config, const SeparatorCertificate& cert) {
  const auto v = verify_certificate(config, cert);
  if (!v.ok) throw std::logic_error("constructed certificate fails verification: " + std::string(to_string(v.reason)));
}

const PositionProfile& semi_uniform_profile(const SeparatorContext& ctx, const std::string& name) {
  if (!ctx.profile().semi_uniform) unmet(name + ": configuration is not in linear semi-uniform position");
  return ctx.profile();
}

const Flat* first_flat(const std::vector<Flat>& flats, const std::function<bool(const Flat&)>& pred) {
  for (const auto& f : flats)
    if (pred(f)) return &f;
  return nullptr;
}

// Lifts a form on the hyperplane G (coordinates: all but `dropped`) to P^N.
GeneralForm lift_form(std::size_t n, std::size_t dropped, const GeneralForm& sub, const Field& field) {
  GeneralForm out;
  out.degree = sub.degree;
  out.coeffs.assign(binomial(n + sub.degree, n), field.zero());
  const auto sub_monos = monomial_basis(n - 1, sub.degree);
  for (std::size_t i = 0; i < sub_monos.size(); ++i) {
    if (sub.coeffs[i].is_zero()) continue;
    Exponents e = sub_monos[i];
    e.insert(e.begin() + static_cast<std::ptrdiff_t>(dropped), 0u);
    out.coeffs[monomial_index(n, e)] = sub.coeffs[i];
  }
  return out;
}

// The multisecant construction; also the N >= 5 branch of the v(1) = 2 case.
SeparatorCertificate skeleton(const SeparatorContext& ctx, std::size_t p, SeparatorMethod method,
                              const std::string& name) {
  const PointConfig& config = ctx.config();
  const Field& field = config.field();
  const std::size_t n = config.ambient_dim();
  const std::size_t d = config.size();
  const auto& v_prof = ctx.profile().v;
  const std::size_t v = v_prof[n - 1];
  const std::size_t w = v_prof[n - 2];
  if (v <= w) unmet(name + ": need v(N-1) > v(N-2)");

  Cover cover(config, p);
  const Flat* h1 = first_flat(ctx.flats()[n - 1], [&](const Flat& f) { return !f.contains(p); });
  if (!h1) stuck(name + " step 1: every spanned hyperplane contains P");
  if (h1->incident_count() != v) stuck(name + " step 1: first hyperplane does not carry v points");
  cover.add(hyperplane_of(*h1));

  const Flat* plane = first_flat(ctx.flats()[n - 2], [&](const Flat& f) {
    return f.incident_count() == w &&
           std::all_of(f.incident.begin(), f.incident.end(), [&](std::size_t j) { return h1->contains(j); });
  });
  if (!plane) stuck(name + " step 2: no (N-2)-plane with w points inside the first hyperplane");

  const std::int64_t l1 = floor_div(static_cast<std::int64_t>(d - v - 1), static_cast<std::int64_t>(v - w)) + 1;
  for (std::int64_t i = 1; i < l1; ++i) {
    bool found = false;
    for (std::size_t q : cover.remaining()) {
      const Flat m = span_flat(config, with(plane->incident, q));
      if (m.contains(p)) continue;
      const std::size_t fresh = cover.count_fresh(m);
      if (fresh != v - w) stuck(name + " step 3: hyperplane through L adds " + std::to_string(fresh) + " points");
      cover.add(hyperplane_of(m));
      found = true;
      break;
    }
    if (!found) stuck(name + " step 3: no hyperplane through L avoids P");
  }

  const auto rest = cover.remaining();
  if (rest.size() != v - w - 1) {
    stuck(name + " step 4: " + std::to_string(rest.size()) + " points remain, expected " + std::to_string(v - w - 1));
  }
  const Flat g = span_flat(config, with(plane->incident, p));
  if (g.dim != n - 1) stuck(name + " step 4: L and P do not span a hyperplane");
  for (std::size_t r : rest)
    if (!g.contains(r)) stuck(name + " step 4: remaining point " + std::to_string(r) + " is off the residual hyperplane");

  // Separate P inside G, using coordinates on G obtained by dropping the pivot of its equation.
  const Hyperplane g_eq = hyperplane_of(g);
  const std::size_t dropped = static_cast<std::size_t>(
      std::find_if(g_eq.coeffs.begin(), g_eq.coeffs.end(), [](Elem x) { return !x.is_zero(); }) - g_eq.coeffs.begin());
  std::vector<std::vector<Elem>> projected;
  std::size_t p_sub = 0;
  for (std::size_t j : g.incident) {
    if (j == p) p_sub = projected.size();
    auto c = config.point(j).coords;
    c.erase(c.begin() + static_cast<std::ptrdiff_t>(dropped));
    projected.push_back(std::move(c));
  }
  const PointConfig sub = PointConfig::make(field, n - 1, projected);
  const auto l2 = static_cast<std::size_t>(ceil_ratio(v - 1, n - 1));
  const auto inner = separator_linear_algebra(sub, p_sub, l2);
  if (!inner) stuck(name + " step 5: no degree-" + std::to_string(l2) + " separator inside the residual hyperplane");

  auto cert = finish(cover, p, method, lift_form(n, dropped, *inner->form, field));
  check_bound(cert, ceil_ratio(d - 1, n) - 1, name);
  check_sound(config, cert);
  return cert;
}

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

SeparatorCertificate lemma22_n3(const SeparatorContext& ctx, std::size_t p) {
  const PointConfig& config = ctx.config();
  const std::size_t d = config.size();
  const std::string name = "lemma22_n3";
  const auto k = static_cast<std::size_t>(std::countr_zero(d));
  Cover cover(config, p);

  const Flat* h1 = first_flat(ctx.flats()[2], [&](const Flat& f) { return !f.contains(p); });
  if (!h1) stuck(name + " step 1: every spanned plane contains P");
  if (h1->incident_count() != 4) stuck(name + " step 1: first plane does not carry exactly 4 points");
  cover.add(hyperplane_of(*h1));

  const std::size_t l1 = std::size_t{1} << (k - 3);
  for (std::size_t i = 1; i < l1; ++i) {
    const auto rest = cover.remaining();
    bool found = false;
    for (std::size_t a = 0; a < rest.size() && !found; ++a) {
      for (std::size_t b = a + 1; b < rest.size() && !found; ++b) {
        for (std::size_t c = b + 1; c < rest.size() && !found; ++c) {
          const std::vector<std::size_t> tri{rest[a], rest[b], rest[c]};
          const Flat h = span_flat(config, tri);
          if (h.dim != 2 || !cover.fresh_flat(h)) continue;
          if (h.incident_count() != 4) stuck(name + " step 2: fresh plane does not carry exactly 4 points");
          cover.add(hyperplane_of(h));
          found = true;
        }
      }
    }
    if (!found) stuck(name + " step 2: no plane avoids P and the covered points");
  }

  while (cover.remaining_count() > 3) {
    const auto rest = cover.remaining();
    bool found = false;
    for (std::size_t a = 0; a < rest.size() && !found; ++a) {
      for (std::size_t b = a + 1; b < rest.size() && !found; ++b) {
        for (std::size_t c = b + 1; c < rest.size() && !found; ++c) {
          const Flat h = span_flat(config, std::vector<std::size_t>{rest[a], rest[b], rest[c]});
          if (h.dim != 2 || h.contains(p)) continue;
          cover.add(hyperplane_of(h));
          found = true;
        }
      }
    }
    if (!found) stuck(name + " step 3: every plane through three remaining points contains P");
  }
  const auto rest = cover.remaining();
  if (rest.size() == 3) cover_in_groups(config, cover, p, rest, 2, name + " endgame");
  else if (!rest.empty()) cover_in_groups(config, cover, p, rest, 1, name + " endgame");

  auto cert = finish(cover, p, SeparatorMethod::Lemma22N3);
  check_bound(cert, ceil_ratio(d - 1, 3) - 1, name);
  check_sound(config, cert);
  return cert;
}

SeparatorCertificate lemma22_n4(const SeparatorContext& ctx, std::size_t p) {
  const PointConfig& config = ctx.config();
  const std::size_t d = config.size();
  const std::string name = "lemma22_n4";
  Cover cover(config, p);

  const Flat* h1 = first_flat(ctx.flats()[3], [&](const Flat& f) { return !f.contains(p); });
  if (!h1) stuck(name + " step 1: every spanned hyperplane contains P");
  if (h1->incident_count() != 8) stuck(name + " step 1: first hyperplane does not carry exactly 8 points");
  cover.add(hyperplane_of(*h1));

  const std::size_t half = d / 2;
  while (cover.remaining_count() >= half + 4) {
    const auto rest = cover.remaining();
    const std::size_t q1 = rest[0], q2 = rest[1];
    bool found = false;
    for (std::size_t c = 2; c < rest.size() && !found; ++c) {
      const Flat plane = span_flat(config, std::vector<std::size_t>{q1, q2, rest[c]});
      if (plane.dim != 2 || !cover.fresh_flat(plane)) continue;
      for (std::size_t q5 : rest) {
        if (plane.contains(q5)) continue;
        const Flat m = span_flat(config, with(plane.incident, q5));
        if (m.contains(p) || cover.count_fresh(m) < 7) continue;
        cover.add(hyperplane_of(m));
        found = true;
        break;
      }
    }
    if (!found) stuck(name + " step 2: no hyperplane adds 7 points while avoiding P");
  }

  while (cover.remaining_count() > 6) {
    const auto rest = cover.remaining();
    bool found = false;
    const std::size_t r = rest.size();
    for (std::size_t a = 0; a < r && !found; ++a)
      for (std::size_t b = a + 1; b < r && !found; ++b)
        for (std::size_t c = b + 1; c < r && !found; ++c)
          for (std::size_t e = c + 1; e < r && !found; ++e) {
            const Flat h = span_flat(config, std::vector<std::size_t>{rest[a], rest[b], rest[c], rest[e]});
            if (h.dim != 3 || h.contains(p)) continue;
            cover.add(hyperplane_of(h));
            found = true;
          }
    if (!found) stuck(name + " step 3: no hyperplane through four remaining points avoids P");
  }
  const auto rest = cover.remaining();
  if (rest.size() == 6) cover_in_groups(config, cover, p, rest, 3, name + " endgame");
  else if (rest.size() >= 3) cover_in_groups(config, cover, p, rest, 2, name + " endgame");
  else if (!rest.empty()) cover_in_groups(config, cover, p, rest, 1, name + " endgame");

  auto cert = finish(cover, p, SeparatorMethod::Lemma22N4);
  check_bound(cert, ceil_ratio(d - 1, 4) - 1, name);
  check_sound(config, cert);
  return cert;
}

}  // namespace

std::optional<SeparatorCertificate> separator_linear_algebra(const PointConfig& config, std::size_t point,
                                                             std::size_t degree) {
  check_point(config, point);
  const Field& field = config.field();
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < config.size(); ++j)
    if (j != point) others.push_back(j);
  const Matrix m = evaluation_matrix(config, others, degree);
  const std::size_t single[] = {point};
  const Matrix at_p = evaluation_matrix(config, single, degree);
  const auto red = rref(m);

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Elem value = at_p.at(0, free);
    for (std::size_t j = 0; j < red.rank; ++j) {
      value = field.sub(value, field.mul(at_p.at(0, red.pivot_cols[j]), red.reduced.at(j, free)));
    }
    if (value.is_zero()) continue;
    GeneralForm form;
    form.degree = degree;
    form.coeffs.assign(m.cols(), field.zero());
    form.coeffs[free] = field.one();
    for (std::size_t j = 0; j < red.rank; ++j) form.coeffs[red.pivot_cols[j]] = field.neg(red.reduced.at(j, free));
    SeparatorCertificate cert;
    cert.point = point;
    cert.degree = degree;
    cert.form = std::move(form);
    cert.method = SeparatorMethod::LinearAlgebra;
    return cert;
  }
  return std::nullopt;
}

SeparatorCertificate separator_greedy(const PointConfig& config, std::size_t point) {
  check_point(config, point);
  Cover cover(config, point);
  greedy_cover(config, cover, point, config.ambient_dim(), "greedy");
  auto cert = finish(cover, point, SeparatorMethod::Greedy);
  check_sound(config, cert);
  return cert;
}

SeparatorCertificate separator_lemma_v1ge3(const SeparatorContext& ctx, std::size_t point) {
  const PointConfig& config = ctx.config();
  check_point(config, point);
  const std::string name = "lemma21";
  if (config.ambient_dim() < 3) unmet(name + ": needs N >= 3");
  if (config.size() < 25) unmet(name + ": needs d >= 25");
  const auto& prof = semi_uniform_profile(ctx, name);
  if (prof.v[1] < 3) unmet(name + ": needs v(1) >= 3");
  return skeleton(ctx, point, SeparatorMethod::Lemma21, name);
}

SeparatorCertificate separator_lemma_v1ge3(const PointConfig& config, std::size_t point) {
  return separator_lemma_v1ge3(SeparatorContext(config), point);
}

SeparatorCertificate separator_lemma_v1eq2(const SeparatorContext& ctx, std::size_t point) {
  const PointConfig& config = ctx.config();
  check_point(config, point);
  const std::string name = "lemma22";
  const std::size_t n = config.ambient_dim();
  const std::size_t d = config.size();
  if (n < 3) unmet(name + ": needs N >= 3");
  if (!is_power_of_two(d)) unmet(name + ": d = " + std::to_string(d) + " is not a power of 2");
  if (d < 23) unmet(name + ": needs d >= 23");
  const auto& prof = semi_uniform_profile(ctx, name);
  if (prof.v[1] != 2 || prof.v[2] < 4) unmet(name + ": needs v(1) = 2 and v(2) >= 4");
  if (n == 3) return lemma22_n3(ctx, point);
  if (n == 4) return lemma22_n4(ctx, point);
  return skeleton(ctx, point, SeparatorMethod::Lemma22N5, "lemma22_n5");
}

SeparatorCertificate separator_lemma_v1eq2(const PointConfig& config, std::size_t point) {
  return separator_lemma_v1eq2(SeparatorContext(config), point);
}

SeparatorCertificate separator_plane(const SeparatorContext& ctx, std::size_t point) {
  const PointConfig& config = ctx.config();
  check_point(config, point);
  const std::size_t d = config.size();
  if (config.ambient_dim() != 2) unmet("plane: needs N = 2");
  const auto& prof = semi_uniform_profile(ctx, "plane");
  const std::size_t v = prof.v[1];
  if (!(v >= 4 || (v == 3 && d >= 24))) unmet("plane: needs v(1) >= 4, or v(1) = 3 and d >= 24");
  const auto& lines = ctx.flats()[1];
  const std::int64_t bound = ceil_ratio(d - 1, 2) - 1;
  Cover cover(config, point);

  const Flat* first = first_flat(lines, [&](const Flat& f) { return !f.contains(point); });
  if (!first) stuck("plane step 1: every spanned line contains P");
  cover.add(hyperplane_of(*first));

  if (v >= 4) {
    const std::string name = "lemma24";
    const std::size_t q = first->incident.front();
    const std::int64_t l1 = floor_div(static_cast<std::int64_t>(d - v - 1), static_cast<std::int64_t>(v - 1));
    for (std::int64_t i = 1; i < l1; ++i) {
      bool found = false;
      for (std::size_t r : cover.remaining()) {
        const Flat line = span_flat(config, std::vector<std::size_t>{q, r});
        const bool clean = std::none_of(line.incident.begin(), line.incident.end(), [&](std::size_t j) {
          return j == point || (j != q && cover.covered(j));
        });
        if (!clean) continue;
        cover.add(hyperplane_of(line));
        found = true;
        break;
      }
      if (!found) stuck(name + " step 2: no line through Q avoids P and the covered points");
    }
    greedy_cover(config, cover, point, 2, name + " step 3");
    auto cert = finish(cover, point, SeparatorMethod::Lemma24);
    check_bound(cert, bound, name);
    check_sound(config, cert);
    return cert;
  }

  const std::string name = "lemma25";
  const std::int64_t l1 = floor_div(static_cast<std::int64_t>(d) - 4, 6) + 1;
  for (std::int64_t i = 1; i < l1; ++i) {
    const Flat* line = first_flat(lines, [&](const Flat& f) { return cover.fresh_flat(f); });
    if (!line) stuck(name + " step 2: no line avoids P and the covered points");
    cover.add(hyperplane_of(*line));
  }
  const std::size_t before = cover.size();
  greedy_cover(config, cover, point, 2, name + " step 3");
  const std::int64_t l2 = ceil_div(static_cast<std::int64_t>(d) + 3, 4);
  if (static_cast<std::int64_t>(cover.size() - before) > l2) {
    stuck(name + " step 3: needed more than " + std::to_string(l2) + " lines for the remaining points");
  }
  auto cert = finish(cover, point, SeparatorMethod::Lemma25);
  check_bound(cert, bound, name);
  check_sound(config, cert);
  return cert;
}

SeparatorCertificate separator_plane(const PointConfig& config, std::size_t point) {
  return separator_plane(SeparatorContext(config), point);
}

Verification verify_certificate(const PointConfig& config, const SeparatorCertificate& cert) {
  const Field& field = config.field();
  const std::size_t n = config.ambient_dim();
  if (cert.point >= config.size()) return {false, VerifyReason::Malformed, std::nullopt};
  for (const auto& h : cert.hyperplanes) {
    if (h.coeffs.size() != n + 1) return {false, VerifyReason::Malformed, std::nullopt};
    if (std::all_of(h.coeffs.begin(), h.coeffs.end(), [](Elem x) { return x.is_zero(); }))
      return {false, VerifyReason::Malformed, std::nullopt};
    for (Elem x : h.coeffs)
      if (!field.contains(x)) return {false, VerifyReason::Malformed, std::nullopt};
  }
  std::vector<Exponents> monos;
  if (cert.form) {
    monos = monomial_basis(n, cert.form->degree);
    if (cert.form->coeffs.size() != monos.size()) return {false, VerifyReason::Malformed, std::nullopt};
    for (Elem x : cert.form->coeffs)
      if (!field.contains(x)) return {false, VerifyReason::Malformed, std::nullopt};
  }
  const std::size_t total = cert.hyperplanes.size() + (cert.form ? cert.form->degree : 0);
  if (total != cert.degree) return {false, VerifyReason::DegreeMismatch, std::nullopt};

  auto value_at = [&](std::size_t j) {
    const auto& x = config.point(j);
    Elem acc = field.one();
    for (const auto& h : cert.hyperplanes) acc = field.mul(acc, evaluate(field, h, x));
    if (cert.form) {
      Elem f = field.zero();
      for (std::size_t m = 0; m < monos.size(); ++m) {
        if (!cert.form->coeffs[m].is_zero())
          f = field.add(f, field.mul(cert.form->coeffs[m], evaluate_monomial(field, monos[m], x.coords)));
      }
      acc = field.mul(acc, f);
    }
    return acc;
  };

  if (value_at(cert.point).is_zero()) return {false, VerifyReason::VanishesAtP, cert.point};
  for (std::size_t j = 0; j < config.size(); ++j) {
    if (j != cert.point && !value_at(j).is_zero()) return {false, VerifyReason::Uncovered, j};
  }
  return {true, VerifyReason::Ok, std::nullopt};
}

SeparatorCertificate separator_auto(const SeparatorContext& ctx, std::size_t p) {
  const PointConfig& config = ctx.config();
  check_point(config, p);
  const std::size_t n = config.ambient_dim();
  const std::size_t d = config.size();
  const auto& prof = ctx.profile();

  std::optional<SeparatorCertificate> cert;
  try {
    if (prof.semi_uniform && prof.v.size() >= 2) {
      const std::size_t v1 = prof.v[1];
      if (n >= 3 && v1 >= 3 && d >= 25) cert = separator_lemma_v1ge3(ctx, p);
      else if (n >= 3 && v1 == 2 && prof.v[2] >= 4 && is_power_of_two(d) && d >= 23) cert = separator_lemma_v1eq2(ctx, p);
      else if (n == 2 && (v1 >= 4 || (v1 == 3 && d >= 24))) cert = separator_plane(ctx, p);
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ConstructionStuck && e.code() != ErrorCode::PreconditionFailed) throw;
  }
  if (!cert) {
    try {
      cert = separator_greedy(config, p);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConstructionStuck) throw;
    }
  }
  for (std::size_t l = 0; !cert && l < d; ++l) cert = separator_linear_algebra(config, p, l);
  if (!cert) throw Error(ErrorCode::ConstructionStuck, "no separator of degree below d for point " + std::to_string(p));
  return std::move(*cert);
}

UpperBound regularity_upper_bound(const SeparatorContext& ctx) {
  const PointConfig& config = ctx.config();
  UpperBound out;
  for (std::size_t p = 0; p < config.size(); ++p) {
    auto cert = separator_auto(ctx, p);
    if (cert.degree > out.ell_star || p == 0) {
      out.ell_star = cert.degree;
      out.method = cert.method;
    }
    out.certificates.push_back(std::move(cert));
  }
  out.index_of_regularity = index_of_regularity(config);
  if (out.index_of_regularity > out.ell_star) {
    throw std::logic_error("separator degrees fall below the index of regularity");
  }
  return out;
}

UpperBound regularity_upper_bound(const PointConfig& config) { return regularity_upper_bound(SeparatorContext(config)); }

}  // namespace castreg
