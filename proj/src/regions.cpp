#include "fvol/regions.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>
#include <tuple>

namespace fvol {

std::uint64_t prime_power(std::uint64_t p, std::uint64_t e) {
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < e; ++i) q = checked_mul(q, p);
  return q;
}

// ---------------------------------------------------------------------------
// IdealSeq and PFamily

IdealSeq::IdealSeq(std::vector<Ideal> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorKind::BadInput, "a sequence needs at least one ideal");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].is_zero()) {
      throw Error(ErrorKind::BadInput, "entry " + std::to_string(i + 1) + " of the sequence is zero");
    }
    require_same_ring(*entries_[0].ring(), *entries_[i].ring());
  }
  principal_ = std::all_of(entries_.begin(), entries_.end(),
                           [](const Ideal& I) { return I.is_principal(); });
}

PFamily PFamily::frobenius_of(Ideal J) { return PFamily({std::move(J)}, false); }

PFamily PFamily::explicit_levels(std::vector<Ideal> levels, const QuotientPresentation& pres) {
  if (levels.empty()) throw Error(ErrorKind::BadLevel, "an explicit family needs level 0");
  const std::uint64_t p = levels.front().ring()->characteristic();
  for (std::size_t e = 0; e < levels.size(); ++e) {
    require_same_ring(*levels[0].ring(), *levels[e].ring());
    if (e + 1 < levels.size() &&
        !ideal_contains(frobenius_power(levels[e], p), levels[e + 1], pres)) {
      throw Error(ErrorKind::HypothesisViolated,
                  "p-family condition fails between levels " + std::to_string(e) + " and " +
                      std::to_string(e + 1));
    }
  }
  return PFamily(std::move(levels), true);
}

Ideal PFamily::level(std::uint64_t e) const {
  if (explicit_) {
    if (e >= levels_.size()) {
      throw Error(ErrorKind::BadLevel, "family does not provide level " + std::to_string(e));
    }
    return levels_[e];
  }
  return frobenius_power(levels_.front(), prime_power(ring()->characteristic(), e));
}

std::optional<std::uint64_t> PFamily::max_level() const {
  if (!explicit_) return std::nullopt;
  return levels_.size() - 1;
}

// ---------------------------------------------------------------------------
// DownSet

DownSet DownSet::from_columns(std::uint64_t p, std::uint64_t level, std::size_t dimension,
                              std::map<Point, std::uint64_t> columns) {
  DownSet out(p, level, dimension);
  for (const auto& [prefix, top] : columns) {
    if (prefix.size() + 1 != dimension) throw Error(ErrorKind::BadInput, "column prefix has wrong length");
    out.cardinality_ += Integer(top) + 1;
  }
  out.columns_ = std::move(columns);
  return out;
}

DownSet DownSet::from_points(std::uint64_t p, std::uint64_t level, std::size_t dimension,
                             const std::vector<Point>& points) {
  std::map<Point, std::uint64_t> columns;
  for (const auto& a : points) {
    if (a.size() != dimension) throw Error(ErrorKind::BadInput, "point has wrong dimension");
    Point prefix(dimension - 1, 0);
    // Walk every prefix below a's prefix.
    while (true) {
      auto [it, inserted] = columns.try_emplace(prefix, a.back());
      if (!inserted) it->second = std::max(it->second, a.back());
      std::size_t k = 0;
      while (k < prefix.size() && prefix[k] == a[k]) prefix[k++] = 0;
      if (k == prefix.size()) break;
      ++prefix[k];
    }
  }
  return from_columns(p, level, dimension, std::move(columns));
}

bool DownSet::contains(const Point& a) const {
  if (a.size() != dim_) return false;
  auto it = columns_.find(Point(a.begin(), a.end() - 1));
  return it != columns_.end() && a.back() <= it->second;
}

Integer DownSet::count_positive() const {
  Integer total = 0;
  for (const auto& [prefix, top] : columns_) {
    if (std::all_of(prefix.begin(), prefix.end(), [](std::uint64_t v) { return v >= 1; })) {
      total += Integer(top);
    }
  }
  return total;
}

std::vector<Point> DownSet::maximal_points() const {
  std::vector<Point> out;
  for (const auto& [prefix, top] : columns_) {
    bool dominated = false;
    Point next = prefix;
    for (std::size_t j = 0; j < next.size() && !dominated; ++j) {
      ++next[j];
      auto it = columns_.find(next);
      dominated = it != columns_.end() && it->second >= top;
      --next[j];
    }
    if (!dominated) {
      Point a = prefix;
      a.push_back(top);
      out.push_back(std::move(a));
    }
  }
  return out;
}

std::vector<Point> DownSet::points() const {
  std::vector<Point> out;
  for (const auto& [prefix, top] : columns_) {
    for (std::uint64_t v = 0; v <= top; ++v) {
      Point a = prefix;
      a.push_back(v);
      out.push_back(std::move(a));
    }
  }
  return out;
}

std::uint64_t DownSet::max_coordinate_sum() const {
  if (columns_.empty()) throw Error(ErrorKind::BadInput, "empty set has no maximum");
  std::uint64_t best = 0;
  for (const auto& [prefix, top] : columns_) {
    std::uint64_t s = top;
    for (auto v : prefix) s = checked_add(s, v);
    best = std::max(best, s);
  }
  return best;
}

bool DownSet::subset_of(const DownSet& other) const {
  for (const auto& [prefix, top] : columns_) {
    auto it = other.columns_.find(prefix);
    if (it == other.columns_.end() || it->second < top) return false;
  }
  return true;
}

std::uint64_t count_v_tilde(const DownSet& V) { return V.count_positive().get_ui(); }

// ---------------------------------------------------------------------------
// Instance

Instance::Instance(IdealSeq seq, PFamily family, QuotientPresentation pres, EnumerationLimits limits)
    : seq_(std::move(seq)),
      family_(std::move(family)),
      pres_(std::move(pres)),
      limits_(limits),
      p_(seq_.ring()->characteristic()) {
  require_same_ring(*seq_.ring(), *family_.ring());
  require_same_ring(*seq_.ring(), *pres_.ring());
  const GroebnerBasis& base = basis(0);
  if (base.is_unit()) {
    throw Error(ErrorKind::HypothesisViolated, "J_1 " + family_.base().to_string() +
                                                   " is the unit ideal; J must be proper");
  }
  Ideal radical_of = pres_.is_trivial() ? family_.base() : ideal_sum(family_.base(), pres_.ideal());
  for (std::size_t n = 0; n < seq_.size(); ++n) {
    for (const auto& g : seq_[n].generators()) {
      if (!radical_membership(g, radical_of)) {
        throw Error(ErrorKind::HypothesisViolated,
                    "generator " + g.to_string() + " of I_" + std::to_string(n + 1) +
                        " is not in the radical of " + family_.base().to_string());
      }
    }
    mu_.push_back(seq_[n].size());
    ell_.push_back(containment_exponent(seq_[n], base, limits_.ell_cap));
  }
}

std::uint64_t Instance::mu_max() const { return *std::max_element(mu_.begin(), mu_.end()); }

std::uint64_t Instance::coordinate_bound(std::size_t n, std::uint64_t e) const {
  return checked_mul(checked_mul(mu_[n], ell_[n]), prime_power(p_, e));
}

const GroebnerBasis& Instance::basis(std::uint64_t e) {
  auto it = bases_.find(e);
  if (it != bases_.end()) return it->second;
  if (e > 0 && family_.is_frobenius() && pres_.is_trivial()) {
    GroebnerBasis image = frobenius_image(basis(0), prime_power(p_, e));
    return bases_.emplace(e, std::move(image)).first->second;
  }
  return bases_.emplace(e, basis_with_presentation(family_.level(e), pres_)).first->second;
}

PowerCache& Instance::cache(std::size_t n, std::uint64_t e) {
  auto key = std::make_pair(n, e);
  auto it = caches_.find(key);
  if (it != caches_.end()) return it->second;
  const GroebnerBasis& g = basis(e);
  return caches_.emplace(std::piecewise_construct, std::forward_as_tuple(key),
                         std::forward_as_tuple(seq_[n], g))
      .first->second;
}

void Instance::tick() {
  if (++calls_ > limits_.budget) {
    throw Error(ErrorKind::BudgetExceeded,
                "membership budget of " + std::to_string(limits_.budget) + " calls exceeded");
  }
}

bool Instance::v_membership(const Point& a, std::uint64_t e) {
  if (a.size() != t()) throw Error(ErrorKind::BadInput, "point has wrong dimension");
  const GroebnerBasis& g = basis(e);
  ReducedSpan span = ReducedSpan::of_unit(g);
  for (std::size_t n = 0; n + 1 < t(); ++n) {
    span = span.times(cache(n, e).power(a[n]));
    if (span.empty()) return false;
  }
  return span.product_nonzero(cache(t() - 1, e).power(a.back()));
}

DownSet Instance::enumerate_v(std::uint64_t e) {
  calls_ = 0;
  const std::size_t dim = t();
  const GroebnerBasis& g = basis(e);
  std::vector<std::uint64_t> bounds;
  for (std::size_t n = 0; n < dim; ++n) bounds.push_back(coordinate_bound(n, e));

  std::map<Point, std::uint64_t> columns;
  Point prefix(dim - 1, 0);
  std::vector<ReducedSpan> state{ReducedSpan::of_unit(g)};
  PowerCache& last = cache(dim - 1, e);

  std::function<void(std::size_t)> sweep = [&](std::size_t j) {
    if (j + 1 == dim) {
      const ReducedSpan& span = state.back();
      if (span.empty()) return;
      std::uint64_t hi = bounds[j] - 1;
      for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (prefix[i] == 0) continue;
        --prefix[i];
        auto it = columns.find(prefix);
        ++prefix[i];
        if (it == columns.end()) throw Error(ErrorKind::BadInput, "enumeration lost down-closure");
        hi = std::min(hi, it->second);
      }
      std::uint64_t lo = 0;
      while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo + 1) / 2;
        tick();
        if (span.product_nonzero(last.power(mid))) {
          lo = mid;
        } else {
          hi = mid - 1;
        }
      }
      columns.emplace(prefix, lo);
      return;
    }
    PowerCache& here = cache(j, e);
    for (std::uint64_t v = 0; v < bounds[j]; ++v) {
      tick();
      ReducedSpan next = state.back().times(here.power(v));
      if (next.empty()) break;
      prefix[j] = v;
      state.push_back(std::move(next));
      sweep(j + 1);
      state.pop_back();
    }
    prefix[j] = 0;
  };
  sweep(0);
  return DownSet::from_columns(p_, e, dim, std::move(columns));
}

// ---------------------------------------------------------------------------
// Scaled point sets

ScaledPointSet ScaledPointSet::from_down_set(const DownSet& V) {
  ScaledPointSet out(V.p(), V.level(), V.dimension());
  for (auto& a : V.points()) out.points_.insert(std::move(a));
  return out;
}

void ScaledPointSet::insert(Point x) {
  if (x.size() != dim_) throw Error(ErrorKind::BadInput, "point has wrong dimension");
  points_.insert(std::move(x));
}

void ScaledPointSet::insert_all(const ScaledPointSet& other) {
  if (other.level_ != level_ || other.dim_ != dim_ || other.p_ != p_) {
    throw Error(ErrorKind::BadInput, "union of point sets at different levels");
  }
  points_.insert(other.points_.begin(), other.points_.end());
}

ScaledPointSet border_points(const ScaledPointSet& C) {
  ScaledPointSet out(C.p(), C.level(), C.dimension());
  for (const auto& x : C.points()) {
    Point y = x;
    for (auto& v : y) v = checked_add(v, 1);
    if (!C.contains(y)) out.insert(x);
  }
  return out;
}

ScaledPointSet h_fill(const ScaledPointSet& C, std::uint64_t e2) {
  const std::uint64_t q = prime_power(C.p(), e2);
  ScaledPointSet out(C.p(), C.level() + e2, C.dimension());
  const std::size_t t = C.dimension();
  for (const auto& x : C.points()) {
    Point lo(t), hi(t);
    for (std::size_t i = 0; i < t; ++i) {
      hi[i] = checked_mul(q, x[i]);
      lo[i] = x[i] == 0 ? 0 : hi[i] - q + 1;
    }
    Point y = lo;
    while (true) {
      out.insert(y);
      std::size_t k = 0;
      while (k < t && y[k] == hi[k]) {
        y[k] = lo[k];
        ++k;
      }
      if (k == t) break;
      ++y[k];
    }
  }
  return out;
}

CoveringSets covering_sets(Instance& inst, std::uint64_t e1, std::uint64_t e2) {
  const std::size_t t = inst.t();
  const std::uint64_t p = inst.p();
  DownSet V = inst.enumerate_v(e1);
  ScaledPointSet scaled = ScaledPointSet::from_down_set(V);

  ScaledPointSet slabs(p, e1, t);
  const std::uint64_t q = prime_power(p, e1);
  Point limit(t);
  for (std::size_t i = 0; i < t; ++i) limit[i] = checked_mul(checked_mul(inst.mu()[i], inst.ell()[i]), q);
  for (std::size_t j = 0; j < t; ++j) {
    Point x(t, 0);
    while (true) {
      slabs.insert(x);
      std::size_t k = 0;
      while (k < t && (k == j || x[k] == limit[k])) {
        if (k != j) x[k] = 0;
        ++k;
      }
      if (k == t) break;
      ++x[k];
    }
  }

  ScaledPointSet united = scaled;
  united.insert_all(slabs);
  ScaledPointSet border = border_points(united);

  ScaledPointSet shifted(p, e1, t);
  const std::uint64_t mu = inst.mu_max();
  for (const auto& b : border.points()) {
    for (std::uint64_t k = 0; k <= mu; ++k) {
      Point y = b;
      for (auto& v : y) v = checked_add(v, k);
      shifted.insert(std::move(y));
    }
  }
  return CoveringSets{std::move(slabs), std::move(border), h_fill(scaled, e2), h_fill(shifted, e2)};
}

CoverResult verify_cover(Instance& inst, std::uint64_t e1, std::uint64_t e2) {
  CoveringSets sets = covering_sets(inst, e1, e2);
  DownSet fine = inst.enumerate_v(e1 + e2);
  CoverResult result;
  for (const auto& y : fine.points()) {
    ++result.checked;
    if (!sets.r_set.contains(y) && !sets.l_set.contains(y)) {
      result.holds = false;
      result.witness = y;
      break;
    }
  }
  return result;
}

Integer border_injection_bound(const Instance& inst, std::uint64_t e1) {
  const std::size_t t = inst.t();
  Integer sum = 0;
  for (std::size_t n = 0; n < t; ++n) {
    Integer prod = 1;
    for (std::size_t j = 0; j < t; ++j) {
      if (j != n) prod *= Integer(inst.mu()[j]) * Integer(inst.ell()[j]) + 1;
    }
    sum += prod;
  }
  return integer_pow(inst.p(), e1 * (t - 1)) * sum;
}

// ---------------------------------------------------------------------------
// Box regions

namespace {

// Unit cubes (c - 1, c] with c >= 1 lying under some corner.
Integer count_cubes(const std::vector<Point>& corners, std::size_t offset) {
  if (corners.empty()) return 0;
  if (offset == corners.front().size()) return 1;
  std::vector<std::uint64_t> values;
  for (const auto& a : corners) values.push_back(a[offset]);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Integer total = 0;
  std::uint64_t prev = 0;
  for (std::uint64_t v : values) {
    if (v == prev) continue;
    std::vector<Point> above;
    for (const auto& a : corners) {
      if (a[offset] >= v) above.push_back(a);
    }
    total += Integer(v - prev) * count_cubes(above, offset + 1);
    prev = v;
  }
  return total;
}

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

BoxRegion box_region(const DownSet& V) {
  return BoxRegion{V.p(), V.level(), V.dimension(), V.maximal_points()};
}

Rational region_volume(const BoxRegion& B) {
  Integer cubes = count_cubes(B.corners, 0);
  return make_rational(cubes, integer_pow(B.p, B.level * B.dimension));
}

std::string to_csv(const std::vector<DownSet>& sets) {
  std::ostringstream out;
  if (sets.empty()) return "";
  const std::size_t t = sets.front().dimension();
  out << "e";
  for (std::size_t i = 1; i <= t; ++i) out << ",a" << i;
  out << "\n";
  for (const auto& V : sets) {
    if (V.dimension() != t) throw Error(ErrorKind::BadInput, "CSV sets differ in dimension");
    for (const auto& a : V.points()) {
      out << V.level();
      for (auto v : a) out << "," << v;
      out << "\n";
    }
  }
  return out.str();
}

std::string staircase_svg(const std::vector<DownSet>& sets, double pixels_per_unit) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};
  const double margin = 20.0;
  double extent = 1.0;
  for (const auto& V : sets) {
    if (V.dimension() != 2) throw Error(ErrorKind::BadInput, "staircases need t = 2");
    const double q = static_cast<double>(prime_power(V.p(), V.level()));
    for (const auto& a : V.maximal_points()) {
      extent = std::max({extent, static_cast<double>(a[0]) / q, static_cast<double>(a[1]) / q});
    }
  }
  const double size = 2 * margin + extent * pixels_per_unit;
  auto sx = [&](double x) { return fixed3(margin + x * pixels_per_unit); };
  auto sy = [&](double y) { return fixed3(size - margin - y * pixels_per_unit); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed3(size) << "\" height=\""
      << fixed3(size) << "\" viewBox=\"0 0 " << fixed3(size) << " " << fixed3(size) << "\">\n";
  out << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(extent) << "\" y2=\""
      << sy(0) << "\" stroke=\"black\"/>\n";
  out << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(0) << "\" y2=\""
      << sy(extent) << "\" stroke=\"black\"/>\n";
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const DownSet& V = sets[k];
    auto corners = V.maximal_points();
    if (corners.empty()) continue;
    const double q = static_cast<double>(prime_power(V.p(), V.level()));
    std::sort(corners.begin(), corners.end());
    std::vector<std::pair<double, double>> path;
    path.emplace_back(0.0, static_cast<double>(corners.front()[1]) / q);
    for (std::size_t i = 0; i < corners.size(); ++i) {
      double x = static_cast<double>(corners[i][0]) / q;
      double y = static_cast<double>(corners[i][1]) / q;
      path.emplace_back(x, y);
      double next_y = i + 1 < corners.size() ? static_cast<double>(corners[i + 1][1]) / q : 0.0;
      path.emplace_back(x, next_y);
    }
    out << "  <polyline fill=\"none\" stroke=\"" << palette[k % 6] << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i != 0) out << " ";
      out << sx(path[i].first) << "," << sy(path[i].second);
    }
    out << "\">\n    <title>e=" << V.level() << "</title>\n  </polyline>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace fvol
