#pragma once

// Lattice sets V(p^e) as down-sets, their enumeration, and the scaled point
// sets (borders, fills, covering sets) built from them.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fvol/groebner.hpp"
#include "fvol/rational.hpp"

namespace fvol {

using Point = std::vector<std::uint64_t>;

std::uint64_t prime_power(std::uint64_t p, std::uint64_t e);

class IdealSeq {
 public:
  // Entries must be nonzero and share one ring.
  explicit IdealSeq(std::vector<Ideal> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<Ideal>& entries() const noexcept { return entries_; }
  const Ideal& operator[](std::size_t i) const { return entries_[i]; }
  const RingPtr& ring() const noexcept { return entries_.front().ring(); }
  bool principal() const noexcept { return principal_; }
  Ideal sum() const { return ideal_sum(entries_); }

 private:
  std::vector<Ideal> entries_;
  bool principal_;
};

class PFamily {
 public:
  static PFamily frobenius_of(Ideal J);
  // levels[e] is J_{p^e}, starting at e = 0. The condition
  // J_{p^e}^{[p]} ⊆ J_{p^{e+1}} is checked in R/a for every consecutive pair.
  static PFamily explicit_levels(std::vector<Ideal> levels, const QuotientPresentation& pres);

  bool is_frobenius() const noexcept { return !explicit_; }
  const RingPtr& ring() const noexcept { return levels_.front().ring(); }
  const Ideal& base() const noexcept { return levels_.front(); }
  // Throws BadLevel when an explicit family does not provide level e.
  Ideal level(std::uint64_t e) const;
  // Highest provided level of an explicit family.
  std::optional<std::uint64_t> max_level() const;
  const std::vector<Ideal>& explicit_ideals() const noexcept { return levels_; }

 private:
  PFamily(std::vector<Ideal> levels, bool is_explicit)
      : levels_(std::move(levels)), explicit_(is_explicit) {}

  std::vector<Ideal> levels_;
  bool explicit_;
};

// A finite down-closed subset of N^t. Stored as columns: for every prefix
// (a_1, ..., a_{t-1}) present in the set, the largest a_t.
class DownSet {
 public:
  DownSet(std::uint64_t p, std::uint64_t level, std::size_t dimension)
      : p_(p), level_(level), dim_(dimension) {}

  static DownSet from_columns(std::uint64_t p, std::uint64_t level, std::size_t dimension,
                              std::map<Point, std::uint64_t> columns);
  // Down-closure of the given points.
  static DownSet from_points(std::uint64_t p, std::uint64_t level, std::size_t dimension,
                             const std::vector<Point>& points);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t level() const noexcept { return level_; }
  std::size_t dimension() const noexcept { return dim_; }
  const std::map<Point, std::uint64_t>& columns() const noexcept { return columns_; }
  bool empty() const noexcept { return columns_.empty(); }

  bool contains(const Point& a) const;
  const Integer& cardinality() const noexcept { return cardinality_; }
  // Points with every coordinate at least 1.
  Integer count_positive() const;
  std::vector<Point> maximal_points() const;
  // Every point, in lexicographic order.
  std::vector<Point> points() const;
  // max |a| over the set; requires nonempty.
  std::uint64_t max_coordinate_sum() const;
  bool subset_of(const DownSet& other) const;

  friend bool operator==(const DownSet& a, const DownSet& b) {
    return a.dim_ == b.dim_ && a.columns_ == b.columns_;
  }

 private:
  std::uint64_t p_;
  std::uint64_t level_;
  std::size_t dim_;
  std::map<Point, std::uint64_t> columns_;
  Integer cardinality_ = 0;
};

struct EnumerationLimits {
  std::uint64_t budget = 10'000'000;
  std::uint64_t ell_cap = 512;
};

// The data (I, J_•, a) with everything derived from it: Gröbner bases of
// J_{p^e} + a per level, power caches, μ_n and ℓ_n.
class Instance {
 public:
  // Throws HypothesisViolated unless J_1 + a is proper and every generator
  // of every I_n lies in √(J_1 + a).
  Instance(IdealSeq seq, PFamily family, QuotientPresentation pres, EnumerationLimits limits = {});

  Instance(const Instance&) = delete;
  Instance& operator=(const Instance&) = delete;
  Instance(Instance&&) = default;
  Instance& operator=(Instance&&) = default;

  const IdealSeq& seq() const noexcept { return seq_; }
  const PFamily& family() const noexcept { return family_; }
  const QuotientPresentation& presentation() const noexcept { return pres_; }
  const EnumerationLimits& limits() const noexcept { return limits_; }
  std::uint64_t p() const noexcept { return p_; }
  std::size_t t() const noexcept { return seq_.size(); }

  const std::vector<std::uint64_t>& mu() const noexcept { return mu_; }
  std::uint64_t mu_max() const;
  const std::vector<std::uint64_t>& ell() const noexcept { return ell_; }
  // μ_n ℓ_n p^e; every point of V(p^e) has a_n below it.
  std::uint64_t coordinate_bound(std::size_t n, std::uint64_t e) const;

  // GB(J_{p^e} + a).
  const GroebnerBasis& basis(std::uint64_t e);

  bool v_membership(const Point& a, std::uint64_t e);
  DownSet enumerate_v(std::uint64_t e);
  std::uint64_t last_call_count() const noexcept { return calls_; }

 private:
  PowerCache& cache(std::size_t n, std::uint64_t e);
  void tick();

  IdealSeq seq_;
  PFamily family_;
  QuotientPresentation pres_;
  EnumerationLimits limits_;
  std::uint64_t p_;
  std::vector<std::uint64_t> mu_;
  std::vector<std::uint64_t> ell_;
  std::map<std::uint64_t, GroebnerBasis> bases_;
  std::map<std::pair<std::size_t, std::uint64_t>, PowerCache> caches_;
  std::uint64_t calls_ = 0;
};

std::uint64_t count_v_tilde(const DownSet& V);

// A finite subset of (1/p^level) N^t, stored by integer numerators.
class ScaledPointSet {
 public:
  ScaledPointSet(std::uint64_t p, std::uint64_t level, std::size_t dimension)
      : p_(p), level_(level), dim_(dimension) {}

  static ScaledPointSet from_down_set(const DownSet& V);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t level() const noexcept { return level_; }
  std::size_t dimension() const noexcept { return dim_; }
  const std::set<Point>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool contains(const Point& x) const { return points_.count(x) != 0; }
  void insert(Point x);
  void insert_all(const ScaledPointSet& other);

  friend bool operator==(const ScaledPointSet&, const ScaledPointSet&) = default;

 private:
  std::uint64_t p_;
  std::uint64_t level_;
  std::size_t dim_;
  std::set<Point> points_;
};

ScaledPointSet border_points(const ScaledPointSet& C);
// H_{e1,e2}(C) at denominator p^{e1+e2}.
ScaledPointSet h_fill(const ScaledPointSet& C, std::uint64_t e2);

struct CoveringSets {
  ScaledPointSet slabs;   // B(I)_{e1}
  ScaledPointSet border;  // ∂(V(p^{e1})/p^{e1} ∪ B(I)_{e1})
  ScaledPointSet r_set;
  ScaledPointSet l_set;
};

CoveringSets covering_sets(Instance& inst, std::uint64_t e1, std::uint64_t e2);

struct CoverResult {
  bool holds = true;
  std::optional<Point> witness;  // numerators at level e1 + e2
  std::size_t checked = 0;
};

CoverResult verify_cover(Instance& inst, std::uint64_t e1, std::uint64_t e2);

// p^{e1(t-1)} Σ_n ∏_{j≠n} (μ_j ℓ_j + 1).
Integer border_injection_bound(const Instance& inst, std::uint64_t e1);

struct BoxRegion {
  std::uint64_t p;
  std::uint64_t level;
  std::size_t dimension;
  std::vector<Point> corners;
};

BoxRegion box_region(const DownSet& V);
// Exact volume of the union of the boxes [0, a/p^e], from unit-cube counting
// over the corners.
Rational region_volume(const BoxRegion& B);

// One row per point: "e,a1,...,at".
std::string to_csv(const std::vector<DownSet>& sets);
// Staircase outline of each planar set, one colour per level.
std::string staircase_svg(const std::vector<DownSet>& sets, double pixels_per_unit = 200.0);

}  // namespace fvol
