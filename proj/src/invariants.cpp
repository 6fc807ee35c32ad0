#include "fvol/invariants.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace fvol {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(TableKind kind) {
  switch (kind) {
    case TableKind::Volume:
      return "volume";
    case TableKind::Threshold:
      return "threshold";
    case TableKind::HilbertKunz:
      return "hk";
  }
  return "unknown";
}

namespace {

ordered_json rational_json(const Rational& r) {
  return ordered_json{{"num", numerator_string(r)}, {"den", denominator_string(r)}};
}

ordered_json rows_json(const std::vector<EstimateRow>& rows) {
  ordered_json out = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json entry{{"e", row.e}};
    entry.update(rational_json(row.value));
    out.push_back(std::move(entry));
  }
  return out;
}

Rational rational_power(const Rational& r, std::uint64_t k) {
  Rational out = 1;
  for (std::uint64_t i = 0; i < k; ++i) out *= r;
  return out;
}

Rational ratio(const Integer& num, const Integer& den) { return make_rational(num, den); }

GroebnerBasis frobenius_target(const Ideal& J, std::uint64_t q, const QuotientPresentation& pres) {
  if (pres.is_trivial()) return frobenius_image(buchberger(J), q);
  return basis_with_presentation(frobenius_power(J, q), pres);
}

void require_frobenius(const Instance& inst, const std::string& check) {
  if (!inst.family().is_frobenius()) {
    throw Error(ErrorKind::HypothesisViolated,
                check + " needs the Frobenius powers of a single ideal, not an explicit family");
  }
}

std::optional<Point> first_difference(const DownSet& a, const DownSet& b) {
  for (const auto& x : a.points()) {
    if (!b.contains(x)) return x;
  }
  for (const auto& x : b.points()) {
    if (!a.contains(x)) return x;
  }
  return std::nullopt;
}

// Bound B with I^B ⊆ J_{p^e} for the sum of the sequence.
std::uint64_t sum_bound(Instance& inst, const Ideal& I, std::uint64_t e) {
  std::uint64_t ell = containment_exponent(I, inst.basis(0), inst.limits().ell_cap);
  std::uint64_t mu = std::max<std::uint64_t>(I.size(), 1);
  return checked_mul(checked_mul(mu, ell), prime_power(inst.p(), e));
}

std::uint64_t nu_of_sum(Instance& inst, std::uint64_t e) {
  Ideal I = inst.seq().sum();
  std::uint64_t bound = sum_bound(inst, I, e);
  return nu_against(I, inst.basis(e), bound);
}

std::uint64_t nu_of_entry(Instance& inst, std::size_t n, std::uint64_t e) {
  return nu_against(inst.seq()[n], inst.basis(e), inst.coordinate_bound(n, e));
}

Instance with_reference(const Instance& inst, const Ideal& J, EnumerationLimits limits) {
  return Instance(inst.seq(), PFamily::frobenius_of(J), inst.presentation(), limits);
}

CheckReport make_report(std::string name, std::vector<std::uint64_t> levels, std::string relation) {
  CheckReport r;
  r.name = std::move(name);
  r.levels = std::move(levels);
  r.relation = std::move(relation);
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Tables

bool EstimateTable::stabilized() const {
  return rows.size() >= 2 && rows[rows.size() - 1].value == rows[rows.size() - 2].value;
}

std::string EstimateTable::to_json() const {
  ordered_json j;
  j["kind"] = std::string(to_string(kind));
  j["p"] = p;
  j["t"] = t;
  if (d) j["d"] = *d;
  j["rows"] = rows_json(rows);
  if (kind == TableKind::Volume) {
    j["tilde_rows"] = rows_json(tilde_rows);
    ordered_json gap_rows = ordered_json::array();
    for (const auto& g : gaps) {
      gap_rows.push_back({{"e", g.e}, {"gap", g.gap.get_str()}, {"bound", g.bound.get_str()}});
    }
    j["gaps"] = std::move(gap_rows);
  }
  ordered_json flags;
  flags["stabilized"] = stabilized();
  if (stabilized()) flags["note"] = "stabilized (not a proof)";
  if (tilde_nondecreasing) {
    flags["tilde_nondecreasing"] = *tilde_nondecreasing;
  } else {
    flags["tilde_nondecreasing"] = nullptr;
  }
  flags["budget_exceeded"] = budget_exceeded;
  if (label) flags["label"] = *label;
  j["flags"] = std::move(flags);
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// ν and thresholds

std::uint64_t nu_against(const Ideal& I, const GroebnerBasis& target, std::uint64_t bound) {
  if (target.is_unit()) throw Error(ErrorKind::HypothesisViolated, "reference ideal is the unit ideal");
  PowerCache cache(I, target);
  if (bound == 0 || !cache.power(bound).empty()) {
    throw Error(ErrorKind::LimitExceeded, "power bound " + std::to_string(bound) +
                                              " does not reach the reference ideal");
  }
  std::uint64_t lo = 0, hi = bound - 1;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (!cache.power(mid).empty()) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

NuValue nu(const Ideal& I, const Ideal& J, std::uint64_t e, const QuotientPresentation& pres,
           const EnumerationLimits& limits) {
  require_same_ring(*I.ring(), *J.ring());
  require_same_ring(*I.ring(), *pres.ring());
  GroebnerBasis base = basis_with_presentation(J, pres);
  if (base.is_unit()) {
    throw Error(ErrorKind::HypothesisViolated, "J " + J.to_string() + " is the unit ideal");
  }
  Ideal radical_of = pres.is_trivial() ? J : ideal_sum(J, pres.ideal());
  for (const auto& g : I.generators()) {
    if (!radical_membership(g, radical_of)) {
      throw Error(ErrorKind::HypothesisViolated,
                  "generator " + g.to_string() + " is not in the radical of " + J.to_string());
    }
  }
  const std::uint64_t q = prime_power(I.ring()->characteristic(), e);
  std::uint64_t ell = containment_exponent(I, base, limits.ell_cap);
  std::uint64_t mu = std::max<std::uint64_t>(I.size(), 1);
  GroebnerBasis target = frobenius_target(J, q, pres);
  return NuValue{e, nu_against(I, target, checked_mul(checked_mul(mu, ell), q))};
}

EstimateTable f_threshold_estimates(const Ideal& I, const Ideal& J, std::uint64_t e_min,
                                    std::uint64_t e_max, const QuotientPresentation& pres,
                                    const EnumerationLimits& limits) {
  EstimateTable table;
  table.kind = TableKind::Threshold;
  table.p = I.ring()->characteristic();
  table.t = 1;
  for (std::uint64_t e = e_min; e <= e_max; ++e) {
    NuValue v = nu(I, J, e, pres, limits);
    table.rows.push_back({e, ratio(Integer(v.nu), integer_pow(table.p, e))});
  }
  return table;
}

// ---------------------------------------------------------------------------
// Volumes

EstimateTable f_volume_estimates(Instance& inst, std::uint64_t e_min, std::uint64_t e_max) {
  EstimateTable table;
  table.kind = TableKind::Volume;
  table.p = inst.p();
  table.t = inst.t();
  const bool monotone_expected = inst.family().is_frobenius() && inst.presentation().is_trivial();

  std::vector<Instance> singles;
  if (inst.t() > 1) {
    for (const auto& entry : inst.seq().entries()) {
      singles.emplace_back(IdealSeq({entry}), inst.family(), inst.presentation(), inst.limits());
    }
  }

  for (std::uint64_t e = e_min; e <= e_max; ++e) {
    try {
      DownSet V = inst.enumerate_v(e);
      Integer scale = integer_pow(inst.p(), e * inst.t());
      Integer tilde = V.count_positive();
      Integer bound = inst.t() == 1 ? Integer(1) : Integer(0);
      if (inst.t() > 1) {
        std::vector<Integer> sizes;
        for (auto& s : singles) sizes.push_back(s.enumerate_v(e).cardinality());
        for (std::size_t i = 0; i < sizes.size(); ++i) {
          Integer prod = 1;
          for (std::size_t j = 0; j < sizes.size(); ++j) {
            if (j != i) prod *= sizes[j];
          }
          bound += prod;
        }
      }
      table.rows.push_back({e, ratio(V.cardinality(), scale)});
      table.tilde_rows.push_back({e, ratio(tilde, scale)});
      table.gaps.push_back({e, V.cardinality() - tilde, bound});
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::BudgetExceeded) throw;
      table.budget_exceeded = true;
      throw EstimateBudgetExceeded(std::string(err.what()) + " at level " + std::to_string(e), table);
    }
  }

  if (monotone_expected) {
    bool ok = true;
    for (std::size_t i = 1; i < table.tilde_rows.size(); ++i) {
      if (table.tilde_rows[i].value < table.tilde_rows[i - 1].value) ok = false;
    }
    table.tilde_nondecreasing = ok;
  }
  return table;
}

// ---------------------------------------------------------------------------
// Hilbert-Kunz

LengthValue hk_length(const Ideal& J, std::uint64_t e, const QuotientPresentation& pres) {
  require_same_ring(*J.ring(), *pres.ring());
  return standard_monomial_count(frobenius_target(J, prime_power(J.ring()->characteristic(), e), pres));
}

EstimateTable hk_estimates(const Ideal& J, std::uint64_t e_min, std::uint64_t e_max,
                           const QuotientPresentation& pres, std::optional<int> d) {
  if (!hk_length(J, 0, pres).is_finite()) {
    throw Error(ErrorKind::NotPrimary, "R/(J + a) has infinite length for J = " + J.to_string());
  }
  int dim = d ? *d : krull_dimension(Ideal(J.ring()), pres);
  if (dim < 0) throw Error(ErrorKind::BadInput, "dimension must be nonnegative");

  EstimateTable table;
  table.kind = TableKind::HilbertKunz;
  table.p = J.ring()->characteristic();
  table.t = static_cast<std::size_t>(dim);
  table.d = dim;
  for (std::uint64_t e = e_min; e <= e_max; ++e) {
    Integer length = hk_length(J, e, pres).value();
    table.rows.push_back({e, ratio(length, integer_pow(table.p, e * static_cast<std::uint64_t>(dim)))});
  }
  return table;
}

// ---------------------------------------------------------------------------
// Complete intersections

bool fedder_ci_test(const std::vector<Polynomial>& f, std::uint64_t e) {
  if (f.empty()) throw Error(ErrorKind::BadInput, "empty sequence");
  const RingPtr& ring = f.front().ring();
  GroebnerBasis m = buchberger(Ideal::maximal_at_origin(ring));
  Polynomial product = Polynomial::constant(ring, 1);
  for (const auto& g : f) {
    require_same_ring(*ring, *g.ring());
    if (!m.contains(g)) {
      throw Error(ErrorKind::HypothesisViolated, g.to_string() + " is not in the maximal ideal");
    }
    product = product * g;
  }
  if (product.is_zero()) return false;
  const std::uint64_t q = prime_power(ring->characteristic(), e);
  GroebnerBasis target = frobenius_image(m, q);
  PowerCache cache(Ideal(ring, {product}), target);
  return !cache.power(q - 1).empty();
}

bool check_sop(const std::vector<Polynomial>& f, const QuotientPresentation& pres) {
  const RingPtr& ring = pres.ring();
  int ambient = krull_dimension(Ideal(ring), pres);
  int cut = krull_dimension(Ideal(ring, f), pres);
  return cut == ambient - static_cast<int>(f.size());
}

FPureCIReport fpure_ci_certificate(const std::vector<Polynomial>& f, std::uint64_t e_max,
                                   const EnumerationLimits& limits) {
  if (f.empty()) throw Error(ErrorKind::BadInput, "empty sequence");
  const RingPtr& ring = f.front().ring();
  std::vector<Ideal> entries;
  for (const auto& g : f) entries.emplace_back(ring, std::vector<Polynomial>{g});
  QuotientPresentation pres(ring);
  Instance inst(IdealSeq(std::move(entries)), PFamily::frobenius_of(Ideal::maximal_at_origin(ring)),
                pres, limits);

  FPureCIReport report{f_volume_estimates(inst, 1, e_max), {}, check_sop(f, pres), std::nullopt};
  for (std::uint64_t e = 1; e <= e_max; ++e) report.fedder.push_back(fedder_ci_test(f, e));
  bool all_one = std::all_of(report.volume.rows.begin(), report.volume.rows.end(),
                             [](const EstimateRow& r) { return r.value == 1; });
  if (all_one && !report.fedder.empty() && report.fedder.back() && report.sop) {
    report.label = "F-pure complete intersection (verified to level " + std::to_string(e_max) + ")";
    report.volume.label = report.label;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Checkers

std::string point_to_string(const Point& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(a[i]);
  }
  return out + ")";
}

std::string CheckReport::to_json() const {
  ordered_json j;
  j["name"] = name;
  j["levels"] = levels;
  j["relation"] = relation;
  j["left"] = rational_json(left);
  j["right"] = rational_json(right);
  j["verdict"] = verdict;
  j["diagnostic"] = diagnostic;
  if (witness) j["witness"] = *witness;
  if (!detail.empty()) j["detail"] = detail;
  if (!grid.empty()) {
    ordered_json cells = ordered_json::array();
    for (const auto& c : grid) {
      ordered_json cell{{"e", c.e}, {"inner", c.inner}};
      cell.update(rational_json(c.value));
      cells.push_back(std::move(cell));
    }
    j["grid"] = std::move(cells);
  }
  return j.dump(2);
}

CheckReport check_frob_shift(Instance& inst, std::uint64_t e) {
  require_frobenius(inst, "frob_shift");
  CheckReport r = make_report("frob_shift", {e}, "=");
  Instance shifted =
      with_reference(inst, frobenius_power(inst.family().base(), inst.p()), inst.limits());
  DownSet a = shifted.enumerate_v(e);
  DownSet b = inst.enumerate_v(e + 1);
  r.left = a.cardinality();
  r.right = b.cardinality();
  r.verdict = a == b;
  if (!r.verdict) r.witness = point_to_string(*first_difference(a, b));
  r.detail = "|V^{J^[p]}(p^e)| against |V^J(p^{e+1})|";
  return r;
}

CheckReport check_containment_monotone(Instance& inst, const Ideal& larger, std::uint64_t e) {
  require_frobenius(inst, "containment_monotone");
  if (!ideal_contains(inst.family().base(), larger, inst.presentation())) {
    throw Error(ErrorKind::HypothesisViolated,
                "J " + inst.family().base().to_string() + " is not contained in " + larger.to_string());
  }
  CheckReport r = make_report("containment_monotone", {e}, "subset");
  Instance big = with_reference(inst, larger, inst.limits());
  DownSet a = big.enumerate_v(e);
  DownSet b = inst.enumerate_v(e);
  r.left = a.cardinality();
  r.right = b.cardinality();
  r.verdict = a.subset_of(b);
  if (!r.verdict) {
    for (const auto& x : a.points()) {
      if (!b.contains(x)) {
        r.witness = point_to_string(x);
        break;
      }
    }
  }
  r.detail = "V^a(p^e) inside V^J(p^e) for a = " + larger.to_string();
  return r;
}

CheckReport check_slice_bound(Instance& inst, std::uint64_t e) {
  const std::size_t t = inst.t();
  CheckReport r = make_report("slice_bound", {e}, "subset");
  DownSet V = inst.enumerate_v(e);
  std::uint64_t nu_last = nu_of_entry(inst, t - 1, e);
  std::optional<DownSet> head;
  Integer head_size = 1;
  if (t > 1) {
    std::vector<Ideal> first(inst.seq().entries().begin(), inst.seq().entries().end() - 1);
    Instance prefix(IdealSeq(std::move(first)), inst.family(), inst.presentation(), inst.limits());
    head = prefix.enumerate_v(e);
    head_size = head->cardinality();
  }
  r.left = V.cardinality();
  r.right = head_size * (Integer(nu_last) + 1);
  for (const auto& [prefix, top] : V.columns()) {
    if (top > nu_last || (head && !head->contains(prefix))) {
      Point a = prefix;
      a.push_back(top);
      r.verdict = false;
      r.witness = point_to_string(a);
      break;
    }
  }
  r.detail = "nu of the last entry = " + std::to_string(nu_last);
  return r;
}

CheckReport check_simplex_bound(Instance& inst, std::uint64_t e) {
  const std::size_t t = inst.t();
  CheckReport r = make_report("simplex_bound", {e}, "<=");
  DownSet V = inst.enumerate_v(e);
  std::uint64_t nu_sum = nu_of_sum(inst, e);
  Integer q = integer_pow(inst.p(), e);
  r.left = ratio(V.count_positive(), integer_pow(inst.p(), e * t));
  r.right = rational_power(ratio(Integer(nu_sum), q), t) / Rational(factorial(t));
  r.verdict = r.left <= r.right;
  r.detail = "nu of the sum = " + std::to_string(nu_sum);
  if (!r.verdict) r.witness = "|V~| = " + V.count_positive().get_str() + ", " + r.detail;
  return r;
}

CheckReport check_sup_identity(Instance& inst, std::uint64_t e) {
  CheckReport r = make_report("sup_identity", {e}, "=");
  DownSet V = inst.enumerate_v(e);
  std::uint64_t nu_sum = nu_of_sum(inst, e);
  std::uint64_t top = V.max_coordinate_sum();
  r.left = Integer(nu_sum);
  r.right = Integer(top);
  r.verdict = nu_sum == top;
  if (!r.verdict) {
    for (const auto& a : V.maximal_points()) {
      std::uint64_t s = 0;
      for (auto v : a) s += v;
      if (s == top) {
        r.witness = point_to_string(a);
        break;
      }
    }
  }
  return r;
}

CheckReport check_union_decomposition(const IdealSeq& seq, const std::vector<Ideal>& parts,
                                      const QuotientPresentation& pres, std::uint64_t e,
                                      const EnumerationLimits& limits) {
  if (!pres.is_trivial()) {
    throw Error(ErrorKind::HypothesisViolated, "union_decomposition needs a polynomial ring");
  }
  if (parts.empty()) throw Error(ErrorKind::BadInput, "union_decomposition needs at least one ideal");
  Ideal J = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) J = ideal_intersection(J, parts[i]);

  CheckReport r = make_report("union_decomposition", {e}, "=");
  Instance whole(seq, PFamily::frobenius_of(J), pres, limits);
  DownSet V = whole.enumerate_v(e);
  std::set<Point> joined;
  for (const auto& part : parts) {
    Instance piece(seq, PFamily::frobenius_of(part), pres, limits);
    for (auto& a : piece.enumerate_v(e).points()) joined.insert(std::move(a));
  }
  std::vector<Point> all = V.points();
  std::set<Point> mine(all.begin(), all.end());
  r.left = V.cardinality();
  r.right = Integer(joined.size());
  r.verdict = mine == joined;
  if (!r.verdict) {
    for (const auto& a : mine) {
      if (!joined.count(a)) {
        r.witness = point_to_string(a);
        break;
      }
    }
    if (!r.witness) {
      for (const auto& a : joined) {
        if (!mine.count(a)) {
          r.witness = point_to_string(a);
          break;
        }
      }
    }
  }
  r.detail = "J = " + J.to_string();
  return r;
}

CheckReport check_hk_length_ineq(Instance& inst, std::uint64_t e) {
  require_frobenius(inst, "hk_length_ineq");
  if (!inst.seq().principal()) {
    throw Error(ErrorKind::HypothesisViolated, "hk_length_ineq needs a sequence of elements");
  }
  CheckReport r = make_report("hk_length_ineq", {e}, "<=");
  Integer lambda_j = standard_monomial_count(inst.basis(e)).value();
  DownSet V = inst.enumerate_v(e);
  Ideal Jq = frobenius_power(inst.family().base(), prime_power(inst.p(), e));
  Integer lambda_i = standard_monomial_count(ideal_sum(inst.seq().sum(), Jq), inst.presentation()).value();
  r.left = lambda_j;
  r.right = V.cardinality() * lambda_i;
  r.verdict = r.left <= r.right;
  r.detail = "|V| = " + V.cardinality().get_str() + ", length of R/(I + J^[q]) = " + lambda_i.get_str();
  if (!r.verdict) r.witness = r.detail;
  return r;
}

CheckReport check_remark47_bound(Instance& inst, std::uint64_t e, std::uint64_t e1,
                                 std::uint64_t e2) {
  const std::size_t t = inst.t();
  const std::uint64_t p = inst.p();
  CheckReport r = make_report("remark47_bound", {e, e1, e2}, "<=");

  EnumerationLimits limits = inst.limits();
  for (std::size_t n = 0; n < t; ++n) {
    limits.ell_cap = std::max(limits.ell_cap, checked_mul(inst.mu()[n] * inst.ell()[n], prime_power(p, e)));
  }
  Instance fixed = with_reference(inst, inst.family().level(e), limits);
  DownSet fine = fixed.enumerate_v(e1 + e2);
  DownSet coarse = fixed.enumerate_v(e1);

  std::uint64_t mu = inst.mu_max();
  Integer sum_e = 0, sum_0 = 0;
  for (std::size_t n = 0; n < t; ++n) {
    Integer prod_e = 1, prod_0 = 1;
    for (std::size_t j = 0; j < t; ++j) {
      if (j == n) continue;
      prod_e *= Integer(fixed.mu()[j]) * Integer(fixed.ell()[j]) + 1;
      prod_0 *= Integer(inst.mu()[j]) * Integer(inst.mu()[j]) * Integer(inst.ell()[j]) + 1;
    }
    sum_e += prod_e;
    sum_0 += prod_0;
  }
  Integer u = Integer(mu + 1) * sum_0;
  Rational base = ratio(coarse.count_positive(), integer_pow(p, e1 * t));
  Rational middle = base + ratio(Integer(mu + 1) * sum_e, integer_pow(p, e1));
  r.left = ratio(fine.count_positive(), integer_pow(p, (e1 + e2) * t));
  r.right = base + ratio(integer_pow(p, e * (t - 1)) * u, integer_pow(p, e1));
  r.verdict = r.left <= middle && middle <= r.right;
  r.detail = "intermediate bound " + middle.get_str() + ", u = " + u.get_str();
  if (!r.verdict) r.witness = "left " + r.left.get_str() + ", " + r.detail;
  return r;
}

CheckReport check_comparison_bounds(Instance& inst, std::uint64_t e) {
  const std::size_t t = inst.t();
  CheckReport r = make_report("comparison_bounds", {e}, "<=");
  DownSet V = inst.enumerate_v(e);
  Integer q = integer_pow(inst.p(), e);
  Rational simplex = rational_power(ratio(Integer(nu_of_sum(inst, e)), q), t) / Rational(factorial(t));
  Rational product = 1;
  for (std::size_t n = 0; n < t; ++n) product *= ratio(Integer(nu_of_entry(inst, n, e)) + 1, q);
  r.left = ratio(V.count_positive(), integer_pow(inst.p(), e * t));
  r.right = std::min(simplex, product);
  r.verdict = r.left <= r.right;
  r.detail = "simplex " + simplex.get_str() + ", product " + product.get_str();
  if (!r.verdict) r.witness = r.detail;
  return r;
}

CheckReport check_cover(Instance& inst, std::uint64_t e1, std::uint64_t e2) {
  CheckReport r = make_report("verify_cover", {e1, e2}, "subset");
  CoveringSets sets = covering_sets(inst, e1, e2);
  DownSet fine = inst.enumerate_v(e1 + e2);
  ScaledPointSet cover = sets.r_set;
  cover.insert_all(sets.l_set);
  r.left = fine.cardinality();
  r.right = Integer(cover.size());
  for (const auto& y : fine.points()) {
    if (!cover.contains(y)) {
      r.verdict = false;
      r.witness = point_to_string(y);
      break;
    }
  }
  Integer border_bound = border_injection_bound(inst, e1);
  if (Integer(sets.border.size()) > border_bound) {
    r.verdict = false;
    if (!r.witness) r.witness = "border has " + std::to_string(sets.border.size()) + " points";
  }
  r.detail = "border " + std::to_string(sets.border.size()) + " <= " + border_bound.get_str();
  return r;
}

CheckReport pfamily_truncation(Instance& inst, const std::vector<std::uint64_t>& outer,
                               const std::vector<std::uint64_t>& inner) {
  const std::size_t t = inst.t();
  const std::uint64_t p = inst.p();
  CheckReport r = make_report("pfamily_truncation", outer, "diagnostic");
  r.diagnostic = true;
  for (std::uint64_t e : outer) {
    EnumerationLimits limits = inst.limits();
    for (std::size_t n = 0; n < t; ++n) {
      limits.ell_cap =
          std::max(limits.ell_cap, checked_mul(inst.mu()[n] * inst.ell()[n], prime_power(p, e)));
    }
    Instance fixed = with_reference(inst, inst.family().level(e), limits);
    for (std::uint64_t k : inner) {
      DownSet V = fixed.enumerate_v(k);
      r.grid.push_back({e, k, ratio(V.cardinality(), integer_pow(p, (k + e) * t))});
    }
  }
  if (!r.grid.empty()) {
    r.left = r.grid.back().value;
    r.right = r.grid.back().value;
  }
  r.detail = "no convergence claim";
  return r;
}

}  // namespace fvol
