#include "fvol/groebner.hpp"

#include <algorithm>
#include <set>

namespace fvol {

// ---------------------------------------------------------------------------
// Ideals

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  gens_.reserve(generators.size());
  for (auto& g : generators) {
    require_same_ring(*ring_, *g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::maximal_at_origin(RingPtr ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(std::move(ring), std::move(vars));
}

Ideal Ideal::embed(const RingPtr& target, std::size_t offset) const {
  std::vector<Polynomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.embed(target, offset));
  return Ideal(target, std::move(out));
}

std::string Ideal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i != 0) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

const Integer& LengthValue::value() const {
  if (!value_) throw Error(ErrorKind::NotPrimary, "length is infinite");
  return *value_;
}

// ---------------------------------------------------------------------------
// Reduction

Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  const RingPtr& ring = f.ring();
  if (f.is_zero() || divisors.empty()) return f;
  const MonomialOrder& order = ring->order();
  const PrimeModulus& mod = ring->modulus();
  auto desc = [&order](const Monomial& a, const Monomial& b) {
    return order.compare(a.view(), b.view()) > 0;
  };
  std::map<Monomial, Coeff, decltype(desc)> work(desc);
  for (std::size_t i = 0; i < f.size(); ++i) work.emplace(Monomial(f.monomial(i)), f.coeff(i));

  TermCollector rem(ring);
  while (!work.empty()) {
    auto it = work.begin();
    const Polynomial* g = nullptr;
    for (const auto& d : divisors) {
      if (divides(d.leading_monomial(), it->first.view())) {
        g = &d;
        break;
      }
    }
    if (g == nullptr) {
      rem.add(it->first.view(), it->second);
      work.erase(it);
      continue;
    }
    Monomial shift = monomial_quotient(it->first.view(), g->leading_monomial());
    Coeff c = mod.neg(mod.mul(it->second, mod.inv(g->leading_coeff())));
    work.erase(it);
    for (std::size_t k = 1; k < g->size(); ++k) {
      auto [pos, inserted] = work.try_emplace(monomial_product(shift.view(), g->monomial(k)), 0);
      pos->second = mod.add(pos->second, mod.mul(c, g->coeff(k)));
      if (pos->second == 0) work.erase(pos);
    }
  }
  return rem.finish();
}

bool GroebnerBasis::is_unit() const noexcept {
  return basis_.size() == 1 && basis_[0].is_constant();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis_.size());
  for (const auto& g : basis_) out.emplace_back(g.leading_monomial());
  return out;
}

bool GroebnerBasis::in_monomial_ideal(MonomialView m) const {
  for (const auto& g : basis_) {
    if (divides(g.leading_monomial(), m)) return true;
  }
  return false;
}

void GroebnerBasis::finalize() {
  monomial_ = std::all_of(basis_.begin(), basis_.end(),
                          [](const Polynomial& g) { return g.is_monomial(); });
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  require_same_ring(*ring_, *f.ring());
  if (basis_.empty() || f.is_zero()) return f;
  if (is_unit()) return Polynomial(ring_);
  if (!monomial_) return reduce_by(f, basis_);
  TermCollector keep(ring_);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!in_monomial_ideal(f.monomial(i))) keep.add(f.monomial(i), f.coeff(i));
  }
  return keep.finish();
}

Polynomial GroebnerBasis::multiply_reduce(const Polynomial& a, const Polynomial& b) const {
  if (!monomial_) return normal_form(a * b);
  require_same_ring(*ring_, *a.ring());
  require_same_ring(*ring_, *b.ring());
  if (is_unit()) return Polynomial(ring_);
  const PrimeModulus& mod = ring_->modulus();
  TermCollector keep(ring_);
  Monomial m(ring_->nvars());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto x = a.monomial(i);
      auto y = b.monomial(j);
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = checked_add(x[k], y[k]);
      if (!in_monomial_ideal(m.view())) keep.add(m.view(), mod.mul(a.coeff(i), b.coeff(j)));
    }
  }
  return keep.finish();
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  return basis.normal_form(f);
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& lcm) {
  Monomial uf = monomial_quotient(lcm.view(), f.leading_monomial());
  Monomial ug = monomial_quotient(lcm.view(), g.leading_monomial());
  return f.mul_term(uf.view(), 1) - g.mul_term(ug.view(), 1);
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  const MonomialOrder& order = ring->order();
  GroebnerBasis out(ring);

  std::vector<Polynomial> G;
  std::vector<CriticalPair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  bool unit = false;

  auto add = [&](Polynomial h) {
    h = h.monic();
    if (h.is_constant()) unit = true;
    const std::size_t k = G.size();
    G.push_back(std::move(h));
    for (std::size_t i = 0; i < k; ++i) {
      pairs.push_back({i, k, monomial_lcm(G[i].leading_monomial(), G[k].leading_monomial())});
      pending.emplace(i, k);
    }
  };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  for (const auto& g : ideal.generators()) {
    Polynomial h = reduce_by(g, G);
    if (!h.is_zero()) add(std::move(h));
    if (unit) break;
  }

  while (!unit && !pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      int c = order.compare(pairs[k].lcm.view(), pairs[best].lcm.view());
      if (c < 0 || (c == 0 && std::pair(pairs[k].i, pairs[k].j) <
                                  std::pair(pairs[best].i, pairs[best].j))) {
        best = k;
      }
    }
    CriticalPair pr = std::move(pairs[best]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    pending.erase({pr.i, pr.j});

    if (coprime(G[pr.i].leading_monomial(), G[pr.j].leading_monomial())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      chain = divides(G[k].leading_monomial(), pr.lcm.view()) && !is_pending(pr.i, k) &&
              !is_pending(pr.j, k);
    }
    if (chain) continue;

    Polynomial h = reduce_by(s_polynomial(G[pr.i], G[pr.j], pr.lcm), G);
    if (!h.is_zero()) add(std::move(h));
  }

  if (unit) {
    out.basis_.push_back(Polynomial::constant(ring, 1));
    out.finalize();
    return out;
  }

  std::vector<Polynomial> minimal;
  for (std::size_t a = 0; a < G.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < G.size() && !redundant; ++b) {
      if (a == b || !divides(G[b].leading_monomial(), G[a].leading_monomial())) continue;
      bool same = order.compare(G[b].leading_monomial(), G[a].leading_monomial()) == 0;
      redundant = !same || b < a;
    }
    if (!redundant) minimal.push_back(G[a]);
  }

  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b != a) others.push_back(minimal[b]);
    }
    out.basis_.push_back(reduce_by(minimal[a], others).monic());
  }
  std::sort(out.basis_.begin(), out.basis_.end(), [&order](const Polynomial& x, const Polynomial& y) {
    return order.compare(x.leading_monomial(), y.leading_monomial()) < 0;
  });
  out.finalize();
  return out;
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order) {
  RingPtr ring = ideal.ring()->with_order(order);
  return buchberger(ideal.embed(ring));
}

GroebnerBasis frobenius_image(const GroebnerBasis& basis, std::uint64_t q) {
  GroebnerBasis out(basis.ring_);
  if (basis.is_unit()) {
    out.basis_ = basis.basis_;
  } else {
    out.basis_.reserve(basis.basis_.size());
    for (const auto& g : basis.basis_) out.basis_.push_back(g.frobenius(q));
  }
  out.finalize();
  return out;
}

// ---------------------------------------------------------------------------
// Ideal operations

namespace {

std::vector<Polynomial> canonical_generators(std::vector<Polynomial> gens) {
  for (auto& g : gens) g = g.monic();
  std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    return compare_polynomials(a, b) < 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

std::string fresh_variable(const Ring& ring) {
  std::string name = "w";
  while (ring.index_of(name)) name += "_";
  return name;
}

}  // namespace

bool is_power_of(std::uint64_t q, std::uint64_t p) {
  if (q == 0 || p < 2) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), canonical_generators(std::move(gens)));
}

Ideal ideal_sum(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw Error(ErrorKind::BadInput, "sum of no ideals");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = ideal_sum(acc, ideals[i]);
  return acc;
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  std::vector<Polynomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), canonical_generators(std::move(gens)));
}

Ideal ideal_product(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw Error(ErrorKind::BadInput, "product of no ideals");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = ideal_product(acc, ideals[i]);
  return acc;
}

Ideal ideal_power(const Ideal& ideal, std::uint64_t exponent) {
  Ideal result = Ideal::unit(ideal.ring());
  Ideal base = ideal;
  while (exponent != 0) {
    if (exponent & 1) result = ideal_product(result, base);
    exponent >>= 1;
    if (exponent != 0) base = ideal_product(base, base);
  }
  return result;
}

Ideal frobenius_power(const Ideal& ideal, std::uint64_t q) {
  if (!is_power_of(q, ideal.ring()->characteristic())) {
    throw Error(ErrorKind::BadInput, std::to_string(q) + " is not a power of the characteristic");
  }
  std::vector<Polynomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(g.frobenius(q));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(ring);
  RingPtr big = ring->with_eliminated_prefix({fresh_variable(*ring)});
  Polynomial w = Polynomial::variable(big, 0);
  Polynomial one_minus_w = Polynomial::constant(big, 1) - w;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(w * f.embed(big, 1));
  for (const auto& g : b.generators()) gens.push_back(one_minus_w * g.embed(big, 1));
  GroebnerBasis basis = buchberger(Ideal(big, std::move(gens)));
  std::vector<Polynomial> kept;
  for (const auto& g : basis.elements()) {
    bool free_of_w = true;
    for (std::size_t i = 0; i < g.size() && free_of_w; ++i) free_of_w = g.monomial(i)[0] == 0;
    if (free_of_w) kept.push_back(g.project(ring, 1));
  }
  return Ideal(ring, canonical_generators(std::move(kept)));
}

GroebnerBasis basis_with_presentation(const Ideal& J, const QuotientPresentation& pres) {
  require_same_ring(*J.ring(), *pres.ring());
  if (pres.is_trivial()) return buchberger(J);
  return buchberger(ideal_sum(J, pres.ideal()));
}

bool ideal_contains(const Ideal& I, const Ideal& J, const QuotientPresentation& pres) {
  require_same_ring(*I.ring(), *J.ring());
  GroebnerBasis basis = basis_with_presentation(J, pres);
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [&](const Polynomial& f) { return basis.contains(f); });
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
  return ideal_contains(I, J, QuotientPresentation(J.ring()));
}

bool ideals_equal(const Ideal& a, const Ideal& b, const QuotientPresentation& pres) {
  return ideal_contains(a, b, pres) && ideal_contains(b, a, pres);
}

bool radical_membership(const Polynomial& f, const Ideal& J) {
  require_same_ring(*f.ring(), *J.ring());
  const RingPtr& ring = J.ring();
  RingPtr big = ring->with_eliminated_prefix({fresh_variable(*ring)});
  std::vector<Polynomial> gens;
  for (const auto& g : J.generators()) gens.push_back(g.embed(big, 1));
  Polynomial w = Polynomial::variable(big, 0);
  gens.push_back(Polynomial::constant(big, 1) - w * f.embed(big, 1));
  return buchberger(Ideal(big, std::move(gens))).is_unit();
}

// ---------------------------------------------------------------------------
// Lengths and dimension

namespace {

using ExponentRows = std::vector<std::vector<Exponent>>;

// Standard monomials of the monomial ideal generated by `gens`, in n
// variables; nullopt when infinite. Slices along the first variable.
std::optional<Integer> count_standard(const ExponentRows& gens, std::size_t n) {
  for (const auto& g : gens) {
    if (std::all_of(g.begin(), g.end(), [](Exponent e) { return e == 0; })) return Integer(0);
  }
  if (n == 0) return Integer(1);

  std::vector<Exponent> cuts;
  for (const auto& g : gens) cuts.push_back(g[0]);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto slice = [&](Exponent a) {
    ExponentRows s;
    for (const auto& g : gens) {
      if (g[0] <= a) s.emplace_back(g.begin() + 1, g.end());
    }
    return s;
  };

  Integer total = 0;
  Exponent lo = 0;
  for (Exponent hi : cuts) {
    if (hi > lo) {
      auto c = count_standard(slice(lo), n - 1);
      if (!c) return std::nullopt;
      total += Integer(hi - lo) * *c;
      lo = hi;
    }
  }
  auto tail = count_standard(slice(lo), n - 1);
  if (!tail || *tail != 0) return std::nullopt;
  return total;
}

}  // namespace

LengthValue standard_monomial_count(const GroebnerBasis& basis) {
  ExponentRows rows;
  for (const auto& m : basis.leading_monomials()) rows.push_back(m.exponents());
  auto c = count_standard(rows, basis.ring()->nvars());
  return c ? LengthValue::finite(*c) : LengthValue::infinite();
}

LengthValue standard_monomial_count(const Ideal& J, const QuotientPresentation& pres) {
  return standard_monomial_count(basis_with_presentation(J, pres));
}

int krull_dimension(const GroebnerBasis& basis) {
  if (basis.is_unit()) return -1;
  const std::size_t n = basis.ring()->nvars();
  if (n > 24) throw Error(ErrorKind::LimitExceeded, "dimension search limited to 24 variables");
  std::vector<std::uint32_t> supports;
  for (const auto& m : basis.leading_monomials()) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0) s |= 1u << i;
    }
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    int size = __builtin_popcount(set);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [set](std::uint32_t s) { return (s & ~set) == 0; });
    if (independent) best = size;
  }
  return best;
}

int krull_dimension(const Ideal& J, const QuotientPresentation& pres) {
  return krull_dimension(basis_with_presentation(J, pres));
}

// ---------------------------------------------------------------------------
// Spans

ReducedSpan ReducedSpan::of_unit(const GroebnerBasis& basis) {
  ReducedSpan span(basis);
  span.insert(basis.normal_form(Polynomial::constant(basis.ring(), 1)));
  return span;
}

ReducedSpan ReducedSpan::of_ideal(const Ideal& ideal, const GroebnerBasis& basis) {
  ReducedSpan span(basis);
  for (const auto& g : ideal.generators()) span.insert(basis.normal_form(g));
  return span;
}

void ReducedSpan::insert(Polynomial reduced) {
  while (!reduced.is_zero()) {
    auto it = by_lead_.find(Monomial(reduced.leading_monomial()));
    if (it == by_lead_.end()) break;
    const Polynomial& e = elems_[it->second];
    const PrimeModulus& mod = reduced.ring()->modulus();
    reduced = add_scaled(reduced, e, mod.neg(reduced.leading_coeff()));
  }
  if (reduced.is_zero()) return;
  reduced = reduced.monic();
  by_lead_.emplace(Monomial(reduced.leading_monomial()), elems_.size());
  elems_.push_back(std::move(reduced));
}

ReducedSpan ReducedSpan::times(const Ideal& ideal) const {
  ReducedSpan out(*basis_);
  for (const auto& s : elems_) {
    for (const auto& g : ideal.generators()) out.insert(basis_->multiply_reduce(s, g));
  }
  return out;
}

ReducedSpan ReducedSpan::times(const ReducedSpan& other) const {
  ReducedSpan out(*basis_);
  for (const auto& s : elems_) {
    for (const auto& t : other.elems_) out.insert(basis_->multiply_reduce(s, t));
  }
  return out;
}

bool ReducedSpan::product_nonzero(const ReducedSpan& other) const {
  for (const auto& s : elems_) {
    for (const auto& t : other.elems_) {
      if (!basis_->multiply_reduce(s, t).is_zero()) return true;
    }
  }
  return false;
}

std::uint64_t containment_exponent(const Ideal& I, const GroebnerBasis& target,
                                   std::uint64_t cap) {
  ReducedSpan span = ReducedSpan::of_unit(target);
  for (std::uint64_t l = 0; l <= cap; ++l) {
    if (span.empty()) return l;
    span = span.times(I);
  }
  throw Error(ErrorKind::LimitExceeded,
              "no power up to " + std::to_string(cap) + " of " + I.to_string() + " is contained");
}

// ---------------------------------------------------------------------------
// Power cache

PowerCache::PowerCache(Ideal ideal, const GroebnerBasis& basis)
    : ideal_(std::move(ideal)), basis_(&basis) {
  require_same_ring(*ideal_.ring(), *basis.ring());
  if (ideal_.is_principal()) {
    const std::uint64_t p = ideal_.ring()->characteristic();
    const Polynomial& f = ideal_.generators()[0];
    small_powers_.push_back(Polynomial::constant(ideal_.ring(), 1));
    for (std::uint64_t d = 1; d < p; ++d) small_powers_.push_back(small_powers_.back() * f);
  }
}

const ReducedSpan& PowerCache::square_power(std::size_t j) {
  if (squares_.empty()) squares_.push_back(ReducedSpan::of_ideal(ideal_, *basis_));
  while (squares_.size() <= j) {
    const ReducedSpan& last = squares_.back();
    squares_.push_back(last.empty() ? last : last.times(last));
  }
  return squares_[j];
}

const ReducedSpan& PowerCache::power(std::uint64_t k) {
  auto found = memo_.find(k);
  if (found != memo_.end()) return found->second;

  ReducedSpan result = ReducedSpan::of_unit(*basis_);
  if (ideal_.is_principal()) {
    const std::uint64_t p = ideal_.ring()->characteristic();
    Polynomial acc = basis_->normal_form(Polynomial::constant(ideal_.ring(), 1));
    std::uint64_t q = 1;
    for (std::uint64_t rest = k; rest != 0 && !acc.is_zero(); rest /= p) {
      std::uint64_t d = rest % p;
      if (d != 0) acc = basis_->multiply_reduce(acc, small_powers_[d].frobenius(q));
      if (rest / p != 0) q = checked_mul(q, p);
    }
    result = ReducedSpan(*basis_);
    result.insert(std::move(acc));
  } else if (ideal_.is_zero()) {
    if (k != 0) result = ReducedSpan(*basis_);
  } else {
    for (std::size_t j = 0; (k >> j) != 0 && !result.empty(); ++j) {
      if ((k >> j) & 1) result = result.times(square_power(j));
    }
  }
  return memo_.emplace(k, std::move(result)).first->second;
}

}  // namespace fvol
