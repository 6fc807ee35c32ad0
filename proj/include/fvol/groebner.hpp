#pragma once

// Ideals, reduced Gröbner bases and the membership machinery built on them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fvol/algebra.hpp"
#include "fvol/rational.hpp"

namespace fvol {

class Ideal {
 public:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
  // Zero generators are dropped; all generators must live in `ring`.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal unit(RingPtr ring);
  static Ideal maximal_at_origin(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  // Length of the generator list; used wherever a generator count bound is needed.
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_principal() const noexcept { return gens_.size() == 1; }

  Ideal embed(const RingPtr& target, std::size_t offset = 0) const;
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

// Reduced, monic Gröbner basis sorted by ascending leading monomial.
class GroebnerBasis {
 public:
  explicit GroebnerBasis(RingPtr ring) : ring_(std::move(ring)) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& elements() const noexcept { return basis_; }
  bool is_unit() const noexcept;
  bool is_zero() const noexcept { return basis_.empty(); }
  // True when every element is a monomial.
  bool is_monomial() const noexcept { return monomial_; }
  std::vector<Monomial> leading_monomials() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  // normal_form(a * b), truncating products early when the basis is monomial.
  Polynomial multiply_reduce(const Polynomial& a, const Polynomial& b) const;

 private:
  friend GroebnerBasis buchberger(const Ideal& ideal);
  friend GroebnerBasis frobenius_image(const GroebnerBasis& basis, std::uint64_t q);

  bool in_monomial_ideal(MonomialView m) const;
  void finalize();

  RingPtr ring_;
  std::vector<Polynomial> basis_;
  bool monomial_ = true;
};

// Pairs are selected by the normal strategy; ties go to the lower index pair.
GroebnerBasis buchberger(const Ideal& ideal);
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order);

// Image of a reduced basis under x_i -> x_i^q. Frobenius commutes with
// S-polynomials and preserves every monomial order, so the image is the
// reduced basis of the Frobenius power.
GroebnerBasis frobenius_image(const GroebnerBasis& basis, std::uint64_t q);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

// Full reduction of f by an arbitrary divisor list (not necessarily a basis).
Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& divisors);

class QuotientPresentation {
 public:
  explicit QuotientPresentation(RingPtr ring) : ideal_(std::move(ring)) {}
  explicit QuotientPresentation(Ideal ideal) : ideal_(std::move(ideal)) {}

  const Ideal& ideal() const noexcept { return ideal_; }
  const RingPtr& ring() const noexcept { return ideal_.ring(); }
  bool is_trivial() const noexcept { return ideal_.is_zero(); }

 private:
  Ideal ideal_;
};

class LengthValue {
 public:
  static LengthValue finite(Integer value) { return LengthValue(std::move(value)); }
  static LengthValue infinite() { return LengthValue(); }

  bool is_finite() const noexcept { return value_.has_value(); }
  // Throws NotPrimary when infinite.
  const Integer& value() const;
  std::string to_string() const { return value_ ? value_->get_str() : "inf"; }

  friend bool operator==(const LengthValue&, const LengthValue&) = default;

 private:
  LengthValue() = default;
  explicit LengthValue(Integer v) : value_(std::move(v)) {}
  std::optional<Integer> value_;
};

bool is_power_of(std::uint64_t q, std::uint64_t p);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const std::vector<Ideal>& ideals);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_product(const std::vector<Ideal>& ideals);
Ideal ideal_power(const Ideal& ideal, std::uint64_t exponent);
// Throws BadInput unless q is a power of the characteristic.
Ideal frobenius_power(const Ideal& ideal, std::uint64_t q);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

// I ⊆ J in R/a.
bool ideal_contains(const Ideal& I, const Ideal& J, const QuotientPresentation& pres);
bool ideal_contains(const Ideal& I, const Ideal& J);
bool ideals_equal(const Ideal& a, const Ideal& b, const QuotientPresentation& pres);

// f ∈ √J, decided by 1 ∈ J + (1 - w f) in R[w].
bool radical_membership(const Polynomial& f, const Ideal& J);

LengthValue standard_monomial_count(const GroebnerBasis& basis);
LengthValue standard_monomial_count(const Ideal& J, const QuotientPresentation& pres);
// Returns -1 for the unit ideal.
int krull_dimension(const GroebnerBasis& basis);
int krull_dimension(const Ideal& J, const QuotientPresentation& pres);

// GB(J + a).
GroebnerBasis basis_with_presentation(const Ideal& J, const QuotientPresentation& pres);

// The F_p-span of normal forms modulo a fixed basis. A product of ideals is
// contained in the basis' ideal exactly when the span of the normal forms of
// its generators is zero, and spans multiply generator-wise.
class ReducedSpan {
 public:
  explicit ReducedSpan(const GroebnerBasis& basis) : basis_(&basis) {}

  static ReducedSpan of_unit(const GroebnerBasis& basis);
  static ReducedSpan of_ideal(const Ideal& ideal, const GroebnerBasis& basis);

  // `reduced` must already be in normal form.
  void insert(Polynomial reduced);

  bool empty() const noexcept { return elems_.empty(); }
  std::size_t size() const noexcept { return elems_.size(); }
  const std::vector<Polynomial>& elements() const noexcept { return elems_; }

  ReducedSpan times(const Ideal& ideal) const;
  ReducedSpan times(const ReducedSpan& other) const;
  // Whether the product span is nonzero, without building it.
  bool product_nonzero(const ReducedSpan& other) const;

 private:
  const GroebnerBasis* basis_;
  std::vector<Polynomial> elems_;
  std::map<Monomial, std::size_t> by_lead_;
};

// Smallest l with I^l ⊆ (ideal of `target`); LimitExceeded past `cap`.
std::uint64_t containment_exponent(const Ideal& I, const GroebnerBasis& target, std::uint64_t cap);

// Memoized powers I^k modulo a fixed basis. Principal ideals use the base-p
// digits of k: f^k = prod_j (f^{k_j})^{[p^j]}.
class PowerCache {
 public:
  PowerCache(Ideal ideal, const GroebnerBasis& basis);

  const ReducedSpan& power(std::uint64_t k);

 private:
  const ReducedSpan& square_power(std::size_t j);

  Ideal ideal_;
  const GroebnerBasis* basis_;
  std::map<std::uint64_t, ReducedSpan> memo_;
  std::vector<ReducedSpan> squares_;
  std::vector<Polynomial> small_powers_;
};

}  // namespace fvol
