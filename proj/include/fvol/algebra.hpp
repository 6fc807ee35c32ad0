#pragma once

// Exact arithmetic over the prime field F_p: field elements, monomials,
// monomial orders and sparse multivariate polynomials.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fvol/error.hpp"

namespace fvol {

using Exponent = std::uint64_t;
using Coeff = std::uint32_t;
using MonomialView = std::span<const Exponent>;

Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

class PrimeModulus {
 public:
  // Throws NonPrime unless 2 <= p < 2^31 and p is prime.
  explicit PrimeModulus(std::uint64_t p);

  Coeff value() const noexcept { return p_; }

  Coeff reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Coeff>(s >= p_ ? s - p_ : s);
  }
  Coeff sub(Coeff a, Coeff b) const noexcept {
    return a >= b ? a - b : static_cast<Coeff>(std::uint64_t{a} + p_ - b);
  }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>((std::uint64_t{a} * b) % p_);
  }
  Coeff pow(Coeff a, std::uint64_t k) const noexcept;
  // Throws DivisionByZero for a == 0.
  Coeff inv(Coeff a) const;

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  Coeff p_;
};

bool is_prime(std::uint64_t n);

class FpElement {
 public:
  FpElement(std::int64_t value, PrimeModulus modulus)
      : value_(modulus.reduce(value)), modulus_(modulus) {}

  Coeff value() const noexcept { return value_; }
  const PrimeModulus& modulus() const noexcept { return modulus_; }

  FpElement inverse() const;

  friend FpElement operator+(const FpElement& a, const FpElement& b);
  friend FpElement operator-(const FpElement& a, const FpElement& b);
  friend FpElement operator*(const FpElement& a, const FpElement& b);
  friend bool operator==(const FpElement&, const FpElement&) = default;

 private:
  Coeff value_;
  PrimeModulus modulus_;
};

enum class FpOp { Add, Mul, Inv };

// For Inv only `a` is used.
FpElement fp_op(const FpElement& a, const FpElement& b, FpOp op);

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  explicit Monomial(MonomialView v) : exps_(v.begin(), v.end()) {}

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  MonomialView view() const noexcept { return exps_; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  Exponent total_degree() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

bool divides(MonomialView a, MonomialView b);
bool coprime(MonomialView a, MonomialView b);
Monomial monomial_product(MonomialView a, MonomialView b);
Monomial monomial_lcm(MonomialView a, MonomialView b);
// b / a; requires divides(a, b).
Monomial monomial_quotient(MonomialView b, MonomialView a);

enum class OrderKind { Lex, Grevlex, Elimination };

// Elimination is a product order: the first `block` variables compared by
// grevlex, ties broken by grevlex on the remaining variables.
class MonomialOrder {
 public:
  static MonomialOrder lex(std::size_t nvars) { return {OrderKind::Lex, nvars, 0}; }
  static MonomialOrder grevlex(std::size_t nvars) { return {OrderKind::Grevlex, nvars, 0}; }
  static MonomialOrder elimination(std::size_t nvars, std::size_t block) {
    return {OrderKind::Elimination, nvars, block};
  }

  OrderKind kind() const noexcept { return kind_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t block() const noexcept { return block_; }

  // Negative, zero or positive as a <, ==, > b.
  int compare(MonomialView a, MonomialView b) const noexcept;
  bool less(MonomialView a, MonomialView b) const noexcept { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(OrderKind kind, std::size_t nvars, std::size_t block)
      : kind_(kind), nvars_(nvars), block_(block) {}

  OrderKind kind_;
  std::size_t nvars_;
  std::size_t block_;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  static RingPtr make(PrimeModulus p, std::vector<std::string> vars,
                      OrderKind kind = OrderKind::Grevlex);
  static RingPtr make(PrimeModulus p, std::vector<std::string> vars, MonomialOrder order);

  const PrimeModulus& modulus() const noexcept { return p_; }
  Coeff characteristic() const noexcept { return p_.value(); }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  RingPtr with_order(MonomialOrder order) const;
  // New variables are placed first and eliminated by a block order.
  RingPtr with_eliminated_prefix(std::vector<std::string> extra) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(PrimeModulus p, std::vector<std::string> vars, MonomialOrder order)
      : p_(p), vars_(std::move(vars)), order_(order) {}

  PrimeModulus p_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

void require_same_ring(const Ring& a, const Ring& b);

// Sparse polynomial in canonical form: terms strictly descending in the
// ring's order, no zero coefficients. Exponents are stored flat, term-major.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, const Monomial& m, Coeff c);
  static Polynomial from_terms(RingPtr ring,
                               const std::vector<std::pair<Monomial, std::int64_t>>& terms);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return coeffs_.size() == 1; }

  MonomialView monomial(std::size_t i) const noexcept {
    const std::size_t n = ring_->nvars();
    return MonomialView(exps_.data() + i * n, n);
  }
  Coeff coeff(std::size_t i) const noexcept { return coeffs_[i]; }
  MonomialView leading_monomial() const noexcept { return monomial(0); }
  Coeff leading_coeff() const noexcept { return coeffs_[0]; }
  Exponent total_degree() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(Coeff c) const;
  Polynomial mul_term(MonomialView m, Coeff c) const;
  Polynomial monic() const;
  // f^k; the p-power part of k goes through frobenius().
  Polynomial pow(std::uint64_t k) const;
  // Substitutes x_i -> x_i^q. Equals f^q when q is a power of p.
  Polynomial frobenius(std::uint64_t q) const;

  // Variable i goes to variable offset + i of `target`.
  Polynomial embed(const RingPtr& target, std::size_t offset = 0) const;
  // Inverse of embed; throws BadInput if a dropped variable occurs.
  Polynomial project(const RingPtr& target, std::size_t offset) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  friend class TermCollector;
  friend Polynomial add_scaled(const Polynomial& a, const Polynomial& b, Coeff c);

  RingPtr ring_;
  std::vector<Exponent> exps_;
  std::vector<Coeff> coeffs_;
};

// a + c*b
Polynomial add_scaled(const Polynomial& a, const Polynomial& b, Coeff c);

// Total structural order on polynomials of one ring, used to sort generator
// lists deterministically.
int compare_polynomials(const Polynomial& a, const Polynomial& b);

// Gathers unsorted terms, then produces the canonical polynomial.
class TermCollector {
 public:
  explicit TermCollector(RingPtr ring) : ring_(std::move(ring)) {}

  void reserve(std::size_t terms);
  void add(MonomialView m, Coeff c);
  // Adds the product monomial a*b with coefficient c (checked exponents).
  void add_product(MonomialView a, MonomialView b, Coeff c);
  Polynomial finish();

 private:
  RingPtr ring_;
  std::vector<Exponent> exps_;
  std::vector<Coeff> coeffs_;
};

// Grammar: sums and differences of products of factors; a factor is an
// integer literal, a variable, or a parenthesised expression, optionally
// raised to a nonnegative integer power with '^'.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace fvol
