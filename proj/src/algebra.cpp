#include "fvol/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace fvol {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "exponent overflow in addition");
  }
  return r;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "exponent overflow in multiplication");
  }
  return r;
}

// ---------------------------------------------------------------------------
// F_p

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw Error(ErrorKind::NonPrime, "modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  p_ = static_cast<Coeff>(p);
}

Coeff PrimeModulus::pow(Coeff a, std::uint64_t k) const noexcept {
  Coeff result = 1 % p_;
  Coeff base = a;
  while (k != 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Coeff PrimeModulus::inv(Coeff a) const {
  if (a % p_ == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_p");
  // Extended Euclid on (a, p).
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce(s0);
}

static void require_same_modulus(const FpElement& a, const FpElement& b) {
  if (!(a.modulus() == b.modulus())) {
    throw Error(ErrorKind::RingMismatch, "F_p elements with different moduli");
  }
}

FpElement FpElement::inverse() const {
  return FpElement(modulus_.inv(value_), modulus_);
}

FpElement operator+(const FpElement& a, const FpElement& b) {
  require_same_modulus(a, b);
  return FpElement(a.modulus_.add(a.value_, b.value_), a.modulus_);
}

FpElement operator-(const FpElement& a, const FpElement& b) {
  require_same_modulus(a, b);
  return FpElement(a.modulus_.sub(a.value_, b.value_), a.modulus_);
}

FpElement operator*(const FpElement& a, const FpElement& b) {
  require_same_modulus(a, b);
  return FpElement(a.modulus_.mul(a.value_, b.value_), a.modulus_);
}

FpElement fp_op(const FpElement& a, const FpElement& b, FpOp op) {
  switch (op) {
    case FpOp::Add: return a + b;
    case FpOp::Mul: return a * b;
    case FpOp::Inv: return a.inverse();
  }
  throw Error(ErrorKind::BadInput, "unknown F_p operation");
}

// ---------------------------------------------------------------------------
// Monomials and orders

Exponent Monomial::total_degree() const {
  Exponent d = 0;
  for (Exponent e : exps_) d = checked_add(d, e);
  return d;
}

bool divides(MonomialView a, MonomialView b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool coprime(MonomialView a, MonomialView b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

Monomial monomial_product(MonomialView a, MonomialView b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = checked_add(a[i], b[i]);
  return m;
}

Monomial monomial_lcm(MonomialView a, MonomialView b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

Monomial monomial_quotient(MonomialView b, MonomialView a) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = b[i] - a[i];
  return m;
}

namespace {

using Wide = unsigned __int128;

int compare_grevlex(MonomialView a, MonomialView b, std::size_t lo, std::size_t hi) {
  Wide da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(MonomialView a, MonomialView b) const noexcept {
  switch (kind_) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case OrderKind::Grevlex:
      return compare_grevlex(a, b, 0, nvars_);
    case OrderKind::Elimination: {
      int c = compare_grevlex(a, b, 0, block_);
      return c != 0 ? c : compare_grevlex(a, b, block_, nvars_);
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Rings

RingPtr Ring::make(PrimeModulus p, std::vector<std::string> vars, OrderKind kind) {
  const std::size_t n = vars.size();
  switch (kind) {
    case OrderKind::Lex: return make(p, std::move(vars), MonomialOrder::lex(n));
    case OrderKind::Grevlex: return make(p, std::move(vars), MonomialOrder::grevlex(n));
    case OrderKind::Elimination: break;
  }
  throw Error(ErrorKind::BadInput, "elimination orders need an explicit block size");
}

RingPtr Ring::make(PrimeModulus p, std::vector<std::string> vars, MonomialOrder order) {
  if (order.nvars() != vars.size()) {
    throw Error(ErrorKind::BadInput, "monomial order size does not match variable count");
  }
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (vars[i] == vars[j]) throw Error(ErrorKind::BadInput, "duplicate variable " + vars[i]);
    }
  }
  return RingPtr(new Ring(p, std::move(vars), order));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr Ring::with_order(MonomialOrder order) const { return make(p_, vars_, order); }

RingPtr Ring::with_eliminated_prefix(std::vector<std::string> extra) const {
  const std::size_t block = extra.size();
  for (const auto& v : vars_) extra.push_back(v);
  const std::size_t n = extra.size();
  return make(p_, std::move(extra), MonomialOrder::elimination(n, block));
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (&a != &b && !(a == b)) {
    throw Error(ErrorKind::RingMismatch, "operands live in different rings");
  }
}

// ---------------------------------------------------------------------------
// TermCollector

void TermCollector::reserve(std::size_t terms) {
  exps_.reserve(terms * ring_->nvars());
  coeffs_.reserve(terms);
}

void TermCollector::add(MonomialView m, Coeff c) {
  if (c == 0) return;
  exps_.insert(exps_.end(), m.begin(), m.end());
  coeffs_.push_back(c);
}

void TermCollector::add_product(MonomialView a, MonomialView b, Coeff c) {
  if (c == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) exps_.push_back(checked_add(a[i], b[i]));
  coeffs_.push_back(c);
}

Polynomial TermCollector::finish() {
  const std::size_t n = ring_->nvars();
  const std::size_t count = coeffs_.size();
  const MonomialOrder& order = ring_->order();
  const PrimeModulus& mod = ring_->modulus();
  auto mono = [&](std::size_t i) { return MonomialView(exps_.data() + i * n, n); };

  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    return order.compare(mono(i), mono(j)) > 0;
  });

  Polynomial out(ring_);
  out.exps_.reserve(exps_.size());
  out.coeffs_.reserve(count);
  std::size_t k = 0;
  while (k < count) {
    Coeff c = coeffs_[idx[k]];
    std::size_t j = k + 1;
    while (j < count && order.compare(mono(idx[j]), mono(idx[k])) == 0) {
      c = mod.add(c, coeffs_[idx[j]]);
      ++j;
    }
    if (c != 0) {
      auto m = mono(idx[k]);
      out.exps_.insert(out.exps_.end(), m.begin(), m.end());
      out.coeffs_.push_back(c);
    }
    k = j;
  }
  exps_.clear();
  coeffs_.clear();
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Coeff v = ring->modulus().reduce(c);
  Polynomial out(ring);
  if (v != 0) {
    out.exps_.assign(ring->nvars(), 0);
    out.coeffs_.push_back(v);
  }
  return out;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw Error(ErrorKind::BadInput, "variable index out of range");
  Monomial m(ring->nvars());
  m[index] = 1;
  return term(std::move(ring), m, 1);
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, Coeff c) {
  if (m.size() != ring->nvars()) throw Error(ErrorKind::RingMismatch, "monomial size mismatch");
  Polynomial out(ring);
  c %= ring->characteristic();
  if (c != 0) {
    out.exps_ = m.exponents();
    out.coeffs_.push_back(c);
  }
  return out;
}

Polynomial Polynomial::from_terms(RingPtr ring,
                                  const std::vector<std::pair<Monomial, std::int64_t>>& terms) {
  TermCollector collector(ring);
  collector.reserve(terms.size());
  for (const auto& [m, c] : terms) {
    if (m.size() != ring->nvars()) throw Error(ErrorKind::RingMismatch, "monomial size mismatch");
    collector.add(m.view(), ring->modulus().reduce(c));
  }
  return collector.finish();
}

bool Polynomial::is_constant() const noexcept {
  if (coeffs_.empty()) return true;
  if (coeffs_.size() != 1) return false;
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Exponent Polynomial::total_degree() const {
  Exponent best = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    Exponent d = 0;
    for (Exponent e : monomial(i)) d = checked_add(d, e);
    best = std::max(best, d);
  }
  return best;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  const PrimeModulus& mod = ring_->modulus();
  for (Coeff& c : out.coeffs_) c = mod.neg(c);
  return out;
}

Polynomial add_scaled(const Polynomial& a, const Polynomial& b, Coeff c) {
  require_same_ring(*a.ring_, *b.ring_);
  const PrimeModulus& mod = a.ring_->modulus();
  const MonomialOrder& order = a.ring_->order();
  c %= mod.value();
  if (c == 0 || b.is_zero()) return a;

  Polynomial out(a.ring_);
  out.exps_.reserve(a.exps_.size() + b.exps_.size());
  out.coeffs_.reserve(a.size() + b.size());
  auto push = [&](MonomialView m, Coeff v) {
    if (v == 0) return;
    out.exps_.insert(out.exps_.end(), m.begin(), m.end());
    out.coeffs_.push_back(v);
  };
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int cmp = order.compare(a.monomial(i), b.monomial(j));
    if (cmp > 0) {
      push(a.monomial(i), a.coeffs_[i]);
      ++i;
    } else if (cmp < 0) {
      push(b.monomial(j), mod.mul(c, b.coeffs_[j]));
      ++j;
    } else {
      push(a.monomial(i), mod.add(a.coeffs_[i], mod.mul(c, b.coeffs_[j])));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) push(a.monomial(i), a.coeffs_[i]);
  for (; j < b.size(); ++j) push(b.monomial(j), mod.mul(c, b.coeffs_[j]));
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add_scaled(a, b, 1); }

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return add_scaled(a, b, a.ring_->modulus().neg(1));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring_, *b.ring_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (a.is_monomial()) return b.mul_term(a.leading_monomial(), a.leading_coeff());
  if (b.is_monomial()) return a.mul_term(b.leading_monomial(), b.leading_coeff());
  const PrimeModulus& mod = a.ring_->modulus();
  TermCollector collector(a.ring_);
  collector.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      collector.add_product(a.monomial(i), b.monomial(j), mod.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return collector.finish();
}

Polynomial Polynomial::scaled(Coeff c) const {
  const PrimeModulus& mod = ring_->modulus();
  c %= mod.value();
  if (c == 0) return Polynomial(ring_);
  Polynomial out = *this;
  for (Coeff& v : out.coeffs_) v = mod.mul(v, c);
  return out;
}

Polynomial Polynomial::mul_term(MonomialView m, Coeff c) const {
  const PrimeModulus& mod = ring_->modulus();
  c %= mod.value();
  if (c == 0 || is_zero()) return Polynomial(ring_);
  // Multiplying by a monomial preserves the order of terms.
  Polynomial out(ring_);
  const std::size_t n = ring_->nvars();
  out.exps_.resize(exps_.size());
  out.coeffs_.resize(coeffs_.size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t k = 0; k < n; ++k) out.exps_[i * n + k] = checked_add(exps_[i * n + k], m[k]);
    out.coeffs_[i] = mod.mul(coeffs_[i], c);
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || coeffs_[0] == 1) return *this;
  return scaled(ring_->modulus().inv(coeffs_[0]));
}

Polynomial Polynomial::frobenius(std::uint64_t q) const {
  if (q == 0) throw Error(ErrorKind::BadInput, "frobenius exponent must be positive");
  Polynomial out = *this;
  // Scaling all exponents by q preserves every monomial order.
  for (Exponent& e : out.exps_) e = checked_mul(e, q);
  return out;
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  if (k == 0) return constant(ring_, 1);
  const std::uint64_t p = ring_->characteristic();
  std::uint64_t q = 1;
  while (k % p == 0) {
    k /= p;
    q = checked_mul(q, p);
  }
  Polynomial base = q == 1 ? *this : frobenius(q);
  Polynomial result = constant(ring_, 1);
  while (true) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k == 0) break;
    base = base * base;
  }
  return result;
}

Polynomial Polynomial::embed(const RingPtr& target, std::size_t offset) const {
  const std::size_t n = ring_->nvars();
  if (target->characteristic() != ring_->characteristic() || target->nvars() < offset + n) {
    throw Error(ErrorKind::RingMismatch, "cannot embed polynomial into target ring");
  }
  TermCollector collector(target);
  collector.reserve(size());
  Monomial m(target->nvars());
  for (std::size_t i = 0; i < size(); ++i) {
    auto src = monomial(i);
    for (std::size_t k = 0; k < n; ++k) m[offset + k] = src[k];
    collector.add(m.view(), coeffs_[i]);
  }
  return collector.finish();
}

Polynomial Polynomial::project(const RingPtr& target, std::size_t offset) const {
  const std::size_t n = ring_->nvars();
  const std::size_t tn = target->nvars();
  if (target->characteristic() != ring_->characteristic() || n < offset + tn) {
    throw Error(ErrorKind::RingMismatch, "cannot project polynomial onto target ring");
  }
  TermCollector collector(target);
  collector.reserve(size());
  Monomial m(tn);
  for (std::size_t i = 0; i < size(); ++i) {
    auto src = monomial(i);
    for (std::size_t k = 0; k < n; ++k) {
      if ((k < offset || k >= offset + tn) && src[k] != 0) {
        throw Error(ErrorKind::BadInput, "projection drops a variable that occurs");
      }
    }
    for (std::size_t k = 0; k < tn; ++k) m[k] = src[offset + k];
    collector.add(m.view(), coeffs_[i]);
  }
  return collector.finish();
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  const auto& vars = ring_->variables();
  for (std::size_t i = 0; i < size(); ++i) {
    if (i != 0) out << " + ";
    auto m = monomial(i);
    bool first = true;
    if (coeffs_[i] != 1 || std::all_of(m.begin(), m.end(), [](Exponent e) { return e == 0; })) {
      out << coeffs_[i];
      first = false;
    }
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      if (!first) out << '*';
      out << vars[k];
      if (m[k] != 1) out << '^' << m[k];
      first = false;
    }
  }
  return out.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
  return a.coeffs_ == b.coeffs_ && a.exps_ == b.exps_;
}

int compare_polynomials(const Polynomial& a, const Polynomial& b) {
  const MonomialOrder& order = a.ring()->order();
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    int c = order.compare(a.monomial(i), b.monomial(i));
    if (c != 0) return c;
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i) ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial result = expression();
    skip_space();
    if (pos_ != text_.size()) fail(ErrorKind::Syntax, "unexpected character");
    return result;
  }

 private:
  [[noreturn]] void fail(ErrorKind kind, const std::string& what) const {
    throw ParseError(kind, what + " at offset " + std::to_string(pos_) + " in '" +
                               std::string(text_) + "'",
                     pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial acc = signed_term();
    while (true) {
      if (accept('+')) {
        acc = acc + signed_term();
      } else if (accept('-')) {
        acc = acc - signed_term();
      } else {
        return acc;
      }
    }
  }

  Polynomial signed_term() {
    if (accept('-')) return -signed_term();
    if (accept('+')) return signed_term();
    return product();
  }

  Polynomial product() {
    Polynomial acc = power();
    while (accept('*')) acc = acc * power();
    skip_space();
    if (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
        fail(ErrorKind::Syntax, "juxtaposition is not allowed; use '*'");
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail(ErrorKind::Syntax, "expected nonnegative integer exponent");
      }
      std::uint64_t k = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        k = checked_add(checked_mul(k, 10), static_cast<std::uint64_t>(text_[pos_] - '0'));
        ++pos_;
      }
      return base.pow(k);
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail(ErrorKind::Syntax, "unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail(ErrorKind::Syntax, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t p = ring_->characteristic();
      std::uint64_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = (v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0')) % p;
        ++pos_;
      }
      return Polynomial::constant(ring_, static_cast<std::int64_t>(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      auto index = ring_->index_of(name);
      if (!index) {
        pos_ = start;
        fail(ErrorKind::UnknownVariable, "unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, *index);
    }
    fail(ErrorKind::Syntax, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return PolyParser(text, ring).parse();
}

}  // namespace fvol
