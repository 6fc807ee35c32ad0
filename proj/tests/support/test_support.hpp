#pragma once

// Shared helpers for the test binaries: a seeded random source, random
// polynomial generators and brute-force oracles that avoid Gröbner bases.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fvol/algebra.hpp"
#include "fvol/groebner.hpp"

namespace fvol::testing {

class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
  }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

inline RingPtr make_ring(std::uint64_t p, std::vector<std::string> vars,
                         OrderKind kind = OrderKind::Grevlex) {
  return Ring::make(PrimeModulus(p), std::move(vars), kind);
}

inline RingPtr standard_ring(std::uint64_t p, std::size_t n, OrderKind kind = OrderKind::Grevlex) {
  static const char* names[] = {"x", "y", "z", "u", "v", "w"};
  std::vector<std::string> vars(names, names + n);
  return make_ring(p, vars, kind);
}

inline Polynomial P(const RingPtr& ring, const std::string& text) {
  return parse_polynomial(text, ring);
}

inline Ideal make_ideal(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(parse_polynomial(g, ring));
  return Ideal(ring, std::move(out));
}

// All exponent vectors in n variables of total degree exactly d.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint64_t d) {
  std::vector<Monomial> out;
  Monomial m(n);
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
    if (i + 1 == n) {
      m[i] = left;
      out.push_back(m);
      return;
    }
    for (std::uint64_t a = 0; a <= left; ++a) {
      m[i] = a;
      self(self, i + 1, left - a);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back(m);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

inline std::vector<Monomial> monomials_up_to(std::size_t n, std::uint64_t d) {
  std::vector<Monomial> out;
  for (std::uint64_t k = 0; k <= d; ++k) {
    auto layer = monomials_of_degree(n, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

inline Polynomial random_polynomial(Random& rng, const RingPtr& ring, std::uint64_t max_degree,
                                    std::size_t max_terms) {
  auto monos = monomials_up_to(ring->nvars(), max_degree);
  std::vector<std::pair<Monomial, std::int64_t>> terms;
  std::size_t count = rng.between(1, max_terms);
  for (std::size_t i = 0; i < count; ++i) {
    terms.emplace_back(monos[rng.below(monos.size())],
                       static_cast<std::int64_t>(rng.between(1, ring->characteristic() - 1)));
  }
  return Polynomial::from_terms(ring, terms);
}

inline Polynomial random_homogeneous(Random& rng, const RingPtr& ring, std::uint64_t degree,
                                     std::size_t max_terms) {
  auto monos = monomials_of_degree(ring->nvars(), degree);
  std::vector<std::pair<Monomial, std::int64_t>> terms;
  std::size_t count = rng.between(1, max_terms);
  for (std::size_t i = 0; i < count; ++i) {
    terms.emplace_back(monos[rng.below(monos.size())],
                       static_cast<std::int64_t>(rng.between(1, ring->characteristic() - 1)));
  }
  return Polynomial::from_terms(ring, terms);
}

// Schoolbook product through an ordered map of exponent vectors; shares no
// code with Polynomial multiplication.
inline std::map<std::vector<Exponent>, std::uint64_t> convolve(const Polynomial& a,
                                                               const Polynomial& b) {
  const std::uint64_t p = a.ring()->characteristic();
  std::map<std::vector<Exponent>, std::uint64_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::vector<Exponent> m(a.ring()->nvars());
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = a.monomial(i)[k] + b.monomial(j)[k];
      auto& c = out[m];
      c = (c + std::uint64_t{a.coeff(i)} * b.coeff(j)) % p;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline std::map<std::vector<Exponent>, std::uint64_t> term_map(const Polynomial& f) {
  std::map<std::vector<Exponent>, std::uint64_t> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[std::vector<Exponent>(f.monomial(i).begin(), f.monomial(i).end())] = f.coeff(i);
  }
  return out;
}

// Solvability of A x = b over F_p, by Gaussian elimination on the augmented matrix.
inline bool solvable_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  if (rows.empty()) return true;
  const std::size_t cols = rows[0].size() - 1;
  auto inv = [p](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    std::uint64_t s = inv(rows[rank][c]);
    for (auto& v : rows[rank]) v = v * s % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      std::uint64_t f = rows[r][c];
      for (std::size_t k = 0; k <= cols; ++k) {
        rows[r][k] = (rows[r][k] + (p - f) * rows[rank][k]) % p;
      }
    }
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r][cols] != 0) return false;
  }
  return true;
}

// f ∈ (gens) witnessed by f = Σ h_i g_i with deg(h_i g_i) ≤ bound.
// Exact for homogeneous data once bound ≥ deg f.
inline bool linear_algebra_member(const Polynomial& f, const std::vector<Polynomial>& gens,
                                  std::uint64_t bound) {
  const RingPtr& ring = f.ring();
  const std::uint64_t p = ring->characteristic();
  const std::size_t n = ring->nvars();
  if (f.is_zero()) return true;
  std::map<std::vector<Exponent>, std::size_t> row_of;
  for (const auto& m : monomials_up_to(n, bound)) row_of.emplace(m.exponents(), row_of.size());
  if (f.total_degree() > bound) return false;

  std::vector<std::vector<std::uint64_t>> columns;
  for (const auto& g : gens) {
    if (g.is_zero() || g.total_degree() > bound) continue;
    for (const auto& h : monomials_up_to(n, bound - g.total_degree())) {
      std::vector<std::uint64_t> col(row_of.size(), 0);
      for (std::size_t i = 0; i < g.size(); ++i) {
        std::vector<Exponent> m(n);
        for (std::size_t k = 0; k < n; ++k) m[k] = g.monomial(i)[k] + h[k];
        col[row_of.at(m)] = g.coeff(i);
      }
      columns.push_back(std::move(col));
    }
  }
  std::vector<std::vector<std::uint64_t>> rows(row_of.size(),
                                               std::vector<std::uint64_t>(columns.size() + 1, 0));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < row_of.size(); ++r) rows[r][c] = columns[c][r];
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::vector<Exponent> m(f.monomial(i).begin(), f.monomial(i).end());
    rows[row_of.at(m)][columns.size()] = f.coeff(i);
  }
  return solvable_mod_p(std::move(rows), p);
}

// Whether a monomial lies in the monomial ideal generated by `gens`.
inline bool monomial_in(const std::vector<Exponent>& m, const std::vector<std::vector<Exponent>>& gens) {
  for (const auto& g : gens) {
    bool div = true;
    for (std::size_t k = 0; k < m.size() && div; ++k) div = g[k] <= m[k];
    if (div) return true;
  }
  return false;
}

}  // namespace fvol::testing
