#pragma once

// Brute-force V-set oracles: every cell of the bounding box is tested with
// explicit ideal products and a fresh Gröbner basis, with no spans or caches.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "fvol/regions.hpp"
#include "support/test_support.hpp"

namespace fvol::testing {

struct ExhaustiveResult {
  std::vector<Point> members;
  bool down_closed = true;
};

inline ExhaustiveResult exhaustive_v(const IdealSeq& seq, const Ideal& J_level,
                                     const QuotientPresentation& pres, const Point& box) {
  const std::size_t t = seq.size();
  std::vector<std::map<std::uint64_t, Ideal>> powers(t);
  auto power = [&](std::size_t n, std::uint64_t k) -> const Ideal& {
    auto it = powers[n].find(k);
    if (it != powers[n].end()) return it->second;
    return powers[n].emplace(k, ideal_power(seq[n], k)).first->second;
  };
  GroebnerBasis target = basis_with_presentation(J_level, pres);

  ExhaustiveResult out;
  std::map<Point, bool> seen;
  Point a(t, 0);
  while (true) {
    Ideal prod = power(0, a[0]);
    for (std::size_t n = 1; n < t; ++n) prod = ideal_product(prod, power(n, a[n]));
    bool inside = std::all_of(prod.generators().begin(), prod.generators().end(),
                              [&](const Polynomial& f) { return target.contains(f); });
    seen[a] = !inside;
    if (!inside) out.members.push_back(a);
    std::size_t k = 0;
    while (k < t && a[k] + 1 == box[k]) a[k++] = 0;
    if (k == t) break;
    ++a[k];
  }
  for (const auto& [pt, member] : seen) {
    if (!member) continue;
    for (std::size_t n = 0; n < t; ++n) {
      if (pt[n] == 0) continue;
      Point b = pt;
      --b[n];
      if (!seen.at(b)) out.down_closed = false;
    }
  }
  return out;
}

inline IdealSeq make_seq(const RingPtr& ring, const std::vector<std::vector<std::string>>& entries) {
  std::vector<Ideal> ideals;
  for (const auto& gens : entries) ideals.push_back(make_ideal(ring, gens));
  return IdealSeq(std::move(ideals));
}

inline Instance make_instance(const RingPtr& ring, const std::vector<std::vector<std::string>>& seq,
                              const std::vector<std::string>& J,
                              const std::vector<std::string>& present = {},
                              EnumerationLimits limits = {}) {
  QuotientPresentation pres = present.empty() ? QuotientPresentation(ring)
                                              : QuotientPresentation(make_ideal(ring, present));
  return Instance(make_seq(ring, seq), PFamily::frobenius_of(make_ideal(ring, J)), std::move(pres),
                  limits);
}

// |S| from the maximal points by inclusion-exclusion over all subsets.
inline Integer inclusion_exclusion_count(const std::vector<Point>& maximal) {
  const std::size_t k = maximal.size();
  Integer total = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    Point meet;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1)) continue;
      if (meet.empty()) {
        meet = maximal[i];
      } else {
        for (std::size_t j = 0; j < meet.size(); ++j) meet[j] = std::min(meet[j], maximal[i][j]);
      }
    }
    Integer box = 1;
    for (auto v : meet) box *= Integer(v) + 1;
    if (__builtin_popcountll(mask) % 2 == 1) {
      total += box;
    } else {
      total -= box;
    }
  }
  return total;
}

}  // namespace fvol::testing
