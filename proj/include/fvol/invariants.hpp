#pragma once

// Numerical invariants (ν, F-threshold, F-volume and Hilbert-Kunz tables),
// the complete-intersection tests, and per-level checkers for the relations
// the invariants satisfy.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fvol/error.hpp"
#include "fvol/groebner.hpp"
#include "fvol/rational.hpp"
#include "fvol/regions.hpp"

namespace fvol {

enum class TableKind { Volume, Threshold, HilbertKunz };

std::string_view to_string(TableKind kind);

struct EstimateRow {
  std::uint64_t e;
  Rational value;
};

// |V| - |Ṽ| against Σ_i ∏_{j≠i} |V_{I_j}| at one level.
struct GapRow {
  std::uint64_t e;
  Integer gap;
  Integer bound;
};

struct EstimateTable {
  TableKind kind = TableKind::Volume;
  std::uint64_t p = 0;
  std::size_t t = 0;
  std::optional<int> d;

  std::vector<EstimateRow> rows;
  std::vector<EstimateRow> tilde_rows;
  std::vector<GapRow> gaps;

  // Set only when the Ṽ rows are required to be nondecreasing, i.e. over a
  // polynomial ring with a Frobenius family.
  std::optional<bool> tilde_nondecreasing;
  bool budget_exceeded = false;
  std::optional<std::string> label;

  // Last two rows equal. Says nothing about later levels.
  bool stabilized() const;
  std::string to_json() const;
};

class EstimateBudgetExceeded : public Error {
 public:
  EstimateBudgetExceeded(const std::string& message, EstimateTable partial)
      : Error(ErrorKind::BudgetExceeded, message), partial_(std::move(partial)) {}

  const EstimateTable& partial() const noexcept { return partial_; }

 private:
  EstimateTable partial_;
};

struct NuValue {
  std::uint64_t e;
  std::uint64_t nu;
};

// max{s : I^s ⊄ (target)}, given that I^bound ⊆ (target). Requires the
// target to be proper.
std::uint64_t nu_against(const Ideal& I, const GroebnerBasis& target, std::uint64_t bound);

// ν_I^J(p^e) in R/a.
NuValue nu(const Ideal& I, const Ideal& J, std::uint64_t e, const QuotientPresentation& pres,
           const EnumerationLimits& limits = {});

EstimateTable f_threshold_estimates(const Ideal& I, const Ideal& J, std::uint64_t e_min,
                                    std::uint64_t e_max, const QuotientPresentation& pres,
                                    const EnumerationLimits& limits = {});

EstimateTable f_volume_estimates(Instance& inst, std::uint64_t e_min, std::uint64_t e_max);

EstimateTable hk_estimates(const Ideal& J, std::uint64_t e_min, std::uint64_t e_max,
                           const QuotientPresentation& pres, std::optional<int> d = std::nullopt);

// λ(R/(J^{[p^e]} + a)).
LengthValue hk_length(const Ideal& J, std::uint64_t e, const QuotientPresentation& pres);

// (f_1 ⋯ f_t)^{p^e - 1} ∉ m^{[p^e]} with m the ideal of all variables.
// Throws HypothesisViolated when some f_i is not in m.
bool fedder_ci_test(const std::vector<Polynomial>& f, std::uint64_t e);

// dim R/(a + (f)) = dim R/a - t.
bool check_sop(const std::vector<Polynomial>& f, const QuotientPresentation& pres);

struct FPureCIReport {
  EstimateTable volume;
  std::vector<bool> fedder;  // one per level of the table
  bool sop = false;
  std::optional<std::string> label;
};

// Volume rows, Fedder test and parameter test for a sequence of elements
// against the ideal of all variables in a polynomial ring.
FPureCIReport fpure_ci_certificate(const std::vector<Polynomial>& f, std::uint64_t e_max,
                                   const EnumerationLimits& limits = {});

struct GridCell {
  std::uint64_t e;
  std::uint64_t inner;
  Rational value;
};

struct CheckReport {
  std::string name;
  std::vector<std::uint64_t> levels;
  Rational left;
  Rational right;
  std::string relation;
  bool verdict = true;
  std::optional<std::string> witness;
  std::string detail;
  bool diagnostic = false;
  std::vector<GridCell> grid;

  std::string to_json() const;
};

std::string point_to_string(const Point& a);

CheckReport check_frob_shift(Instance& inst, std::uint64_t e);
// `larger` must contain the reference ideal of the family.
CheckReport check_containment_monotone(Instance& inst, const Ideal& larger, std::uint64_t e);
CheckReport check_slice_bound(Instance& inst, std::uint64_t e);
CheckReport check_simplex_bound(Instance& inst, std::uint64_t e);
CheckReport check_sup_identity(Instance& inst, std::uint64_t e);
// The family's reference ideal is replaced by the intersection of `parts`.
CheckReport check_union_decomposition(const IdealSeq& seq, const std::vector<Ideal>& parts,
                                      const QuotientPresentation& pres, std::uint64_t e,
                                      const EnumerationLimits& limits = {});
CheckReport check_hk_length_ineq(Instance& inst, std::uint64_t e);
CheckReport check_remark47_bound(Instance& inst, std::uint64_t e, std::uint64_t e1,
                                 std::uint64_t e2);
CheckReport check_comparison_bounds(Instance& inst, std::uint64_t e);
CheckReport check_cover(Instance& inst, std::uint64_t e1, std::uint64_t e2);
CheckReport pfamily_truncation(Instance& inst, const std::vector<std::uint64_t>& outer,
                               const std::vector<std::uint64_t>& inner);

}  // namespace fvol
