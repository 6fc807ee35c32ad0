// Acceptance suite: one PASS/FAIL line per criterion. All numeric comparisons
// are exact rational equalities or inequalities; the only tolerances are the
// wall-clock limits below.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fvol/cli.hpp"
#include "fvol/invariants.hpp"
#include "support/region_oracles.hpp"
#include "support/test_support.hpp"

using namespace fvol;
using namespace fvol::testing;
namespace fs = std::filesystem;

namespace {

constexpr double kExampleSeconds = 10.0;
constexpr double kCompleteIntersectionSeconds = 10.0;
constexpr double kCheckerSeconds = 300.0;
constexpr double kHilbertKunzSeconds = 1.0;
constexpr double kOracleSeconds = 120.0;
constexpr int kOracleInstances = 50;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Suite {
 public:
  void run(int id, const std::string& title, double limit, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = body();
    } catch (const std::exception& err) {
      out = {false, std::string("exception: ") + err.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0 && seconds > limit) {
      out.pass = false;
      out.detail += "; over the " + format(limit) + " s limit";
    }
    all_pass_ = all_pass_ && out.pass;
    std::cout << (out.pass ? "PASS" : "FAIL") << "  " << id << ". " << title << ": " << out.detail
              << " (" << format(seconds) << " s)" << std::endl;
  }

  bool all_pass() const { return all_pass_; }

 private:
  static std::string format(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
  }
  bool all_pass_ = true;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<fs::path> fixture_paths() {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(FVOL_FIXTURE_DIR)) {
    if (entry.path().extension() == ".fv") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational frac(long num, long den) { return make_rational(Integer(num), Integer(den)); }

// ---------------------------------------------------------------------------

Outcome example_reproduction() {
  auto r = standard_ring(2, 2);
  auto f = make_instance(r, {{"x"}, {"y^2"}}, {"x", "y"});
  auto g = make_instance(r, {{"x"}, {"y^2+x"}}, {"x", "y"});
  int bad = 0;
  for (std::uint64_t e = 1; e <= 6; ++e) {
    if (f.enumerate_v(e).cardinality() != integer_pow(2, 2 * e - 1)) ++bad;
    if (g.enumerate_v(e).cardinality() != 3 * integer_pow(2, 2 * e - 2)) ++bad;
  }
  for (const auto& row : f_volume_estimates(f, 1, 6).rows) bad += row.value != frac(1, 2);
  for (const auto& row : f_volume_estimates(g, 1, 6).rows) bad += row.value != frac(3, 4);
  return {bad == 0, "|V_f| = 2^(2e-1), |V_g| = 3*2^(2e-2), rows 1/2 and 3/4 for e = 1..6; " +
                        std::to_string(bad) + " mismatches"};
}

Outcome complete_intersection() {
  int bad = 0;
  std::string notes;
  for (std::uint64_t p : {2, 3}) {
    auto r = standard_ring(p, 2);
    FPureCIReport rep = fpure_ci_certificate({P(r, "x"), P(r, "y")}, 5);
    for (const auto& row : rep.volume.rows) bad += row.value != 1;
    for (bool b : rep.fedder) bad += !b;
    bad += !rep.sop;
    bad += rep.fedder.size() != 5;
    if (!rep.label) {
      ++bad;
    } else if (p == 2) {
      notes = "label \"" + *rep.label + "\"";
    }
  }
  auto r = standard_ring(2, 2);
  Instance sq(IdealSeq({make_ideal(r, {"x^2"})}), PFamily::frobenius_of(Ideal::maximal_at_origin(r)),
              QuotientPresentation(r));
  for (const auto& row : f_volume_estimates(sq, 1, 5).rows) bad += !(row.value < 1);
  bad += fedder_ci_test({P(r, "x^2")}, 1);
  return {bad == 0, "(x,y) over F_2 and F_3 rows = 1, Fedder and parameter tests hold, " + notes +
                        "; (x^2) rows < 1 and Fedder false; " + std::to_string(bad) + " mismatches"};
}

struct CheckerTally {
  std::map<std::string, std::pair<int, int>> runs;  // name -> (applicable, false)
  std::vector<std::string> failures;

  void record(const std::string& fixture, const std::function<CheckReport()>& fn, const std::string& name) {
    auto& slot = runs[name];
    ++slot.first;
    try {
      CheckReport r = fn();
      if (!r.verdict) {
        ++slot.second;
        failures.push_back(fixture + ": " + name + " witness " + r.witness.value_or("?"));
      }
    } catch (const std::exception& err) {
      ++slot.second;
      failures.push_back(fixture + ": " + name + " threw " + err.what());
    }
  }
};

Outcome theorem_checkers() {
  CheckerTally tally;
  std::set<std::uint64_t> primes;
  std::set<std::size_t> lengths;
  std::size_t count = 0;
  for (const auto& path : fixture_paths()) {
    ProblemSpec spec = parse_spec(slurp(path));
    Instance inst = spec.instance();
    const std::string name = path.stem().string();
    const bool frobenius = inst.family().is_frobenius();
    const bool polynomial_ring = inst.presentation().is_trivial();
    ++count;
    primes.insert(spec.p);
    lengths.insert(inst.t());

    for (std::uint64_t e = spec.e_min; e <= spec.e_max; ++e) {
      if (frobenius) {
        tally.record(name, [&] { return check_frob_shift(inst, e); }, "frob_shift");
        tally.record(
            name, [&] { return check_containment_monotone(inst, Ideal::maximal_at_origin(spec.ring), e); },
            "containment_monotone");
      }
      tally.record(name, [&] { return check_slice_bound(inst, e); }, "slice_bound");
      tally.record(name, [&] { return check_simplex_bound(inst, e); }, "simplex_bound");
      tally.record(name, [&] { return check_sup_identity(inst, e); }, "sup_identity");
      tally.record(name, [&] { return check_comparison_bounds(inst, e); }, "comparison_bounds");
      if (frobenius && polynomial_ring) {
        // m is prime, so the parts split its Frobenius power instead.
        std::vector<Ideal> parts;
        Ideal Jp = frobenius_power(*spec.J, spec.p);
        for (std::size_t i = 0; i < spec.ring->nvars(); ++i) {
          parts.push_back(ideal_sum(Jp, Ideal(spec.ring, {Polynomial::variable(spec.ring, i)})));
        }
        tally.record(
            name, [&] { return check_union_decomposition(inst.seq(), parts, inst.presentation(), e); },
            "union_decomposition");
      }
      if (frobenius && inst.seq().principal() && hk_length(inst.family().base(), 0, inst.presentation()).is_finite()) {
        tally.record(name, [&] { return check_hk_length_ineq(inst, e); }, "hk_length_ineq");
      }
    }
    for (std::uint64_t e : {0, 1}) {
      tally.record(name, [&] { return check_remark47_bound(inst, e, 1, 1); }, "remark47_bound");
    }
    tally.record(name, [&] { return check_cover(inst, 1, 1); }, "verify_cover");
    const bool has_level3 = frobenius || inst.family().max_level().value_or(0) >= 3;
    if (inst.t() <= 2 && has_level3) tally.record(name, [&] { return check_cover(inst, 1, 2); }, "verify_cover");
  }

  bool pass = tally.failures.empty() && count >= 12 && primes == std::set<std::uint64_t>{2, 3, 5} &&
              lengths == std::set<std::size_t>{1, 2, 3};
  std::string detail = std::to_string(count) + " fixtures;";
  for (const auto& [name, slot] : tally.runs) {
    detail += " " + name + " " + std::to_string(slot.first - slot.second) + "/" + std::to_string(slot.first);
    if (slot.first == 0) pass = false;
  }
  for (const char* required : {"frob_shift", "containment_monotone", "slice_bound", "simplex_bound",
                               "sup_identity", "union_decomposition", "hk_length_ineq", "remark47_bound",
                               "verify_cover"}) {
    if (!tally.runs.count(required)) pass = false;
  }
  if (!tally.failures.empty()) detail += "; first failure: " + tally.failures.front();
  return {pass, detail};
}

Outcome monotonicity() {
  int checked = 0;
  std::string bad;
  for (const auto& path : fixture_paths()) {
    ProblemSpec spec = parse_spec(slurp(path));
    if (spec.presentation || !spec.J) continue;
    Instance inst = spec.instance();
    EstimateTable t = f_volume_estimates(inst, spec.e_min, spec.e_max);
    ++checked;
    if (!t.tilde_nondecreasing.value_or(false)) bad += " " + path.stem().string();
  }
  auto r = standard_ring(2, 2);
  auto g = make_instance(r, {{"x"}, {"y^2+x"}}, {"x", "y"});
  EstimateTable tg = f_volume_estimates(g, 1, 3);
  bool exact = tg.tilde_rows.size() == 3 && tg.tilde_rows[0].value == 0 &&
               tg.tilde_rows[1].value == frac(5, 16) && tg.tilde_rows[2].value == frac(33, 64);
  return {bad.empty() && exact && checked > 0,
          std::to_string(checked) + " polynomial-ring fixtures nondecreasing" +
              (bad.empty() ? "" : ", violations:" + bad) + "; g gives " + tg.tilde_rows[0].value.get_str() +
              ", " + tg.tilde_rows[1].value.get_str() + ", " + tg.tilde_rows[2].value.get_str()};
}

Outcome hilbert_kunz() {
  auto r = standard_ring(2, 2);
  QuotientPresentation pres(r);
  int bad = 0;
  for (std::uint64_t e = 0; e <= 8; ++e) {
    bad += hk_length(Ideal::maximal_at_origin(r), e, pres).value() != integer_pow(4, e);
  }
  auto x = make_instance(r, {{"x"}}, {"x", "y"});
  for (std::uint64_t e = 0; e <= 6; ++e) {
    CheckReport rep = check_hk_length_ineq(x, e);
    bad += !(rep.verdict && rep.left == rep.right);
  }
  return {bad == 0, "lengths 4^e for e <= 8; f=(x), J=m inequality is an equality for e <= 6; " +
                        std::to_string(bad) + " mismatches"};
}

Polynomial random_in_m(Random& rng, const RingPtr& ring, std::uint64_t max_degree) {
  std::vector<Monomial> monos;
  for (std::uint64_t d = 1; d <= max_degree; ++d) {
    auto layer = monomials_of_degree(ring->nvars(), d);
    monos.insert(monos.end(), layer.begin(), layer.end());
  }
  std::vector<std::pair<Monomial, std::int64_t>> terms;
  std::size_t count = rng.between(1, 2);
  for (std::size_t i = 0; i < count; ++i) {
    terms.emplace_back(monos[rng.below(monos.size())],
                       static_cast<std::int64_t>(rng.between(1, ring->characteristic() - 1)));
  }
  Polynomial f = Polynomial::from_terms(ring, terms);
  return f.is_zero() ? Polynomial::variable(ring, 0) : f;
}

Outcome oracle_equivalence() {
  Random rng(20240611);
  int membership = 0, membership_bad = 0, cells = 0, sets_bad = 0;
  for (int trial = 0; trial < kOracleInstances; ++trial) {
    const std::uint64_t p = rng.coin() ? 2 : 3;
    const std::size_t n = rng.between(1, 3);
    auto ring = standard_ring(p, n);

    // Homogeneous data, where the degree-bounded oracle is exact.
    std::vector<Polynomial> gens;
    std::size_t k = rng.between(1, 3);
    for (std::size_t i = 0; i < k; ++i) gens.push_back(random_homogeneous(rng, ring, rng.between(1, 3), 3));
    Ideal J(ring, gens);
    for (int probe = 0; probe < 6; ++probe) {
      std::uint64_t D = rng.between(1, 4);
      Polynomial f = random_homogeneous(rng, ring, D, 4);
      if (probe % 2 == 0) {
        f = Polynomial(ring);
        for (const auto& g : J.generators()) {
          if (g.total_degree() > D) continue;
          f = f + random_homogeneous(rng, ring, D - g.total_degree(), 3) * g;
        }
      }
      bool fast = ideal_contains(Ideal(ring, {f}), J);
      bool slow = linear_algebra_member(f, J.generators(), std::max<std::uint64_t>(D, 1));
      ++membership;
      membership_bad += fast != slow;
    }

    // V-sets against cell-by-cell membership over the coordinate-bound box.
    std::size_t t = rng.between(1, 2);
    std::vector<std::vector<std::string>> entries;
    std::vector<Ideal> ideals;
    for (std::size_t i = 0; i < t; ++i) {
      std::vector<Polynomial> eg{random_in_m(rng, ring, 3)};
      if (rng.below(4) == 0) eg.push_back(random_in_m(rng, ring, 2));
      ideals.emplace_back(ring, eg);
    }
    std::vector<Polynomial> jg;
    for (std::size_t i = 0; i < n; ++i) {
      Monomial m(n);
      m[i] = rng.between(1, 2);
      jg.push_back(Polynomial::term(ring, m, 1));
    }
    Instance inst(IdealSeq(ideals), PFamily::frobenius_of(Ideal(ring, jg)), QuotientPresentation(ring));
    for (std::uint64_t e = 0; e <= 2; ++e) {
      DownSet V = inst.enumerate_v(e);
      Point box;
      for (std::size_t i = 0; i < t; ++i) box.push_back(inst.coordinate_bound(i, e) + 1);
      auto oracle = exhaustive_v(inst.seq(), inst.family().level(e), inst.presentation(), box);
      std::uint64_t size = 1;
      for (auto b : box) size *= b;
      cells += static_cast<int>(size);
      if (!oracle.down_closed || !(V == DownSet::from_points(p, e, t, oracle.members))) ++sets_bad;
    }
  }
  return {membership_bad == 0 && sets_bad == 0,
          std::to_string(kOracleInstances) + " instances; " + std::to_string(membership) +
              " membership probes, " + std::to_string(membership_bad) + " disagreements; " +
              std::to_string(3 * kOracleInstances) + " V-sets over " + std::to_string(cells) + " cells, " +
              std::to_string(sets_bad) + " disagreements"};
}

struct ProcessResult {
  int status;
  std::string out;
};

ProcessResult capture(const std::string& cmd) {
  ProcessResult r{0, ""};
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return {-1, ""};
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  r.status = pclose(pipe);
  return r;
}

Outcome determinism() {
  fs::path dir = fs::temp_directory_path() / "fvol_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::vector<std::string> commands = {"vset --csv {}.csv", "volume --json {}.json", "threshold", "hk", "fedder",
                                       "staircase --svg {}.svg", "verify-cover --e1 1 --e2 1"};
  for (const auto& name : check_names()) commands.push_back("check " + name + " --e {e}");

  int runs = 0;
  std::vector<std::string> diffs;
  for (const auto& path : fixture_paths()) {
    ProblemSpec spec = parse_spec(slurp(path));
    for (std::size_t c = 0; c < commands.size(); ++c) {
      std::string outputs[2], files[2];
      int status[2];
      for (int round = 0; round < 2; ++round) {
        std::string stem = (dir / (path.stem().string() + "_" + std::to_string(c) + "_" + std::to_string(round))).string();
        std::string cmd = commands[c];
        for (std::size_t at; (at = cmd.find("{}")) != std::string::npos;) cmd.replace(at, 2, stem);
        for (std::size_t at; (at = cmd.find("{e}")) != std::string::npos;) cmd.replace(at, 3, std::to_string(spec.e_min));
        ProcessResult r = capture(std::string(FVOL_CLI_PATH) + " " + path.string() + " " + cmd);
        outputs[round] = r.out;
        status[round] = r.status;
        for (const char* ext : {".csv", ".json", ".svg"}) {
          if (fs::exists(stem + ext)) files[round] += slurp(stem + ext);
        }
        ++runs;
      }
      if (outputs[0] != outputs[1] || files[0] != files[1] || status[0] != status[1]) {
        diffs.push_back(path.stem().string() + " " + commands[c]);
      }
    }
  }
  fs::remove_all(dir);
  return {diffs.empty(), std::to_string(runs) + " process runs over " + std::to_string(fixture_paths().size()) +
                             " fixtures, " + std::to_string(diffs.size()) + " differing" +
                             (diffs.empty() ? "" : " (first: " + diffs.front() + ")")};
}

}  // namespace

int main() {
  Suite suite;
  suite.run(1, "worked example reproduction", kExampleSeconds, example_reproduction);
  suite.run(2, "F-pure complete intersection", kCompleteIntersectionSeconds, complete_intersection);
  suite.run(3, "theorem checkers on the fixture corpus", kCheckerSeconds, theorem_checkers);
  suite.run(4, "monotonicity of normalized V~ counts", 0, monotonicity);
  suite.run(5, "Hilbert-Kunz lengths", kHilbertKunzSeconds, hilbert_kunz);
  suite.run(6, "oracle equivalence", kOracleSeconds, oracle_equivalence);
  suite.run(7, "determinism of CLI outputs", 0, determinism);
  return suite.all_pass() ? 0 : 1;
}
