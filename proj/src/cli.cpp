#include "fvol/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>

#include "json.hpp"

namespace fvol {

using ordered_json = nlohmann::ordered_json;

std::string SpecError::describe() const {
  return "line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " +
         std::string(to_string(kind())) + ": " + what();
}

// ---------------------------------------------------------------------------
// ProblemSpec

QuotientPresentation ProblemSpec::quotient() const {
  return presentation ? QuotientPresentation(*presentation) : QuotientPresentation(ring);
}

PFamily ProblemSpec::pfamily() const {
  if (J) return PFamily::frobenius_of(*J);
  if (family.empty()) throw Error(ErrorKind::BadInput, "spec has neither J nor a family");
  std::vector<Ideal> levels;
  for (const auto& [e, ideal] : family) levels.push_back(ideal);
  return PFamily::explicit_levels(std::move(levels), quotient());
}

EnumerationLimits ProblemSpec::limits() const {
  EnumerationLimits out;
  if (budget) out.budget = *budget;
  return out;
}

Instance ProblemSpec::instance() const {
  if (seq.empty()) throw Error(ErrorKind::BadInput, "spec has no sequence");
  return Instance(IdealSeq(seq), pfamily(), quotient(), limits());
}

namespace {

std::string generator_list(const Ideal& I) {
  if (I.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < I.size(); ++i) {
    if (i) out += ", ";
    out += I.generators()[i].to_string();
  }
  return out;
}

bool same_generators(const Ideal& a, const Ideal& b) { return a.generators() == b.generators(); }

bool same_optional(const std::optional<Ideal>& a, const std::optional<Ideal>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || same_generators(*a, *b);
}

}  // namespace

std::string ProblemSpec::to_string() const {
  std::string out = "p=" + std::to_string(p) + "\nring ";
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (i) out += ",";
    out += variables[i];
  }
  out += "\n";
  if (presentation) out += "present: " + generator_list(*presentation) + "\n";
  if (J) out += "J: " + generator_list(*J) + "\n";
  for (const auto& [e, ideal] : family) {
    out += "family: e" + std::to_string(e) + ": " + generator_list(ideal) + "\n";
  }
  if (!seq.empty()) {
    out += "seq: ";
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i) out += "; ";
      out += generator_list(seq[i]);
    }
    out += "\n";
  }
  out += "e: " + std::to_string(e_min) + ".." + std::to_string(e_max) + "\n";
  if (budget) out += "budget=" + std::to_string(*budget) + "\n";
  return out;
}

bool operator==(const ProblemSpec& a, const ProblemSpec& b) {
  if (a.p != b.p || a.variables != b.variables || a.e_min != b.e_min || a.e_max != b.e_max ||
      a.budget != b.budget) {
    return false;
  }
  if ((a.ring == nullptr) != (b.ring == nullptr)) return false;
  if (a.ring && !(*a.ring == *b.ring)) return false;
  if (!same_optional(a.presentation, b.presentation) || !same_optional(a.J, b.J)) return false;
  if (a.family.size() != b.family.size() || a.seq.size() != b.seq.size()) return false;
  for (std::size_t i = 0; i < a.family.size(); ++i) {
    if (a.family[i].first != b.family[i].first) return false;
    if (!same_generators(a.family[i].second, b.family[i].second)) return false;
  }
  for (std::size_t i = 0; i < a.seq.size(); ++i) {
    if (!same_generators(a.seq[i], b.seq[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Piece {
  std::string_view text;
  std::size_t offset;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

Piece trim(Piece piece) {
  std::string_view s = piece.text;
  std::size_t start = 0;
  while (start < s.size() && is_space(s[start])) ++start;
  std::size_t end = s.size();
  while (end > start && is_space(s[end - 1])) --end;
  return {s.substr(start, end - start), piece.offset + start};
}

std::vector<Piece> split(Piece piece, char sep) {
  std::vector<Piece> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= piece.text.size(); ++i) {
    if (i == piece.text.size() || piece.text[i] == sep) {
      out.push_back(trim({piece.text.substr(start, i - start), piece.offset + start}));
      start = i + 1;
    }
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

class SpecParser {
 public:
  SpecParser(std::string_view text, OrderKind order) : text_(text), order_(order) {}

  ProblemSpec parse() {
    std::vector<Piece> statements;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text_.size(); ++i) {
      if (i == text_.size() || text_[i] == ';' || text_[i] == '\n') {
        statements.push_back(trim({text_.substr(start, i - start), start}));
        start = i + 1;
      } else if (text_[i] == '#') {
        statements.push_back(trim({text_.substr(start, i - start), start}));
        while (i < text_.size() && text_[i] != '\n') ++i;
        start = i + 1;
      }
    }
    bool in_seq = false;
    for (const auto& st : statements) {
      if (st.text.empty()) continue;
      in_seq = statement(st, in_seq);
    }
    finish();
    return std::move(spec_);
  }

 private:
  [[noreturn]] void fail(ErrorKind kind, const std::string& message, std::size_t offset) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw SpecError(kind, message, line, column);
  }

  // Returns whether the next bare statement continues a sequence.
  bool statement(Piece st, bool in_seq) {
    std::size_t i = 0;
    while (i < st.text.size() && (std::isalnum(static_cast<unsigned char>(st.text[i])) || st.text[i] == '_')) ++i;
    std::string_view word = st.text.substr(0, i);
    std::size_t j = i;
    while (j < st.text.size() && is_space(st.text[j])) ++j;
    char sep = j < st.text.size() ? st.text[j] : '\0';
    Piece rest = trim({st.text.substr(std::min(j + 1, st.text.size())), st.offset + j + 1});

    if (word == "p" && sep == '=') {
      set_p(rest);
    } else if (word == "ring" && i < st.text.size() && is_space(st.text[i])) {
      set_ring(trim({st.text.substr(i), st.offset + i}));
    } else if (word == "present" && sep == ':') {
      once(seen_present_, "present", st.offset);
      Ideal I = ideal_of(rest);
      if (!I.is_zero()) spec_.presentation = std::move(I);
    } else if (word == "J" && sep == ':') {
      once(seen_J_, "J", st.offset);
      spec_.J = ideal_of(rest);
      j_offset_ = st.offset;
    } else if (word == "family" && sep == ':') {
      family_level(rest);
    } else if (word == "seq" && sep == ':') {
      once(seen_seq_, "seq", st.offset);
      seq_entry(rest);
      return true;
    } else if (word == "e" && sep == ':') {
      levels(rest);
    } else if (word == "budget" && sep == '=') {
      spec_.budget = number(rest, "budget");
    } else if (in_seq) {
      seq_entry(st);
      return true;
    } else {
      fail(ErrorKind::Syntax, "unknown statement '" + std::string(st.text) + "'", st.offset);
    }
    return false;
  }

  void once(bool& flag, const std::string& what, std::size_t offset) {
    if (flag) fail(ErrorKind::Syntax, "duplicate '" + what + "' statement", offset);
    flag = true;
  }

  std::uint64_t number(Piece piece, const std::string& what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(piece.text.data(), piece.text.data() + piece.text.size(), value);
    if (piece.text.empty() || ec != std::errc() || ptr != piece.text.data() + piece.text.size()) {
      fail(ErrorKind::Syntax, "expected a nonnegative integer for " + what, piece.offset);
    }
    return value;
  }

  void set_p(Piece rest) {
    if (spec_.p != 0) fail(ErrorKind::Syntax, "duplicate 'p' statement", rest.offset);
    std::uint64_t p = number(rest, "p");
    try {
      PrimeModulus check(p);
    } catch (const Error& err) {
      fail(err.kind(), err.what(), rest.offset);
    }
    spec_.p = p;
  }

  void set_ring(Piece rest) {
    if (spec_.ring) fail(ErrorKind::Syntax, "duplicate 'ring' statement", rest.offset);
    if (spec_.p == 0) fail(ErrorKind::Syntax, "'p=' must come before 'ring'", rest.offset);
    std::set<std::string> seen;
    for (const auto& v : split(rest, ',')) {
      if (!is_identifier(v.text)) {
        fail(ErrorKind::Syntax, "bad variable name '" + std::string(v.text) + "'", v.offset);
      }
      if (!seen.insert(std::string(v.text)).second) {
        fail(ErrorKind::Syntax, "variable '" + std::string(v.text) + "' declared twice", v.offset);
      }
      spec_.variables.emplace_back(v.text);
    }
    spec_.ring = Ring::make(PrimeModulus(spec_.p), spec_.variables, order_);
  }

  Polynomial polynomial(Piece piece) {
    if (piece.text.empty()) fail(ErrorKind::Syntax, "empty polynomial", piece.offset);
    try {
      return parse_polynomial(piece.text, spec_.ring);
    } catch (const ParseError& err) {
      fail(err.kind(), err.what(), piece.offset + err.offset());
    } catch (const Error& err) {
      fail(err.kind(), err.what(), piece.offset);
    }
  }

  Ideal ideal_of(Piece list, std::vector<std::size_t>* offsets = nullptr) {
    if (!spec_.ring) fail(ErrorKind::Syntax, "'ring' must come before polynomials", list.offset);
    std::vector<Polynomial> gens;
    for (const auto& item : split(list, ',')) {
      Polynomial f = polynomial(item);
      if (f.is_zero()) continue;
      if (offsets) offsets->push_back(item.offset);
      gens.push_back(std::move(f));
    }
    return Ideal(spec_.ring, std::move(gens));
  }

  void family_level(Piece rest) {
    std::size_t colon = rest.text.find(':');
    if (rest.text.empty() || rest.text[0] != 'e' || colon == std::string_view::npos) {
      fail(ErrorKind::Syntax, "expected 'family: e<k>: <polynomials>'", rest.offset);
    }
    std::uint64_t k = number(trim({rest.text.substr(1, colon - 1), rest.offset + 1}), "family level");
    for (const auto& [level, ideal] : spec_.family) {
      if (level == k) fail(ErrorKind::Syntax, "family level e" + std::to_string(k) + " given twice", rest.offset);
    }
    spec_.family.emplace_back(k, ideal_of(trim({rest.text.substr(colon + 1), rest.offset + colon + 1})));
    if (!family_offset_) family_offset_ = rest.offset;
  }

  void seq_entry(Piece piece) {
    std::vector<std::size_t> offsets;
    Ideal I = ideal_of(piece, &offsets);
    if (I.is_zero()) fail(ErrorKind::BadInput, "sequence entries must be nonzero", piece.offset);
    spec_.seq.push_back(std::move(I));
    seq_offsets_.push_back(std::move(offsets));
  }

  void levels(Piece rest) {
    once(seen_levels_, "e", rest.offset);
    std::size_t dots = rest.text.find("..");
    if (dots == std::string_view::npos) {
      spec_.e_min = spec_.e_max = number(rest, "e");
      return;
    }
    spec_.e_min = number(trim({rest.text.substr(0, dots), rest.offset}), "e");
    spec_.e_max = number(trim({rest.text.substr(dots + 2), rest.offset + dots + 2}), "e");
    if (spec_.e_min > spec_.e_max) fail(ErrorKind::BadInput, "empty level range", rest.offset);
  }

  void finish() {
    if (spec_.p == 0) fail(ErrorKind::Syntax, "missing 'p=' statement", text_.size());
    if (!spec_.ring) fail(ErrorKind::Syntax, "missing 'ring' statement", text_.size());
    if (spec_.J && !spec_.family.empty()) {
      fail(ErrorKind::BadInput, "give either 'J:' or 'family:' lines, not both", *family_offset_);
    }
    std::sort(spec_.family.begin(), spec_.family.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < spec_.family.size(); ++i) {
      if (spec_.family[i].first != i) {
        fail(ErrorKind::BadInput, "family levels must run e0, e1, ... without gaps", *family_offset_);
      }
    }
    std::optional<Ideal> base;
    std::size_t base_offset = 0;
    if (spec_.J) {
      base = spec_.J;
      base_offset = j_offset_;
    } else if (!spec_.family.empty()) {
      base = spec_.family.front().second;
      base_offset = *family_offset_;
      try {
        spec_.pfamily();
      } catch (const Error& err) {
        fail(err.kind(), err.what(), base_offset);
      }
    }
    if (!base) return;
    QuotientPresentation pres = spec_.quotient();
    if (basis_with_presentation(*base, pres).is_unit()) {
      fail(ErrorKind::HypothesisViolated, "J " + base->to_string() + " is the unit ideal", base_offset);
    }
    Ideal radical_of = pres.is_trivial() ? *base : ideal_sum(*base, pres.ideal());
    for (std::size_t n = 0; n < spec_.seq.size(); ++n) {
      const auto& gens = spec_.seq[n].generators();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (!radical_membership(gens[k], radical_of)) {
          fail(ErrorKind::HypothesisViolated,
               "generator " + gens[k].to_string() + " of entry " + std::to_string(n + 1) +
                   " is not in the radical of " + base->to_string(),
               seq_offsets_[n][k]);
        }
      }
    }
  }

  std::string_view text_;
  OrderKind order_;
  ProblemSpec spec_;
  bool seen_present_ = false, seen_J_ = false, seen_seq_ = false, seen_levels_ = false;
  std::size_t j_offset_ = 0;
  std::optional<std::size_t> family_offset_;
  std::vector<std::vector<std::size_t>> seq_offsets_;
};

}  // namespace

ProblemSpec parse_spec(std::string_view text, OrderKind order) {
  return SpecParser(text, order).parse();
}

// ---------------------------------------------------------------------------
// Running commands

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::HypothesisViolated:
    case ErrorKind::NotPrimary:
      return exit_code::hypothesis;
    case ErrorKind::BudgetExceeded:
      return exit_code::budget;
    default:
      return exit_code::usage;
  }
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "frob_shift",      "containment_monotone", "slice_bound",    "simplex_bound",
      "sup_identity",    "union_decomposition",  "hk_length_ineq", "remark47_bound",
      "comparison_bounds", "verify_cover",       "pfamily_truncation"};
  return names;
}

namespace {

class Usage : public Error {
 public:
  explicit Usage(const std::string& message) : Error(ErrorKind::BadInput, message) {}
};

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Usage("cannot write " + path);
  out << contents;
}

std::vector<std::uint64_t> requested_levels(const ProblemSpec& spec, const RunOptions& opt) {
  if (opt.e) return {*opt.e};
  std::vector<std::uint64_t> out;
  for (std::uint64_t e = spec.e_min; e <= spec.e_max; ++e) out.push_back(e);
  return out;
}

Ideal parse_list(const ProblemSpec& spec, const std::string& text) {
  std::vector<Polynomial> gens;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      gens.push_back(parse_polynomial(std::string_view(text).substr(start, i - start), spec.ring));
      start = i + 1;
    }
  }
  return Ideal(spec.ring, std::move(gens));
}

const Ideal& reference_ideal(const ProblemSpec& spec, const std::string& command) {
  if (!spec.J) throw Usage(command + " needs a 'J:' statement");
  return *spec.J;
}

bool is_maximal_at_origin(const ProblemSpec& spec) {
  return spec.J && ideals_equal(*spec.J, Ideal::maximal_at_origin(spec.ring), QuotientPresentation(spec.ring));
}

std::string emit_json(const std::string& json, const RunOptions& opt) {
  std::string text = json + "\n";
  if (opt.json_path) write_file(*opt.json_path, text);
  return text;
}

RunResult cmd_vset(const ProblemSpec& spec, const RunOptions& opt) {
  Instance inst = spec.instance();
  std::vector<DownSet> sets;
  for (auto e : requested_levels(spec, opt)) sets.push_back(inst.enumerate_v(e));
  std::string csv = to_csv(sets);
  if (opt.csv_path) write_file(*opt.csv_path, csv);
  return {exit_code::ok, csv, ""};
}

RunResult cmd_volume(const ProblemSpec& spec, const RunOptions& opt) {
  Instance inst = spec.instance();
  auto levels = requested_levels(spec, opt);
  EstimateTable table;
  try {
    table = f_volume_estimates(inst, levels.front(), levels.back());
  } catch (const EstimateBudgetExceeded& err) {
    return {exit_code::budget, emit_json(err.partial().to_json(), opt), std::string(err.what()) + "\n"};
  }
  bool principal = std::all_of(spec.seq.begin(), spec.seq.end(), [](const Ideal& I) { return I.is_principal(); });
  if (principal && !spec.presentation && is_maximal_at_origin(spec)) {
    std::vector<Polynomial> f;
    for (const auto& I : spec.seq) f.push_back(I.generators().front());
    bool all_one = std::all_of(table.rows.begin(), table.rows.end(),
                               [](const EstimateRow& r) { return r.value == 1; });
    if (all_one && fedder_ci_test(f, levels.back()) && check_sop(f, spec.quotient())) {
      table.label = "F-pure complete intersection (verified to level " + std::to_string(levels.back()) + ")";
    }
  }
  return {exit_code::ok, emit_json(table.to_json(), opt), ""};
}

RunResult cmd_threshold(const ProblemSpec& spec, const RunOptions& opt) {
  if (spec.seq.empty()) throw Usage("threshold needs a 'seq:' statement");
  const Ideal& J = reference_ideal(spec, "threshold");
  auto levels = requested_levels(spec, opt);
  EstimateTable table = f_threshold_estimates(ideal_sum(spec.seq), J, levels.front(), levels.back(),
                                              spec.quotient(), spec.limits());
  return {exit_code::ok, emit_json(table.to_json(), opt), ""};
}

RunResult cmd_hk(const ProblemSpec& spec, const RunOptions& opt) {
  const Ideal& J = reference_ideal(spec, "hk");
  auto levels = requested_levels(spec, opt);
  EstimateTable table = hk_estimates(J, levels.front(), levels.back(), spec.quotient(), opt.dim);
  return {exit_code::ok, emit_json(table.to_json(), opt), ""};
}

RunResult cmd_fedder(const ProblemSpec& spec, const RunOptions& opt) {
  if (spec.presentation) throw Usage("fedder needs a polynomial ring");
  std::vector<Polynomial> f;
  for (const auto& I : spec.seq) {
    if (!I.is_principal()) throw Usage("fedder needs a sequence of single elements");
    f.push_back(I.generators().front());
  }
  if (f.empty()) throw Usage("fedder needs a 'seq:' statement");
  ordered_json j;
  j["kind"] = "fedder";
  j["p"] = spec.p;
  j["t"] = f.size();
  ordered_json rows = ordered_json::array();
  for (auto e : requested_levels(spec, opt)) rows.push_back({{"e", e}, {"value", fedder_ci_test(f, e)}});
  j["rows"] = std::move(rows);
  j["sop"] = check_sop(f, spec.quotient());
  return {exit_code::ok, emit_json(j.dump(2), opt), ""};
}

std::vector<CheckReport> run_check(const ProblemSpec& spec, const RunOptions& opt) {
  const std::string& name = opt.check_name;
  if (name == "union_decomposition") {
    std::vector<Ideal> parts;
    for (const auto& text : opt.parts) parts.push_back(parse_list(spec, text));
    if (parts.empty()) {
      const Ideal& J = reference_ideal(spec, name);
      for (std::size_t i = 0; i < spec.ring->nvars(); ++i) {
        parts.push_back(ideal_sum(J, Ideal(spec.ring, {Polynomial::variable(spec.ring, i)})));
      }
    }
    std::vector<CheckReport> out;
    for (auto e : requested_levels(spec, opt)) {
      out.push_back(check_union_decomposition(IdealSeq(spec.seq), parts, spec.quotient(), e, spec.limits()));
    }
    return out;
  }

  Instance inst = spec.instance();
  if (name == "remark47_bound") {
    return {check_remark47_bound(inst, opt.e.value_or(1), opt.e1.value_or(1), opt.e2.value_or(1))};
  }
  if (name == "verify_cover") return {check_cover(inst, opt.e1.value_or(1), opt.e2.value_or(1))};
  if (name == "pfamily_truncation") {
    std::vector<std::uint64_t> outer;
    std::uint64_t top = spec.family.empty() ? 2 : spec.family.size() - 1;
    for (std::uint64_t e = 0; e <= top; ++e) outer.push_back(e);
    return {pfamily_truncation(inst, outer, requested_levels(spec, opt))};
  }

  std::optional<Ideal> larger;
  if (name == "containment_monotone") {
    larger = opt.ideal ? parse_list(spec, *opt.ideal) : Ideal::maximal_at_origin(spec.ring);
  }
  std::vector<CheckReport> out;
  for (auto e : requested_levels(spec, opt)) {
    if (name == "frob_shift") {
      out.push_back(check_frob_shift(inst, e));
    } else if (name == "containment_monotone") {
      out.push_back(check_containment_monotone(inst, *larger, e));
    } else if (name == "slice_bound") {
      out.push_back(check_slice_bound(inst, e));
    } else if (name == "simplex_bound") {
      out.push_back(check_simplex_bound(inst, e));
    } else if (name == "sup_identity") {
      out.push_back(check_sup_identity(inst, e));
    } else if (name == "hk_length_ineq") {
      out.push_back(check_hk_length_ineq(inst, e));
    } else if (name == "comparison_bounds") {
      out.push_back(check_comparison_bounds(inst, e));
    } else {
      throw Usage("unknown check '" + name + "'");
    }
  }
  return out;
}

RunResult report_result(const std::vector<CheckReport>& reports, const RunOptions& opt) {
  ordered_json j;
  ordered_json list = ordered_json::array();
  bool ok = true;
  std::string err;
  for (const auto& r : reports) {
    list.push_back(ordered_json::parse(r.to_json()));
    if (!r.diagnostic && !r.verdict) {
      ok = false;
      err += r.name + " failed at levels";
      for (auto e : r.levels) err += " " + std::to_string(e);
      if (r.witness) err += ", witness " + *r.witness;
      err += "\n";
    }
  }
  j["reports"] = std::move(list);
  j["verdict"] = ok;
  return {ok ? exit_code::ok : exit_code::check_failed, emit_json(j.dump(2), opt), err};
}

RunResult cmd_staircase(const ProblemSpec& spec, const RunOptions& opt) {
  Instance inst = spec.instance();
  std::vector<DownSet> sets;
  for (auto e : requested_levels(spec, opt)) sets.push_back(inst.enumerate_v(e));
  std::string svg = staircase_svg(sets);
  if (opt.svg_path) {
    write_file(*opt.svg_path, svg);
    return {exit_code::ok, "", ""};
  }
  return {exit_code::ok, svg, ""};
}

}  // namespace

RunResult run(const ProblemSpec& spec, const RunOptions& opt) {
  try {
    const std::string& c = opt.command;
    if (c == "vset") return cmd_vset(spec, opt);
    if (c == "volume") return cmd_volume(spec, opt);
    if (c == "threshold") return cmd_threshold(spec, opt);
    if (c == "hk") return cmd_hk(spec, opt);
    if (c == "fedder") return cmd_fedder(spec, opt);
    if (c == "check") return report_result(run_check(spec, opt), opt);
    if (c == "verify-cover") {
      Instance inst = spec.instance();
      return report_result({check_cover(inst, opt.e1.value_or(1), opt.e2.value_or(1))}, opt);
    }
    if (c == "staircase") return cmd_staircase(spec, opt);
    return {exit_code::usage, "", "unknown command '" + c + "'\n"};
  } catch (const Usage& err) {
    return {exit_code::usage, "", std::string(err.what()) + "\n"};
  } catch (const Error& err) {
    return {exit_code_for(err.kind()), "", std::string(to_string(err.kind())) + ": " + err.what() + "\n"};
  }
}

RunResult run_text(std::string_view text, const RunOptions& options, OrderKind order) {
  ProblemSpec spec;
  try {
    spec = parse_spec(text, order);
  } catch (const SpecError& err) {
    return {exit_code_for(err.kind()), "", err.describe() + "\n"};
  }
  return run(spec, options);
}

}  // namespace fvol
