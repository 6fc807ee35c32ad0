#pragma once

// Problem specs in the line-oriented input format, and the command runner
// used by the fvol executable.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fvol/error.hpp"
#include "fvol/invariants.hpp"
#include "fvol/regions.hpp"

namespace fvol {

// A diagnostic tied to a 1-based line and column of the spec text.
class SpecError : public Error {
 public:
  SpecError(ErrorKind kind, const std::string& message, std::size_t line, std::size_t column)
      : Error(kind, message), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  std::string describe() const;

 private:
  std::size_t line_;
  std::size_t column_;
};

struct ProblemSpec {
  std::uint64_t p = 0;
  std::vector<std::string> variables;
  RingPtr ring;
  std::optional<Ideal> presentation;
  std::optional<Ideal> J;
  // Explicit p-family levels, sorted by level and contiguous from 0.
  std::vector<std::pair<std::uint64_t, Ideal>> family;
  std::vector<Ideal> seq;
  std::uint64_t e_min = 1;
  std::uint64_t e_max = 3;
  std::optional<std::uint64_t> budget;

  QuotientPresentation quotient() const;
  PFamily pfamily() const;
  EnumerationLimits limits() const;
  // Requires a nonempty sequence.
  Instance instance() const;
  // Text that parses back to an equal spec.
  std::string to_string() const;
};

bool operator==(const ProblemSpec& a, const ProblemSpec& b);

ProblemSpec parse_spec(std::string_view text, OrderKind order = OrderKind::Grevlex);

struct RunOptions {
  std::string command;
  std::string check_name;
  std::optional<std::string> json_path;
  std::optional<std::string> csv_path;
  std::optional<std::string> svg_path;
  std::optional<int> dim;
  std::optional<std::uint64_t> e;
  std::optional<std::uint64_t> e1;
  std::optional<std::uint64_t> e2;
  // Ideal containing J for containment_monotone, as a comma-separated list.
  std::optional<std::string> ideal;
  // Ideals whose intersection replaces J for union_decomposition.
  std::vector<std::string> parts;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int hypothesis = 2;
inline constexpr int budget = 3;
inline constexpr int check_failed = 4;
}  // namespace exit_code

struct RunResult {
  int exit_code = exit_code::ok;
  std::string out;
  std::string err;
};

int exit_code_for(ErrorKind kind);

RunResult run(const ProblemSpec& spec, const RunOptions& options);
// Parses `text` and runs; parse failures become usage errors.
RunResult run_text(std::string_view text, const RunOptions& options,
                   OrderKind order = OrderKind::Grevlex);

const std::vector<std::string>& check_names();

}  // namespace fvol
