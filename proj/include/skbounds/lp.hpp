#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skbounds/rational.hpp"

namespace skbounds {

enum class Relation { LessEqual, GreaterEqual, Equal };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::GreaterEqual;
  Rational rhs;
  std::string label;

  /// Exact check of the row at `point`.
  bool holds_at(std::span<const Rational> point) const;
};

/// min c.x subject to linear rows and per-variable bounds. A missing bound
/// means the variable is unbounded in that direction.
struct LinearProgram {
  std::vector<std::string> variables;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  std::vector<std::optional<Rational>> lower;
  std::vector<std::optional<Rational>> upper;

  std::size_t add_variable(std::string name, std::optional<Rational> lo, std::optional<Rational> hi,
                           Rational cost = Rational{});
  void add_constraint(Constraint row);

  std::size_t variable_count() const { return variables.size(); }

  /// Throws std::invalid_argument when vector lengths disagree or lo > hi.
  void validate() const;

  /// Every row and bound holds exactly at `point`.
  bool is_feasible(std::span<const Rational> point) const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> point;   // set when optimal
  Rational objective_value;      // set when optimal
  std::size_t pivots = 0;
  std::size_t separation_rounds = 0;
};

/// Two-phase primal simplex on exact rationals with Bland's least-index rule.
/// An optimal point is re-verified against every row before returning; a
/// failed check throws InvariantViolation.
LpSolution solve(const LinearProgram& lp);

/// Returns a row violated at the candidate point, or nullopt when the point
/// satisfies the whole implicit family.
using SeparationOracle = std::function<std::optional<Constraint>(std::span<const Rational>)>;

/// Solve, ask the oracle for a violated row, add it, repeat. More than
/// `max_rounds` added rows, or a returned row that is not actually violated,
/// throws InvariantViolation.
LpSolution solve_with_row_generation(LinearProgram lp, const SeparationOracle& oracle, std::size_t max_rounds);

/// Human-readable listing, one constraint per line.
std::string format_lp(const LinearProgram& lp);

}  // namespace skbounds
