#include "skbounds/lp.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "skbounds/errors.hpp"

namespace skbounds {

namespace {

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational sum;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) sum += a[i] * b[i];
  }
  return sum;
}

// How an original variable is expressed through nonnegative columns.
struct VariableMap {
  enum class Kind { Shifted, Reflected, Split } kind;
  Rational offset;            // lower bound (Shifted) or upper bound (Reflected)
  std::size_t column = 0;
  std::size_t negative = 0;   // second column of a Split variable
};

// Dense tableau over rows A y = b, y >= 0, b >= 0, with the reduced-cost row
// kept alongside. `cost.back()` holds minus the current objective.
class Tableau {
public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<std::size_t> basis, std::size_t columns)
      : rows_(std::move(rows)), basis_(std::move(basis)), columns_(columns) {}

  void set_objective(const std::vector<Rational>& c) {
    cost_.assign(columns_ + 1, Rational{});
    for (std::size_t j = 0; j < columns_; ++j) cost_[j] = c[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = c[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= columns_; ++j) {
        if (!rows_[i][j].is_zero()) cost_[j] -= cb * rows_[i][j];
      }
    }
  }

  enum class Outcome { Optimal, Unbounded };

  // Bland: entering is the least-index improving column, leaving the row with
  // minimum ratio and, among ties, the least-index basic variable.
  Outcome optimize(std::size_t usable_columns) {
    for (;;) {
      std::size_t entering = usable_columns;
      for (std::size_t j = 0; j < usable_columns; ++j) {
        if (cost_[j].sign() < 0) {
          entering = j;
          break;
        }
      }
      if (entering == usable_columns) return Outcome::Optimal;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][entering];
        if (a.sign() <= 0) continue;
        Rational ratio = rows_[i][columns_] / a;
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return Outcome::Unbounded;
      pivot(*leaving, entering);
    }
  }

  void pivot(std::size_t row, std::size_t column) {
    ++pivots_;
    auto& pivot_row = rows_[row];
    const Rational scale = pivot_row[column];
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j <= columns_; ++j) {
      if (pivot_row[j].is_zero()) continue;
      pivot_row[j] /= scale;
      nonzero.push_back(j);
    }
    auto eliminate = [&](std::vector<Rational>& target) {
      if (target[column].is_zero()) return;
      const Rational factor = target[column];
      for (std::size_t j : nonzero) target[j] -= factor * pivot_row[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != row) eliminate(rows_[i]);
    }
    eliminate(cost_);
    basis_[row] = column;
  }

  // After phase 1: pivot zero-level artificial variables out of the basis,
  // dropping rows that have no other nonzero (redundant equalities).
  void expel_artificials(std::size_t first_artificial) {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial) {
        ++i;
        continue;
      }
      std::size_t replacement = first_artificial;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (!rows_[i][j].is_zero()) {
          replacement = j;
          break;
        }
      }
      if (replacement < first_artificial) {
        pivot(i, replacement);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  Rational objective_value() const { return -cost_[columns_]; }

  std::vector<Rational> basic_solution() const {
    std::vector<Rational> y(columns_);
    for (std::size_t i = 0; i < rows_.size(); ++i) y[basis_[i]] = rows_[i][columns_];
    return y;
  }

  std::size_t pivots() const { return pivots_; }

private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
  std::size_t columns_;
  std::size_t pivots_ = 0;
};

const char* relation_text(Relation r) {
  switch (r) {
    case Relation::LessEqual: return "<=";
    case Relation::GreaterEqual: return ">=";
    case Relation::Equal: return "=";
  }
  return "?";
}

}  // namespace

bool Constraint::holds_at(std::span<const Rational> point) const {
  const Rational lhs = dot(coefficients, point);
  switch (relation) {
    case Relation::LessEqual: return lhs <= rhs;
    case Relation::GreaterEqual: return lhs >= rhs;
    case Relation::Equal: return lhs == rhs;
  }
  return false;
}

std::size_t LinearProgram::add_variable(std::string name, std::optional<Rational> lo, std::optional<Rational> hi,
                                        Rational cost) {
  variables.push_back(std::move(name));
  lower.push_back(std::move(lo));
  upper.push_back(std::move(hi));
  objective.push_back(std::move(cost));
  for (auto& row : constraints) row.coefficients.resize(variables.size());
  return variables.size() - 1;
}

void LinearProgram::add_constraint(Constraint row) {
  if (row.coefficients.size() != variables.size()) {
    throw std::invalid_argument("constraint '" + row.label + "' has " + std::to_string(row.coefficients.size()) +
                                " coefficients for " + std::to_string(variables.size()) + " variables");
  }
  constraints.push_back(std::move(row));
}

void LinearProgram::validate() const {
  const std::size_t n = variables.size();
  if (objective.size() != n || lower.size() != n || upper.size() != n) {
    throw std::invalid_argument("objective/bounds length does not match the variable count");
  }
  for (const auto& row : constraints) {
    if (row.coefficients.size() != n) {
      throw std::invalid_argument("constraint '" + row.label + "' has the wrong number of coefficients");
    }
  }
}

bool LinearProgram::is_feasible(std::span<const Rational> point) const {
  if (point.size() != variables.size()) return false;
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (lower[j] && point[j] < *lower[j]) return false;
    if (upper[j] && point[j] > *upper[j]) return false;
  }
  for (const auto& row : constraints) {
    if (!row.holds_at(point)) return false;
  }
  return true;
}

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

LpSolution solve(const LinearProgram& lp) {
  lp.validate();
  const std::size_t n = lp.variable_count();

  // Structural columns.
  std::vector<VariableMap> maps;
  std::size_t columns = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (lp.lower[j]) {
      maps.push_back({VariableMap::Kind::Shifted, *lp.lower[j], columns++, 0});
    } else if (lp.upper[j]) {
      maps.push_back({VariableMap::Kind::Reflected, *lp.upper[j], columns++, 0});
    } else {
      maps.push_back({VariableMap::Kind::Split, Rational{}, columns, columns + 1});
      columns += 2;
    }
  }
  const std::size_t structural = columns;

  // Rows in terms of the nonnegative columns.
  struct Row {
    std::vector<Rational> a;
    Relation relation;
    Rational b;
  };
  std::vector<Row> rows;
  auto translate = [&](const std::vector<Rational>& coefficients, Relation relation, Rational rhs) {
    Row row{std::vector<Rational>(structural), relation, std::move(rhs)};
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& a = coefficients[j];
      if (a.is_zero()) continue;
      const auto& map = maps[j];
      switch (map.kind) {
        case VariableMap::Kind::Shifted:
          row.a[map.column] += a;
          row.b -= a * map.offset;
          break;
        case VariableMap::Kind::Reflected:
          row.a[map.column] -= a;
          row.b -= a * map.offset;
          break;
        case VariableMap::Kind::Split:
          row.a[map.column] += a;
          row.a[map.negative] -= a;
          break;
      }
    }
    rows.push_back(std::move(row));
  };
  for (const auto& c : lp.constraints) translate(c.coefficients, c.relation, c.rhs);
  for (std::size_t j = 0; j < n; ++j) {
    if (lp.lower[j] && lp.upper[j]) {
      if (*lp.upper[j] < *lp.lower[j]) return LpSolution{};
      std::vector<Rational> unit(n);
      unit[j] = 1;
      translate(unit, Relation::LessEqual, *lp.upper[j]);
    }
  }

  // Slacks, then sign-normalize so b >= 0, then artificials where no slack
  // can start in the basis.
  const std::size_t row_count = rows.size();
  std::vector<std::size_t> slack_of(row_count, SIZE_MAX);
  for (std::size_t i = 0; i < row_count; ++i) {
    if (rows[i].relation != Relation::Equal) slack_of[i] = columns++;
  }
  const std::size_t first_artificial = columns;
  std::vector<std::vector<Rational>> table(row_count);
  std::vector<std::size_t> basis(row_count);
  std::vector<std::size_t> artificial_rows;
  for (std::size_t i = 0; i < row_count; ++i) {
    Rational slack_sign = rows[i].relation == Relation::LessEqual ? 1 : -1;
    if (rows[i].b.sign() < 0 || (rows[i].b.is_zero() && slack_sign.sign() < 0)) {
      for (auto& a : rows[i].a) a = -a;
      rows[i].b = -rows[i].b;
      slack_sign = -slack_sign;
    }
    if (slack_of[i] != SIZE_MAX && slack_sign.sign() > 0) {
      basis[i] = slack_of[i];
    } else {
      basis[i] = first_artificial + artificial_rows.size();
      artificial_rows.push_back(i);
    }
    auto& t = table[i];
    t = std::move(rows[i].a);
    t.resize(first_artificial);
    if (slack_of[i] != SIZE_MAX) t[slack_of[i]] = slack_sign;
  }
  const std::size_t total_columns = first_artificial + artificial_rows.size();
  for (std::size_t i = 0; i < row_count; ++i) {
    auto& t = table[i];
    t.resize(total_columns);
    if (basis[i] >= first_artificial) t[basis[i]] = 1;
    t.push_back(std::move(rows[i].b));
  }

  Tableau tableau(std::move(table), std::move(basis), total_columns);
  LpSolution solution;

  if (!artificial_rows.empty()) {
    std::vector<Rational> phase_one(total_columns);
    for (std::size_t k = first_artificial; k < total_columns; ++k) phase_one[k] = 1;
    tableau.set_objective(phase_one);
    tableau.optimize(total_columns);
    if (tableau.objective_value().sign() > 0) {
      solution.status = LpStatus::Infeasible;
      solution.pivots = tableau.pivots();
      return solution;
    }
    tableau.expel_artificials(first_artificial);
  }

  std::vector<Rational> phase_two(total_columns);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& map = maps[j];
    const Rational& c = lp.objective[j];
    switch (map.kind) {
      case VariableMap::Kind::Shifted: phase_two[map.column] = c; break;
      case VariableMap::Kind::Reflected: phase_two[map.column] = -c; break;
      case VariableMap::Kind::Split:
        phase_two[map.column] = c;
        phase_two[map.negative] = -c;
        break;
    }
  }
  tableau.set_objective(phase_two);
  const auto outcome = tableau.optimize(first_artificial);
  solution.pivots = tableau.pivots();
  if (outcome == Tableau::Outcome::Unbounded) {
    solution.status = LpStatus::Unbounded;
    return solution;
  }

  const auto y = tableau.basic_solution();
  solution.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& map = maps[j];
    switch (map.kind) {
      case VariableMap::Kind::Shifted: solution.point[j] = map.offset + y[map.column]; break;
      case VariableMap::Kind::Reflected: solution.point[j] = map.offset - y[map.column]; break;
      case VariableMap::Kind::Split: solution.point[j] = y[map.column] - y[map.negative]; break;
    }
  }
  solution.status = LpStatus::Optimal;
  solution.objective_value = dot(lp.objective, solution.point);
  if (!lp.is_feasible(solution.point)) {
    throw InvariantViolation("simplex returned a point that violates the program");
  }
  return solution;
}

LpSolution solve_with_row_generation(LinearProgram lp, const SeparationOracle& oracle, std::size_t max_rounds) {
  for (std::size_t rounds = 0;; ++rounds) {
    LpSolution solution = solve(lp);
    solution.separation_rounds = rounds;
    if (solution.status != LpStatus::Optimal) return solution;
    auto cut = oracle(solution.point);
    if (!cut) return solution;
    if (cut->holds_at(solution.point)) {
      throw InvariantViolation("separation oracle returned row '" + cut->label + "' that the point satisfies");
    }
    if (rounds + 1 > max_rounds) {
      throw InvariantViolation("row generation exceeded " + std::to_string(max_rounds) + " rounds");
    }
    lp.add_constraint(std::move(*cut));
  }
}

std::string format_lp(const LinearProgram& lp) {
  std::ostringstream os;
  auto write_linear = [&](const std::vector<Rational>& coefficients) {
    bool first = true;
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
      const Rational& a = coefficients[j];
      if (a.is_zero()) continue;
      const bool negative = a.sign() < 0;
      const Rational magnitude = negative ? -a : a;
      if (first) {
        os << (negative ? "-" : "");
      } else {
        os << (negative ? " - " : " + ");
      }
      if (magnitude != Rational(1)) os << magnitude << ' ';
      os << lp.variables[j];
      first = false;
    }
    if (first) os << '0';
  };
  os << "minimize: ";
  write_linear(lp.objective);
  os << "\nsubject to:\n";
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& row = lp.constraints[i];
    os << "  " << (row.label.empty() ? "c" + std::to_string(i + 1) : row.label) << ": ";
    write_linear(row.coefficients);
    os << ' ' << relation_text(row.relation) << ' ' << row.rhs << '\n';
  }
  os << "bounds:\n";
  for (std::size_t j = 0; j < lp.variable_count(); ++j) {
    os << "  ";
    if (!lp.lower[j] && !lp.upper[j]) {
      os << lp.variables[j] << " free\n";
      continue;
    }
    if (lp.lower[j]) os << *lp.lower[j] << " <= ";
    os << lp.variables[j];
    if (lp.upper[j]) os << " <= " << *lp.upper[j];
    os << '\n';
  }
  return os.str();
}

}  // namespace skbounds
