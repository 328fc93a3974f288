#include "skbounds/bounds.hpp"

#include <stdexcept>

#include "skbounds/errors.hpp"

namespace skbounds {

namespace {

bool use_full_rows(LpMode mode, int m) {
  switch (mode) {
    case LpMode::FullRows: return true;
    case LpMode::RowGeneration: return false;
    case LpMode::Auto: return m <= kFullRowLimit;
  }
  return true;
}

std::size_t round_cap(int m) { return std::size_t{1} << m; }

Rational rate_sum(const std::vector<Rational>& rates, VertexMask subset) {
  Rational sum;
  for (std::size_t i = 0; i < rates.size(); ++i) {
    if (subset & (VertexMask{1} << i)) sum += rates[i];
  }
  return sum;
}

Rational contained_weight(const EdgeWeights& weights, VertexMask subset) {
  Rational sum;
  for (const auto& [edge, w] : weights) {
    if ((edge & ~subset) == 0) sum += w;
  }
  return sum;
}

// argmin over nonempty proper B of sum_{i in B} r_i - sum_{e inside B} y(e),
// reported only when the minimum is negative. Ascending scan keeps the
// smallest mask among ties.
std::optional<VertexMask> most_violated_subset(int m, const EdgeWeights& weights, const std::vector<Rational>& rates) {
  const VertexMask full = static_cast<VertexMask>((std::uint64_t{1} << m) - 1);
  std::optional<VertexMask> best;
  Rational best_value;
  for (VertexMask subset = 1; subset < full; ++subset) {
    Rational g = rate_sum(rates, subset) - contained_weight(weights, subset);
    if (g.sign() < 0 && (!best || g < best_value)) {
      best = subset;
      best_value = std::move(g);
    }
  }
  return best;
}

void require_graph(const WeightedHypergraph& hg, const char* what) {
  if (!hg.is_graph()) {
    throw NotAGraph(std::string(what) + " requires every edge to have exactly two vertices");
  }
}

[[noreturn]] void violated(const std::string& what, const Rational& lhs, const Rational& rhs) {
  throw InvariantViolation(what + ": " + lhs.to_string() + " vs " + rhs.to_string());
}

Constraint rco_row(const WeightedHypergraph& hg, VertexMask subset) {
  const int m = hg.vertex_count();
  Constraint row{std::vector<Rational>(static_cast<std::size_t>(m)), Relation::GreaterEqual,
                 hg.conditional_entropy(subset), "B" + format_set(subset)};
  for (int i = 0; i < m; ++i) {
    if (subset & (VertexMask{1} << i)) row.coefficients[static_cast<std::size_t>(i)] = 1;
  }
  return row;
}

}  // namespace

RcoResult r_co_direct(const WeightedHypergraph& hg, LpMode mode, bool nonnegative_rates) {
  const int m = hg.vertex_count();
  LinearProgram lp;
  for (int i = 1; i <= m; ++i) {
    lp.add_variable("R" + std::to_string(i), nonnegative_rates ? std::optional<Rational>(0) : std::nullopt,
                    std::nullopt, 1);
  }
  const VertexMask full = hg.full_mask();
  LpSolution solution;
  if (use_full_rows(mode, m)) {
    for (VertexMask subset = 1; subset < full; ++subset) lp.add_constraint(rco_row(hg, subset));
    solution = solve(lp);
  } else {
    // Singleton rows bound the objective from below before any cut arrives.
    for (int i = 0; i < m; ++i) lp.add_constraint(rco_row(hg, VertexMask{1} << i));
    solution = solve_with_row_generation(
        std::move(lp),
        [&](std::span<const Rational> point) -> std::optional<Constraint> {
          const std::vector<Rational> rates(point.begin(), point.end());
          const auto subset = most_violated_subset(m, hg.edges(), rates);
          if (!subset) return std::nullopt;
          return rco_row(hg, *subset);
        },
        round_cap(m));
  }
  if (solution.status != LpStatus::Optimal) {
    throw InvariantViolation("omniscience LP reported " + to_string(solution.status) +
                             " although R_i = H(X_i) is feasible");
  }
  return {solution.objective_value, RatePoint{std::move(solution.point)}};
}

Constraint gamma_subset_row(const WeightedHypergraph& hg, VertexMask subset) {
  const std::size_t edges = hg.edge_count();
  const int m = hg.vertex_count();
  Constraint row{std::vector<Rational>(edges + static_cast<std::size_t>(m)), Relation::GreaterEqual, Rational{},
                 "B" + format_set(subset)};
  std::size_t k = 0;
  for (const auto& [edge, w] : hg.edges()) {
    if ((edge & ~subset) == 0) row.coefficients[k] = -1;
    ++k;
  }
  for (int i = 0; i < m; ++i) {
    if (subset & (VertexMask{1} << i)) row.coefficients[edges + static_cast<std::size_t>(i)] = 1;
  }
  return row;
}

LinearProgram build_gamma_lp(const WeightedHypergraph& hg, const Rational& mmi_value, GammaOptions options) {
  const int m = hg.vertex_count();
  LinearProgram lp;
  for (const auto& [edge, w] : hg.edges()) lp.add_variable("x" + format_set(edge), Rational{}, w, 1);
  for (int i = 1; i <= m; ++i) {
    lp.add_variable("r" + std::to_string(i), options.nonnegative_rates ? std::optional<Rational>(0) : std::nullopt,
                    std::nullopt, 0);
  }
  if (options.subset_rows) {
    for (VertexMask subset = 1; subset < hg.full_mask(); ++subset) lp.add_constraint(gamma_subset_row(hg, subset));
  }
  Constraint capacity{std::vector<Rational>(lp.variable_count()), Relation::Equal, mmi_value, "capacity"};
  for (std::size_t k = 0; k < hg.edge_count(); ++k) capacity.coefficients[k] = 1;
  for (int i = 0; i < m; ++i) capacity.coefficients[hg.edge_count() + static_cast<std::size_t>(i)] = -1;
  lp.add_constraint(std::move(capacity));
  return lp;
}

std::optional<VertexMask> separation_oracle(const WeightedHypergraph& hg, const FractionalPacking& packing,
                                            const RatePoint& rates) {
  const int m = hg.vertex_count();
  if (rates.rates.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("rate point has " + std::to_string(rates.rates.size()) + " entries for m = " +
                                std::to_string(m));
  }
  if (packing.entries().size() != hg.edge_count()) {
    throw std::invalid_argument("packing does not match the hyperedge set");
  }
  for (const auto& [edge, value] : packing.entries()) {
    if (!hg.edges().contains(edge)) throw std::invalid_argument("packing entry " + format_set(edge) + " is not a hyperedge");
  }
  return most_violated_subset(m, packing.entries(), rates.rates);
}

namespace {

Theorem1Result unpack_gamma_solution(const WeightedHypergraph& hg, const Rational& mmi_value, LpSolution solution) {
  if (solution.status != LpStatus::Optimal) {
    throw InvariantViolation("Gamma LP reported " + to_string(solution.status) + " although x = w is feasible");
  }
  Theorem1Result result;
  EdgeWeights x;
  std::size_t k = 0;
  for (const auto& [edge, w] : hg.edges()) x.emplace(edge, solution.point[k++]);
  result.x_star = FractionalPacking(std::move(x));
  result.rates.rates.assign(solution.point.begin() + static_cast<std::ptrdiff_t>(k), solution.point.end());
  result.bound = solution.objective_value - mmi_value;
  result.separation_rounds = solution.separation_rounds;
  return result;
}

}  // namespace

Theorem1Result upper_bound_theorem1(const WeightedHypergraph& hg, const Rational& mmi_value, LpMode mode,
                                    bool nonnegative_rates) {
  const int m = hg.vertex_count();
  const bool full = use_full_rows(mode, m);
  LinearProgram lp = build_gamma_lp(hg, mmi_value, {full, nonnegative_rates});
  if (full) return unpack_gamma_solution(hg, mmi_value, solve(lp));

  const std::size_t edges = hg.edge_count();
  auto oracle = [&](std::span<const Rational> point) -> std::optional<Constraint> {
    EdgeWeights x;
    std::size_t k = 0;
    for (const auto& [edge, w] : hg.edges()) x.emplace(edge, point[k++]);
    const RatePoint rates{std::vector<Rational>(point.begin() + static_cast<std::ptrdiff_t>(edges), point.end())};
    const auto subset = separation_oracle(hg, FractionalPacking(std::move(x)), rates);
    if (!subset) return std::nullopt;
    return gamma_subset_row(hg, *subset);
  };
  return unpack_gamma_solution(hg, mmi_value, solve_with_row_generation(std::move(lp), oracle, round_cap(m)));
}

Theorem1Result upper_bound_theorem1(const WeightedHypergraph& hg, LpMode mode) {
  return upper_bound_theorem1(hg, mmi(hg).value, mode);
}

bool verify_gamma_membership(const WeightedHypergraph& hg, const FractionalPacking& packing) {
  return mmi(hg.restrict(packing)).value == mmi(hg).value;
}

Rational graphical_upper_bound(const WeightedHypergraph& hg, const MmiResult& mmi_result) {
  require_graph(hg, "graphical upper bound");
  return Rational(hg.vertex_count() - 2) * mmi_result.value;
}

Rational graphical_upper_bound(const WeightedHypergraph& hg) {
  require_graph(hg, "graphical upper bound");
  return graphical_upper_bound(hg, mmi(hg));
}

Rational graphical_lower_bound(const WeightedHypergraph& hg, const MmiResult& mmi_result) {
  require_graph(hg, "graphical lower bound");
  const auto cells = static_cast<long>(mmi_result.fundamental.size());
  const Rational cross = cross_edges(hg, mmi_result.fundamental).weight;
  return Rational(cells - 2, cells - 1) * cross;
}

Rational graphical_lower_bound(const WeightedHypergraph& hg) {
  require_graph(hg, "graphical lower bound");
  return graphical_lower_bound(hg, mmi(hg));
}

Rational ci_graphical(const WeightedHypergraph& hg, const MmiResult& mmi_result) {
  require_graph(hg, "CI");
  return cross_edges(hg, mmi_result.fundamental).weight;
}

Rational ci_graphical(const WeightedHypergraph& hg) {
  require_graph(hg, "CI");
  return ci_graphical(hg, mmi(hg));
}

AnalysisReport analyze(const WeightedHypergraph& hg, LpMode mode) {
  AnalysisReport report;
  report.m = hg.vertex_count();
  report.entropy_total = hg.total_entropy();
  report.mmi = mmi(hg);
  report.sk_capacity = report.mmi.value;

  auto rco = r_co_direct(hg, mode);
  report.r_co = rco.value;
  report.r_co_rates = std::move(rco.rates);
  if (report.r_co != report.entropy_total - report.sk_capacity) {
    violated("R_CO from the omniscience LP differs from H(X_M) - I(X_M)", report.r_co,
             report.entropy_total - report.sk_capacity);
  }

  auto ub = upper_bound_theorem1(hg, report.mmi.value, mode);
  report.ub_theorem1 = ub.bound;
  report.x_star = std::move(ub.x_star);
  if (report.ub_theorem1 > report.r_co) violated("packing bound exceeds R_CO", report.ub_theorem1, report.r_co);

  if (hg.is_graph()) {
    GraphicalBounds g;
    g.ub_theorem2 = graphical_upper_bound(hg, report.mmi);
    g.lower_bound = graphical_lower_bound(hg, report.mmi);
    g.ci = ci_graphical(hg, report.mmi);
    g.cross_edge_sum = cross_edges(hg, report.mmi.fundamental).weight;
    if (g.lower_bound > report.ub_theorem1) {
      violated("graphical lower bound exceeds the packing bound", g.lower_bound, report.ub_theorem1);
    }
    const auto reduced = hg.restrict(report.x_star);
    if (!is_type_s(reduced)) {
      throw InvariantViolation("source restricted to x* is not Type S (P* = " + mmi(reduced).fundamental.to_string() + ")");
    }
    report.graphical = std::move(g);
  } else if (hg.is_graphical()) {
    report.warnings.emplace_back("singleton hyperedges present; graphical bounds skipped");
  }
  return report;
}

std::vector<std::string> check_report(const WeightedHypergraph& hg, const AnalysisReport& report) {
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };
  auto expect_equal = [&](const Rational& a, const Rational& b, const std::string& what) {
    if (a != b) failures.push_back(what + ": " + a.to_string() + " vs " + b.to_string());
  };

  const Rational& I = report.mmi.value;
  expect_equal(report.entropy_total, hg.total_entropy(), "entropy total");
  expect_equal(report.sk_capacity, I, "SK capacity equals I(X_M)");
  expect_equal(report.r_co, report.entropy_total - I, "R_CO = H(X_M) - I(X_M)");
  expect_equal(partition_mi(hg, report.mmi.fundamental), I, "I_{P*} equals I(X_M)");
  expect(report.ub_theorem1 <= report.r_co, "packing bound <= R_CO");
  expect_equal(report.ub_theorem1, report.x_star.total() - I, "bound = sum x* - I(X_M)");
  expect(verify_gamma_membership(hg, report.x_star), "restricting to x* preserves I(X_M) (Gamma = Gamma*)");

  const int m = hg.vertex_count();
  if (m <= kFullRowLimit) {
    expect_equal(upper_bound_theorem1(hg, I, LpMode::FullRows).bound,
                 upper_bound_theorem1(hg, I, LpMode::RowGeneration).bound, "Gamma LP: full rows vs row generation");
    expect_equal(r_co_direct(hg, LpMode::FullRows).value, r_co_direct(hg, LpMode::RowGeneration).value,
                 "R_CO LP: full rows vs row generation");
  } else {
    expect_equal(upper_bound_theorem1(hg, I, LpMode::RowGeneration).bound, report.ub_theorem1,
                 "Gamma LP: row generation rerun");
  }
  expect_equal(upper_bound_theorem1(hg, I, LpMode::Auto, true).bound, report.ub_theorem1,
               "Gamma LP with r_i >= 0");
  expect_equal(r_co_direct(hg, LpMode::Auto, true).value, report.r_co, "R_CO LP with R_i >= 0");

  if (report.graphical) {
    const auto& g = *report.graphical;
    const auto cells = static_cast<long>(report.mmi.fundamental.size());
    expect_equal(report.ub_theorem1, g.ub_theorem2, "packing bound = (m-2) I(X_M)");
    expect(g.lower_bound <= g.ub_theorem2, "graphical lower bound <= (m-2) I(X_M)");
    expect_equal(g.lower_bound, g.ci - g.cross_edge_sum / Rational(cells - 1), "lower bound = CI - I_{P*} (cross-edge form)");
    expect_equal(g.cross_edge_sum / Rational(cells - 1), I, "cross-edge form of I_{P*}");
    expect(I <= g.ci && g.ci <= report.entropy_total, "I(X_M) <= CI <= H(X_M)");
    expect(is_type_s(hg.restrict(report.x_star)), "restriction to x* is Type S");
  }
  return failures;
}

}  // namespace skbounds
