#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skbounds/hypergraph.hpp"
#include "skbounds/lp.hpp"
#include "skbounds/partition.hpp"
#include "skbounds/rational.hpp"

namespace skbounds {

/// How the subset constraints of an omniscience-type LP are supplied.
enum class LpMode {
  Auto,           // full rows up to kFullRowLimit terminals, row generation above
  FullRows,       // all 2^m - 2 subset rows up front
  RowGeneration,  // rows added on demand by the subset separation oracle
};

inline constexpr int kFullRowLimit = 8;

/// Per-terminal communication rates (r_1, ..., r_m). Not sign-constrained.
struct RatePoint {
  std::vector<Rational> rates;
};

struct RcoResult {
  Rational value;
  RatePoint rates;
};

/// R_CO: min sum R_i s.t. sum_{i in B} R_i >= H(X_B | X_{B^c}) for every
/// nonempty proper subset B.
RcoResult r_co_direct(const WeightedHypergraph& hg, LpMode mode = LpMode::Auto, bool nonnegative_rates = false);

struct GammaOptions {
  bool subset_rows = true;         // false leaves the subset rows to row generation
  bool nonnegative_rates = false;  // adds r_i >= 0
};

/// LP over variables x(e) (edges in ascending mask order) followed by
/// r_1..r_m: min sum x(e) s.t. 0 <= x <= w,
/// sum_{i in B} r_i - sum_{e inside B} x(e) >= 0 for nonempty proper B, and
/// sum x(e) - sum r_i = I(X_M).
LinearProgram build_gamma_lp(const WeightedHypergraph& hg, const Rational& mmi_value, GammaOptions options = {});

/// The subset row of the Gamma program for B, in build_gamma_lp's layout.
Constraint gamma_subset_row(const WeightedHypergraph& hg, VertexMask subset);

struct Theorem1Result {
  Rational bound;  // sum x*(e) - I(X_M)
  FractionalPacking x_star;
  RatePoint rates;
  std::size_t separation_rounds = 0;
};

Theorem1Result upper_bound_theorem1(const WeightedHypergraph& hg, LpMode mode = LpMode::Auto);
Theorem1Result upper_bound_theorem1(const WeightedHypergraph& hg, const Rational& mmi_value, LpMode mode,
                                    bool nonnegative_rates = false);

/// Minimizes g(B) = sum_{i in B} r_i - sum_{e inside B} x(e) over nonempty
/// proper subsets by enumeration. Returns the minimizer (smallest mask among
/// ties) when g(B) < 0, nullopt when the candidate is feasible.
std::optional<VertexMask> separation_oracle(const WeightedHypergraph& hg, const FractionalPacking& packing,
                                            const RatePoint& rates);

/// I(X^x_M) == I(X_M).
bool verify_gamma_membership(const WeightedHypergraph& hg, const FractionalPacking& packing);

/// (m - 2) * I(X_M). Throws NotAGraph unless every edge has two vertices.
Rational graphical_upper_bound(const WeightedHypergraph& hg);
Rational graphical_upper_bound(const WeightedHypergraph& hg, const MmiResult& mmi_result);

/// ((|P*| - 2) / (|P*| - 1)) * sum of cross-edge weights at P*.
Rational graphical_lower_bound(const WeightedHypergraph& hg);
Rational graphical_lower_bound(const WeightedHypergraph& hg, const MmiResult& mmi_result);

/// Interactive common information of a graphical source: cross-edge weight at P*.
Rational ci_graphical(const WeightedHypergraph& hg);
Rational ci_graphical(const WeightedHypergraph& hg, const MmiResult& mmi_result);

struct GraphicalBounds {
  Rational ub_theorem2;
  Rational lower_bound;
  Rational ci;
  Rational cross_edge_sum;
};

struct AnalysisReport {
  int m = 0;
  Rational entropy_total;
  MmiResult mmi;
  Rational r_co;
  RatePoint r_co_rates;
  Rational sk_capacity;
  Rational ub_theorem1;
  FractionalPacking x_star;
  std::optional<GraphicalBounds> graphical;
  std::vector<std::string> warnings;
};

/// Computes every quantity and enforces the report invariants; a violation
/// throws InvariantViolation naming both values.
AnalysisReport analyze(const WeightedHypergraph& hg, LpMode mode = LpMode::Auto);

/// Extended self-test of a finished report: capacity preserved by x*, full-row
/// versus row-generation agreement, sign-constrained rate variants and the
/// graphical identities. Returns one message per failed check.
std::vector<std::string> check_report(const WeightedHypergraph& hg, const AnalysisReport& report);

}  // namespace skbounds
