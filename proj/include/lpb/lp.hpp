#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lpb/rational.hpp"

namespace lpb {

enum class Sense { Maximize, Minimize };

/// Row relations compare the linear form against zero; constants enter a
/// problem through fixed variables.
enum class Relation { GreaterEqualZero, LessEqualZero };

struct LpRow {
  std::vector<Rational> coeffs;
  Relation rel = Relation::GreaterEqualZero;
};

/// Linear program over x_0 .. x_{num_vars-1}:
///   optimize objective . x
///   subject to  coeffs . x  (>= 0 | <= 0)  for every row,
///               x_i = value for every fixing,
///               x >= 0 when nonneg is set.
struct LpProblem {
  std::size_t num_vars = 0;
  Sense sense = Sense::Maximize;
  std::vector<Rational> objective;
  std::vector<LpRow> rows;
  std::vector<std::pair<std::size_t, Rational>> fixed;
  bool nonneg = true;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational objective_value;      // meaningful when Optimal
  std::vector<Rational> primal;  // full-length point, fixed coordinates included
  /// One nonnegative multiplier per row, for the canonical form obtained by
  /// substituting fixings and turning every row into <=. Feed through
  /// dual_objective to recover the optimum.
  std::vector<Rational> dual;
  /// Improving feasible direction (full-length, zero on fixed coordinates)
  /// when status == Unbounded.
  std::vector<Rational> ray;
};

/// Exact primal simplex with Bland's anti-cycling rule on a dense rational
/// tableau; two phases, dual multipliers read from the final tableau.
/// Throws std::invalid_argument on malformed problems.
LpSolution solve_exact(const LpProblem& problem);

struct FeasibilityReport {
  struct Violation {
    std::string what;
    std::size_t index = 0;
    Rational slack;  // negative by construction
  };
  std::vector<Rational> row_slacks;  // per row; >= 0 iff the row is satisfied
  std::vector<Violation> violations;
  bool feasible() const { return violations.empty(); }
};

/// Evaluates every constraint of the problem at a full-length point.
/// Throws std::invalid_argument on dimension mismatch.
FeasibilityReport check_point(const LpProblem& problem, const std::vector<Rational>& point);

/// Objective of the dual certificate carried by an optimal solution. Equals
/// solution.objective_value exactly whenever the solve was correct.
Rational dual_objective(const LpProblem& problem, const LpSolution& solution);

}  // namespace lpb
