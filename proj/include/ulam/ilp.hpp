#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ulam/bounds.hpp"
#include "ulam/budget.hpp"
#include "ulam/combinatorics.hpp"

namespace ulam {

struct Term {
  std::size_t var;
  BigInt coef;
};

struct LinearRow {
  std::string name;
  std::vector<Term> terms;
  BigInt rhs;
};

/**
 * Integer program bounding the size of an (n, d) Ulam code.
 *
 * Variable X[b][a] counts codewords carrying symbol a at position b. Every
 * subsequence of length n - d + 1 occurs in at most one codeword, which
 * gives, for each symbol a and each split l in 0..n-d,
 *
 *   sum_b C(b-1, l) C(n-b, n-d-l) X[b][a] <= (n-1)! / (d-1)!.
 *
 * Row sums are tied together (every position sees every codeword once) and
 * the objective is the number of codewords, sum_a X[1][a].
 */
struct IlpModel {
  unsigned n = 0;
  unsigned d = 0;
  std::vector<LinearRow> inequality_rows; ///< terms <= rhs
  std::vector<LinearRow> equality_rows;   ///< terms == rhs
  std::vector<Term> objective;            ///< maximized
  /// Per-variable upper bounds; empty when none were derived.
  std::vector<std::optional<BigInt>> upper_bounds;

  std::size_t num_vars() const { return static_cast<std::size_t>(n) * n; }
  /// Index of X[b][a], 1-based b and a.
  std::size_t var(unsigned b, unsigned a) const { return static_cast<std::size_t>(b - 1) * n + (a - 1); }
  unsigned position_of(std::size_t v) const { return static_cast<unsigned>(v / n) + 1; }
  unsigned symbol_of(std::size_t v) const { return static_cast<unsigned>(v % n) + 1; }
  /// "x_b_a".
  std::string var_name(std::size_t v) const;
};

/// Adds rows to a model. Built-in providers produce the rows described on IlpModel;
/// further providers can tighten the program with extra valid inequalities.
class ConstraintProvider {
public:
  virtual ~ConstraintProvider() = default;
  virtual void append_rows(IlpModel &model) const = 0;
};

/// One "<=" row per (symbol a, split l), l in 0..n-d.
class SubsequenceCountRows final : public ConstraintProvider {
public:
  void append_rows(IlpModel &model) const override;
};

/// sum_a X[b][a] = sum_a X[b+1][a] for b in 1..n-1.
class PositionBalanceRows final : public ConstraintProvider {
public:
  void append_rows(IlpModel &model) const override;
};

/// Builds the model for d >= 2 (DomainError for d = 1) and derives variable bounds.
IlpModel build_model(const CodeParams &params);
IlpModel build_model(const CodeParams &params, std::span<const ConstraintProvider *const> extra);

/// Sets upper_bounds[v] = min over "<=" rows with positive coefficient of floor(rhs / coef).
void derive_variable_bounds(IlpModel &model);

/// Checks every row, non-negativity and derived bounds.
bool is_feasible(const IlpModel &model, std::span<const BigInt> x);

BigInt objective_value(const IlpModel &model, std::span<const BigInt> x);

/// Box constraints on the variables; an empty optional is +infinity.
struct VariableBox {
  std::vector<BigInt> lower;
  std::vector<std::optional<BigInt>> upper;

  static VariableBox from_model(const IlpModel &model);
};

struct LpResult {
  enum class Status { optimal, infeasible, unbounded };
  Status status = Status::infeasible;
  Rational value;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

/// Exact rational bounded-variable simplex (Bland's rule) on the continuous relaxation.
LpResult solve_lp(const IlpModel &model, const VariableBox &box);

/// Optimal value of the relaxation within the model's own bounds. Throws std::runtime_error
/// if it is infeasible or unbounded.
Rational solve_lp_relaxation(const IlpModel &model);

enum class IlpStatus { optimal, bound_only, infeasible };

const char *to_string(IlpStatus status);

struct IlpSolution {
  IlpStatus status = IlpStatus::infeasible;
  /// The optimum when optimal, otherwise the best proven upper bound.
  BigInt objective_value;
  /// Best integral point found; always present when optimal.
  std::optional<std::vector<BigInt>> assignment;
  BigInt incumbent_value;
  Rational lp_relaxation_value;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

/**
 * Branch-and-bound over exact LP relaxations. Branches on the most fractional
 * variable (ties to the smallest (b, a)); expands open nodes best bound first
 * with FIFO tie-break. A spent budget yields bound_only, never a false optimum.
 */
IlpSolution solve_ilp(const IlpModel &model, const Budget &budget);

struct IpBound {
  BigInt value;
  IlpStatus status = IlpStatus::optimal;
  std::optional<IlpSolution> solution; ///< absent for the d = 1 short-circuit
};

/// min(Singleton bound, integer-program bound). For d = 1 returns n! without solving.
IpBound ip_upper_bound(const CodeParams &params, const Budget &budget);

/// Writes the model in CPLEX LP text format with variables x_b_a. Byte-stable.
std::string export_lp(const IlpModel &model);

/// Reads back the subset of LP format written by export_lp. The "\ n = .., d = .." header
/// comment is required.
IlpModel parse_lp(std::string_view text);

} // namespace ulam
