#include "ulam/ilp.hpp"

#include <algorithm>

#include "ulam/errors.hpp"

namespace ulam {

std::string IlpModel::var_name(std::size_t v) const {
  return "x_" + std::to_string(position_of(v)) + "_" + std::to_string(symbol_of(v));
}

void SubsequenceCountRows::append_rows(IlpModel &model) const {
  const long n = model.n;
  const long d = model.d;
  // Number of length-(n-d+1) sequences over distinct symbols with a fixed symbol at a fixed slot.
  const BigInt rhs = factorial(static_cast<unsigned long>(n - 1)) / factorial(static_cast<unsigned long>(d - 1));
  for (long a = 1; a <= n; ++a) {
    for (long l = 0; l <= n - d; ++l) {
      LinearRow row;
      row.name = "sub_a" + std::to_string(a) + "_l" + std::to_string(l);
      row.rhs = rhs;
      for (long b = 1; b <= n; ++b) {
        BigInt coef = binomial(b - 1, l) * binomial(n - b, n - d - l);
        if (sgn(coef) != 0)
          row.terms.push_back({model.var(static_cast<unsigned>(b), static_cast<unsigned>(a)), std::move(coef)});
      }
      model.inequality_rows.push_back(std::move(row));
    }
  }
}

void PositionBalanceRows::append_rows(IlpModel &model) const {
  for (unsigned b = 1; b < model.n; ++b) {
    LinearRow row;
    row.name = "bal_b" + std::to_string(b);
    row.rhs = 0;
    for (unsigned a = 1; a <= model.n; ++a)
      row.terms.push_back({model.var(b, a), 1});
    for (unsigned a = 1; a <= model.n; ++a)
      row.terms.push_back({model.var(b + 1, a), -1});
    model.equality_rows.push_back(std::move(row));
  }
}

IlpModel build_model(const CodeParams &params) { return build_model(params, {}); }

IlpModel build_model(const CodeParams &params, std::span<const ConstraintProvider *const> extra) {
  if (params.d() < 2)
    throw DomainError("integer program needs d >= 2; for d = 1 the bound is n!");
  IlpModel model;
  model.n = params.n();
  model.d = params.d();
  SubsequenceCountRows{}.append_rows(model);
  PositionBalanceRows{}.append_rows(model);
  for (const auto *provider : extra)
    provider->append_rows(model);
  for (unsigned a = 1; a <= model.n; ++a)
    model.objective.push_back({model.var(1, a), 1});
  derive_variable_bounds(model);
  return model;
}

void derive_variable_bounds(IlpModel &model) {
  model.upper_bounds.assign(model.num_vars(), std::nullopt);
  for (const auto &row : model.inequality_rows) {
    // Only rows whose other terms are all non-negative bound a single variable.
    const bool all_nonneg =
        std::all_of(row.terms.begin(), row.terms.end(), [](const Term &t) { return sgn(t.coef) >= 0; });
    if (!all_nonneg || sgn(row.rhs) < 0)
      continue;
    for (const auto &t : row.terms) {
      if (sgn(t.coef) <= 0)
        continue;
      BigInt cap = row.rhs / t.coef;
      auto &ub = model.upper_bounds[t.var];
      if (!ub || cap < *ub)
        ub = cap;
    }
  }
}

namespace {

BigInt row_activity(const LinearRow &row, std::span<const BigInt> x) {
  BigInt s = 0;
  for (const auto &t : row.terms)
    s += t.coef * x[t.var];
  return s;
}

} // namespace

bool is_feasible(const IlpModel &model, std::span<const BigInt> x) {
  if (x.size() != model.num_vars())
    return false;
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (sgn(x[v]) < 0)
      return false;
    if (!model.upper_bounds.empty() && model.upper_bounds[v] && x[v] > *model.upper_bounds[v])
      return false;
  }
  for (const auto &row : model.inequality_rows)
    if (row_activity(row, x) > row.rhs)
      return false;
  for (const auto &row : model.equality_rows)
    if (row_activity(row, x) != row.rhs)
      return false;
  return true;
}

BigInt objective_value(const IlpModel &model, std::span<const BigInt> x) {
  BigInt s = 0;
  for (const auto &t : model.objective)
    s += t.coef * x[t.var];
  return s;
}

VariableBox VariableBox::from_model(const IlpModel &model) {
  VariableBox box;
  box.lower.assign(model.num_vars(), 0);
  if (model.upper_bounds.empty())
    box.upper.assign(model.num_vars(), std::nullopt);
  else
    box.upper = model.upper_bounds;
  return box;
}

const char *to_string(IlpStatus status) {
  switch (status) {
  case IlpStatus::optimal:
    return "optimal";
  case IlpStatus::bound_only:
    return "bound_only";
  case IlpStatus::infeasible:
    return "infeasible";
  }
  return "?";
}

} // namespace ulam
