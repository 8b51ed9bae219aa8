#include "ulam/ilp.hpp"

#include <queue>

#include "ulam/errors.hpp"

namespace ulam {

namespace {

struct Node {
  VariableBox box;
  Rational bound;
  std::vector<Rational> x;
  std::uint64_t seq = 0;
};

struct NodeOrder {
  // Best bound first, FIFO among equal bounds.
  bool operator()(const Node &a, const Node &b) const {
    if (a.bound != b.bound)
      return a.bound < b.bound;
    return a.seq > b.seq;
  }
};

bool is_integral(const std::vector<Rational> &x) {
  for (const auto &v : x)
    if (v.get_den() != 1)
      return false;
  return true;
}

std::vector<BigInt> to_integers(const std::vector<Rational> &x) {
  std::vector<BigInt> out;
  out.reserve(x.size());
  for (const auto &v : x)
    out.push_back(floor_of(v));
  return out;
}

// Most fractional variable; the lowest index wins ties, which is the lexicographically smallest (b, a).
std::size_t branching_variable(const std::vector<Rational> &x) {
  std::size_t best = x.size();
  Rational best_score = -1;
  const Rational half(1, 2);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].get_den() == 1)
      continue;
    const Rational f = x[j] - Rational(floor_of(x[j]));
    const Rational score = f < half ? f : Rational(1) - f;
    if (score > best_score) {
      best_score = score;
      best = j;
    }
  }
  return best;
}

// X = t for every variable, with the largest t that satisfies the model.
std::optional<std::vector<BigInt>> uniform_point(const IlpModel &model) {
  std::optional<BigInt> t;
  for (const auto &row : model.inequality_rows) {
    BigInt sum = 0;
    for (const auto &term : row.terms)
      sum += term.coef;
    if (sgn(sum) > 0) {
      BigInt cap = row.rhs / sum;
      if (!t || cap < *t)
        t = cap;
    }
  }
  if (!t || sgn(*t) < 0)
    return std::nullopt;
  for (BigInt v = *t; sgn(v) >= 0; --v) {
    std::vector<BigInt> x(model.num_vars(), v);
    if (is_feasible(model, x))
      return x;
    if (sgn(v) == 0)
      break;
  }
  return std::nullopt;
}

} // namespace

IlpSolution solve_ilp(const IlpModel &model, const Budget &budget) {
  BudgetClock clock(budget, 1);
  IlpSolution sol;

  std::optional<std::vector<BigInt>> incumbent;
  BigInt incumbent_value = -1;
  auto offer = [&](std::vector<BigInt> x) {
    if (!is_feasible(model, x))
      return;
    BigInt v = objective_value(model, x);
    if (v > incumbent_value) {
      incumbent_value = v;
      incumbent = std::move(x);
    }
  };
  if (auto x = uniform_point(model))
    offer(std::move(*x));

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  std::uint64_t seq = 0;

  // Solves the node's LP and either prunes it, records an integral point, or queues it.
  auto evaluate = [&](VariableBox box) -> std::optional<LpResult> {
    clock.tick();
    auto lp = solve_lp(model, box);
    if (lp.status == LpResult::Status::unbounded)
      throw std::runtime_error("integer program relaxation is unbounded");
    if (lp.status == LpResult::Status::infeasible)
      return lp;
    if (is_integral(lp.x)) {
      offer(to_integers(lp.x));
    } else {
      offer(to_integers(lp.x)); // rounding down may already be feasible
      if (floor_of(lp.value) > incumbent_value)
        open.push(Node{std::move(box), lp.value, lp.x, seq++});
    }
    return lp;
  };

  const auto root = evaluate(VariableBox::from_model(model));
  if (root->status == LpResult::Status::infeasible) {
    sol.status = IlpStatus::infeasible;
    sol.nodes = clock.nodes();
    sol.elapsed_seconds = clock.elapsed();
    return sol;
  }
  sol.lp_relaxation_value = root->value;

  bool stopped = false;
  while (!open.empty()) {
    if (floor_of(open.top().bound) <= incumbent_value) {
      // Every remaining node is bounded by the top one.
      while (!open.empty())
        open.pop();
      break;
    }
    if (clock.exhausted()) {
      stopped = true;
      break;
    }
    Node node = open.top();
    open.pop();

    const std::size_t j = branching_variable(node.x);
    const BigInt down = floor_of(node.x[j]);

    VariableBox left = node.box;
    left.upper[j] = down;
    VariableBox right = std::move(node.box);
    right.lower[j] = down + 1;
    evaluate(std::move(left));
    evaluate(std::move(right));
  }

  sol.nodes = clock.nodes();
  sol.elapsed_seconds = clock.elapsed();
  sol.incumbent_value = incumbent_value;
  sol.assignment = incumbent;
  if (stopped) {
    sol.status = IlpStatus::bound_only;
    BigInt open_bound = floor_of(open.top().bound);
    sol.objective_value = open_bound > incumbent_value ? open_bound : incumbent_value;
  } else {
    sol.status = incumbent ? IlpStatus::optimal : IlpStatus::infeasible;
    sol.objective_value = incumbent_value < 0 ? BigInt(0) : incumbent_value;
  }
  return sol;
}

IpBound ip_upper_bound(const CodeParams &params, const Budget &budget) {
  const BigInt singleton = singleton_upper(params);
  if (params.d() == 1)
    return {singleton, IlpStatus::optimal, std::nullopt};
  const IlpModel model = build_model(params);
  IlpSolution sol = solve_ilp(model, budget);
  if (sol.status == IlpStatus::infeasible)
    throw std::logic_error("code-size integer program cannot be infeasible: X = 0 satisfies it");
  BigInt value = sol.objective_value < singleton ? sol.objective_value : singleton;
  return {value, sol.status, std::move(sol)};
}

} // namespace ulam
