#include "ulam/ilp.hpp"

#include <stdexcept>

namespace ulam {

namespace {

// Dense tableau simplex over the rationals with implicit variable bounds.
// Columns are laid out as [structural | slack per "<=" row | artificial].
class BoundedSimplex {
public:
  BoundedSimplex(const IlpModel &model, const VariableBox &box) {
    const std::size_t nx = model.num_vars();
    const std::size_t mle = model.inequality_rows.size();
    m_ = mle + model.equality_rows.size();

    struct Pending {
      const LinearRow *row;
      bool has_slack;
    };
    std::vector<Pending> rows;
    for (const auto &r : model.inequality_rows)
      rows.push_back({&r, true});
    for (const auto &r : model.equality_rows)
      rows.push_back({&r, false});

    // Residuals with every structural variable at its lower bound decide which rows need an artificial.
    std::vector<Rational> residual(m_);
    std::size_t n_art = 0;
    std::vector<int> art_sign(m_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      Rational r = rows[i].row->rhs;
      for (const auto &t : rows[i].row->terms)
        r -= Rational(t.coef * box.lower[t.var]);
      residual[i] = r;
      if (!rows[i].has_slack || sgn(r) < 0) {
        art_sign[i] = sgn(r) < 0 ? -1 : 1;
        ++n_art;
      }
    }

    nx_ = nx;
    first_art_ = nx + mle;
    ncols_ = first_art_ + n_art;
    tab_.assign(m_ * ncols_, Rational(0));
    beta_.assign(m_, Rational(0));
    basis_.assign(m_, 0);
    row_of_.assign(ncols_, -1);
    at_upper_.assign(ncols_, false);
    lo_.assign(ncols_, Rational(0));
    up_.assign(ncols_, std::nullopt);
    for (std::size_t j = 0; j < nx; ++j) {
      lo_[j] = box.lower[j];
      if (box.upper[j])
        up_[j] = Rational(*box.upper[j]);
    }

    std::size_t art = first_art_;
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational sign = art_sign[i] < 0 ? -1 : 1;
      for (const auto &t : rows[i].row->terms)
        at(i, t.var) += sign * Rational(t.coef);
      if (rows[i].has_slack)
        at(i, nx + i) = sign;
      if (art_sign[i] != 0) {
        at(i, art) = 1;
        basis_[i] = art;
        row_of_[art] = static_cast<long>(i);
        beta_[i] = sign * residual[i];
        ++art;
      } else {
        basis_[i] = nx + i;
        row_of_[nx + i] = static_cast<long>(i);
        beta_[i] = residual[i];
      }
    }
  }

  LpResult solve(const IlpModel &model) {
    LpResult result;
    // Phase one: drive the artificials to zero.
    if (ncols_ > first_art_) {
      std::vector<Rational> cost(ncols_, Rational(0));
      for (std::size_t j = first_art_; j < ncols_; ++j)
        cost[j] = -1;
      if (!optimize(cost, result.pivots))
        throw std::logic_error("phase one cannot be unbounded");
      for (std::size_t i = 0; i < m_; ++i)
        if (basis_[i] >= first_art_ && sgn(beta_[i]) != 0) {
          result.status = LpResult::Status::infeasible;
          return result;
        }
      for (std::size_t j = first_art_; j < ncols_; ++j)
        up_[j] = Rational(0);
    }

    std::vector<Rational> cost(ncols_, Rational(0));
    for (const auto &t : model.objective)
      cost[t.var] += Rational(t.coef);
    if (!optimize(cost, result.pivots)) {
      result.status = LpResult::Status::unbounded;
      return result;
    }

    result.status = LpResult::Status::optimal;
    result.x.assign(nx_, Rational(0));
    for (std::size_t j = 0; j < nx_; ++j)
      result.x[j] = value_of(j);
    result.value = 0;
    for (const auto &t : model.objective)
      result.value += Rational(t.coef) * result.x[t.var];
    return result;
  }

private:
  Rational &at(std::size_t i, std::size_t j) { return tab_[i * ncols_ + j]; }

  Rational value_of(std::size_t j) const {
    if (row_of_[j] >= 0)
      return beta_[static_cast<std::size_t>(row_of_[j])];
    return at_upper_[j] ? *up_[j] : lo_[j];
  }

  bool fixed(std::size_t j) const { return up_[j] && *up_[j] == lo_[j]; }

  // Maximizes cost.x from the current basis. Returns false when unbounded.
  bool optimize(const std::vector<Rational> &cost, std::size_t &pivots) {
    std::vector<Rational> reduced(cost);
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational &cb = cost[basis_[i]];
      if (sgn(cb) == 0)
        continue;
      for (std::size_t j = 0; j < ncols_; ++j)
        if (sgn(at(i, j)) != 0)
          reduced[j] -= cb * at(i, j);
    }

    std::vector<std::size_t> nz;
    for (;;) {
      // Bland: lowest-index improving column.
      std::size_t enter = ncols_;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (row_of_[j] >= 0 || fixed(j))
          continue;
        const int s = sgn(reduced[j]);
        if ((!at_upper_[j] && s > 0) || (at_upper_[j] && s < 0)) {
          enter = j;
          break;
        }
      }
      if (enter == ncols_)
        return true;

      const int dir = at_upper_[enter] ? -1 : 1;
      bool have_step = false;
      Rational step;
      long leave_row = -1; // -1: bound flip of the entering variable
      bool leave_to_upper = false;
      if (up_[enter]) {
        step = *up_[enter] - lo_[enter];
        have_step = true;
      }
      for (std::size_t i = 0; i < m_; ++i) {
        const int a = sgn(at(i, enter));
        if (a == 0)
          continue;
        // d(beta_i)/d(step) = -a * dir
        const std::size_t bv = basis_[i];
        Rational limit;
        bool to_upper;
        if (a * dir > 0) {
          limit = (beta_[i] - lo_[bv]) / abs(at(i, enter));
          to_upper = false;
        } else {
          if (!up_[bv])
            continue;
          limit = (*up_[bv] - beta_[i]) / abs(at(i, enter));
          to_upper = true;
        }
        bool take = false;
        if (!have_step)
          take = true;
        else if (limit < step)
          take = true;
        else if (limit == step && leave_row >= 0 && bv < basis_[static_cast<std::size_t>(leave_row)])
          take = true;
        if (take) {
          step = limit;
          have_step = true;
          leave_row = static_cast<long>(i);
          leave_to_upper = to_upper;
        }
      }
      if (!have_step)
        return false;

      for (std::size_t i = 0; i < m_; ++i)
        if (sgn(at(i, enter)) != 0)
          beta_[i] -= at(i, enter) * step * dir;

      if (leave_row < 0) {
        at_upper_[enter] = !at_upper_[enter];
        continue;
      }

      const auto r = static_cast<std::size_t>(leave_row);
      const std::size_t leaving = basis_[r];
      Rational entering_value = (at_upper_[enter] ? *up_[enter] : lo_[enter]) + step * dir;
      row_of_[leaving] = -1;
      at_upper_[leaving] = leave_to_upper;
      at_upper_[enter] = false;
      basis_[r] = enter;
      row_of_[enter] = static_cast<long>(r);
      beta_[r] = entering_value;

      const Rational pivot = at(r, enter);
      nz.clear();
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (sgn(at(r, j)) != 0) {
          at(r, j) /= pivot;
          nz.push_back(j);
        }
      }
      for (std::size_t i = 0; i < m_; ++i) {
        if (i == r || sgn(at(i, enter)) == 0)
          continue;
        const Rational f = at(i, enter);
        for (std::size_t j : nz)
          at(i, j) -= f * at(r, j);
      }
      if (sgn(reduced[enter]) != 0) {
        const Rational f = reduced[enter];
        for (std::size_t j : nz)
          reduced[j] -= f * at(r, j);
      }
      ++pivots;
    }
  }

  std::size_t m_ = 0;
  std::size_t nx_ = 0;
  std::size_t first_art_ = 0;
  std::size_t ncols_ = 0;
  std::vector<Rational> tab_;
  std::vector<Rational> beta_;
  std::vector<std::size_t> basis_;
  std::vector<long> row_of_;
  std::vector<bool> at_upper_;
  std::vector<Rational> lo_;
  std::vector<std::optional<Rational>> up_;
};

} // namespace

LpResult solve_lp(const IlpModel &model, const VariableBox &box) {
  for (std::size_t j = 0; j < model.num_vars(); ++j)
    if (box.upper[j] && *box.upper[j] < box.lower[j])
      return {};
  BoundedSimplex simplex(model, box);
  return simplex.solve(model);
}

Rational solve_lp_relaxation(const IlpModel &model) {
  const auto result = solve_lp(model, VariableBox::from_model(model));
  if (result.status == LpResult::Status::infeasible)
    throw std::runtime_error("LP relaxation is infeasible");
  if (result.status == LpResult::Status::unbounded)
    throw std::runtime_error("LP relaxation is unbounded");
  return result.value;
}

} // namespace ulam
