#include "lpb/lp.hpp"

#include <optional>
#include <stdexcept>

namespace lpb {

namespace {

struct Column {
  std::size_t var = 0;
  int sign = 1;  // -1 for the negative half of a split free variable
};

// Canonical form: maximize chat . y  s.t.  A y <= b, y >= 0, over the
// structural columns; fixings substituted, >= rows negated, Minimize negated.
struct Canonical {
  std::vector<Column> cols;
  std::vector<std::vector<Rational>> a;  // m x cols
  std::vector<Rational> b;               // m
  std::vector<Rational> chat;            // cols
  Rational obj_offset;                   // objective contribution of fixings
  std::vector<std::optional<Rational>> fixed_value;
};

Canonical canonicalize(const LpProblem& p) {
  if (p.objective.size() != p.num_vars)
    throw std::invalid_argument("solve_exact: objective length mismatch");
  for (const LpRow& row : p.rows)
    if (row.coeffs.size() != p.num_vars)
      throw std::invalid_argument("solve_exact: row length mismatch");

  Canonical c;
  c.fixed_value.resize(p.num_vars);
  for (const auto& [idx, val] : p.fixed) {
    if (idx >= p.num_vars) throw std::invalid_argument("solve_exact: fixed index out of range");
    if (c.fixed_value[idx]) throw std::invalid_argument("solve_exact: duplicate fixed index");
    c.fixed_value[idx] = val;
  }
  for (std::size_t i = 0; i < p.num_vars; ++i) {
    if (c.fixed_value[i]) continue;
    c.cols.push_back({i, 1});
    if (!p.nonneg) c.cols.push_back({i, -1});
  }

  const int sense_sign = p.sense == Sense::Maximize ? 1 : -1;
  c.chat.resize(c.cols.size());
  for (std::size_t j = 0; j < c.cols.size(); ++j)
    c.chat[j] = sense_sign * c.cols[j].sign * p.objective[c.cols[j].var];
  c.obj_offset = 0;
  for (std::size_t i = 0; i < p.num_vars; ++i)
    if (c.fixed_value[i]) c.obj_offset += p.objective[i] * *c.fixed_value[i];

  c.a.resize(p.rows.size());
  c.b.resize(p.rows.size());
  for (std::size_t r = 0; r < p.rows.size(); ++r) {
    const LpRow& row = p.rows[r];
    Rational rhs(0);
    for (std::size_t i = 0; i < p.num_vars; ++i)
      if (c.fixed_value[i]) rhs -= row.coeffs[i] * *c.fixed_value[i];
    std::vector<Rational> coeffs(c.cols.size());
    for (std::size_t j = 0; j < c.cols.size(); ++j)
      coeffs[j] = c.cols[j].sign * row.coeffs[c.cols[j].var];
    if (row.rel == Relation::GreaterEqualZero) {
      for (Rational& v : coeffs) v = -v;
      rhs = -rhs;
    }
    c.a[r] = std::move(coeffs);
    c.b[r] = std::move(rhs);
  }
  return c;
}

class Tableau {
 public:
  explicit Tableau(const Canonical& c)
      : m_(c.b.size()), nstruct_(c.cols.size()), slack_begin_(nstruct_), art_begin_(nstruct_ + m_) {
    std::size_t n_art = 0;
    for (const Rational& bi : c.b)
      if (bi < 0) ++n_art;
    ncols_ = art_begin_ + n_art;
    rows_.assign(m_, std::vector<Rational>(ncols_ + 1));
    basis_.resize(m_);
    std::size_t next_art = art_begin_;
    for (std::size_t r = 0; r < m_; ++r) {
      auto& row = rows_[r];
      for (std::size_t j = 0; j < nstruct_; ++j) row[j] = c.a[r][j];
      row[slack_begin_ + r] = 1;
      row[ncols_] = c.b[r];
      if (c.b[r] < 0) {
        for (Rational& v : row) v = -v;
        row[next_art] = 1;
        basis_[r] = next_art++;
      } else {
        basis_[r] = slack_begin_ + r;
      }
    }
  }

  bool has_artificials() const { return ncols_ > art_begin_; }

  // Bland's rule on the given objective row; entering restricted to columns
  // below `limit`. Returns the entering column when unbounded.
  std::optional<std::size_t> run_simplex(std::vector<Rational>& obj, std::size_t limit) {
    for (;;) {
      std::size_t entering = limit;
      for (std::size_t j = 0; j < limit; ++j)
        if (obj[j] < 0) {
          entering = j;
          break;
        }
      if (entering == limit) return std::nullopt;  // optimal

      std::size_t leave = m_;
      for (std::size_t r = 0; r < m_; ++r) {
        if (rows_[r][entering] <= 0) continue;
        if (leave == m_) {
          leave = r;
          continue;
        }
        Rational lhs = rows_[r][ncols_] * rows_[leave][entering];
        Rational rhs = rows_[leave][ncols_] * rows_[r][entering];
        if (lhs < rhs || (lhs == rhs && basis_[r] < basis_[leave])) leave = r;
      }
      if (leave == m_) return entering;  // unbounded along this column
      pivot(leave, entering, obj);
    }
  }

  void pivot(std::size_t r, std::size_t e, std::vector<Rational>& obj) {
    auto& prow = rows_[r];
    Rational inv = prow[e];
    for (Rational& v : prow) v /= inv;
    for (std::size_t rr = 0; rr < m_; ++rr) {
      if (rr == r || rows_[rr][e] == 0) continue;
      eliminate(rows_[rr], prow, e);
    }
    if (obj[e] != 0) eliminate(obj, prow, e);
    basis_[r] = e;
  }

  static void eliminate(std::vector<Rational>& target, const std::vector<Rational>& prow, std::size_t e) {
    Rational factor = target[e];
    for (std::size_t j = 0; j < target.size(); ++j)
      if (prow[j] != 0) target[j] -= factor * prow[j];
    target[e] = 0;
  }

  // Reduced-cost row for column costs `cost` (size ncols_), value in the back.
  std::vector<Rational> objective_row(const std::vector<Rational>& cost) {
    std::vector<Rational> obj(ncols_ + 1);
    for (std::size_t j = 0; j < cost.size(); ++j) obj[j] = -cost[j];
    for (std::size_t r = 0; r < m_; ++r) {
      Rational cb = basis_[r] < cost.size() ? cost[basis_[r]] : Rational(0);
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= ncols_; ++j)
        if (rows_[r][j] != 0) obj[j] += cb * rows_[r][j];
    }
    return obj;
  }

  // After a feasible phase 1, pivot basic artificials onto real columns.
  void drive_out_artificials(std::vector<Rational>& obj) {
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < art_begin_) continue;
      std::size_t e = art_begin_;
      for (std::size_t j = 0; j < art_begin_; ++j)
        if (rows_[r][j] != 0) {
          e = j;
          break;
        }
      if (e < art_begin_) pivot(r, e, obj);
      // otherwise the row reads 0 = 0 and stays inert
    }
  }

  std::size_t m() const { return m_; }
  std::size_t ncols() const { return ncols_; }
  std::size_t slack_begin() const { return slack_begin_; }
  std::size_t art_begin() const { return art_begin_; }
  std::size_t basis(std::size_t r) const { return basis_[r]; }
  const Rational& entry(std::size_t r, std::size_t j) const { return rows_[r][j]; }
  const Rational& rhs(std::size_t r) const { return rows_[r][ncols_]; }

 private:
  std::size_t m_, nstruct_, slack_begin_, art_begin_, ncols_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_exact(const LpProblem& p) {
  Canonical c = canonicalize(p);
  Tableau tab(c);
  const std::size_t m = tab.m();

  if (tab.has_artificials()) {
    std::vector<Rational> cost1(tab.ncols());
    for (std::size_t j = tab.art_begin(); j < tab.ncols(); ++j) cost1[j] = -1;
    std::vector<Rational> obj1 = tab.objective_row(cost1);
    if (tab.run_simplex(obj1, tab.ncols()))
      throw std::logic_error("solve_exact: phase 1 reported unbounded");
    if (obj1.back() < 0) {
      LpSolution sol;
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    std::vector<Rational> dummy(tab.ncols() + 1);
    tab.drive_out_artificials(dummy);
  }

  std::vector<Rational> cost2(tab.ncols());
  for (std::size_t j = 0; j < c.chat.size(); ++j) cost2[j] = c.chat[j];
  std::vector<Rational> obj2 = tab.objective_row(cost2);
  std::optional<std::size_t> unbounded_col = tab.run_simplex(obj2, tab.art_begin());

  LpSolution sol;
  const int sense_sign = p.sense == Sense::Maximize ? 1 : -1;

  if (unbounded_col) {
    sol.status = LpStatus::Unbounded;
    std::vector<Rational> dir_cols(tab.ncols());
    dir_cols[*unbounded_col] = 1;
    for (std::size_t r = 0; r < m; ++r)
      dir_cols[tab.basis(r)] = -tab.entry(r, *unbounded_col);
    sol.ray.assign(p.num_vars, Rational(0));
    for (std::size_t j = 0; j < c.cols.size(); ++j)
      sol.ray[c.cols[j].var] += c.cols[j].sign * dir_cols[j];
    return sol;
  }

  sol.status = LpStatus::Optimal;
  std::vector<Rational> col_value(tab.ncols());
  for (std::size_t r = 0; r < m; ++r) col_value[tab.basis(r)] = tab.rhs(r);
  sol.primal.assign(p.num_vars, Rational(0));
  for (std::size_t i = 0; i < p.num_vars; ++i)
    if (c.fixed_value[i]) sol.primal[i] = *c.fixed_value[i];
  for (std::size_t j = 0; j < c.cols.size(); ++j)
    sol.primal[c.cols[j].var] += c.cols[j].sign * col_value[j];
  sol.objective_value = sense_sign * obj2.back() + c.obj_offset;
  sol.dual.resize(m);
  for (std::size_t r = 0; r < m; ++r) sol.dual[r] = obj2[tab.slack_begin() + r];
  return sol;
}

FeasibilityReport check_point(const LpProblem& p, const std::vector<Rational>& point) {
  if (point.size() != p.num_vars)
    throw std::invalid_argument("check_point: point length mismatch");
  FeasibilityReport rep;
  for (const auto& [idx, val] : p.fixed) {
    if (idx >= p.num_vars) throw std::invalid_argument("check_point: fixed index out of range");
    if (point[idx] != val)
      rep.violations.push_back({"fixed variable", idx, Rational(point[idx] - val)});
  }
  if (p.nonneg) {
    for (std::size_t i = 0; i < p.num_vars; ++i)
      if (point[i] < 0) rep.violations.push_back({"nonnegativity", i, point[i]});
  }
  for (std::size_t r = 0; r < p.rows.size(); ++r) {
    const LpRow& row = p.rows[r];
    if (row.coeffs.size() != p.num_vars)
      throw std::invalid_argument("check_point: row length mismatch");
    Rational v(0);
    for (std::size_t i = 0; i < p.num_vars; ++i)
      if (row.coeffs[i] != 0) v += row.coeffs[i] * point[i];
    Rational slack = row.rel == Relation::GreaterEqualZero ? v : Rational(-v);
    if (slack < 0) rep.violations.push_back({"row", r, slack});
    rep.row_slacks.push_back(std::move(slack));
  }
  return rep;
}

Rational dual_objective(const LpProblem& p, const LpSolution& sol) {
  if (sol.status != LpStatus::Optimal)
    throw std::invalid_argument("dual_objective: solution is not optimal");
  if (sol.dual.size() != p.rows.size())
    throw std::invalid_argument("dual_objective: multiplier count mismatch");
  std::vector<std::optional<Rational>> fixed_value(p.num_vars);
  for (const auto& [idx, val] : p.fixed) fixed_value[idx] = val;
  Rational total(0);
  for (std::size_t r = 0; r < p.rows.size(); ++r) {
    Rational rhs(0);
    for (std::size_t i = 0; i < p.num_vars; ++i)
      if (fixed_value[i] && p.rows[r].coeffs[i] != 0) rhs -= p.rows[r].coeffs[i] * *fixed_value[i];
    if (p.rows[r].rel == Relation::GreaterEqualZero) rhs = -rhs;
    total += sol.dual[r] * rhs;
  }
  Rational offset(0);
  for (std::size_t i = 0; i < p.num_vars; ++i)
    if (fixed_value[i]) offset += p.objective[i] * *fixed_value[i];
  const int sense_sign = p.sense == Sense::Maximize ? 1 : -1;
  return Rational(sense_sign * total + offset);
}

}  // namespace lpb
