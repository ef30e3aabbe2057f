#include "latcell/lp.hpp"

#include <cassert>
#include <limits>

namespace latcell {

namespace {

// Dictionary:  x_basis[i] = rhs[i] - sum_j T[i][j] * x_nonbasic[j]
//              z          = z0     + sum_j zc[j]   * x_nonbasic[j]
class Dictionary {
 public:
  Dictionary(const RatMatrix& a, const RatVec& b, int nvars)
      : nvars_(nvars), rows_(static_cast<int>(a.size())) {
    t_ = a;
    rhs_ = b;
    basis_.resize(rows_);
    for (int i = 0; i < rows_; ++i) basis_[i] = nvars_ + i;  // slacks
    nonbasic_.resize(nvars_);
    for (int j = 0; j < nvars_; ++j) nonbasic_[j] = j;
    zc_.assign(nvars_, Rat(0));
  }

  // z = sum over structural/aux variables v of cost[v] * x_v, re-expressed in
  // the current dictionary. cost is indexed by variable id.
  void set_objective(const std::vector<Rat>& cost) {
    z0_ = 0;
    zc_.assign(nonbasic_.size(), Rat(0));
    for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
      int v = nonbasic_[j];
      if (v < static_cast<int>(cost.size())) zc_[j] = cost[v];
    }
    for (int i = 0; i < rows_; ++i) {
      int v = basis_[i];
      if (v >= static_cast<int>(cost.size()) || cost[v] == 0) continue;
      z0_ += cost[v] * rhs_[i];
      for (std::size_t j = 0; j < nonbasic_.size(); ++j)
        zc_[j] -= cost[v] * t_[i][j];
    }
  }

  void add_aux_column() {
    aux_var_ = nvars_ + rows_;
    for (int i = 0; i < rows_; ++i) t_[i].push_back(Rat(-1));
    nonbasic_.push_back(aux_var_);
    zc_.push_back(Rat(0));
  }

  // Entering pivot for the auxiliary variable: leave at the most negative rhs.
  void aux_entering_pivot() {
    int r = 0;
    for (int i = 1; i < rows_; ++i) {
      if (rhs_[i] < rhs_[r] || (rhs_[i] == rhs_[r] && basis_[i] < basis_[r]))
        r = i;
    }
    pivot(r, static_cast<int>(nonbasic_.size()) - 1);
  }

  // Bland's rule loop. Returns Optimal or Unbounded.
  LpStatus run() {
    for (;;) {
      int epos = -1;
      for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
        if (zc_[j] > 0 && (epos < 0 || nonbasic_[j] < nonbasic_[epos]))
          epos = static_cast<int>(j);
      }
      if (epos < 0) return LpStatus::Optimal;
      int r = -1;
      Rat best;
      for (int i = 0; i < rows_; ++i) {
        if (t_[i][epos] <= 0) continue;
        Rat ratio = rhs_[i] / t_[i][epos];
        if (r < 0 || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r < 0) return LpStatus::Unbounded;
      pivot(r, epos);
    }
  }

  bool aux_is_basic(int* row) const {
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] == aux_var_) {
        *row = i;
        return true;
      }
    }
    return false;
  }

  // Pivot the (degenerate) auxiliary variable out of the basis, or drop its
  // row when it is identically zero.
  void evict_aux(int row) {
    int epos = -1;
    for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
      if (t_[row][j] == 0 || nonbasic_[j] == aux_var_) continue;
      if (epos < 0 || nonbasic_[j] < nonbasic_[epos]) epos = static_cast<int>(j);
    }
    if (epos >= 0) {
      pivot(row, epos);
      return;
    }
    basis_.erase(basis_.begin() + row);
    rhs_.erase(rhs_.begin() + row);
    t_.erase(t_.begin() + row);
    --rows_;
  }

  void drop_aux_column() {
    int pos = -1;
    for (std::size_t j = 0; j < nonbasic_.size(); ++j)
      if (nonbasic_[j] == aux_var_) pos = static_cast<int>(j);
    assert(pos >= 0);
    nonbasic_.erase(nonbasic_.begin() + pos);
    zc_.erase(zc_.begin() + pos);
    for (int i = 0; i < rows_; ++i) t_[i].erase(t_[i].begin() + pos);
    aux_var_ = -1;
  }

  bool needs_phase1() const {
    for (int i = 0; i < rows_; ++i)
      if (rhs_[i] < 0) return true;
    return false;
  }

  Rat objective_value() const { return z0_; }

  RatVec structural_solution() const {
    RatVec x(nvars_, Rat(0));
    for (int i = 0; i < rows_; ++i)
      if (basis_[i] < nvars_) x[basis_[i]] = rhs_[i];
    return x;
  }

  int aux_var() const { return aux_var_; }
  int rows() const { return rows_; }

 private:
  void pivot(int r, int epos) {
    const Rat a = t_[r][epos];
    assert(a != 0);
    const int evar = nonbasic_[epos];
    const int lvar = basis_[r];

    // Row r now expresses the entering variable.
    RatVec row = t_[r];
    Rat row_rhs = rhs_[r];
    for (std::size_t j = 0; j < row.size(); ++j) row[j] /= a;
    row[epos] = Rat(1) / a;  // coefficient of the leaving variable
    row_rhs /= a;

    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const Rat f = t_[i][epos];
      if (f == 0) continue;
      for (std::size_t j = 0; j < row.size(); ++j) t_[i][j] -= f * row[j];
      t_[i][epos] = -f / a;
      rhs_[i] -= f * row_rhs;
    }
    const Rat fz = zc_[epos];
    if (fz != 0) {
      for (std::size_t j = 0; j < row.size(); ++j) zc_[j] -= fz * row[j];
      zc_[epos] = -fz / a;
      z0_ += fz * row_rhs;
    }
    t_[r] = std::move(row);
    rhs_[r] = row_rhs;
    basis_[r] = evar;
    nonbasic_[epos] = lvar;
  }

  int nvars_;
  int rows_;
  RatMatrix t_;
  RatVec rhs_;
  std::vector<int> basis_;
  std::vector<int> nonbasic_;
  RatVec zc_;
  Rat z0_;
  int aux_var_ = -1;
};

}  // namespace

LpSolution simplex_max(const RatMatrix& a, const RatVec& b, const RatVec& c) {
  const int n = static_cast<int>(c.size());
  Dictionary d(a, b, n);

  if (d.needs_phase1()) {
    d.add_aux_column();
    d.aux_entering_pivot();
    std::vector<Rat> phase1(static_cast<std::size_t>(n + d.rows() + 1), Rat(0));
    phase1[d.aux_var()] = Rat(-1);
    d.set_objective(phase1);
    d.run();  // bounded below by construction
    if (d.objective_value() != 0) return {LpStatus::Infeasible, Rat(0), {}};
    int row;
    if (d.aux_is_basic(&row)) d.evict_aux(row);
    d.drop_aux_column();
  }

  std::vector<Rat> cost(static_cast<std::size_t>(n), Rat(0));
  for (int j = 0; j < n; ++j) cost[j] = c[j];
  d.set_objective(cost);
  const LpStatus st = d.run();
  if (st == LpStatus::Unbounded) return {LpStatus::Unbounded, Rat(0), {}};
  return {LpStatus::Optimal, d.objective_value(), d.structural_solution()};
}

LpSolution simplex_max_free(const RatMatrix& a, const RatVec& b, const RatVec& c) {
  const std::size_t n = c.size();
  RatMatrix a2(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    a2[i].reserve(2 * n);
    for (std::size_t j = 0; j < n; ++j) a2[i].push_back(a[i][j]);
    for (std::size_t j = 0; j < n; ++j) a2[i].push_back(-a[i][j]);
  }
  RatVec c2;
  c2.reserve(2 * n);
  for (std::size_t j = 0; j < n; ++j) c2.push_back(c[j]);
  for (std::size_t j = 0; j < n; ++j) c2.push_back(-c[j]);
  LpSolution s = simplex_max(a2, b, c2);
  if (s.status != LpStatus::Optimal) return s;
  RatVec x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = s.x[j] - s.x[n + j];
  s.x = std::move(x);
  return s;
}

bool lp_feasible(const RatMatrix& a, const RatVec& b) {
  RatVec c(a.empty() ? 0 : a[0].size(), Rat(0));
  return simplex_max(a, b, c).status == LpStatus::Optimal;
}

bool in_convex_hull(const std::vector<RatVec>& points, const RatVec& p) {
  if (points.empty()) return false;
  const std::size_t dim = p.size();
  const std::size_t m = points.size();
  // Variables: lambda_i >= 0.  Constraints: sum lambda_i v_i = p (two
  // inequalities per coordinate) and sum lambda_i = 1 (two inequalities).
  RatMatrix a;
  RatVec b;
  for (std::size_t cidx = 0; cidx < dim; ++cidx) {
    RatVec pos(m), neg(m);
    for (std::size_t i = 0; i < m; ++i) {
      pos[i] = points[i][cidx];
      neg[i] = -points[i][cidx];
    }
    a.push_back(std::move(pos));
    b.push_back(p[cidx]);
    a.push_back(std::move(neg));
    b.push_back(-p[cidx]);
  }
  a.emplace_back(m, Rat(1));
  b.push_back(Rat(1));
  a.emplace_back(m, Rat(-1));
  b.push_back(Rat(-1));
  return lp_feasible(a, b);
}

}  // namespace latcell
