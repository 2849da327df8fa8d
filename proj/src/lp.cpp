#include "cutkit/lp.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cutkit/error.hpp"

namespace cutkit {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-10;
constexpr std::size_t kRefactorEvery = 64;
constexpr std::size_t kMaxPivots = 2000000;

// Primal simplex on the dual  max b·y  s.t.  Aᵀy + s = c,  y, s >= 0.
// A generated primal row is a new dual column, so the current basis stays feasible.
// The primal point is the simplex multiplier vector of the optimal dual basis.
class DualColumnSimplex {
 public:
  explicit DualColumnSimplex(std::vector<double> cost) : p_(cost.size()), c_(std::move(cost)) {
    for (std::size_t k = 0; k < p_; ++k) {
      std::vector<double> e(p_, 0.0);
      e[k] = 1.0;
      cols_.push_back({std::move(e), 0.0});
    }
    basis_.resize(p_);
    for (std::size_t k = 0; k < p_; ++k) basis_[k] = k;
    binv_.assign(p_ * p_, 0.0);
    for (std::size_t k = 0; k < p_; ++k) binv_[k * p_ + k] = 1.0;
    xb_ = c_;
  }

  void add_column(std::vector<double> a, double obj) { cols_.push_back({std::move(a), obj}); }

  std::size_t pivots() const { return pivots_; }

  void optimize() {
    std::size_t degenerate = 0;
    while (true) {
      if (since_refactor_ >= kRefactorEvery) refactor();
      std::vector<double> pi = multipliers();
      bool bland = degenerate > 2 * p_ + 20;
      std::size_t enter = cols_.size();
      double best = kCostTol;
      for (std::size_t j = 0; j < cols_.size(); ++j) {
        if (in_basis(j)) continue;
        double d = cols_[j].obj;
        const auto& a = cols_[j].a;
        for (std::size_t k = 0; k < p_; ++k) d -= pi[k] * a[k];
        if (d > best) {
          enter = j;
          if (bland) break;
          best = d;
        }
      }
      if (enter == cols_.size()) return;

      std::vector<double> u = ftran(cols_[enter].a);
      std::size_t leave = p_;
      double ratio = 0.0;
      for (std::size_t i = 0; i < p_; ++i) {
        if (u[i] <= kPivotTol) continue;
        double r = std::max(xb_[i], 0.0) / u[i];
        if (leave == p_ || r < ratio - 1e-12) {
          leave = i;
          ratio = r;
        } else if (r <= ratio + 1e-12) {
          bool better = bland ? basis_[i] < basis_[leave] : u[i] > u[leave];
          if (better) {
            leave = i;
            ratio = r;
          }
        }
      }
      if (leave == p_) throw Infeasible("linear program is infeasible (a generated row cannot be satisfied)");
      degenerate = ratio <= 1e-12 ? degenerate + 1 : 0;
      pivot(leave, enter, u);
      if (++pivots_ > kMaxPivots) throw NumericalError("simplex pivot limit exceeded");
    }
  }

  std::vector<double> multipliers() const {
    std::vector<double> pi(p_, 0.0);
    for (std::size_t i = 0; i < p_; ++i) {
      double cb = cols_[basis_[i]].obj;
      if (cb == 0.0) continue;
      for (std::size_t k = 0; k < p_; ++k) pi[k] += cb * binv_[i * p_ + k];
    }
    return pi;
  }

  void refactor() {
    since_refactor_ = 0;
    std::vector<double> m(p_ * p_);
    for (std::size_t i = 0; i < p_; ++i)
      for (std::size_t k = 0; k < p_; ++k) m[k * p_ + i] = cols_[basis_[i]].a[k];
    std::vector<double> inv(p_ * p_, 0.0);
    for (std::size_t k = 0; k < p_; ++k) inv[k * p_ + k] = 1.0;
    for (std::size_t col = 0; col < p_; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r < p_; ++r)
        if (std::fabs(m[r * p_ + col]) > std::fabs(m[piv * p_ + col])) piv = r;
      if (std::fabs(m[piv * p_ + col]) < 1e-12) throw NumericalError("numerically singular basis");
      if (piv != col)
        for (std::size_t c = 0; c < p_; ++c) {
          std::swap(m[piv * p_ + c], m[col * p_ + c]);
          std::swap(inv[piv * p_ + c], inv[col * p_ + c]);
        }
      double d = m[col * p_ + col];
      for (std::size_t c = 0; c < p_; ++c) {
        m[col * p_ + c] /= d;
        inv[col * p_ + c] /= d;
      }
      for (std::size_t r = 0; r < p_; ++r) {
        if (r == col) continue;
        double f = m[r * p_ + col];
        if (f == 0.0) continue;
        for (std::size_t c = 0; c < p_; ++c) {
          m[r * p_ + c] -= f * m[col * p_ + c];
          inv[r * p_ + c] -= f * inv[col * p_ + c];
        }
      }
    }
    binv_ = std::move(inv);
    xb_ = ftran(c_);
    for (double& v : xb_)
      if (v < 0.0 && v > -1e-9) v = 0.0;
  }

 private:
  struct Column {
    std::vector<double> a;
    double obj;
  };

  bool in_basis(std::size_t j) const { return std::find(basis_.begin(), basis_.end(), j) != basis_.end(); }

  std::vector<double> ftran(const std::vector<double>& a) const {
    std::vector<double> u(p_, 0.0);
    for (std::size_t k = 0; k < p_; ++k) {
      if (a[k] == 0.0) continue;
      for (std::size_t i = 0; i < p_; ++i) u[i] += binv_[i * p_ + k] * a[k];
    }
    return u;
  }

  void pivot(std::size_t r, std::size_t enter, const std::vector<double>& u) {
    double ur = u[r];
    for (std::size_t k = 0; k < p_; ++k) binv_[r * p_ + k] /= ur;
    xb_[r] /= ur;
    for (std::size_t i = 0; i < p_; ++i) {
      if (i == r || u[i] == 0.0) continue;
      double f = u[i];
      for (std::size_t k = 0; k < p_; ++k) binv_[i * p_ + k] -= f * binv_[r * p_ + k];
      xb_[i] -= f * xb_[r];
      if (xb_[i] < 0.0 && xb_[i] > -1e-9) xb_[i] = 0.0;
    }
    basis_[r] = enter;
    ++since_refactor_;
  }

  std::size_t p_;
  std::vector<double> c_;
  std::vector<Column> cols_;
  std::vector<std::size_t> basis_;
  std::vector<double> binv_;
  std::vector<double> xb_;
  std::size_t pivots_ = 0;
  std::size_t since_refactor_ = 0;
};

struct Reduced {
  std::vector<int> free_index;  // var -> column position, -1 if fixed
  std::vector<int> vars;        // position -> var
};

Reduced reduce(const LpModel& m) {
  if (static_cast<int>(m.objective.size()) != m.num_vars) throw InvalidInput("objective length mismatch");
  Reduced r;
  r.free_index.assign(m.num_vars, -1);
  for (int j = 0; j < m.num_vars; ++j) {
    bool fixed = !m.fixed_zero.empty() && m.fixed_zero[j];
    if (m.objective[j] < 0.0) throw InvalidInput("objective coefficients must be nonnegative");
    if (!fixed) {
      r.free_index[j] = static_cast<int>(r.vars.size());
      r.vars.push_back(j);
    }
  }
  return r;
}

std::vector<double> dense_column(const Reduced& r, const LpRow& row, int num_vars) {
  std::vector<double> a(r.vars.size(), 0.0);
  for (auto [j, v] : row.coeffs) {
    if (j < 0 || j >= num_vars) throw InvalidInput("row coefficient index out of range");
    if (r.free_index[j] >= 0) a[r.free_index[j]] += v;
  }
  return a;
}

double row_activity(const LpRow& row, std::span<const double> x) {
  double s = 0.0;
  for (auto [j, v] : row.coeffs) s += v * x[j];
  return s;
}

std::vector<double> lift_point(const Reduced& r, const std::vector<double>& pi, int num_vars) {
  std::vector<double> x(num_vars, 0.0);
  for (std::size_t k = 0; k < r.vars.size(); ++k) x[r.vars[k]] = std::max(pi[k], 0.0);
  return x;
}

std::vector<std::pair<int, double>> canonical_key(const LpRow& row) {
  std::map<int, double> acc;
  for (auto [j, v] : row.coeffs) acc[j] += v;
  std::vector<std::pair<int, double>> key(acc.begin(), acc.end());
  key.emplace_back(-1, row.rhs);
  return key;
}

}  // namespace

LpSolution solve_with_separation(LpModel model, const SeparationOracle& oracle, const LpOptions& opt) {
  Reduced red = reduce(model);
  std::vector<double> cost;
  for (int j : red.vars) cost.push_back(model.objective[j]);
  DualColumnSimplex simplex(cost);
  std::map<std::vector<std::pair<int, double>>, bool> seen;

  auto add = [&](const LpRow& row) {
    auto key = canonical_key(row);
    if (seen.count(key)) return false;
    seen[key] = true;
    simplex.add_column(dense_column(red, row, model.num_vars), row.rhs);
    return true;
  };
  for (const LpRow& row : model.rows) add(row);
  std::size_t total = seen.size();

  std::vector<double> x;
  bool retried = false;
  while (true) {
    simplex.optimize();
    x = lift_point(red, simplex.multipliers(), model.num_vars);
    std::vector<LpRow> cuts = oracle ? oracle(x) : std::vector<LpRow>{};
    if (cuts.empty()) break;
    bool added = false;
    for (const LpRow& row : cuts) {
      if (row_activity(row, x) >= row.rhs - opt.sep_tol) continue;
      added |= add(row);
    }
    if (!added) {
      // Every violated row is already in the system: the iterate drifted numerically.
      if (retried) throw NumericalError("separation keeps returning rows the LP already contains");
      simplex.refactor();
      retried = true;
      continue;
    }
    retried = false;
    total = seen.size();
    if (total > opt.max_rows) throw LpIterationLimit("row generation exceeded the row cap", x);
  }
  LpSolution sol;
  sol.x = std::move(x);
  for (int j = 0; j < model.num_vars; ++j) sol.value += model.objective[j] * sol.x[j];
  sol.rows = total;
  sol.pivots = simplex.pivots();
  return sol;
}

LpSolution solve_lp(const LpModel& model, const LpOptions& opt) {
  return solve_with_separation(model, nullptr, opt);
}

}  // namespace cutkit
