#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace cutkit {

/// sum coeffs * x >= rhs
struct LpRow {
  std::vector<std::pair<int, double>> coeffs;
  double rhs = 1.0;
};

/// min objective·x  s.t. rows, x >= 0, x_j = 0 for fixed_zero[j].
struct LpModel {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<LpRow> rows;
  std::vector<bool> fixed_zero;
};

/// Returns rows violated at x by more than the separation tolerance; empty means feasible.
using SeparationOracle = std::function<std::vector<LpRow>(std::span<const double> x)>;

struct LpOptions {
  double sep_tol = 1e-7;
  double feas_tol = 1e-7;
  std::size_t max_rows = 100000;
};

struct LpSolution {
  std::vector<double> x;
  double value = 0.0;
  std::size_t rows = 0;
  std::size_t pivots = 0;
};

/// Cutting-plane loop around a revised simplex; returns a basic optimal point.
LpSolution solve_with_separation(LpModel model, const SeparationOracle& oracle, const LpOptions& opt = {});

/// Solves the fixed row set only.
LpSolution solve_lp(const LpModel& model, const LpOptions& opt = {});

}  // namespace cutkit
