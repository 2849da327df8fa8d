#include <doctest.h>

#include <algorithm>
#include <random>

#include "cutkit/error.hpp"
#include "cutkit/lp.hpp"

using namespace cutkit;

TEST_CASE("single row") {
  LpModel m;
  m.num_vars = 1;
  m.objective = {1.0};
  m.rows.push_back({{{0, 1.0}}, 1.0});
  auto s = solve_lp(m);
  CHECK(s.value == doctest::Approx(1.0));
  CHECK(s.x[0] == doctest::Approx(1.0));
}

TEST_CASE("covering LP with a vertex optimum") {
  // min x+y+z, x+y>=1, y+z>=1, x+z>=1 -> 1.5 at (1/2,1/2,1/2)
  LpModel m;
  m.num_vars = 3;
  m.objective = {1, 1, 1};
  m.rows = {{{{0, 1.0}, {1, 1.0}}, 1.0}, {{{1, 1.0}, {2, 1.0}}, 1.0}, {{{0, 1.0}, {2, 1.0}}, 1.0}};
  auto s = solve_lp(m);
  CHECK(s.value == doctest::Approx(1.5));
}

TEST_CASE("fixed-zero variables") {
  LpModel m;
  m.num_vars = 2;
  m.objective = {1, 5};
  m.fixed_zero = {true, false};
  m.rows.push_back({{{0, 1.0}, {1, 1.0}}, 1.0});
  auto s = solve_lp(m);
  CHECK(s.x[0] == doctest::Approx(0.0));
  CHECK(s.value == doctest::Approx(5.0));
}

TEST_CASE("row generation reaches the full-system optimum") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 6;
    std::vector<LpRow> all;
    for (int r = 0; r < 12; ++r) {
      LpRow row;
      for (int j = 0; j < n; ++j)
        if (rng() % 3 == 0) row.coeffs.push_back({j, 1.0});
      if (row.coeffs.empty()) row.coeffs.push_back({static_cast<int>(rng() % n), 1.0});
      row.rhs = 1.0;
      all.push_back(row);
    }
    LpModel full;
    full.num_vars = n;
    for (int j = 0; j < n; ++j) full.objective.push_back(1.0 + static_cast<double>(rng() % 4));
    full.rows = all;
    LpModel lazy = full;
    lazy.rows.clear();
    auto oracle = [&](std::span<const double> x) {
      std::vector<LpRow> out;
      for (const auto& row : all) {
        double lhs = 0;
        for (auto [j, c] : row.coeffs) lhs += c * x[j];
        if (lhs < row.rhs - 1e-7) {
          out.push_back(row);
          break;
        }
      }
      return out;
    };
    auto a = solve_lp(full);
    auto b = solve_with_separation(lazy, oracle);
    CHECK(a.value == doctest::Approx(b.value).epsilon(1e-9));
    CHECK(oracle(b.x).empty());

    // permuting variables leaves the value unchanged
    std::vector<int> perm(n);
    for (int j = 0; j < n; ++j) perm[j] = n - 1 - j;
    LpModel p = full;
    for (int j = 0; j < n; ++j) p.objective[perm[j]] = full.objective[j];
    for (auto& row : p.rows)
      for (auto& [j, c] : row.coeffs) j = perm[j];
    CHECK(std::abs(solve_lp(p).value - a.value) < 1e-9);
  }
}

TEST_CASE("row cap") {
  LpModel m;
  m.num_vars = 1;
  m.objective = {1.0};
  int calls = 0;
  LpOptions opt;
  opt.max_rows = 5;
  auto oracle = [&](std::span<const double> x) {
    ++calls;
    return std::vector<LpRow>{{{{0, 1.0}}, x[0] + 1.0}};
  };
  CHECK_THROWS_AS(solve_with_separation(m, oracle, opt), LpIterationLimit);
}
