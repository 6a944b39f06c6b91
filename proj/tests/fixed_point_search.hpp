#pragma once

// Brute-force search for fixed points of y -> Psi(My, alpha) over the box
// 0 <= y <= ybar: residual on a uniform grid, local minima as candidates,
// then projected Newton refinement. Test-only; shares no code with the solver.

#include <algorithm>
#include <cmath>
#include <vector>

#include "oracles.hpp"

namespace oracle {

using Point = std::vector<double>;

inline Point phi_map(const Dense& m, const Point& alpha, const Point& y) {
  const std::size_t n = y.size();
  Point out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += m[i][j] * y[j];
    out[i] = s / (1.0 + (1.0 + alpha[i]) * s);
  }
  return out;
}

inline double fp_residual(const Dense& m, const Point& alpha, const Point& y) {
  const Point p = phi_map(m, alpha, y);
  double r = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) r = std::max(r, std::abs(y[i] - p[i]));
  return r;
}

/// Solves A x = b by Gaussian elimination with partial pivoting.
inline bool solve_linear(Dense a, Point b, Point& x) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (std::abs(a[piv][c]) < 1e-300) return false;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t c = n; c-- > 0;) {
    double s = b[c];
    for (std::size_t k = c + 1; k < n; ++k) s -= a[c][k] * x[k];
    x[c] = s / a[c][c];
  }
  return true;
}

/// Newton on F(y) = y - Phi(y) with the analytic Jacobian, clipped to the box.
inline bool refine(const Dense& m, const Point& alpha, const Point& ybar, Point& y) {
  const std::size_t n = y.size();
  for (int it = 0; it < 200; ++it) {
    if (fp_residual(m, alpha, y) < 1e-14) return true;
    Dense jac(n, Point(n, 0.0));
    Point f(n);
    const Point p = phi_map(m, alpha, y);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += m[i][j] * y[j];
      const double denom = 1.0 + (1.0 + alpha[i]) * s;
      for (std::size_t j = 0; j < n; ++j) jac[i][j] = (i == j ? 1.0 : 0.0) - m[i][j] / (denom * denom);
      f[i] = y[i] - p[i];
    }
    Point step;
    if (!solve_linear(jac, f, step)) return false;
    for (std::size_t i = 0; i < n; ++i) y[i] = std::clamp(y[i] - step[i], 0.0, ybar[i]);
  }
  return fp_residual(m, alpha, y) < 1e-14;
}

/// All distinct fixed points found from the local minima of the residual on a
/// (resolution + 1)^n grid.
inline std::vector<Point> grid_fixed_points(const Dense& m, const Point& alpha, int resolution) {
  const std::size_t n = alpha.size();
  Point ybar(n);
  for (std::size_t i = 0; i < n; ++i) ybar[i] = 1.0 / (1.0 + alpha[i]);

  const std::size_t side = static_cast<std::size_t>(resolution) + 1;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= side;

  auto coords = [&](std::size_t idx, std::vector<int>& k) {
    for (std::size_t i = 0; i < n; ++i) {
      k[i] = static_cast<int>(idx % side);
      idx /= side;
    }
  };
  auto point_of = [&](const std::vector<int>& k) {
    Point y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = ybar[i] * k[i] / resolution;
    return y;
  };

  std::vector<double> res(total);
  std::vector<int> k(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    coords(idx, k);
    res[idx] = fp_residual(m, alpha, point_of(k));
  }

  std::size_t neighbours = 1;
  for (std::size_t i = 0; i < n; ++i) neighbours *= 3;

  std::vector<Point> found;
  std::vector<int> nb(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    coords(idx, k);
    bool is_min = true;
    for (std::size_t code = 0; code < neighbours && is_min; ++code) {
      std::size_t c = code;
      std::size_t nidx = 0;
      std::size_t stride = 1;
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i) {
        nb[i] = k[i] + static_cast<int>(c % 3) - 1;
        c /= 3;
        if (nb[i] < 0 || nb[i] > resolution) inside = false;
        nidx += static_cast<std::size_t>(std::max(nb[i], 0)) * stride;
        stride *= side;
      }
      if (inside && nidx != idx && res[nidx] < res[idx]) is_min = false;
    }
    if (!is_min) continue;
    Point y = point_of(k);
    if (!refine(m, alpha, ybar, y)) continue;
    const bool seen = std::any_of(found.begin(), found.end(), [&](const Point& q) {
      double d = 0.0;
      for (std::size_t i = 0; i < n; ++i) d = std::max(d, std::abs(q[i] - y[i]));
      return d < 1e-8;
    });
    if (!seen) found.push_back(y);
  }
  return found;
}

}  // namespace oracle
