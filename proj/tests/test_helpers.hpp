#pragma once

#include "netsirs/core_model.hpp"
#include "oracles.hpp"

inline netsirs::Matrix to_matrix(const oracle::Dense& d) {
  const auto n = static_cast<Eigen::Index>(d.size());
  netsirs::Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = d[i][j];
  return m;
}

inline oracle::Dense to_dense(const netsirs::Matrix& m) {
  oracle::Dense d(m.rows(), std::vector<double>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
  return d;
}

inline netsirs::Vector vec(std::initializer_list<double> v) {
  netsirs::Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

inline double sup(const netsirs::Vector& v) { return v.lpNorm<Eigen::Infinity>(); }
