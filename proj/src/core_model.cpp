#include "netsirs/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "netsirs/errors.hpp"

namespace netsirs {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::NonPositiveRate: return "NonPositiveRate";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::OutOfSimplex: return "OutOfSimplex";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NonPositiveVector: return "NonPositiveVector";
    case ErrorKind::EpsilonStarNotFound: return "EpsilonStarNotFound";
    case ErrorKind::OutOfCap: return "OutOfCap";
    case ErrorKind::InvalidInitial: return "InvalidInitial";
    case ErrorKind::SimplexViolation: return "SimplexViolation";
    case ErrorKind::NotEquilibrium: return "NotEquilibrium";
    case ErrorKind::NonPositiveEquilibrium: return "NonPositiveEquilibrium";
    case ErrorKind::SingularShift: return "SingularShift";
    case ErrorKind::EigenFailure: return "EigenFailure";
    case ErrorKind::InvalidAtBoundary: return "InvalidAtBoundary";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch:
    case ErrorKind::NegativeEntry:
    case ErrorKind::NonPositiveRate:
    case ErrorKind::Reducible:
    case ErrorKind::OutOfSimplex:
    case ErrorKind::NotIrreducible:
    case ErrorKind::NonPositiveVector:
    case ErrorKind::OutOfCap:
    case ErrorKind::InvalidInitial:
    case ErrorKind::InvalidConfig:
    case ErrorKind::ParseError:
      return true;
    default:
      return false;
  }
}

namespace {

// Tarjan's strongly connected components, iterative. Returns the number of
// components of the support digraph.
int count_strong_components(const Matrix& W) {
  const int n = static_cast<int>(W.rows());
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int next_index = 0;
  int components = 0;

  struct Frame {
    int node;
    int next_child;
  };
  std::vector<Frame> call;

  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;

    while (!call.empty()) {
      Frame& f = call.back();
      const int v = f.node;
      if (f.next_child < n) {
        const int w = f.next_child++;
        if (!(W(v, w) > 0.0)) continue;
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
        } while (w != v);
        ++components;
      }
      call.pop_back();
      if (!call.empty()) {
        const int parent = call.back().node;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return components;
}

}  // namespace

bool check_irreducible(const Matrix& W) {
  if (W.rows() == 0) return false;
  return count_strong_components(W) == 1;
}

ModelInstance::ModelInstance(Matrix w, RateProfiles rates) : w_(std::move(w)), rates_(std::move(rates)) {
  const Eigen::Index n = w_.rows();
  m_ = (w_.array().colwise() / rates_.gamma.array()).matrix();
  alpha_ = rates_.gamma.cwiseQuotient(rates_.delta);
  ybar_ = (Vector::Ones(n) + alpha_).cwiseInverse();
}

ModelInstance validate_model(const Matrix& W, const Vector& gamma, const Vector& delta) {
  const Eigen::Index n = W.rows();
  if (n < 1 || W.cols() != n || gamma.size() != n || delta.size() != n) {
    std::ostringstream msg;
    msg << "W is " << W.rows() << "x" << W.cols() << ", gamma has " << gamma.size() << " entries, delta has "
        << delta.size();
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!std::isfinite(W(i, j)) || W(i, j) < 0.0) {
        std::ostringstream msg;
        msg << "W(" << i << "," << j << ") = " << W(i, j);
        throw Error(ErrorKind::NegativeEntry, msg.str());
      }
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!std::isfinite(gamma(i)) || !(gamma(i) > 0.0)) {
      throw Error(ErrorKind::NonPositiveRate, "gamma[" + std::to_string(i) + "] = " + std::to_string(gamma(i)));
    }
    if (!std::isfinite(delta(i)) || !(delta(i) > 0.0)) {
      throw Error(ErrorKind::NonPositiveRate, "delta[" + std::to_string(i) + "] = " + std::to_string(delta(i)));
    }
  }
  if (n == 1 ? !(W(0, 0) > 0.0) : !check_irreducible(W)) {
    throw Error(ErrorKind::Reducible, "support graph of W is not strongly connected");
  }
  return ModelInstance(W, RateProfiles{gamma, delta});
}

FullState full_from_reduced(const ReducedState& s, double tol) {
  if (s.y.size() != s.z.size()) {
    throw Error(ErrorKind::DimensionMismatch, "y and z differ in length");
  }
  for (Eigen::Index i = 0; i < s.y.size(); ++i) {
    if (s.y(i) < -tol || s.z(i) < -tol || s.y(i) + s.z(i) > 1.0 + tol || !std::isfinite(s.y(i) + s.z(i))) {
      std::ostringstream msg;
      msg << "node " << i << ": y = " << s.y(i) << ", z = " << s.z(i);
      throw Error(ErrorKind::OutOfSimplex, msg.str());
    }
  }
  return FullState{Vector::Ones(s.y.size()) - s.y - s.z, s.y, s.z};
}

double simplex_defect(const FullState& s) {
  double defect = 0.0;
  for (Eigen::Index i = 0; i < s.x.size(); ++i) {
    defect = std::max(defect, std::abs(s.x(i) + s.y(i) + s.z(i) - 1.0));
    defect = std::max({defect, -s.x(i), -s.y(i), -s.z(i)});
  }
  return defect;
}

}  // namespace netsirs
