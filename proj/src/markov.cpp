#include "rscore/markov.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "rscore/error.hpp"

namespace rscore {
namespace {

constexpr double kRowSumTolerance = 1e-10;

std::vector<std::vector<bool>> reachability(const Matrix& p) {
  const std::size_t n = p.rows();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::size_t> stack{start};
    reach[start][start] = true;
    while (!stack.empty()) {
      const std::size_t from = stack.back();
      stack.pop_back();
      for (std::size_t to = 0; to < n; ++to) {
        if (p(from, to) > 0.0 && !reach[start][to]) {
          reach[start][to] = true;
          stack.push_back(to);
        }
      }
    }
  }
  return reach;
}

std::string describe_components(const std::vector<std::vector<std::size_t>>& components) {
  std::ostringstream out;
  for (std::size_t c = 0; c < components.size(); ++c) {
    out << (c == 0 ? "" : " ") << '{';
    for (std::size_t i = 0; i < components[c].size(); ++i) {
      out << (i == 0 ? "" : ",") << components[c][i];
    }
    out << '}';
  }
  return out.str();
}

void check_stochastic(const Matrix& p) {
  if (p.rows() == 0) throw DataError("stationary distribution of an empty chain");
  if (p.rows() != p.cols()) {
    throw DataError("transition matrix is " + std::to_string(p.rows()) + "x" +
                    std::to_string(p.cols()) + ", not square");
  }
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (double v : p.row(i)) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw DataError("transition matrix row " + std::to_string(i) +
                        " has a negative or non-finite entry");
      }
    }
    if (std::abs(p.row_sum(i) - 1.0) > kRowSumTolerance) {
      throw DataError("transition matrix row " + std::to_string(i) + " sums to " +
                      std::to_string(p.row_sum(i)) + ", not 1");
    }
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> strongly_connected_components(const Matrix& p) {
  const std::size_t n = p.rows();
  const auto reach = reachability(p);
  std::vector<bool> assigned(n, false);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> component;
    for (std::size_t j = i; j < n; ++j) {
      if (!assigned[j] && reach[i][j] && reach[j][i]) {
        assigned[j] = true;
        component.push_back(j);
      }
    }
    components.push_back(std::move(component));
  }
  return components;
}

std::vector<double> stationary_gth(const Matrix& p) {
  check_stochastic(p);
  const auto components = strongly_connected_components(p);
  if (components.size() > 1) {
    throw DataError("transition matrix is reducible; strongly connected components: " +
                    describe_components(components));
  }

  const std::size_t n = p.rows();
  Matrix a = p;
  // Censor states n-1, n-2, ..., 1 out of the chain. After eliminating state
  // k, a(i, k) holds the expected visits to k per visit to i (i < k).
  for (std::size_t k = n - 1; k > 0; --k) {
    double exit_rate = 0.0;
    for (std::size_t j = 0; j < k; ++j) exit_rate += a(k, j);
    if (exit_rate <= 0.0) {
      throw DataError("state reduction broke down at state " + std::to_string(k));
    }
    for (std::size_t i = 0; i < k; ++i) a(i, k) /= exit_rate;
    for (std::size_t i = 0; i < k; ++i) {
      const double into_k = a(i, k);
      if (into_k == 0.0) continue;
      for (std::size_t j = 0; j < k; ++j) a(i, j) += into_k * a(k, j);
    }
  }

  std::vector<double> pi(n, 0.0);
  pi[0] = 1.0;
  double total = 1.0;
  for (std::size_t k = 1; k < n; ++k) {
    double mass = 0.0;
    for (std::size_t i = 0; i < k; ++i) mass += pi[i] * a(i, k);
    pi[k] = mass;
    total += mass;
  }
  for (double& v : pi) v /= total;
  return pi;
}

}  // namespace rscore
