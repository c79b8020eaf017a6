#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <vector>

namespace fraclap {

/// Quadrature rule on the unit interval [0, 1].
struct Rule1d {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Gauss-Jacobi rule on [0, 1] for the weight (1 - t)^alpha * t^beta.
/// Nodes and weights come from the Jacobi matrix (Golub-Welsch).
Rule1d gauss_jacobi(int n, double alpha, double beta);

/// Gauss-Legendre rule on [0, 1]; cached per order.
const Rule1d& gauss_legendre(int n);

/// Cached Gauss-Jacobi rule; alpha and beta are matched exactly.
const Rule1d& gauss_jacobi_cached(int n, double alpha, double beta);

/// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
struct KronrodG7K15 {
  static const double xk[8];   // abscissae, xk[7] = 0
  static const double wk[8];   // Kronrod weights
  static const double wg[4];   // Gauss weights for xk[1], xk[3], xk[5], xk[7]
};

/// Accepted subinterval of an adaptive partition.
struct Panel {
  double a;
  double b;
};

struct AdaptiveStatus {
  double error = 0.0;
  int intervals = 0;
  bool converged = true;
};

namespace detail {

inline double norm_of(double v) { return std::abs(v); }
template <typename Derived>
double norm_of(const Eigen::MatrixBase<Derived>& v) {
  return v.template lpNorm<Eigen::Infinity>();
}

template <typename T, typename F>
void kronrod(F& f, double a, double b, T& k15, double& err) {
  const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
  T fc = f(c);
  T g7 = fc * KronrodG7K15::wg[3];
  k15 = fc * KronrodG7K15::wk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = hw * KronrodG7K15::xk[j];
    T f1 = f(c - dx);
    T f2 = f(c + dx);
    k15 = k15 + (f1 + f2) * KronrodG7K15::wk[j];
    if (j % 2 == 1) g7 = g7 + (f1 + f2) * KronrodG7K15::wg[j / 2];
  }
  k15 = k15 * hw;
  g7 = g7 * hw;
  err = norm_of(k15 - g7);
}

}  // namespace detail

/// Globally adaptive G7K15 integration of a scalar- or vector-valued function.
/// Stops when the summed error estimate is below max(abs_tol, rel_tol*|I|).
/// Breakpoints split [a, b] before refinement starts.
template <typename T, typename F>
T integrate_adaptive(F&& f, const std::vector<double>& breaks, double abs_tol, double rel_tol,
                     AdaptiveStatus* status = nullptr, int max_intervals = 4000,
                     std::vector<Panel>* panels = nullptr) {
  struct Item {
    double a, b, err;
    T val;
    bool operator<(const Item& o) const { return err < o.err; }
  };
  std::priority_queue<Item> heap;
  T total{};
  bool init = false;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    Item it{breaks[i], breaks[i + 1], 0.0, T{}};
    detail::kronrod<T>(f, it.a, it.b, it.val, it.err);
    total = init ? T(total + it.val) : it.val;
    init = true;
    total_err += it.err;
    heap.push(std::move(it));
  }
  if (!init) {
    if (status) *status = AdaptiveStatus{};
    return total;
  }
  int count = static_cast<int>(heap.size());
  while (total_err > std::max(abs_tol, rel_tol * detail::norm_of(total)) && count < max_intervals) {
    Item top = heap.top();
    heap.pop();
    const double m = 0.5 * (top.a + top.b);
    if (!(m > top.a && m < top.b)) {
      heap.push(std::move(top));
      break;
    }
    Item l{top.a, m, 0.0, T{}}, r{m, top.b, 0.0, T{}};
    detail::kronrod<T>(f, l.a, l.b, l.val, l.err);
    detail::kronrod<T>(f, r.a, r.b, r.val, r.err);
    total = total - top.val + l.val + r.val;
    total_err += l.err + r.err - top.err;
    heap.push(std::move(l));
    heap.push(std::move(r));
    ++count;
  }
  // Re-sum to remove cancellation drift from incremental updates.
  std::vector<Item> items;
  items.reserve(heap.size());
  while (!heap.empty()) {
    items.push_back(heap.top());
    heap.pop();
  }
  std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) { return x.a < y.a; });
  total = items.front().val;
  total_err = items.front().err;
  for (std::size_t i = 1; i < items.size(); ++i) {
    total = total + items[i].val;
    total_err += items[i].err;
  }
  if (panels) {
    panels->clear();
    for (const auto& it : items) panels->push_back({it.a, it.b});
  }
  if (status) {
    status->error = total_err;
    status->intervals = count;
    status->converged = total_err <= std::max(abs_tol, rel_tol * detail::norm_of(total));
  }
  return total;
}

/// Scalar convenience overload on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                 double rel_tol, AdaptiveStatus* status = nullptr);

/// Appends the 15 Kronrod nodes and weights of panel [a, b].
void append_kronrod_nodes(double a, double b, std::vector<double>& x, std::vector<double>& w);

}  // namespace fraclap
