/**
 * @file jet.cpp
 * @brief Jet tables and arithmetic.
 */
#include "klab/jet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace klab {

namespace {

constexpr int kKeyBase = kMaxOrder + 1;

int key_of(const MultiIndex& a) { return a[0] + kKeyBase * (a[1] + kKeyBase * a[2]); }

struct Table {
  std::vector<MultiIndex> indices;
  std::array<int, kKeyBase * kKeyBase * kKeyBase> position{};
  struct Triple {
    int i, j, k;
  };
  std::vector<Triple> products;
};

Table build_table(int d, int order) {
  Table t;
  t.position.fill(-1);
  for (int deg = 0; deg <= order; ++deg) {
    // graded, lexicographic inside each degree
    for (int a0 = deg; a0 >= 0; --a0) {
      for (int a1 = (d > 1 ? deg - a0 : 0); a1 >= 0; --a1) {
        int a2 = deg - a0 - a1;
        if (d < 2 && a1 != 0) continue;
        if (d < 3 && a2 != 0) continue;
        MultiIndex m{a0, a1, a2};
        t.position[key_of(m)] = static_cast<int>(t.indices.size());
        t.indices.push_back(m);
      }
    }
  }
  const int n = static_cast<int>(t.indices.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& a = t.indices[i];
      const auto& b = t.indices[j];
      if (total_degree(a) + total_degree(b) > order) continue;
      MultiIndex s{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
      t.products.push_back({i, j, t.position[key_of(s)]});
    }
  }
  return t;
}

const Table& table(int d, int order) {
  static const auto tables = [] {
    std::array<std::array<Table, kMaxOrder + 1>, kMaxDim + 1> all;
    for (int d = 1; d <= kMaxDim; ++d)
      for (int n = 0; n <= kMaxOrder; ++n) all[d][n] = build_table(d, n);
    return all;
  }();
  return tables[d][order];
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double multi_factorial(const MultiIndex& a) { return factorial(a[0]) * factorial(a[1]) * factorial(a[2]); }

}  // namespace

const std::vector<MultiIndex>& multi_indices(int d, int order) { return table(d, order).indices; }

std::vector<MultiIndex> multi_indices_of_degree(int d, int order) {
  std::vector<MultiIndex> out;
  for (const auto& a : multi_indices(d, order))
    if (total_degree(a) == order) out.push_back(a);
  return out;
}

int monomial_count(int d, int order) { return static_cast<int>(table(d, order).indices.size()); }

Jet::Jet(int dim, int order) : dim_(dim), order_(order) {
  if (dim < 1 || dim > kMaxDim || order < 0 || order > kMaxOrder)
    throw std::invalid_argument("Jet: dimension or order out of range");
}

Jet Jet::constant(int dim, int order, double value) {
  Jet j(dim, order);
  j.c_[0] = value;
  return j;
}

Jet Jet::variable(int dim, int order, int i, double x0_i) {
  Jet j(dim, order);
  j.c_[0] = x0_i;
  if (order >= 1) {
    MultiIndex e{0, 0, 0};
    e[i] = 1;
    j.coeff_ref(e) = 1.0;
  }
  return j;
}

int Jet::size() const { return monomial_count(dim_, order_); }

double Jet::coeff(const MultiIndex& alpha) const {
  if (total_degree(alpha) > order_) return 0.0;
  int pos = table(dim_, order_).position[key_of(alpha)];
  return pos < 0 ? 0.0 : c_[pos];
}

double& Jet::coeff_ref(const MultiIndex& alpha) {
  int pos = total_degree(alpha) > order_ ? -1 : table(dim_, order_).position[key_of(alpha)];
  if (pos < 0) throw std::out_of_range("Jet::coeff_ref: multi-index outside jet");
  return c_[pos];
}

double Jet::partial(const MultiIndex& alpha) const { return coeff(alpha) * multi_factorial(alpha); }

Jet Jet::derivative(const MultiIndex& alpha) const {
  const int k = total_degree(alpha);
  if (k > order_) throw std::out_of_range("Jet::derivative: order exceeds truncation");
  Jet r(dim_, order_ - k);
  const auto& idx = table(dim_, r.order_).indices;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto& g = idx[i];
    MultiIndex s{g[0] + alpha[0], g[1] + alpha[1], g[2] + alpha[2]};
    r.c_[i] = coeff(s) * multi_factorial(s) / multi_factorial(g);
  }
  return r;
}

Jet Jet::truncated(int order) const {
  if (order > order_) throw std::out_of_range("Jet::truncated: cannot raise order");
  Jet r(dim_, order);
  // graded ordering keeps lower-degree coefficients as a prefix
  for (int i = 0; i < r.size(); ++i) r.c_[i] = c_[i];
  return r;
}

Jet& Jet::operator+=(const Jet& o) {
  const int n = size();
  for (int i = 0; i < n; ++i) c_[i] += o.c_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  const int n = size();
  for (int i = 0; i < n; ++i) c_[i] -= o.c_[i];
  return *this;
}

Jet& Jet::operator*=(double s) {
  const int n = size();
  for (int i = 0; i < n; ++i) c_[i] *= s;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet r(a.dim_, a.order_);
  for (const auto& t : table(a.dim_, a.order_).products) r.c_[t.k] += a.c_[t.i] * b.c_[t.j];
  return r;
}

Jet Jet::apply(std::span<const double> derivatives) const {
  // f(x0 + n) = sum_k f^(k)(x0) n^k / k!, n nilpotent of degree order_+1
  Jet nil = *this;
  nil.c_[0] = 0.0;
  Jet result = Jet::constant(dim_, order_, derivatives[0]);
  Jet power = nil;
  double fact = 1.0;
  for (int k = 1; k <= order_; ++k) {
    fact *= k;
    Jet term = power;
    term *= derivatives[k] / fact;
    result += term;
    if (k < order_) power = power * nil;
  }
  return result;
}

Jet pow(const Jet& x, double exponent) {
  const double x0 = x.value();
  std::array<double, kMaxOrder + 1> d{};
  double coef = 1.0;
  for (int k = 0; k <= x.order(); ++k) {
    d[k] = coef * std::pow(x0, exponent - k);
    coef *= (exponent - k);
  }
  return x.apply(d);
}

Jet log(const Jet& x) {
  const double x0 = x.value();
  std::array<double, kMaxOrder + 1> d{};
  d[0] = std::log(x0);
  double v = 1.0 / x0;
  for (int k = 1; k <= x.order(); ++k) {
    d[k] = v;
    v *= -static_cast<double>(k) / x0;
  }
  return x.apply(d);
}

Jet exp(const Jet& x) {
  std::array<double, kMaxOrder + 1> d{};
  d.fill(std::exp(x.value()));
  return x.apply(d);
}

Jet sqrt(const Jet& x) { return pow(x, 0.5); }

Jet reciprocal(const Jet& x) { return pow(x, -1.0); }

Jet compose(const Jet& outer, std::span<const Jet> inner) {
  const int dim = inner.front().dim();
  const int order = inner.front().order();
  const int nvars = outer.dim();
  std::array<std::array<Jet, kMaxOrder + 1>, kMaxDim> powers;
  for (int i = 0; i < nvars; ++i) {
    Jet nil = inner[i];
    nil.coeff_ref({0, 0, 0}) = 0.0;
    powers[i][0] = Jet::constant(dim, order, 1.0);
    for (int k = 1; k <= order; ++k) powers[i][k] = powers[i][k - 1] * nil;
  }
  Jet result(dim, order);
  for (const auto& a : multi_indices(nvars, std::min(order, outer.order()))) {
    const double c = outer.coeff(a);
    if (c == 0.0) continue;
    Jet term = powers[0][a[0]];
    if (nvars > 1) term = term * powers[1][a[1]];
    if (nvars > 2) term = term * powers[2][a[2]];
    term *= c;
    result += term;
  }
  return result;
}

}  // namespace klab
