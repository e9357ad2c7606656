/**
 * @file wavelets.cpp
 * @brief Spectral-factorization filters, cascade tables, sampled projection
 *        onto V_J, the Mallat pyramid and the square-function norm.
 */
#include "klab/wavelets.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "klab/errors.hpp"
#include "klab/parallel.hpp"

namespace klab::wavelets {

namespace {

using cplx = std::complex<double>;
using Index = std::array<std::int64_t, kMaxDim>;

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

cplx eval_poly(const std::vector<double>& c, cplx x) {
  cplx acc = 0.0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) acc = acc * x + c[i];
  return acc;
}

// Roots of sum c_i x^i by Weierstrass (Durand-Kerner) iteration plus Newton polish.
std::vector<cplx> poly_roots(const std::vector<double>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<cplx> z(n);
  const double lead = c[n];
  for (int i = 0; i < n; ++i) z[i] = std::pow(cplx(0.4, 0.9), i);
  for (int iter = 0; iter < 2000; ++iter) {
    double change = 0.0;
    for (int i = 0; i < n; ++i) {
      cplx den = lead;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      const cplx dz = eval_poly(c, z[i]) / den;
      z[i] -= dz;
      change = std::max(change, std::abs(dz));
    }
    if (change < 1e-15) break;
  }
  std::vector<double> dc(n);
  for (int i = 1; i <= n; ++i) dc[i - 1] = i * c[i];
  for (auto& r : z)
    for (int iter = 0; iter < 5; ++iter) {
      const cplx d = eval_poly(dc, r);
      if (std::abs(d) == 0.0) break;
      r -= eval_poly(c, r) / d;
    }
  return z;
}

std::vector<double> solve_dense(std::vector<std::vector<double>> a, std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

// Dense d-dimensional array over an index box.
struct Grid {
  int d = 1;
  Index lo{};
  Index count{1, 1, 1};
  std::vector<double> v;

  std::size_t size() const { return static_cast<std::size_t>(count[0] * count[1] * count[2]); }
  std::size_t stride(int axis) const {
    std::size_t s = 1;
    for (int a = kMaxDim - 1; a > axis; --a) s *= static_cast<std::size_t>(count[a]);
    return s;
  }
};

// out[k] = sum_t f_t in[stride k + t] along one axis.
Grid filter_axis(const Grid& in, int axis, const std::vector<double>& f, int stride) {
  const std::int64_t L = static_cast<std::int64_t>(f.size());
  const std::int64_t lo = in.lo[axis], hi = in.lo[axis] + in.count[axis] - 1;
  auto floor_div = [](std::int64_t a, std::int64_t b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
  const std::int64_t klo = -floor_div(-(lo - L + 1), stride);
  const std::int64_t khi = floor_div(hi, stride);
  Grid out = in;
  out.lo[axis] = klo;
  out.count[axis] = khi - klo + 1;
  out.v.assign(out.size(), 0.0);
  const std::size_t in_stride = in.stride(axis), out_stride = out.stride(axis);
  const std::size_t outer = static_cast<std::size_t>(in.size() / (in.count[axis] * in_stride));
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t inner = 0; inner < in_stride; ++inner) {
      const double* src = in.v.data() + o * in.count[axis] * in_stride + inner;
      double* dst = out.v.data() + o * out.count[axis] * out_stride + inner;
      for (std::int64_t k = klo; k <= khi; ++k) {
        double acc = 0.0;
        const std::int64_t base = stride * k;
        const std::int64_t t0 = std::max<std::int64_t>(0, lo - base);
        const std::int64_t t1 = std::min<std::int64_t>(L - 1, hi - base);
        for (std::int64_t t = t0; t <= t1; ++t) acc += f[t] * src[(base + t - lo) * in_stride];
        dst[(k - klo) * out_stride] = acc;
      }
    }
  }
  return out;
}

// Banded Cholesky for the symmetric Toeplitz Gram matrix on n unknowns.
struct BandedCholesky {
  int n = 0, b = 0;
  std::vector<double> l;  // l[i*(b+1) + (i-j)] = L_ij, 0 <= i-j <= b

  BandedCholesky(const std::vector<double>& toeplitz, int size) : n(size), b(static_cast<int>(toeplitz.size()) - 1) {
    l.assign(static_cast<std::size_t>(n) * (b + 1), 0.0);
    auto L = [&](int i, int j) -> double& { return l[static_cast<std::size_t>(i) * (b + 1) + (i - j)]; };
    for (int i = 0; i < n; ++i) {
      for (int j = std::max(0, i - b); j <= i; ++j) {
        double s = toeplitz[i - j];
        for (int k = std::max(0, i - b); k < j; ++k) s -= L(i, k) * L(j, k);
        if (i == j) {
          if (!(s > 0.0)) throw std::runtime_error("Gram matrix not positive definite");
          L(i, i) = std::sqrt(s);
        } else {
          L(i, j) = s / L(j, j);
        }
      }
    }
  }

  void solve(std::vector<double>& x) const {
    auto L = [&](int i, int j) { return l[static_cast<std::size_t>(i) * (b + 1) + (i - j)]; };
    for (int i = 0; i < n; ++i) {
      double s = x[i];
      for (int k = std::max(0, i - b); k < i; ++k) s -= L(i, k) * x[k];
      x[i] = s / L(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {
      double s = x[i];
      for (int k = i + 1; k <= std::min(n - 1, i + b); ++k) s -= L(k, i) * x[k];
      x[i] = s / L(i, i);
    }
  }
};

void solve_axis(Grid& g, int axis, const std::vector<double>& toeplitz) {
  const int n = static_cast<int>(g.count[axis]);
  const BandedCholesky chol(toeplitz, n);
  const std::size_t st = g.stride(axis);
  const std::size_t outer = g.size() / (n * st);
  std::vector<double> line(n);
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t inner = 0; inner < st; ++inner) {
      double* p = g.v.data() + o * n * st + inner;
      for (int i = 0; i < n; ++i) line[i] = p[i * st];
      chol.solve(line);
      for (int i = 0; i < n; ++i) p[i * st] = line[i];
    }
}

LevelBlock to_block(int level, const Grid& g) {
  LevelBlock b;
  b.level = level;
  b.lo = g.lo;
  b.count = g.count;
  return b;
}

double table_at(const std::vector<double>& table, int resolution, double x) {
  const double t = std::ldexp(x, resolution);
  if (t <= 0.0 || t >= static_cast<double>(table.size() - 1)) return 0.0;
  const auto i = static_cast<std::size_t>(t);
  const double f = t - static_cast<double>(i);
  return f == 0.0 ? table[i] : (1.0 - f) * table[i] + f * table[i + 1];
}

}  // namespace

std::vector<double> daubechies_filter(int N) {
  if (N < 1 || N > kMaxFilterOrder) throw Unsupported("daubechies_filter: order outside 1..10");
  // |H|^2 = cos^{2N}(w/2) P(sin^2(w/2)), P(y) = sum_k C(N-1+k, k) y^k
  std::vector<cplx> poly{1.0};
  auto multiply = [&](cplx root) {
    std::vector<cplx> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= root * poly[i];
    }
    poly = std::move(next);
  };
  for (int i = 0; i < N; ++i) multiply(-1.0);
  if (N > 1) {
    std::vector<double> p(N);
    for (int k = 0; k < N; ++k) p[k] = binomial(N - 1 + k, k);
    for (const cplx& y : poly_roots(p)) {
      // y = (2 - z - 1/z) / 4, keep the root inside the unit circle
      const cplx b = 1.0 - 2.0 * y;
      const cplx s = std::sqrt(b * b - 1.0);
      multiply(std::abs(b + s) < 1.0 ? b + s : b - s);
    }
  }
  std::vector<double> h(2 * N);
  double sum = 0.0;
  for (int i = 0; i < 2 * N; ++i) sum += (h[i] = poly[i].real());
  for (double& v : h) v *= std::sqrt(2.0) / sum;
  std::reverse(h.begin(), h.end());
  return h;
}

double holder_regularity(int N) {
  static constexpr std::array<double, 11> table{0.0, 0.0, 0.550, 1.088, 1.618, 1.969, 2.189, 2.460, 2.761, 3.074, 3.361};
  if (N < kMinFilterOrder || N > kMaxFilterOrder) throw Unsupported("holder_regularity: order outside 2..10");
  return table[N];
}

int order_for_smoothness(int m) {
  if (m < 0) throw InvalidParams("order_for_smoothness: m must be nonnegative");
  for (int N = kMinFilterOrder; N <= kMaxFilterOrder; ++N)
    if (holder_regularity(N) > m) return N;
  throw Unsupported("no tabulated Daubechies order has regularity above m");
}

double WaveletSystem::phi_at(double x) const { return table_at(phi, resolution, x); }
double WaveletSystem::psi_at(double x) const { return table_at(psi, resolution, x); }

WaveletSystem build_wavelet_system_of_order(int N) {
  WaveletSystem w;
  w.order = N;
  w.regularity = holder_regularity(N);
  w.h = daubechies_filter(N);
  const int L = 2 * N;
  w.g.resize(L);
  for (int k = 0; k < L; ++k) w.g[k] = ((k % 2) ? -1.0 : 1.0) * w.h[L - 1 - k];

  // phi at the integers 1..2N-2: eigenvector of sqrt(2) h_{2n-m} for eigenvalue 1, sum 1
  const int n = L - 2;
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  std::vector<double> rhs(n, 0.0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const int k = 2 * (r + 1) - (c + 1);
      a[r][c] = (k >= 0 && k < L) ? std::sqrt(2.0) * w.h[k] : 0.0;
    }
    a[r][r] -= 1.0;
  }
  for (int c = 0; c < n; ++c) a[n - 1][c] = 1.0;
  rhs[n - 1] = 1.0;
  const std::vector<double> ints = solve_dense(a, rhs);

  const int K = w.resolution;
  const std::int64_t unit = std::int64_t{1} << K;
  const std::int64_t size = (L - 1) * unit + 1;
  w.phi.assign(size, 0.0);
  for (int i = 0; i < n; ++i) w.phi[(i + 1) * unit] = ints[i];
  for (int level = 1; level <= K; ++level) {
    const std::int64_t step = std::int64_t{1} << (K - level);
    for (std::int64_t i = step; i < size; i += 2 * step) {
      double acc = 0.0;
      for (int k = 0; k < L; ++k) {
        const std::int64_t t = 2 * i - k * unit;
        if (t > 0 && t < size) acc += w.h[k] * w.phi[t];
      }
      w.phi[i] = std::sqrt(2.0) * acc;
    }
  }
  w.psi.assign(size, 0.0);
  for (std::int64_t i = 0; i < size; ++i) {
    double acc = 0.0;
    for (int k = 0; k < L; ++k) {
      const std::int64_t t = 2 * i - k * unit;
      if (t > 0 && t < size) acc += w.g[k] * w.phi[t];
    }
    w.psi[i] = std::sqrt(2.0) * acc;
  }
  return w;
}

WaveletSystem build_wavelet_system(int m) {
  if (m > kMaxOrder) throw Unsupported("build_wavelet_system: m above 4");
  return build_wavelet_system_of_order(order_for_smoothness(m));
}

std::size_t LevelBlock::offset(const std::array<std::int64_t, kMaxDim>& k) const {
  return static_cast<std::size_t>(((k[0] - lo[0]) * count[1] + (k[1] - lo[1])) * count[2] + (k[2] - lo[2]));
}

double CoefficientGrid::sum_of_squares() const {
  double s = 0.0;
  for (const auto& band : scaling.bands)
    for (double v : band) s += v * v;
  for (const auto& lv : details)
    for (const auto& band : lv.bands)
      for (double v : band) s += v * v;
  return s;
}

double CoefficientGrid::max_abs(int level) const {
  double m = 0.0;
  for (const auto& band : details.at(level).bands)
    for (double v : band) m = std::max(m, std::abs(v));
  return m;
}

std::string CoefficientGrid::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  out << "j,G";
  for (int a = 0; a < d; ++a) out << ",k" << a;
  out << ",value\n";
  auto emit = [&](const LevelBlock& b, int G) {
    const auto& band = b.bands[G];
    Index k{};
    for (std::size_t i = 0; i < band.size(); ++i) {
      if (band[i] == 0.0) continue;
      std::size_t rem = i;
      for (int a = kMaxDim - 1; a >= 0; --a) {
        k[a] = b.lo[a] + static_cast<std::int64_t>(rem % b.count[a]);
        rem /= b.count[a];
      }
      out << b.level << "," << G;
      for (int a = 0; a < d; ++a) out << "," << k[a];
      out << "," << band[i] << "\n";
    }
  };
  emit(scaling, 0);
  for (const auto& lv : details)
    for (int G = 1; G < (1 << d); ++G) emit(lv, G);
  return out.str();
}

CoefficientGrid wavelet_coefficients(const Field& u, const WaveletSystem& system, int J, const geometry::Box& box) {
  constexpr int r = 1;  // samples per coefficient cell and axis: 2^r
  const int d = u.dim();
  if (J < 1) throw InvalidParams("wavelet_coefficients: J must be at least 1");
  if (J > kMaxLevel || J + r + 1 > system.resolution)
    throw Unsupported("wavelet_coefficients: J too deep for the cascade resolution");
  const int N = system.order;
  const int R = 1 << r;
  const double h = std::ldexp(1.0, -(J + r));

  Index I0{}, I1{};
  for (int a = 0; a < d; ++a) {
    const double lo = std::ldexp(box.lo[a], J), hi = std::ldexp(box.hi[a], J);
    if (lo != std::floor(lo) || hi != std::floor(hi))
      throw InvalidParams("wavelet_coefficients: box corners must be multiples of 2^-J");
    I0[a] = static_cast<std::int64_t>(lo) * R;
    I1[a] = static_cast<std::int64_t>(hi) * R;
  }

  // weights 2^-r phi((n + 1/2) 2^-r), n = 0 .. (2N-1) R - 1
  std::vector<double> w((2 * N - 1) * R);
  for (std::size_t n = 0; n < w.size(); ++n) w[n] = system.phi_at((n + 0.5) / R) / R;

  // projected coefficients, streamed over sample slabs along axis 0
  Grid fine;
  fine.d = d;
  for (int a = 0; a < d; ++a) {
    fine.lo[a] = I0[a] / R - (2 * N - 2);
    fine.count[a] = I1[a] / R - fine.lo[a];
  }
  fine.v.assign(fine.size(), 0.0);

  const double radius2 = u.radius * u.radius;
  const std::size_t slab_count = static_cast<std::size_t>(I1[0] - I0[0]);
  std::vector<Grid> reduced(slab_count);
  parallel_for(slab_count, [&](std::size_t s) {
    const std::int64_t i0 = I0[0] + static_cast<std::int64_t>(s);
    Grid slab;
    slab.d = d;
    slab.lo = I0;
    slab.lo[0] = i0;
    for (int a = 1; a < d; ++a) slab.count[a] = I1[a] - I0[a];
    slab.v.assign(slab.size(), 0.0);
    bool any = false;
    Point x{};
    x[0] = (i0 + 0.5) * h;
    Index idx{};
    for (std::size_t i = 0; i < slab.v.size(); ++i) {
      std::size_t rem = i;
      for (int a = kMaxDim - 1; a >= 1; --a) {
        idx[a] = rem % slab.count[a];
        rem /= slab.count[a];
      }
      double dist2 = (x[0] - u.center[0]) * (x[0] - u.center[0]);
      for (int a = 1; a < d; ++a) {
        x[a] = (I0[a] + idx[a] + 0.5) * h;
        dist2 += (x[a] - u.center[a]) * (x[a] - u.center[a]);
      }
      if (dist2 > radius2) continue;
      const double v = u.value(x);
      slab.v[i] = v;
      any = any || v != 0.0;
    }
    if (!any) return;
    for (int a = 1; a < d; ++a) slab = filter_axis(slab, a, w, R);
    reduced[s] = std::move(slab);
  });
  const std::size_t fine_stride0 = fine.stride(0);
  for (std::size_t s = 0; s < slab_count; ++s) {
    if (reduced[s].v.empty()) continue;
    const std::int64_t i0 = I0[0] + static_cast<std::int64_t>(s);
    for (std::int64_t k0 = fine.lo[0]; k0 < fine.lo[0] + fine.count[0]; ++k0) {
      const std::int64_t n = i0 - R * k0;
      if (n < 0 || n >= static_cast<std::int64_t>(w.size())) continue;
      double* dst = fine.v.data() + (k0 - fine.lo[0]) * fine_stride0;
      for (std::size_t i = 0; i < reduced[s].v.size(); ++i) dst[i] += w[n] * reduced[s].v[i];
    }
    reduced[s] = Grid{};
  }
  const double norm = std::ldexp(1.0, -J * d);
  for (double& v : fine.v) v *= std::sqrt(norm);

  // Gram correction: exact coefficients for functions in V_J
  std::vector<double> toeplitz(2 * N - 1, 0.0);
  for (int j = 0; j < 2 * N - 1; ++j) {
    double s = 0.0;
    for (std::size_t n = 0; n < w.size(); ++n) {
      const double y = (n + 0.5) / R;
      s += system.phi_at(y) * system.phi_at(y + j);
    }
    toeplitz[j] = s / R;
  }
  for (int a = 0; a < d; ++a) solve_axis(fine, a, toeplitz);

  CoefficientGrid out;
  out.d = d;
  out.J = J;
  out.order = N;
  out.box = box;
  out.details.resize(J);
  Grid c = std::move(fine);
  const int bands = 1 << d;
  for (int j = J - 1; j >= 0; --j) {
    std::vector<Grid> parts{c};
    for (int a = 0; a < d; ++a) {
      std::vector<Grid> next(parts.size() * 2);
      for (std::size_t p = 0; p < parts.size(); ++p) {
        next[p] = filter_axis(parts[p], a, system.h, 2);
        next[p + parts.size()] = filter_axis(parts[p], a, system.g, 2);
      }
      parts = std::move(next);
    }
    // parts[G]: bit a of G selects the wavelet filter along axis a
    LevelBlock block = to_block(j, parts[0]);
    block.bands.resize(bands);
    for (int G = 1; G < bands; ++G) block.bands[G] = std::move(parts[G].v);
    out.details[j] = std::move(block);
    c = std::move(parts[0]);
  }
  out.scaling = to_block(0, c);
  out.scaling.bands.resize(1);
  out.scaling.bands[0] = std::move(c.v);
  return out;
}

Field wavelet_field(const WaveletSystem& system, int d, int level, int gender, const std::array<std::int64_t, kMaxDim>& k) {
  Field f;
  f.domain = geometry::ModelDomain{d, 0};
  const double side = std::ldexp(1.0, -level);
  const double len = system.support_length();
  for (int a = 0; a < d; ++a) f.center[a] = side * (static_cast<double>(k[a]) + 0.5 * len);
  f.radius = side * 0.5 * len * std::sqrt(static_cast<double>(d));
  const double scale = std::ldexp(1.0, level);
  const double amp = std::pow(2.0, 0.5 * level * d);
  auto sys = std::make_shared<const WaveletSystem>(system);
  f.jet = [sys, d, gender, k, scale, amp](const Point& x, int order) {
    if (order != 0) throw Unsupported("wavelet_field: values only");
    double v = amp;
    for (int a = 0; a < d && v != 0.0; ++a) {
      const double t = scale * x[a] - static_cast<double>(k[a]);
      v *= ((gender >> a) & 1) ? sys->psi_at(t) : sys->phi_at(t);
    }
    return Jet::constant(d, 0, v);
  };
  return f;
}

NormValue f_sequence_norm(const CoefficientGrid& coeffs, double s, double tau) {
  if (!(tau > 0.0) || std::isinf(tau)) throw InvalidParams("f_sequence_norm: need 0 < tau < inf");
  const int d = coeffs.d;
  const double sigma = d * (1.0 / std::min(1.0, tau) - 1.0);
  if (s < 0.0 || (tau < 1.0 && !(s > sigma))) throw InvalidParams("f_sequence_norm: need s > sigma_{tau,2}");
  const int J = coeffs.J;
  const int bands = 1 << d;

  // tau-th power of the norm using wavelet levels < t
  auto integral = [&](int t) {
    const LevelBlock& b0 = coeffs.details[0];
    std::vector<double> acc(b0.size(), 0.0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      double v = coeffs.scaling.bands[0][i] * coeffs.scaling.bands[0][i];
      for (int G = 1; G < bands; ++G) v += b0.bands[G][i] * b0.bands[G][i];
      acc[i] = v;
    }
    double total = 0.0;
    for (int j = 0; j < t; ++j) {
      const LevelBlock& b = coeffs.details[j];
      if (j == t - 1) {
        const double vol = std::ldexp(1.0, -j * d);
        for (double v : acc) total += std::pow(v, 0.5 * tau) * vol;
        break;
      }
      const LevelBlock& nb = coeffs.details[j + 1];
      const double wgt = std::pow(2.0, (j + 1) * (s + 0.5 * d));
      std::vector<double> next(nb.size(), 0.0);
      const double child_vol = std::ldexp(1.0, -(j + 1) * d);
      Index k{}, c{};
      for (std::size_t i = 0; i < acc.size(); ++i) {
        std::size_t rem = i;
        for (int a = kMaxDim - 1; a >= 0; --a) {
          k[a] = b.lo[a] + static_cast<std::int64_t>(rem % b.count[a]);
          rem /= b.count[a];
        }
        for (int e = 0; e < bands; ++e) {
          bool inside = true;
          for (int a = 0; a < kMaxDim; ++a) {
            c[a] = a < d ? 2 * k[a] + ((e >> a) & 1) : 0;
            if (c[a] < nb.lo[a] || c[a] >= nb.lo[a] + nb.count[a]) inside = false;
          }
          if (inside) next[nb.offset(c)] = acc[i];
          else if (acc[i] > 0.0) total += std::pow(acc[i], 0.5 * tau) * child_vol;
        }
      }
      for (std::size_t i = 0; i < next.size(); ++i)
        for (int G = 1; G < bands; ++G) next[i] += wgt * wgt * nb.bands[G][i] * nb.bands[G][i];
      acc = std::move(next);
    }
    return total;
  };

  std::vector<int> levels;
  std::vector<double> ladder;
  for (int t = 1; t <= J; ++t) {
    levels.push_back(t);
    ladder.push_back(integral(t));
  }
  NormValue n;
  n.kind = "f_sequence";
  n.p = tau;
  n.quadrature_order = coeffs.order;
  for (std::size_t i = 0; i < levels.size(); ++i)
    n.truncations.emplace_back(std::ldexp(1.0, -levels[i]), std::pow(ladder[i], 1.0 / tau));
  n.value = n.truncations.back().second;
  const std::size_t m = ladder.size();
  const double last = ladder.back();
  const double base = m >= 4 ? ladder[m - 4] : 0.0;
  n.tail_share = last > 0.0 ? (last - base) / last : 0.0;
  if (m >= 2 && n.value > 0.0) n.residual = std::abs(n.value - n.truncations[m - 2].second) / n.value;
  n.classification = n.tail_share <= kMaxTailShare ? Classification::Finite : Classification::Inconclusive;
  if (n.classification == Classification::Inconclusive) n.note = "level tail share above 10%";
  return n;
}

}  // namespace klab::wavelets
