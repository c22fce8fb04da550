#include "khup/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace khup {

namespace {

constexpr double kPi = std::numbers::pi;

// FFTW planning is not thread-safe; execution with new-array functions is.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

// e^{sign 2 pi i t / period} for t = 0..period-1.
std::vector<Complex> root_table(std::size_t period, int sign) {
  std::vector<Complex> t(period);
  for (std::size_t e = 0; e < period; ++e) {
    t[e] = std::polar(1.0, sign * 2.0 * kPi * static_cast<double>(e) / static_cast<double>(period));
  }
  return t;
}

// (m-c)(j-c)/n = P/(4n) with P = (2m-n+1)(2j-n+1); returns P mod 4n.
inline std::size_t phase_index(long long m, long long j, long long n) {
  const long long p = (2 * m - n + 1) * (2 * j - n + 1);
  const long long q = 4 * n;
  return static_cast<std::size_t>(((p % q) + q) % q);
}

ComplexVector dft_direct(const ComplexVector& in, int sign, bool parallel) {
  const auto n = static_cast<long long>(in.size());
  const auto table = root_table(static_cast<std::size_t>(4 * n), sign);
  ComplexVector out(in.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (long long j = 0; j < n; ++j) {
    Complex acc = 0.0;
    for (long long m = 0; m < n; ++m) acc += in[m] * table[phase_index(m, j, n)];
    out[j] = acc;
  }
  return out;
}

ComplexVector dft_fft(const ComplexVector& in, int sign) {
  // (m-c)(j-c) = mj - c m - c j + c^2: pre-twiddle by e^{-s c m}, FFT, then
  // post-twiddle by e^{s c(c - j)}; both twiddles are exact table lookups.
  const auto n = static_cast<long long>(in.size());
  const auto t2n = root_table(static_cast<std::size_t>(2 * n), -sign);  // e^{-s 2pi i e/(2n)}
  const auto t4n = root_table(static_cast<std::size_t>(4 * n), sign);
  ComplexVector buf(in.size());
  for (long long m = 0; m < n; ++m) {
    // c m / n = (n-1) m / (2n)
    buf[m] = in[m] * t2n[static_cast<std::size_t>(((n - 1) * m) % (2 * n))];
  }
  ComplexVector out(in.size());
  auto* src = reinterpret_cast<fftw_complex*>(buf.data());
  auto* dst = reinterpret_cast<fftw_complex*>(out.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(n), src, dst, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw NumericalError("centered_dft: FFTW planning failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  const long long q = 4 * n;
  for (long long j = 0; j < n; ++j) {
    // c (c - j) / n = (n-1)(n-1-2j) / (4n)
    const long long p = ((n - 1) * (n - 1 - 2 * j)) % q;
    out[j] *= t4n[static_cast<std::size_t>((p + q) % q)];
  }
  return out;
}

}  // namespace

bool GridFunction::symmetric() const {
  const double n = static_cast<double>(size());
  return std::abs(x0 + (n - 1.0) * dx / 2.0) <= 1e-12 * std::max(1.0, n * dx);
}

GridFunction sample(const std::function<Complex(double)>& fn, std::size_t n, double half_width) {
  if (n < 2) throw std::invalid_argument("sample: need at least 2 points");
  if (!(half_width > 0)) throw std::invalid_argument("sample: half-width must be positive");
  GridFunction f;
  f.dx = 2.0 * half_width / static_cast<double>(n);
  f.x0 = -(static_cast<double>(n) - 1.0) * f.dx / 2.0;
  f.samples.resize(static_cast<Eigen::Index>(n));
  for (std::size_t m = 0; m < n; ++m) f.samples[static_cast<Eigen::Index>(m)] = fn(f.x(m));
  require_finite(f.samples, "sampled function");
  return f;
}

double tail_fraction(const GridFunction& f) {
  const std::size_t n = f.size();
  const std::size_t cut = n / 10;
  double tail = 0.0, total = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    const double a = std::abs(f.samples[static_cast<Eigen::Index>(m)]);
    total += a;
    if (m < cut || m >= n - cut) tail += a;
  }
  return total > 0 ? tail / total : 0.0;
}

AdaptiveSample sample_adaptive(const std::function<Complex(double)>& fn, std::size_t n,
                               double half_width, double tail_limit, std::size_t max_n) {
  AdaptiveSample out;
  out.f = sample(fn, n, half_width);
  out.tail_fraction = tail_fraction(out.f);
  while (out.tail_fraction >= tail_limit && 2 * n <= max_n) {
    n *= 2;
    half_width *= 2;
    ++out.doublings;
    out.f = sample(fn, n, half_width);
    out.tail_fraction = tail_fraction(out.f);
  }
  out.converged = out.tail_fraction < tail_limit;
  return out;
}

double grid_norm(const GridFunction& f, NormIndex p) {
  const double raw = lp_norm(f.samples, p);
  return p.is_infinite() ? raw : raw * std::pow(f.dx, p.reciprocal());
}

ComplexVector centered_dft(const ComplexVector& in, int sign, DftMethod method) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("centered_dft: sign must be +-1");
  if (in.size() == 0) throw std::invalid_argument("centered_dft: empty input");
  if (method == DftMethod::Auto) method = in.size() >= 64 ? DftMethod::Fft : DftMethod::Direct;
  switch (method) {
    case DftMethod::Direct:
      return dft_direct(in, sign, false);
    case DftMethod::DirectParallel:
      return dft_direct(in, sign, true);
    default:
      return dft_fft(in, sign);
  }
}

GridFunction ft_grid(const GridFunction& f, DftMethod method) {
  if (!f.symmetric()) throw std::invalid_argument("ft_grid: grid is not symmetric about 0");
  GridFunction out;
  const double n = static_cast<double>(f.size());
  out.dx = 1.0 / (n * f.dx);
  out.x0 = -(n - 1.0) * out.dx / 2.0;
  out.samples = f.dx * centered_dft(f.samples, -1, method);
  return out;
}

void LCTParams::validate() const {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d)) {
    throw std::invalid_argument("LCT: parameters must be finite");
  }
  if (std::abs(a * d - b * c - 1.0) > 1e-12) {
    throw std::invalid_argument("LCT: ad - bc = " + std::to_string(a * d - b * c) + ", must be 1");
  }
  if (b == 0.0) throw std::invalid_argument("LCT: b = 0 (pure chirp multiplication) is not supported");
}

GridFunction lct_apply(const LCTParams& m, const GridFunction& f, DftMethod method) {
  m.validate();
  if (!f.symmetric()) throw std::invalid_argument("lct_apply: grid is not symmetric about 0");
  const std::size_t n = f.size();
  const double ab = std::abs(m.b);
  const int sb = m.b > 0 ? 1 : -1;

  ComplexVector g(f.samples.size());
  for (std::size_t k = 0; k < n; ++k) {
    const double x = f.x(k);
    g[static_cast<Eigen::Index>(k)] = f.samples[static_cast<Eigen::Index>(k)] * std::polar(1.0, kPi * m.a * x * x / m.b);
  }
  GridFunction out;
  out.dx = ab / (static_cast<double>(n) * f.dx);
  out.x0 = -(static_cast<double>(n) - 1.0) * out.dx / 2.0;
  out.samples = centered_dft(g, -sb, method);
  const Complex pref = std::polar(1.0 / std::sqrt(ab), -kPi * sb / 4.0) * f.dx;
  for (std::size_t j = 0; j < n; ++j) {
    const double xi = out.x(j);
    out.samples[static_cast<Eigen::Index>(j)] *= pref * std::polar(1.0, kPi * m.d * xi * xi / m.b);
  }
  return out;
}

double variance(const GridFunction& f) { return moment(f, 2.0); }

double moment(const GridFunction& f, double r) {
  if (!(r > 1.0)) throw std::invalid_argument("moment: order r must exceed 1");
  if (!f.symmetric()) throw std::invalid_argument("moment: grid is not symmetric about 0");
  double acc = 0.0;
  for (std::size_t m = 0; m < f.size(); ++m) {
    const double x = std::abs(f.x(m));
    const double weight = (r == 2.0) ? x * x : std::pow(x, r);
    acc += weight * std::norm(f.samples[static_cast<Eigen::Index>(m)]);
  }
  return f.dx * acc;
}

}  // namespace khup
