#pragma once

// Data-parallel primitives shared by the quadrature and Fourier oracles and
// by the CLI sweep. Every kernel exists in two flavours selected at the call
// site: Execution::serial (the reference) and Execution::openmp. Reductions
// are blocked with a fixed block size and the partial sums are always
// combined in block order, so a kernel returns bit-identical results for any
// thread count, and the OpenMP flavour matches the serial reference exactly.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace ccs::kernels {

enum class Execution { serial, openmp };

// Reduction block length. Fixed (not derived from the thread count) so that
// the summation order is an invariant of the input, not of the schedule.
inline constexpr std::int64_t block_size = 1024;

namespace detail {

template <typename T, typename TermFn>
T sum_block(std::int64_t begin, std::int64_t end, const TermFn& term) {
  T acc{};
  for (std::int64_t i = begin; i < end; ++i) acc += term(i);
  return acc;
}

}  // namespace detail

// Sum of term(i) for i in [0, n), blocked. Both execution paths call the
// same per-block routine and accumulate the partials in ascending block
// order.
template <typename T, typename TermFn>
T blocked_sum(std::int64_t n, const TermFn& term, Execution exec) {
  if (n <= 0) return T{};
  const std::int64_t nblocks = (n + block_size - 1) / block_size;
  std::vector<T> partial(static_cast<std::size_t>(nblocks));
  if (exec == Execution::openmp) {
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < nblocks; ++b) {
      partial[static_cast<std::size_t>(b)] = detail::sum_block<T>(
          b * block_size, std::min(n, (b + 1) * block_size), term);
    }
  } else {
    for (std::int64_t b = 0; b < nblocks; ++b) {
      partial[static_cast<std::size_t>(b)] = detail::sum_block<T>(
          b * block_size, std::min(n, (b + 1) * block_size), term);
    }
  }
  T total{};
  for (const T& p : partial) total += p;
  return total;
}

// fn(i) for i in [0, n); iterations must be independent.
template <typename Fn>
void for_each_index(std::int64_t n, const Fn& fn, Execution exec) {
  if (exec == Execution::openmp) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) fn(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
  }
}

// Composite Simpson rule over [a, b] with n uniform intervals (n even).
// T is double or std::complex<double>.
template <typename T, typename Fn>
T simpson(const Fn& f, double a, double b, std::int64_t n, Execution exec) {
  const double h = (b - a) / static_cast<double>(n);
  auto term = [&](std::int64_t i) -> T {
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    return w * f(a + h * static_cast<double>(i));
  };
  return (h / 3.0) * blocked_sum<T>(n + 1, term, exec);
}

namespace detail {

inline std::complex<double> dft_point(std::span<const double> q,
                                      std::span<const std::complex<double>> f,
                                      double p, double inv_hbar) {
  std::complex<double> acc{};
  for (std::size_t m = 0; m < q.size(); ++m) {
    acc += f[m] * std::polar(1.0, -p * q[m] * inv_hbar);
  }
  return acc;
}

}  // namespace detail

// Discrete approximation of the continuous Fourier transform
//   out[j] = spacing / sqrt(2 pi hbar) * sum_m f[m] exp(-i p[j] q[m] / hbar).
// Output points are independent; each inner sum runs in index order on one
// thread, so serial and openmp flavours agree exactly.
inline std::vector<std::complex<double>> fourier_transform(
    std::span<const double> q, std::span<const std::complex<double>> f,
    std::span<const double> p, double spacing, double hbar, Execution exec) {
  std::vector<std::complex<double>> out(p.size());
  const double scale = spacing / std::sqrt(2.0 * M_PI * hbar);
  const double inv_hbar = 1.0 / hbar;
  for_each_index(
      static_cast<std::int64_t>(p.size()),
      [&](std::int64_t j) {
        const auto k = static_cast<std::size_t>(j);
        out[k] = scale * detail::dft_point(q, f, p[k], inv_hbar);
      },
      exec);
  return out;
}

}  // namespace ccs::kernels
