#pragma once

#include <charconv>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace rsl {

// Membership tolerance for open regions; boundary points within eps are
// resolved conservatively (regions are open, boundaries have measure zero).
inline constexpr double kBoundaryEps = 1e-12;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent run configuration (CLI exit code 1).
struct ConfigError : Error {
  using Error::Error;
};

// A quadrature or solver left its validity envelope (CLI exit code 2).
struct NumericsError : Error {
  using Error::Error;
};

struct GeometryError : Error {
  using Error::Error;
};

template <std::floating_point R>
using Cplx = std::complex<R>;

// Compensated accumulator. The oscillatory boost averages sum terms many
// orders of magnitude above the result; compensation keeps the summation
// error at ~2 ulp of the term magnitudes independent of the node count.
template <class T>
struct KahanSum {
  T sum{};
  T comp{};

  void add(const T& v) {
    const T y = v - comp;
    const T t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  [[nodiscard]] T value() const { return sum; }
};

template <std::floating_point R>
struct KahanSum<std::complex<R>> {
  KahanSum<R> re{}, im{};

  void add(const std::complex<R>& v) {
    re.add(v.real());
    im.add(v.imag());
  }
  [[nodiscard]] std::complex<R> value() const { return {re.value(), im.value()}; }
};

// Shortest round-trip decimal form; locale-free and deterministic, used for
// every float that lands in a CSV or JSON artifact.
inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw Error("format_double: to_chars failed");
  return std::string(buf, ptr);
}

// Deterministic parallel map: out-slot i depends only on i, so the result is
// independent of the worker count and schedule.
inline void parallel_for(std::int64_t n, int workers, const std::function<void(std::int64_t)>& body) {
  if (n <= 0) return;
  if (workers <= 1 || n == 1) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
  const int nw = static_cast<int>(std::min<std::int64_t>(workers, n));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nw));
  for (int w = 0; w < nw; ++w) {
    pool.emplace_back([&, w] {
      for (std::int64_t i = w; i < n; i += nw) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

inline bool nearly_equal(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace rsl
