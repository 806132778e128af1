#include "fxt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace fxt {
namespace {

using cd = std::complex<double>;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Iterative in-place radix-2 Cooley-Tukey. sign = -1 forward, +1 inverse;
// no normalization either way.
void fft_radix2(std::vector<cd>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j |= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<cd> twiddle;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const double ang = static_cast<double>(sign) * 2.0 * std::numbers::pi / static_cast<double>(len);
    twiddle.resize(half);
    for (std::size_t k = 0; k < half; ++k)
      twiddle[k] = std::polar(1.0, ang * static_cast<double>(k));
    for (std::size_t base = 0; base < n; base += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const cd u = a[base + k];
        const cd v = a[base + k + half] * twiddle[k];
        a[base + k] = u + v;
        a[base + k + half] = u - v;
      }
    }
  }
}

// Bluestein chirp-z for arbitrary N: nk = (n^2 + k^2 - (k-n)^2) / 2 rewrites
// the transform as a linear convolution with the chirp e^{sign j pi m^2 / N},
// evaluated cyclically on a power-of-two grid of length >= 2N-1. m^2 is
// reduced mod 2N so the phase argument never grows.
void fft_bluestein(std::vector<cd>& a, int sign) {
  const std::size_t n = a.size();
  std::size_t padded = 1;
  while (padded < 2 * n - 1) padded <<= 1;

  const std::int64_t two_n = 2 * static_cast<std::int64_t>(n);
  std::vector<cd> chirp(n);
  for (std::size_t m = 0; m < n; ++m) {
    const std::int64_t sq = (static_cast<std::int64_t>(m) * static_cast<std::int64_t>(m)) % two_n;
    chirp[m] = std::polar(1.0, static_cast<double>(sign) * std::numbers::pi *
                                   static_cast<double>(sq) / static_cast<double>(n));
  }

  std::vector<cd> p(padded, cd{});
  std::vector<cd> q(padded, cd{});
  for (std::size_t m = 0; m < n; ++m) p[m] = a[m] * chirp[m];
  for (std::size_t m = 0; m < n; ++m) {
    q[m] = std::conj(chirp[m]);
    if (m != 0) q[padded - m] = std::conj(chirp[m]);
  }

  fft_radix2(p, -1);
  fft_radix2(q, -1);
  for (std::size_t m = 0; m < padded; ++m) p[m] *= q[m];
  fft_radix2(p, +1);

  const double scale = 1.0 / static_cast<double>(padded);
  for (std::size_t m = 0; m < n; ++m) a[m] = p[m] * scale * chirp[m];
}

void transform(std::vector<cd>& a, int sign) {
  if (is_pow2(a.size()))
    fft_radix2(a, sign);
  else
    fft_bluestein(a, sign);
}

std::size_t exact_samples_per_period(const GridSpec& spec, const char* who) {
  const GridExactness exact = grid_exactness(spec);
  if (!exact.exact)
    throw std::invalid_argument(std::string(who) + ": grid is not exact (N_t = " +
                                std::to_string(samples_per_period(spec)) + ", N_f = " +
                                std::to_string(harmonic_bin_spacing(spec)) + ")");
  return static_cast<std::size_t>(std::llround(samples_per_period(spec)));
}

}  // namespace

Spectrum dft(const SampledSignal& signal) {
  const std::size_t n = signal.samples.size();
  if (n < 2) throw std::invalid_argument("dft: need at least 2 samples");
  if (!(signal.sample_rate_hz > 0.0))
    throw std::invalid_argument("dft: sample rate must be positive");
  for (double v : signal.samples)
    if (!std::isfinite(v)) throw std::invalid_argument("dft: non-finite sample");

  std::vector<cd> work(n);
  for (std::size_t i = 0; i < n; ++i) work[i] = cd{signal.samples[i], 0.0};
  transform(work, -1);
  return Spectrum{std::move(work), signal.sample_rate_hz / static_cast<double>(n)};
}

SampledSignal idft(const Spectrum& spectrum) {
  const std::size_t n = spectrum.bins.size();
  if (n < 2) throw std::invalid_argument("idft: need at least 2 bins");

  std::vector<cd> work = spectrum.bins;
  transform(work, +1);
  const double inv = 1.0 / static_cast<double>(n);
  double max_mag = 0.0;
  double max_imag = 0.0;
  for (auto& z : work) {
    z *= inv;
    max_mag = std::max(max_mag, std::abs(z));
    max_imag = std::max(max_imag, std::abs(z.imag()));
  }
  if (max_imag > 1e-9 * max_mag)
    throw std::runtime_error("idft: spectrum is not that of a real signal (imaginary residue " +
                             std::to_string(max_imag) + " at scale " + std::to_string(max_mag) +
                             ")");

  SampledSignal out;
  out.sample_rate_hz = spectrum.bin_spacing_hz * static_cast<double>(n);
  out.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.samples[i] = work[i].real();
  return out;
}

std::size_t bin_of_frequency(double freq_hz, const GridSpec& spec) {
  if (!(freq_hz >= 0.0) || freq_hz > spec.sample_rate_hz())
    throw std::out_of_range("bin_of_frequency: " + std::to_string(freq_hz) +
                            " Hz outside [0, " + std::to_string(spec.sample_rate_hz()) + "]");
  const double n = static_cast<double>(spec.num_samples());
  const double k = std::round(n * freq_hz / spec.sample_rate_hz());
  return static_cast<std::size_t>(std::min(k, n - 1.0));
}

SampledSignal make_impulse_train(const GridSpec& spec) {
  const std::size_t step = exact_samples_per_period(spec, "make_impulse_train");
  SampledSignal out;
  out.sample_rate_hz = spec.sample_rate_hz();
  out.samples.assign(spec.num_samples(), 0.0);
  for (std::size_t i = 0; i < out.samples.size(); i += step) out.samples[i] = 1.0;
  return out;
}

SampledSignal make_periodic(std::span<const double> shape, const GridSpec& spec) {
  const std::size_t step = exact_samples_per_period(spec, "make_periodic");
  if (shape.empty()) throw std::invalid_argument("make_periodic: shape is empty");
  if (shape.size() > step)
    throw std::invalid_argument("make_periodic: shape of " + std::to_string(shape.size()) +
                                " samples overlaps the next period (N_t = " +
                                std::to_string(step) + ")");

  SampledSignal out;
  out.sample_rate_hz = spec.sample_rate_hz();
  out.samples.assign(spec.num_samples(), 0.0);
  for (std::size_t base = 0; base < out.samples.size(); base += step)
    for (std::size_t j = 0; j < shape.size(); ++j) out.samples[base + j] = shape[j];
  return out;
}

SampledSignal make_harmonic(const GridSpec& spec, std::span<const double> amplitudes) {
  const int cap = max_harmonics(spec);
  if (amplitudes.size() > static_cast<std::size_t>(cap))
    throw std::invalid_argument("make_harmonic: " + std::to_string(amplitudes.size()) +
                                " harmonics alias above Nyquist (at most " + std::to_string(cap) +
                                " fit)");

  const double step = 2.0 * std::numbers::pi * fundamental_frequency(spec) / spec.sample_rate_hz();
  SampledSignal out;
  out.sample_rate_hz = spec.sample_rate_hz();
  out.samples.assign(spec.num_samples(), 0.0);
  for (std::size_t i = 0; i < out.samples.size(); ++i) {
    double acc = 0.0;
    for (std::size_t m = 0; m < amplitudes.size(); ++m)
      acc += amplitudes[m] * std::cos(step * static_cast<double>(m + 1) * static_cast<double>(i));
    out.samples[i] = acc;
  }
  return out;
}

std::vector<double> circular_convolution(std::span<const double> lhs,
                                         std::span<const double> rhs) {
  if (lhs.size() != rhs.size())
    throw std::invalid_argument("circular_convolution: length mismatch");
  if (lhs.size() < 2)
    throw std::invalid_argument("circular_convolution: need at least 2 samples");

  const std::size_t n = lhs.size();
  std::vector<cd> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = cd{lhs[i], 0.0};
    b[i] = cd{rhs[i], 0.0};
  }
  transform(a, -1);
  transform(b, -1);
  for (std::size_t i = 0; i < n; ++i) a[i] *= b[i];
  transform(a, +1);

  std::vector<double> out(n);
  const double inv = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i].real() * inv;
  return out;
}

}  // namespace fxt
