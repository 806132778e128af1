#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "fxt/grid.hpp"

namespace fxt {

struct SampledSignal {
  std::vector<double> samples;
  double sample_rate_hz = 0.0;
};

struct Spectrum {
  std::vector<std::complex<double>> bins;  // full length, covering [0, f_s)
  double bin_spacing_hz = 0.0;
};

// X_k = sum_n x_n e^{-j 2 pi k n / N} for k = 0..N-1. Works for any N >= 2:
// radix-2 when N is a power of two, Bluestein chirp-z otherwise.
Spectrum dft(const SampledSignal& signal);

// Inverse transform. The imaginary residue is discarded after checking it
// stays below 1e-9 of the result scale; a larger residue means the spectrum
// did not come from a real signal.
SampledSignal idft(const Spectrum& spectrum);

// Nearest bin for a frequency in [0, f_s]: round(N f / f_s), ties away from
// zero, clamped to [0, N-1].
std::size_t bin_of_frequency(double freq_hz, const GridSpec& spec);

// Unit impulses every N_t samples. Requires an exact grid.
SampledSignal make_impulse_train(const GridSpec& spec);

// One-period shape repeated every N_t samples, i.e. the circular convolution
// of the impulse train with the shape. The shape must fit inside one period.
SampledSignal make_periodic(std::span<const double> shape, const GridSpec& spec);

// sum_m amplitudes[m-1] cos(2 pi m f_p t) on the grid. Harmonic count is
// capped by the grid's max_harmonics; an empty amplitude list gives the zero signal.
SampledSignal make_harmonic(const GridSpec& spec, std::span<const double> amplitudes);

// Circular convolution of two equal-length real sequences, computed by
// transform, pointwise product, inverse transform.
std::vector<double> circular_convolution(std::span<const double> lhs,
                                         std::span<const double> rhs);

}  // namespace fxt
