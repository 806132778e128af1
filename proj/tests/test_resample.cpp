#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "fxt/grid.hpp"
#include "fxt/resample.hpp"
#include "fxt/spectral.hpp"
#include "oracles.hpp"

using fxt::AlignedDomain;
using fxt::AlignedSequence;
using fxt::GridSpec;
using fxt::SampledSignal;

namespace {

std::vector<double> random_values(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> draw(-1.0, 1.0);
  std::vector<double> out(n);
  for (double& v : out) v = draw(rng);
  return out;
}

GridSpec random_spec(std::mt19937& rng) {
  std::uniform_real_distribution<double> rate_draw(1000.0, 48000.0);
  std::uniform_int_distribution<std::size_t> count_draw(16, 2048);
  std::uniform_real_distribution<double> frac_draw(0.001, 0.999);
  const double fs = rate_draw(rng);
  const std::size_t n = count_draw(rng);
  const double lo = 2.0 / fs;
  const double hi = static_cast<double>(n) / fs;
  return GridSpec(fs, n, lo + (hi - lo) * frac_draw(rng));
}

}  // namespace

TEST_CASE("linear interpolation basics") {
  const std::vector<double> ramp{0.0, 10.0};
  CHECK(fxt::linear_interpolate(ramp, 0.25) == doctest::Approx(2.5));
  CHECK(fxt::linear_interpolate(ramp, 0.0) == 0.0);
  CHECK(fxt::linear_interpolate(ramp, 1.0) == 10.0);
  CHECK(fxt::linear_interpolate(ramp, 1.5) == 0.0);  // past the last knot

  CHECK_THROWS_AS(fxt::linear_interpolate(ramp, -0.1), std::invalid_argument);
  const std::vector<double> lone{1.0};
  CHECK_THROWS_AS(fxt::linear_interpolate(lone, 0.0), std::invalid_argument);
}

TEST_CASE("a = 1 grids pass both directions through untouched") {
  const GridSpec spec(1600.0, 256, 0.01);  // N_t = N_f = 16

  const std::vector<double> magnitudes = random_values(256, 5u);
  std::vector<double> positive(magnitudes);
  for (double& v : positive) v = std::abs(v);
  const AlignedSequence freq = fxt::resample_spectrum(positive, spec);
  CHECK(freq.domain == AlignedDomain::Frequency);
  CHECK(freq.out_of_range_count == 0);
  CHECK(freq.increment == doctest::Approx(fxt::dft_bin_spacing(spec)).epsilon(1e-12));
  for (std::size_t q = 0; q < 256; ++q)
    CHECK(std::abs(freq.values[q] - (positive[q])) <= 1e-12);

  const SampledSignal signal{random_values(256, 6u), 1600.0};
  const AlignedSequence time = fxt::resample_time(signal, spec);
  CHECK(time.domain == AlignedDomain::Time);
  CHECK(time.out_of_range_count == 0);
  CHECK(time.increment == doctest::Approx(fxt::time_step_s(spec)).epsilon(1e-12));
  for (std::size_t q = 0; q < 256; ++q)
    CHECK(std::abs(time.values[q] - (signal.samples[q])) <= 1e-12);
}

TEST_CASE("frequency alignment moves harmonic peaks onto multiples of N_t") {
  const GridSpec spec(8000.0, 4000, 0.01);  // a = 1.6
  const SampledSignal train = fxt::make_impulse_train(spec);
  const AlignedSequence aligned = fxt::resample_spectrum(fxt::dft(train), spec);

  CHECK(aligned.out_of_range_count == 0);
  CHECK(aligned.increment == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(aligned.source_end_index_0based == doctest::Approx(2499.375).epsilon(1e-12));

  // Input peaks of 50 at bin multiples of 50 land on 80p exactly (80/1.6 = 50).
  for (std::size_t p = 0; p * 80 < 4000; ++p)
    CHECK(aligned.values[p * 80] == doctest::Approx(50.0).epsilon(1e-9));

  // Neighbors read the linear ramp between a peak and a near-zero bin:
  // source index 50p +- 0.625 -> 0.375 of the peak.
  for (std::size_t p = 1; p * 80 + 1 < 4000; ++p) {
    CHECK(aligned.values[p * 80 + 1] == doctest::Approx(18.75).epsilon(1e-9));
    CHECK(aligned.values[p * 80 - 1] == doctest::Approx(18.75).epsilon(1e-9));
  }

  // Full cross-check against the longhand frequency-axis walk.
  std::vector<double> magnitudes(4000);
  const fxt::Spectrum spectrum = fxt::dft(train);
  for (std::size_t k = 0; k < 4000; ++k) magnitudes[k] = std::abs(spectrum.bins[k]);
  const oracle::Resampled expect = oracle::resample_frequency_direct(magnitudes, 8000.0, 0.01);
  CHECK(expect.out_of_range == aligned.out_of_range_count);
  for (std::size_t q = 0; q < 4000; ++q)
    CHECK(std::abs(aligned.values[q] - (expect.values[q])) <= 1e-9);
}

TEST_CASE("time alignment compresses periods onto multiples of N_f and zero-fills the tail") {
  const GridSpec spec(8000.0, 4000, 0.01);  // a = 1.6
  const SampledSignal train = fxt::make_impulse_train(spec);
  const AlignedSequence aligned = fxt::resample_time(train, spec);

  CHECK(aligned.increment == doctest::Approx(2.0e-4).epsilon(1e-12));
  CHECK(aligned.source_end_index_0based == doctest::Approx(6398.4).epsilon(1e-12));
  CHECK(aligned.out_of_range_count == 1500);  // N - ceil(N/a)

  // Period marks every N_f = 50 output samples while the source index fits.
  for (std::size_t q = 0; q < 2500; ++q) {
    const double expect = (q % 50 == 0) ? 1.0 : 0.0;
    CHECK(std::abs(aligned.values[q] - (expect)) <= 1e-9);
  }
  for (std::size_t q = 2500; q < 4000; ++q) CHECK(aligned.values[q] == 0.0);

  const oracle::Resampled expect = oracle::resample_time_direct(train.samples, 8000.0, 0.01);
  CHECK(expect.out_of_range == aligned.out_of_range_count);
  for (std::size_t q = 0; q < 4000; ++q)
    CHECK(std::abs(aligned.values[q] - (expect.values[q])) <= 1e-9);
}

TEST_CASE("final evaluation points agree with the grid's end indices") {
  std::mt19937 rng(17u);
  for (int trial = 0; trial < 50; ++trial) {
    const GridSpec spec = random_spec(rng);
    const std::size_t n = spec.num_samples();
    const double a = fxt::alignment_scale(spec).a;

    std::vector<double> magnitudes = random_values(n, static_cast<std::uint32_t>(trial));
    for (double& v : magnitudes) v = std::abs(v);
    const AlignedSequence freq = fxt::resample_spectrum(magnitudes, spec);
    CHECK(freq.source_end_index_0based ==
          doctest::Approx(static_cast<double>(n - 1) / a).epsilon(1e-12));

    const SampledSignal signal{random_values(n, static_cast<std::uint32_t>(trial) + 1000u),
                               spec.sample_rate_hz()};
    const AlignedSequence time = fxt::resample_time(signal, spec);
    CHECK(time.source_end_index_0based ==
          doctest::Approx(static_cast<double>(n - 1) * a).epsilon(1e-12));
  }
}

TEST_CASE("length mismatches are rejected") {
  const GridSpec spec(8000.0, 4000, 0.01);
  const std::vector<double> short_mags(100, 1.0);
  CHECK_THROWS_AS(fxt::resample_spectrum(short_mags, spec), std::invalid_argument);
  const SampledSignal short_signal{std::vector<double>(100, 1.0), 8000.0};
  CHECK_THROWS_AS(fxt::resample_time(short_signal, spec), std::invalid_argument);
  const fxt::Spectrum short_spectrum{std::vector<std::complex<double>>(100), 2.0};
  CHECK_THROWS_AS(fxt::resample_spectrum(short_spectrum, spec), std::invalid_argument);
}

TEST_CASE("exactly one direction can run out of source range") {
  std::mt19937 rng(23u);
  for (int trial = 0; trial < 50; ++trial) {
    const GridSpec spec = random_spec(rng);
    const std::size_t n = spec.num_samples();
    const double a = fxt::alignment_scale(spec).a;

    std::vector<double> magnitudes = random_values(n, static_cast<std::uint32_t>(trial) + 77u);
    for (double& v : magnitudes) v = std::abs(v);
    const AlignedSequence freq = fxt::resample_spectrum(magnitudes, spec);
    const SampledSignal signal{magnitudes, spec.sample_rate_hz()};
    const AlignedSequence time = fxt::resample_time(signal, spec);

    // Stretching one axis always compresses the other.
    if (a >= 1.0) CHECK(freq.out_of_range_count == 0);
    if (a <= 1.0) CHECK(time.out_of_range_count == 0);
    CHECK((freq.out_of_range_count == 0 || time.out_of_range_count == 0));
    if (a > 1.01) CHECK(time.out_of_range_count > 0);
    if (a < 0.99) CHECK(freq.out_of_range_count > 0);
  }
}

TEST_CASE("interpolated values stay inside their bracketing source samples") {
  const GridSpec stretch(8000.0, 4000, 0.01);   // a = 1.6
  const GridSpec compress(8000.0, 4000, 0.005);  // a = 0.4

  const std::vector<double> source = [] {
    std::vector<double> v = random_values(4000, 91u);
    for (double& x : v) x = std::abs(x);
    return v;
  }();

  for (const GridSpec* spec : {&stretch, &compress}) {
    const double a = fxt::alignment_scale(*spec).a;
    const AlignedSequence freq = fxt::resample_spectrum(source, *spec);
    for (std::size_t q = 0; q < 4000; ++q) {
      const double idx = static_cast<double>(q) / a;
      if (idx > 3999.0) {
        CHECK(freq.values[q] == 0.0);
        continue;
      }
      const std::size_t lo = static_cast<std::size_t>(idx);
      const std::size_t hi = std::min<std::size_t>(lo + 1, 3999);
      const double floor_v = std::min(source[lo], source[hi]);
      const double ceil_v = std::max(source[lo], source[hi]);
      CHECK(freq.values[q] >= floor_v - 1e-12);
      CHECK(freq.values[q] <= ceil_v + 1e-12);
    }
  }
}
