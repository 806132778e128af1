#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fxt/grid.hpp"
#include "fxt/spectral.hpp"

namespace fxt {

enum class AlignedDomain { Frequency, Time };

// One domain resampled onto the other's grid. values[q] sits at q*increment
// in the resampled domain; source_end_index_0based is the fractional source
// index of the last output sample. Source indices past N-1 read as zero and
// are tallied in out_of_range_count (frequency direction stays in range when
// a >= 1, time direction when a <= 1).
struct AlignedSequence {
  std::vector<double> values;
  double increment = 0.0;  // Hz when frequency-aligned, seconds when time-aligned
  AlignedDomain domain = AlignedDomain::Frequency;
  double source_end_index_0based = 0.0;
  std::size_t out_of_range_count = 0;
};

// Linear interpolation at a fractional index. Indices past the last element
// return 0, the out-of-range convention shared by both resample directions.
// Negative indices are an error.
double linear_interpolate(std::span<const double> values, double fractional_index);

// Magnitude spectrum read off at frequencies q*delta'_f, i.e. source indices
// q/a, so harmonic peaks come out N_t samples apart. The overload taking raw
// magnitudes skips the |.| pass when the caller already has them.
AlignedSequence resample_spectrum(const Spectrum& spectrum, const GridSpec& spec);
AlignedSequence resample_spectrum(std::span<const double> magnitudes, const GridSpec& spec);

// Time signal read off at times q*delta'_t, i.e. source indices q*a, so
// period marks come out N_f samples apart.
AlignedSequence resample_time(const SampledSignal& signal, const GridSpec& spec);

}  // namespace fxt
