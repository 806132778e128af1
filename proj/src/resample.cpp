#include "fxt/resample.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fxt {
namespace {

template <typename IndexOf>
AlignedSequence resample_by_index(std::span<const double> source, IndexOf&& source_index,
                                  AlignedDomain domain, double increment,
                                  double source_end_index) {
  AlignedSequence out;
  out.increment = increment;
  out.domain = domain;
  out.source_end_index_0based = source_end_index;
  out.values.resize(source.size());

  const double last = static_cast<double>(source.size() - 1);
  for (std::size_t q = 0; q < source.size(); ++q) {
    const double idx = source_index(static_cast<double>(q));
    if (idx > last) {
      out.values[q] = 0.0;
      ++out.out_of_range_count;
    } else {
      out.values[q] = linear_interpolate(source, idx);
    }
  }
  return out;
}

}  // namespace

double linear_interpolate(std::span<const double> values, double fractional_index) {
  if (values.size() < 2)
    throw std::invalid_argument("linear_interpolate: need at least 2 values");
  if (!(fractional_index >= 0.0))
    throw std::invalid_argument("linear_interpolate: negative index " +
                                std::to_string(fractional_index));
  const double last = static_cast<double>(values.size() - 1);
  if (fractional_index > last) return 0.0;

  const std::size_t lo = static_cast<std::size_t>(fractional_index);
  if (lo == values.size() - 1) return values[lo];
  const double w = fractional_index - static_cast<double>(lo);
  return (1.0 - w) * values[lo] + w * values[lo + 1];
}

AlignedSequence resample_spectrum(const Spectrum& spectrum, const GridSpec& spec) {
  if (spectrum.bins.size() != spec.num_samples())
    throw std::invalid_argument("resample_spectrum: spectrum length " +
                                std::to_string(spectrum.bins.size()) + " does not match N = " +
                                std::to_string(spec.num_samples()));
  std::vector<double> magnitudes(spectrum.bins.size());
  for (std::size_t i = 0; i < magnitudes.size(); ++i) magnitudes[i] = std::abs(spectrum.bins[i]);
  return resample_spectrum(std::span<const double>(magnitudes), spec);
}

AlignedSequence resample_spectrum(std::span<const double> magnitudes, const GridSpec& spec) {
  if (magnitudes.size() != spec.num_samples())
    throw std::invalid_argument("resample_spectrum: magnitude length " +
                                std::to_string(magnitudes.size()) + " does not match N = " +
                                std::to_string(spec.num_samples()));
  const AlignmentScale scale = alignment_scale(spec);
  return resample_by_index(
      magnitudes, [a = scale.a](double q) { return q / a; }, AlignedDomain::Frequency,
      scale.new_freq_increment_hz, scale.freq_end_index_0based());
}

AlignedSequence resample_time(const SampledSignal& signal, const GridSpec& spec) {
  if (signal.samples.size() != spec.num_samples())
    throw std::invalid_argument("resample_time: signal length " +
                                std::to_string(signal.samples.size()) + " does not match N = " +
                                std::to_string(spec.num_samples()));
  const AlignmentScale scale = alignment_scale(spec);
  return resample_by_index(
      signal.samples, [a = scale.a](double q) { return q * a; }, AlignedDomain::Time,
      scale.new_time_increment_s, scale.time_end_index_0based());
}

}  // namespace fxt
