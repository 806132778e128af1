#include "fxt/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fxt {

GridSpec::GridSpec(double sample_rate_hz, std::size_t num_samples, double period_s)
    : sample_rate_hz_(sample_rate_hz), num_samples_(num_samples), period_s_(period_s) {
  if (!std::isfinite(sample_rate_hz) || sample_rate_hz <= 0.0)
    throw std::invalid_argument("GridSpec: sample rate must be positive and finite");
  if (num_samples < 2)
    throw std::invalid_argument("GridSpec: record needs at least 2 samples");
  if (!std::isfinite(period_s) || period_s <= 0.0)
    throw std::invalid_argument("GridSpec: period must be positive and finite");
  const double duration_s = static_cast<double>(num_samples) / sample_rate_hz;
  if (period_s >= duration_s)
    throw std::invalid_argument("GridSpec: period " + std::to_string(period_s) +
                                " s does not fit in the " + std::to_string(duration_s) +
                                " s record");
  if (1.0 / period_s > sample_rate_hz / 2.0)
    throw std::invalid_argument("GridSpec: fundamental " + std::to_string(1.0 / period_s) +
                                " Hz is above Nyquist (" + std::to_string(sample_rate_hz / 2.0) +
                                " Hz)");
}

double fundamental_frequency(const GridSpec& spec) { return 1.0 / spec.period_s(); }

double time_step_s(const GridSpec& spec) { return 1.0 / spec.sample_rate_hz(); }

double dft_bin_spacing(const GridSpec& spec) {
  return spec.sample_rate_hz() / static_cast<double>(spec.num_samples());
}

double samples_per_period(const GridSpec& spec) {
  return spec.period_s() * spec.sample_rate_hz();
}

double harmonic_bin_spacing(const GridSpec& spec) {
  return static_cast<double>(spec.num_samples()) * fundamental_frequency(spec) /
         spec.sample_rate_hz();
}

int max_harmonics(const GridSpec& spec) {
  return static_cast<int>(std::floor(spec.sample_rate_hz() / (2.0 * fundamental_frequency(spec))));
}

AlignmentScale alignment_scale(const GridSpec& spec) {
  const double fs = spec.sample_rate_hz();
  const double tp = spec.period_s();
  const double n = static_cast<double>(spec.num_samples());

  AlignmentScale out;
  out.a = samples_per_period(spec) / harmonic_bin_spacing(spec);
  out.b = harmonic_bin_spacing(spec) / samples_per_period(spec);
  const double fp = fundamental_frequency(spec);
  out.new_freq_increment_hz = fp * fp / fs;
  out.new_time_increment_s = tp * tp * fs / n;
  out.freq_end_hz = (n - 1.0) * out.new_freq_increment_hz;
  out.time_end_s = (n - 1.0) * out.new_time_increment_s;
  // End indices through the per-step index factors N/(f_s^2 t_p^2) and its
  // reciprocal; algebraically (N-1)/a + 1 and (N-1)*a + 1.
  out.freq_end_index = (n - 1.0) * (n / (fs * fs * tp * tp)) + 1.0;
  out.time_end_index = (n - 1.0) * (fs * fs * tp * tp / n) + 1.0;
  return out;
}

ScaleIdentityReport scale_identity_check(const GridSpec& spec) {
  const double fs = spec.sample_rate_hz();
  const double tp = spec.period_s();
  const double n = static_cast<double>(spec.num_samples());
  const double coefficient = tp * tp * fs * fs / n;
  const double inverse_constraint = n / (fs * fs * tp * tp);
  const double a = alignment_scale(spec).a;

  ScaleIdentityReport report;
  report.classical_residual = std::abs(coefficient * inverse_constraint - 1.0);
  report.alignment_residual = std::abs(coefficient - a) / a;
  return report;
}

GridExactness grid_exactness(const GridSpec& spec) {
  const double nt = samples_per_period(spec);
  const double nf = harmonic_bin_spacing(spec);

  GridExactness out;
  out.samples_per_period_frac = nt - std::round(nt);
  out.harmonic_bin_spacing_frac = nf - std::round(nf);
  out.exact = std::abs(out.samples_per_period_frac) <= 1e-9 &&
              std::abs(out.harmonic_bin_spacing_frac) <= 1e-9;
  return out;
}

}  // namespace fxt
