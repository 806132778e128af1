#pragma once

#include <cstddef>

namespace fxt {

// Geometry of a sampled record: sample rate f_s, record length N and the
// period t_p under consideration. Validated on construction; everything else
// in this header is a pure function of these three numbers.
class GridSpec {
public:
  GridSpec(double sample_rate_hz, std::size_t num_samples, double period_s);

  double sample_rate_hz() const { return sample_rate_hz_; }
  std::size_t num_samples() const { return num_samples_; }
  double period_s() const { return period_s_; }

private:
  double sample_rate_hz_;
  std::size_t num_samples_;
  double period_s_;
};

double fundamental_frequency(const GridSpec& spec);  // f_p = 1/t_p
double time_step_s(const GridSpec& spec);            // delta_t = 1/f_s
double dft_bin_spacing(const GridSpec& spec);        // delta_f = f_s/N, in Hz

// N_t and N_f, the sample count per period and the bin count per harmonic
// gap. Fractional values are allowed; see grid_exactness.
double samples_per_period(const GridSpec& spec);     // N_t = t_p * f_s
double harmonic_bin_spacing(const GridSpec& spec);   // N_f = N * f_p / f_s

// Largest harmonic index below (or at) Nyquist: floor(f_s / (2 f_p)).
int max_harmonics(const GridSpec& spec);

// Scale factors tying the two grids together. Stretching the frequency axis
// by a = N_t/N_f makes the harmonic spacing in samples equal the period
// length in samples; b = 1/a is the dual stretch of the time axis. The new
// increments are delta'_f = f_p^2/f_s and delta'_t = t_p^2 f_s/N. The *_end
// values locate the last resampled point in source units; *_end_index are
// 1-based fractional indices into the source arrays and may exceed N, in
// which case part of the resampled grid falls outside the record.
struct AlignmentScale {
  double a = 0.0;
  double b = 0.0;
  double new_freq_increment_hz = 0.0;
  double new_time_increment_s = 0.0;
  double freq_end_hz = 0.0;
  double time_end_s = 0.0;
  double freq_end_index = 0.0;  // n_end, 1-based fractional
  double time_end_index = 0.0;  // m_end, 1-based fractional

  double freq_end_index_0based() const { return freq_end_index - 1.0; }
  double time_end_index_0based() const { return time_end_index - 1.0; }
};

AlignmentScale alignment_scale(const GridSpec& spec);

// Cross-check of the scale-factor algebra along two routes.
// classical_residual: the coefficient t_p^2 f_s^2 / N times the inverse
// constraint N / (f_s^2 t_p^2) minus one; the product collapses to 1, the
// classical a = 1 case. alignment_residual: relative difference between that
// coefficient and a = N_t/N_f, which are equal term by term. Both stay at
// rounding level (<= 1e-12) for every valid grid.
struct ScaleIdentityReport {
  double classical_residual = 0.0;
  double alignment_residual = 0.0;
};

ScaleIdentityReport scale_identity_check(const GridSpec& spec);

// Whether N_t and N_f are both integral within 1e-9, i.e. whole periods and
// whole harmonic gaps tile the record. The frac fields are signed distances
// to the nearest integer.
struct GridExactness {
  bool exact = false;
  double samples_per_period_frac = 0.0;
  double harmonic_bin_spacing_frac = 0.0;
};

GridExactness grid_exactness(const GridSpec& spec);

}  // namespace fxt
