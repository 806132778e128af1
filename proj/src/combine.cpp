#include "fxt/combine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "fxt/grid.hpp"
#include "fxt/resample.hpp"

namespace fxt {
namespace {

std::vector<double> rectified(const std::vector<double>& samples) {
  std::vector<double> out(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) out[i] = std::abs(samples[i]);
  return out;
}

// Scale to unit maximum; the zero sequence stays zero.
void scale_to_unit_max(std::vector<double>& values) {
  double peak = 0.0;
  for (double v : values) peak = std::max(peak, v);
  if (peak > 0.0)
    for (double& v : values) v /= peak;
}

double weighted_score(const std::vector<double>& time_norm,
                      const std::vector<double>& aligned_norm) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < time_norm.size(); ++i) {
    num += time_norm[i] * aligned_norm[i];
    den += aligned_norm[i];
  }
  return den > 0.0 ? num / den : 0.0;
}

double candidate_at(double lo, double hi, std::size_t count, std::size_t i) {
  return lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(count - 1));
}

std::vector<double> aligned_unit_max(std::span<const double> magnitudes, const GridSpec& spec) {
  AlignedSequence aligned = resample_spectrum(magnitudes, spec);
  scale_to_unit_max(aligned.values);
  return std::move(aligned.values);
}

}  // namespace

FxtReport fxt_combine(const SampledSignal& signal, double candidate_period_s) {
  // GridSpec validation doubles as the candidate check: a period that does
  // not fit the record (or aliases) is rejected here.
  const GridSpec spec(signal.sample_rate_hz, signal.samples.size(), candidate_period_s);

  FxtReport report;
  report.candidate_period_s = candidate_period_s;
  report.time_sequence = rectified(signal.samples);
  scale_to_unit_max(report.time_sequence);

  const Spectrum spectrum = dft(signal);
  std::vector<double> magnitudes(spectrum.bins.size());
  for (std::size_t i = 0; i < magnitudes.size(); ++i) magnitudes[i] = std::abs(spectrum.bins[i]);
  report.aligned_spectrum = aligned_unit_max(magnitudes, spec);

  report.product_sequence.resize(signal.samples.size());
  for (std::size_t i = 0; i < report.product_sequence.size(); ++i)
    report.product_sequence[i] = report.time_sequence[i] * report.aligned_spectrum[i];

  report.score = weighted_score(report.time_sequence, report.aligned_spectrum);
  report.convolution_sequence =
      circular_convolution(report.time_sequence, report.aligned_spectrum);
  return report;
}

PitchEstimate pitch_sweep(const SampledSignal& signal, double period_min_s, double period_max_s,
                          std::size_t num_candidates) {
  const std::size_t n = signal.samples.size();
  if (n < 2) throw std::invalid_argument("pitch_sweep: need at least 2 samples");
  if (!(signal.sample_rate_hz > 0.0))
    throw std::invalid_argument("pitch_sweep: sample rate must be positive");
  const double duration_s = static_cast<double>(n) / signal.sample_rate_hz;
  if (!(period_min_s > 0.0) || !(period_min_s < period_max_s) || !(period_max_s < duration_s))
    throw std::invalid_argument("pitch_sweep: need 0 < period_min < period_max < " +
                                std::to_string(duration_s) + " s (record duration)");
  if (num_candidates < 2)
    throw std::invalid_argument("pitch_sweep: need at least 2 candidates");

  // Both endpoints must make valid grids; candidates in between then do too.
  (void)GridSpec(signal.sample_rate_hz, n, period_min_s);
  (void)GridSpec(signal.sample_rate_hz, n, period_max_s);

  std::vector<double> time_norm = rectified(signal.samples);
  scale_to_unit_max(time_norm);
  const Spectrum spectrum = dft(signal);
  std::vector<double> magnitudes(n);
  for (std::size_t i = 0; i < n; ++i) magnitudes[i] = std::abs(spectrum.bins[i]);

  std::vector<double> scores(num_candidates, 0.0);
  auto score_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const GridSpec spec(signal.sample_rate_hz, n,
                          candidate_at(period_min_s, period_max_s, num_candidates, i));
      const std::vector<double> aligned = aligned_unit_max(magnitudes, spec);
      scores[i] = weighted_score(time_norm, aligned);
    }
  };

  // Disjoint index chunks; every slot is written by exactly one worker and
  // each score depends only on shared immutable inputs.
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, num_candidates);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (num_candidates + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(begin + chunk, num_candidates);
    if (begin >= end) break;
    pool.emplace_back(score_range, begin, end);
  }
  for (auto& t : pool) t.join();

  PitchEstimate estimate;
  estimate.scores.reserve(num_candidates);
  std::size_t best = 0;
  for (std::size_t i = 0; i < num_candidates; ++i) {
    estimate.scores.emplace_back(candidate_at(period_min_s, period_max_s, num_candidates, i),
                                 scores[i]);
    if (scores[i] > scores[best]) best = i;
  }
  estimate.best_period_s = estimate.scores[best].first;
  estimate.best_frequency_hz = 1.0 / estimate.best_period_s;
  return estimate;
}

}  // namespace fxt
