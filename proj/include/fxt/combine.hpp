#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fxt/spectral.hpp"

namespace fxt {

// A candidate period's combination of a signal with its frequency-aligned
// spectrum. time_sequence is the rectified signal |x| and aligned_spectrum
// the aligned |X|, both scaled to unit maximum. Two readings of "combine" are
// exposed: product_sequence (elementwise) and convolution_sequence (circular).
// When the candidate matches the signal's period, peaks of the two sequences
// land on the same sample indices.
//
// score = sum(product_sequence) / sum(aligned_spectrum), i.e. the
// aligned-mass-weighted mean of the rectified signal: 1 when every unit of
// aligned spectral mass sits on a full-amplitude part of the signal, 0 when
// none of it does (or the spectrum is empty). Weighting by aligned mass keeps
// candidates comparable: interpolation smears each source peak over a stretch
// proportional to the scale factor a, so an unweighted mean would grow with
// the candidate period regardless of fit.
struct FxtReport {
  double candidate_period_s = 0.0;
  std::vector<double> time_sequence;
  std::vector<double> aligned_spectrum;
  std::vector<double> product_sequence;
  std::vector<double> convolution_sequence;
  double score = 0.0;
};

struct PitchEstimate {
  double best_period_s = 0.0;
  double best_frequency_hz = 0.0;
  std::vector<std::pair<double, double>> scores;  // (candidate_period_s, score), sweep order
};

FxtReport fxt_combine(const SampledSignal& signal, double candidate_period_s);

// Scores num_candidates periods uniformly spaced over [period_min_s,
// period_max_s], both endpoints included. Candidates are evaluated in
// parallel but assembled by index, so results are bit-identical to a
// sequential sweep. Score ties break toward the smallest period.
PitchEstimate pitch_sweep(const SampledSignal& signal, double period_min_s, double period_max_s,
                          std::size_t num_candidates);

}  // namespace fxt
