#include "fxt/cli.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <iostream>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "fxt/combine.hpp"
#include "fxt/csv.hpp"
#include "fxt/grid.hpp"
#include "fxt/resample.hpp"
#include "fxt/spectral.hpp"
#include "fxt/svg.hpp"
#include "fxt/wav.hpp"

namespace fxt {
namespace {

// "out.csv" -> "out"; anything else passes through. Derived file names
// (.spectrum.csv, .svg, ...) hang off this stem.
std::string output_stem(const std::string& path) {
  const std::string suffix = ".csv";
  if (path.size() > suffix.size() &&
      path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return path.substr(0, path.size() - suffix.size());
  }
  return path;
}

SampledSignal load_signal(const RunConfig& config) {
  if (config.waveform == Waveform::FromWav) {
    SampledSignal signal = read_wav(config.input_path);
    if (config.num_samples != 0) signal.samples.resize(config.num_samples, 0.0);
    if (signal.samples.size() < 2) throw WavError("input yields fewer than 2 samples");
    return signal;
  }
  const GridSpec spec(config.sample_rate_hz, config.num_samples, *config.period_s);
  if (config.waveform == Waveform::Harmonic) {
    std::vector<double> amplitudes = config.harmonic_amplitudes;
    if (amplitudes.empty()) amplitudes.push_back(1.0);
    return make_harmonic(spec, amplitudes);
  }
  return make_impulse_train(spec);
}

void emit_csv(const std::string& path, std::span<const std::string> header,
              const std::vector<std::vector<std::string>>& rows) {
  if (path.empty()) {
    std::cout << csv_text(header, rows);
  } else {
    write_csv(path, header, rows);
  }
}

int run_gridinfo(const RunConfig& config) {
  const GridSpec spec(config.sample_rate_hz, config.num_samples, *config.period_s);
  const AlignmentScale scale = alignment_scale(spec);
  const std::pair<const char*, double> entries[] = {
      {"f_p", fundamental_frequency(spec)},
      {"delta_t", time_step_s(spec)},
      {"delta_f", dft_bin_spacing(spec)},
      {"N_t", samples_per_period(spec)},
      {"N_f", harmonic_bin_spacing(spec)},
      {"n_max", static_cast<double>(max_harmonics(spec))},
      {"a", scale.a},
      {"b", scale.b},
      {"new_delta_f", scale.new_freq_increment_hz},
      {"new_delta_t", scale.new_time_increment_s},
      {"n_end", scale.freq_end_index},
      {"m_end", scale.time_end_index},
  };
  std::vector<std::vector<std::string>> rows;
  rows.reserve(std::size(entries));
  for (const auto& [key, value] : entries) rows.push_back({key, format_real(value)});
  const std::string header[] = {"key", "value"};
  emit_csv(config.output_path, header, rows);
  return 0;
}

int run_synth(const RunConfig& config) {
  const SampledSignal signal = load_signal(config);
  const double dt = 1.0 / signal.sample_rate_hz;
  std::vector<std::vector<std::string>> rows;
  rows.reserve(signal.samples.size());
  for (std::size_t i = 0; i < signal.samples.size(); ++i) {
    rows.push_back({std::to_string(i), format_real(static_cast<double>(i) * dt),
                    format_real(signal.samples[i])});
  }
  const std::string header[] = {"index", "time_s", "amplitude"};
  write_csv(config.output_path, header, rows);
  if (config.emit_svg) {
    write_svg_plot(output_stem(config.output_path) + ".svg", signal.samples, "signal");
  }
  return 0;
}

int run_align(const RunConfig& config) {
  const SampledSignal signal = load_signal(config);
  const GridSpec spec(signal.sample_rate_hz, signal.samples.size(), *config.period_s);
  const Spectrum spectrum = dft(signal);
  std::vector<double> magnitudes(spectrum.bins.size());
  for (std::size_t i = 0; i < magnitudes.size(); ++i) magnitudes[i] = std::abs(spectrum.bins[i]);
  const AlignedSequence aligned = resample_spectrum(magnitudes, spec);

  const std::string header[] = {"index", "freq_hz", "magnitude"};
  const std::string stem = output_stem(config.output_path);

  std::vector<std::vector<std::string>> rows;
  rows.reserve(magnitudes.size());
  for (std::size_t i = 0; i < magnitudes.size(); ++i) {
    rows.push_back({std::to_string(i), format_real(static_cast<double>(i) * spectrum.bin_spacing_hz),
                    format_real(magnitudes[i])});
  }
  write_csv(stem + ".spectrum.csv", header, rows);

  rows.clear();
  for (std::size_t i = 0; i < aligned.values.size(); ++i) {
    rows.push_back({std::to_string(i), format_real(static_cast<double>(i) * aligned.increment),
                    format_real(aligned.values[i])});
  }
  write_csv(stem + ".aligned.csv", header, rows);

  if (config.emit_svg) {
    write_svg_plot(stem + ".spectrum.svg", magnitudes, "spectrum");
    write_svg_plot(stem + ".aligned.svg", aligned.values, "aligned spectrum");
  }
  return 0;
}

int run_fxt(const RunConfig& config) {
  const SampledSignal signal = load_signal(config);
  const FxtReport report = fxt_combine(signal, *config.period_s);
  std::vector<std::vector<std::string>> rows;
  rows.reserve(report.time_sequence.size());
  for (std::size_t i = 0; i < report.time_sequence.size(); ++i) {
    rows.push_back({std::to_string(i), format_real(report.time_sequence[i]),
                    format_real(report.aligned_spectrum[i]),
                    format_real(report.product_sequence[i]),
                    format_real(report.convolution_sequence[i])});
  }
  const std::string header[] = {"index", "time_sequence", "aligned_spectrum",
                                "product_sequence", "convolution_sequence"};
  write_csv(config.output_path, header, rows);
  std::cout << "candidate_period_s," << format_real(report.candidate_period_s) << "\n"
            << "score," << format_real(report.score) << "\n";
  if (config.emit_svg) {
    write_svg_plot(output_stem(config.output_path) + ".svg", report.product_sequence,
                   "fxt product");
  }
  return 0;
}

int run_pitch(const RunConfig& config) {
  const SampledSignal signal = load_signal(config);
  const PitchEstimate estimate =
      pitch_sweep(signal, *config.sweep_min_s, *config.sweep_max_s, *config.sweep_count);
  std::vector<std::vector<std::string>> rows;
  rows.reserve(estimate.scores.size());
  for (const auto& [period, score] : estimate.scores) {
    rows.push_back({format_real(period), format_real(score)});
  }
  const std::string header[] = {"candidate_period_s", "score"};
  write_csv(config.output_path, header, rows);
  std::cout << "best_period_s=" << format_real(estimate.best_period_s)
            << " best_frequency_hz=" << format_real(estimate.best_frequency_hz) << "\n";
  if (config.emit_svg) {
    std::vector<double> scores;
    scores.reserve(estimate.scores.size());
    for (const auto& [period, score] : estimate.scores) scores.push_back(score);
    write_svg_plot(output_stem(config.output_path) + ".svg", scores, "pitch scores");
  }
  return 0;
}

}  // namespace

std::optional<std::string> validate(const RunConfig& config) {
  if (!(config.sample_rate_hz > 0.0)) return "sample rate must be positive";
  if (config.num_samples == 1) return "--n must be at least 2";

  const bool synthesized =
      config.command != Command::GridInfo && config.waveform != Waveform::FromWav;
  if ((config.command == Command::GridInfo || synthesized) && config.num_samples == 0) {
    return "--n is required when the signal is synthesized";
  }
  if (config.command != Command::GridInfo && config.waveform == Waveform::FromWav &&
      config.input_path.empty()) {
    return "--in is required with --waveform from-wav";
  }
  if (config.command != Command::GridInfo && config.output_path.empty()) {
    return "--out is required for this command";
  }

  const bool needs_period = config.command == Command::GridInfo ||
                            config.command == Command::Synth ||
                            config.command == Command::Align || config.command == Command::Fxt ||
                            (config.command == Command::Pitch && synthesized);
  if (needs_period && !config.period_s) return "--tp is required here";

  // When the grid is known from flags alone (not read from a file), reject an
  // unusable period here as a config error rather than mid-run.
  if (config.period_s && (config.command == Command::GridInfo || synthesized)) {
    try {
      (void)GridSpec(config.sample_rate_hz, config.num_samples, *config.period_s);
    } catch (const std::invalid_argument& error) {
      return error.what();
    }
  }

  if (config.command == Command::Pitch) {
    if (!config.sweep_min_s || !config.sweep_max_s || !config.sweep_count) {
      return "--sweep-min, --sweep-max and --sweep-count are required for pitch";
    }
    if (!(*config.sweep_min_s > 0.0)) return "--sweep-min must be positive";
    if (!(*config.sweep_max_s > *config.sweep_min_s)) return "--sweep-max must exceed --sweep-min";
    if (*config.sweep_count < 2) return "--sweep-count must be at least 2";
  }
  return std::nullopt;
}

int run(const RunConfig& config) {
  try {
    switch (config.command) {
      case Command::GridInfo: return run_gridinfo(config);
      case Command::Synth: return run_synth(config);
      case Command::Align: return run_align(config);
      case Command::Fxt: return run_fxt(config);
      case Command::Pitch: return run_pitch(config);
    }
  } catch (const std::invalid_argument& error) {
    // Bad argument combinations that only surface inside the library
    // (e.g. a period that makes the synthesis grid inexact) are config errors.
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
  return 0;
}

int run_cli(int argc, const char* const* argv) {
  RunConfig config;
  double period = 0.0;
  double sweep_min = 0.0;
  double sweep_max = 0.0;
  std::size_t sweep_count = 0;

  CLI::App app{"sampled periodic signals: grid info, spectra, alignment, pitch"};
  app.require_subcommand(1);

  const std::map<std::string, Waveform> waveform_names{
      {"impulse-train", Waveform::ImpulseTrain},
      {"harmonic", Waveform::Harmonic},
      {"from-wav", Waveform::FromWav},
  };

  CLI::Option* period_opt = nullptr;
  auto add_common = [&](CLI::App* cmd, bool with_signal) {
    cmd->add_option("--fs", config.sample_rate_hz, "sample rate in Hz")
        ->capture_default_str();
    cmd->add_option("--n", config.num_samples,
                    "sample count (with --waveform from-wav, 0 keeps the file length)");
    period_opt = cmd->add_option("--tp", period, "signal period in seconds");
    if (with_signal) {
      cmd->add_option("--waveform", config.waveform, "signal source")
          ->transform(CLI::CheckedTransformer(waveform_names, CLI::ignore_case));
      cmd->add_option("--amps", config.harmonic_amplitudes,
                      "harmonic amplitudes, fundamental first (with --waveform harmonic)")
          ->delimiter(',');
      cmd->add_option("--in", config.input_path, "input WAV path (with --waveform from-wav)");
      cmd->add_option("--out", config.output_path, "output CSV path")->required();
      cmd->add_flag("--svg", config.emit_svg, "also write SVG plots next to the CSV output");
    }
  };

  CLI::App* gridinfo = app.add_subcommand("gridinfo", "print grid and alignment quantities");
  add_common(gridinfo, false);
  CLI::Option* gridinfo_period = period_opt;
  gridinfo->add_option("--out", config.output_path, "output CSV path (default: stdout)");

  CLI::App* synth = app.add_subcommand("synth", "synthesize a signal and write it as CSV");
  add_common(synth, true);
  CLI::Option* synth_period = period_opt;

  CLI::App* align =
      app.add_subcommand("align", "write the spectrum and its period-aligned resampling");
  add_common(align, true);
  CLI::Option* align_period = period_opt;

  CLI::App* fxt = app.add_subcommand("fxt", "combine the time sequence with its aligned spectrum");
  add_common(fxt, true);
  CLI::Option* fxt_period = period_opt;

  CLI::App* pitch = app.add_subcommand("pitch", "sweep candidate periods and report the best");
  add_common(pitch, true);
  CLI::Option* pitch_period = period_opt;
  CLI::Option* min_opt = pitch->add_option("--sweep-min", sweep_min, "smallest candidate period in seconds");
  CLI::Option* max_opt = pitch->add_option("--sweep-max", sweep_max, "largest candidate period in seconds");
  CLI::Option* count_opt = pitch->add_option("--sweep-count", sweep_count, "number of candidates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? 0 : 1;
  }

  if (gridinfo->parsed()) {
    config.command = Command::GridInfo;
    if (gridinfo_period->count() > 0) config.period_s = period;
  } else if (synth->parsed()) {
    config.command = Command::Synth;
    if (synth_period->count() > 0) config.period_s = period;
  } else if (align->parsed()) {
    config.command = Command::Align;
    if (align_period->count() > 0) config.period_s = period;
  } else if (fxt->parsed()) {
    config.command = Command::Fxt;
    if (fxt_period->count() > 0) config.period_s = period;
  } else if (pitch->parsed()) {
    config.command = Command::Pitch;
    if (pitch_period->count() > 0) config.period_s = period;
    if (min_opt->count() > 0) config.sweep_min_s = sweep_min;
    if (max_opt->count() > 0) config.sweep_max_s = sweep_max;
    if (count_opt->count() > 0) config.sweep_count = sweep_count;
  }

  if (const auto problem = validate(config)) {
    std::cerr << "error: " << *problem << "\n";
    return 1;
  }
  return run(config);
}

}  // namespace fxt
