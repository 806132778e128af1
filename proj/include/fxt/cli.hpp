#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fxt {

enum class Command { GridInfo, Synth, Align, Fxt, Pitch };
enum class Waveform { ImpulseTrain, Harmonic, FromWav };

struct RunConfig {
  Command command = Command::GridInfo;
  double sample_rate_hz = 8000.0;
  std::size_t num_samples = 0;  // 0: take the length from the input file
  std::optional<double> period_s;
  Waveform waveform = Waveform::ImpulseTrain;
  std::vector<double> harmonic_amplitudes;
  std::string input_path;
  std::string output_path;
  std::optional<double> sweep_min_s;
  std::optional<double> sweep_max_s;
  std::optional<std::size_t> sweep_count;
  bool emit_svg = false;
};

// Per-command required fields and cross-field consistency. Returns a message
// for the user when the config is not runnable, nullopt when it is.
std::optional<std::string> validate(const RunConfig& config);

// Executes a validated config. 0 on success, 2 on data errors (unreadable or
// malformed input, unwritable output; message on stderr). Outputs are
// byte-identical across runs for identical configs.
int run(const RunConfig& config);

// Parse flags, validate, run. Usage and config problems exit 1.
int run_cli(int argc, const char* const* argv);

}  // namespace fxt
