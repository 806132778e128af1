#pragma once

#include <stdexcept>
#include <string>

#include "fxt/spectral.hpp"

namespace fxt {

// Parse failure; the message names the offending chunk.
struct WavError : std::runtime_error {
  explicit WavError(const std::string& msg) : std::runtime_error(msg) {}
};

// RIFF/WAVE reader, 16-bit PCM mono little-endian only. Samples are scaled to
// [-1, 1) by 1/32768; the sample rate comes from the "fmt " chunk.
SampledSignal read_wav(const std::string& path);

}  // namespace fxt
