#include "fxt/wav.hpp"

#include <cstdint>
#include <fstream>
#include <vector>

namespace fxt {
namespace {

std::uint32_t read_u32(const std::vector<unsigned char>& b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) | (static_cast<std::uint32_t>(b[at + 1]) << 8) |
         (static_cast<std::uint32_t>(b[at + 2]) << 16) |
         (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

std::uint16_t read_u16(const std::vector<unsigned char>& b, std::size_t at) {
  return static_cast<std::uint16_t>(static_cast<std::uint16_t>(b[at]) |
                                    (static_cast<std::uint16_t>(b[at + 1]) << 8));
}

bool tag_is(const std::vector<unsigned char>& b, std::size_t at, const char* tag) {
  return b[at] == static_cast<unsigned char>(tag[0]) &&
         b[at + 1] == static_cast<unsigned char>(tag[1]) &&
         b[at + 2] == static_cast<unsigned char>(tag[2]) &&
         b[at + 3] == static_cast<unsigned char>(tag[3]);
}

}  // namespace

SampledSignal read_wav(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw WavError("cannot open " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(file)),
                                   std::istreambuf_iterator<char>());

  if (bytes.size() < 12 || !tag_is(bytes, 0, "RIFF"))
    throw WavError(path + ": RIFF: missing RIFF header");
  if (!tag_is(bytes, 8, "WAVE")) throw WavError(path + ": RIFF: form type is not WAVE");

  bool have_fmt = false;
  double sample_rate_hz = 0.0;
  SampledSignal out;

  std::size_t at = 12;
  while (at + 8 <= bytes.size()) {
    const std::string id(bytes.begin() + static_cast<std::ptrdiff_t>(at),
                         bytes.begin() + static_cast<std::ptrdiff_t>(at + 4));
    const std::uint32_t size = read_u32(bytes, at + 4);
    const std::size_t body = at + 8;

    if (id == "fmt ") {
      if (size < 16 || body + 16 > bytes.size())
        throw WavError(path + ": fmt : chunk truncated");
      const std::uint16_t format = read_u16(bytes, body);
      const std::uint16_t channels = read_u16(bytes, body + 2);
      const std::uint32_t rate = read_u32(bytes, body + 4);
      const std::uint16_t bits = read_u16(bytes, body + 14);
      if (format != 1)
        throw WavError(path + ": fmt : audio format " + std::to_string(format) +
                       " is not PCM");
      if (channels != 1)
        throw WavError(path + ": fmt : expected 1 channel, found " + std::to_string(channels));
      if (bits != 16)
        throw WavError(path + ": fmt : expected 16 bits per sample, found " +
                       std::to_string(bits));
      sample_rate_hz = static_cast<double>(rate);
      have_fmt = true;
    } else if (id == "data") {
      if (!have_fmt) throw WavError(path + ": data: data chunk appears before fmt ");
      if (body + size > bytes.size())
        throw WavError(path + ": data: chunk declares " + std::to_string(size) +
                       " bytes but only " + std::to_string(bytes.size() - body) + " remain");
      if (size % 2 != 0)
        throw WavError(path + ": data: odd byte count for 16-bit samples");
      const std::size_t count = size / 2;
      out.samples.resize(count);
      for (std::size_t i = 0; i < count; ++i) {
        const auto raw = static_cast<std::int16_t>(read_u16(bytes, body + 2 * i));
        out.samples[i] = static_cast<double>(raw) / 32768.0;
      }
      out.sample_rate_hz = sample_rate_hz;
      return out;
    } else if (body + size > bytes.size()) {
      throw WavError(path + ": " + id + ": chunk overruns the file");
    }

    at = body + size + (size % 2);  // chunks are word-aligned
  }

  if (!have_fmt) throw WavError(path + ": fmt : chunk missing");
  throw WavError(path + ": data: chunk missing");
}

}  // namespace fxt
