#include "fxt/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace fxt {
namespace {

void append_row(std::string& out, std::span<const std::string> cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i != 0) out += ',';
    out += cells[i];
  }
  out += '\n';
}

}  // namespace

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string csv_text(std::span<const std::string> header,
                     const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  append_row(out, header);
  for (const auto& row : rows) append_row(out, row);
  return out;
}

void write_csv(const std::string& path, std::span<const std::string> header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << csv_text(header, rows);
  if (!file) throw std::runtime_error("write failed for " + path);
}

}  // namespace fxt
