#pragma once

#include <span>
#include <string>
#include <vector>

namespace fxt {

// %.12g: 12 significant digits, trailing zeros dropped. Every CSV cell and
// summary value goes through this so outputs are byte-stable across runs.
std::string format_real(double value);

// Header then rows, comma-separated, "\n" endings, no trailing separator.
// Cells are preformatted strings. Throws std::runtime_error when the path
// cannot be written.
void write_csv(const std::string& path, std::span<const std::string> header,
               const std::vector<std::vector<std::string>>& rows);

// Same layout as a string, for stdout printing.
std::string csv_text(std::span<const std::string> header,
                     const std::vector<std::vector<std::string>>& rows);

}  // namespace fxt
