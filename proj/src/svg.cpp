#include "fxt/svg.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "fxt/csv.hpp"

namespace fxt {

void write_svg_plot(const std::string& path, std::span<const double> values,
                    const std::string& title) {
  constexpr double width = 800.0;
  constexpr double height = 400.0;
  constexpr double margin = 40.0;

  double lo = 0.0;
  double hi = 1.0;
  if (!values.empty()) {
    lo = *std::min_element(values.begin(), values.end());
    hi = *std::max_element(values.begin(), values.end());
    if (hi == lo) {
      lo -= 1.0;
      hi += 1.0;
    }
  }

  std::string body;
  body += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
          "height=\"400\" viewBox=\"0 0 800 400\">\n";
  body += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"400\" fill=\"white\"/>\n";
  body += "<rect x=\"40\" y=\"40\" width=\"720\" height=\"320\" fill=\"none\" "
          "stroke=\"#cccccc\"/>\n";
  body += "<text x=\"40\" y=\"28\" font-family=\"monospace\" font-size=\"14\">" + title +
          "</text>\n";

  if (values.size() > 1) {
    body += "<polyline fill=\"none\" stroke=\"#204080\" stroke-width=\"1\" points=\"";
    const double span_x = width - 2.0 * margin;
    const double span_y = height - 2.0 * margin;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double fx = static_cast<double>(i) / static_cast<double>(values.size() - 1);
      const double fy = (values[i] - lo) / (hi - lo);
      const double x = margin + fx * span_x;
      const double y = height - margin - fy * span_y;
      if (i != 0) body += ' ';
      body += format_real(x) + ',' + format_real(y);
    }
    body += "\"/>\n";
  }
  body += "</svg>\n";

  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << body;
  if (!file) throw std::runtime_error("write failed for " + path);
}

}  // namespace fxt
