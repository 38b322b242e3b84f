#include "sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "chm/errors.hpp"
#include "chm/estimates.hpp"
#include "complex_arg.hpp"

namespace chm::cli {

namespace {

constexpr const char* kCsvHeader = "theta,re,im,locus_dist,status";

struct Box {
  double min_x = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void add(Complex z) {
    min_x = std::min(min_x, z.real());
    max_x = std::max(max_x, z.real());
    min_y = std::min(min_y, z.imag());
    max_y = std::max(max_y, z.imag());
  }
};

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream stream(line);
  std::string field;
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double to_double(const std::string& field) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size()) {
    throw InvalidArgument("bad number in sweep CSV: '" + field + "'");
  }
  return value;
}

// SVG y grows downward; the complex plane is drawn with Im upward.
std::string svg_xy(Complex z) {
  return format_number(z.real()) + " " + format_number(-z.imag());
}

}  // namespace

Sweep sweep_two_point(Complex c1, Complex c2, std::size_t steps) {
  if (steps < 2) {
    throw InvalidArgument("sweep needs at least 2 steps");
  }
  Sweep sweep{c1, c2, two_point_locus(c1, c2), {}};
  sweep.rows.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    const double theta = static_cast<double>(k) / static_cast<double>(steps - 1);
    try {
      const Complex h = two_point_mean(c1, c2, theta);
      sweep.rows.push_back({theta, h, sweep.locus.distance(h)});
    } catch (const DegenerateMean&) {
      sweep.rows.push_back({theta, std::nullopt, std::numeric_limits<double>::quiet_NaN()});
    }
  }
  return sweep;
}

void write_sweep_csv(const Sweep& sweep, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& row : sweep.rows) {
    out << format_number(row.theta) << ',';
    if (row.h) {
      out << format_number(row.h->real()) << ',' << format_number(row.h->imag()) << ','
          << format_number(row.on_locus_distance) << ",ok\n";
    } else {
      out << ",,,degenerate_mean\n";
    }
  }
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw InvalidArgument("sweep CSV header mismatch");
  }
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 5) {
      throw InvalidArgument("sweep CSV row needs 5 fields: " + line);
    }
    SweepRow row{to_double(fields[0]), std::nullopt, std::numeric_limits<double>::quiet_NaN()};
    if (fields[4] == "ok") {
      row.h = Complex(to_double(fields[1]), to_double(fields[2]));
      row.on_locus_distance = to_double(fields[3]);
    } else if (fields[4] != "degenerate_mean") {
      throw InvalidArgument("unknown sweep status: " + fields[4]);
    }
    rows.push_back(row);
  }
  return rows;
}

void write_sweep_svg(const Sweep& sweep, std::ostream& out) {
  const auto& locus = sweep.locus;
  Box box;
  box.add(Complex{});
  box.add(sweep.c1);
  box.add(sweep.c2);
  for (const auto& row : sweep.rows) {
    if (row.h) box.add(*row.h);
  }
  if (locus.kind == LocusDescription::Kind::arc) {
    const Complex center = locus.carrier.center();
    const double r = locus.carrier.radius();
    box.add(center + Complex(r, r));
    box.add(center - Complex(r, r));
  }
  const double width = std::max(box.max_x - box.min_x, 1e-9);
  const double height = std::max(box.max_y - box.min_y, 1e-9);
  const double margin = 0.1 * std::max(width, height);
  const double marker = 0.01 * std::max(width, height);

  // Flipped y: the SVG box spans [-max_y, -min_y].
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_number(box.min_x - margin)
      << ' ' << format_number(-box.max_y - margin) << ' ' << format_number(width + 2 * margin)
      << ' ' << format_number(height + 2 * margin) << "\">\n";
  out << "  <g fill=\"none\" stroke-width=\"" << format_number(0.3 * marker) << "\">\n";

  out << "    <path class=\"locus\" stroke=\"#888\" d=\"M " << svg_xy(sweep.c1) << ' ';
  if (locus.kind == LocusDescription::Kind::arc) {
    const double sweep_angle = locus.arc_sweep();
    const double r = locus.carrier.radius();
    // Counter-clockwise in the plane is sweep-flag 0 once y is flipped.
    out << "A " << format_number(r) << ' ' << format_number(r) << " 0 "
        << (std::fabs(sweep_angle) > std::numbers::pi ? 1 : 0) << ' ' << (sweep_angle > 0 ? 0 : 1)
        << ' ' << svg_xy(sweep.c2);
  } else {
    out << "L " << svg_xy(sweep.c2);
  }
  out << "\"/>\n  </g>\n";

  out << "  <g class=\"points\" fill=\"#1f77b4\">\n";
  for (const auto& row : sweep.rows) {
    if (!row.h) continue;
    out << "    <circle class=\"point\" cx=\"" << format_number(row.h->real()) << "\" cy=\""
        << format_number(-row.h->imag()) << "\" r=\"" << format_number(marker) << "\"><title>theta="
        << format_number(row.theta) << "</title></circle>\n";
  }
  out << "  </g>\n";

  out << "  <g fill=\"#d62728\">\n";
  for (const Complex atom : {sweep.c1, sweep.c2}) {
    out << "    <rect class=\"atom\" x=\"" << format_number(atom.real() - marker) << "\" y=\""
        << format_number(-atom.imag() - marker) << "\" width=\"" << format_number(2 * marker)
        << "\" height=\"" << format_number(2 * marker) << "\"/>\n";
  }
  out << "  </g>\n";
  out << "  <path class=\"origin\" stroke=\"#000\" stroke-width=\"" << format_number(0.3 * marker)
      << "\" d=\"M " << format_number(-marker) << " 0 L " << format_number(marker) << " 0 M 0 "
      << format_number(-marker) << " L 0 " << format_number(marker) << "\"/>\n";
  out << "</svg>\n";
}

}  // namespace chm::cli
