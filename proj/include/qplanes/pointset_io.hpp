#pragma once

// Plain-text point-set files: one point per line, fields separated by single
// spaces, '#' lines and blank lines ignored. Exact files carry four integer or
// "a/b" fields per line; float files carry three decimal fields (x y z).

#include "qplanes/geom.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qplanes {

using Float3 = std::array<double, 3>;

// Non-comment lines split into fields. `line_numbers` is parallel to the result.
std::vector<std::vector<std::string>> read_records(std::istream &in,
                                                   std::vector<int> *line_numbers = nullptr);

std::vector<HPoint> read_points(std::istream &in);
void write_points(std::ostream &out, const std::vector<HPoint> &points,
                  const std::vector<std::string> &header = {});

std::vector<Float3> read_float_points(std::istream &in);
void write_float_points(std::ostream &out, const std::vector<Float3> &points,
                        const std::vector<std::string> &header = {});

std::vector<HPoint> load_points(const std::string &path);

// Fixed-format decimal with 12 significant digits, used for all float output.
std::string format_double(double value);

}  // namespace qplanes
