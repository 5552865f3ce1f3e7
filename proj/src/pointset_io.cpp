#include "qplanes/pointset_io.hpp"

#include "qplanes/errors.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

namespace qplanes {

namespace {

std::vector<std::string> split_fields(const std::string &line, int line_no)
{
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (start <= line.size()) {
    const auto space = line.find(' ', start);
    const auto end = space == std::string::npos ? line.size() : space;
    if (end == start) {
      throw PreconditionError("line " + std::to_string(line_no) +
                              ": fields must be separated by single spaces");
    }
    fields.emplace_back(line.substr(start, end - start));
    if (space == std::string::npos) {
      break;
    }
    start = space + 1;
  }
  return fields;
}

std::string line_prefix(int line_no) { return "line " + std::to_string(line_no) + ": "; }

}  // namespace

std::vector<std::vector<std::string>> read_records(std::istream &in, std::vector<int> *line_numbers)
{
  std::vector<std::vector<std::string>> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() || line.front() == '#') {
      continue;
    }
    records.push_back(split_fields(line, line_no));
    if (line_numbers) {
      line_numbers->push_back(line_no);
    }
  }
  return records;
}

std::vector<HPoint> read_points(std::istream &in)
{
  std::vector<int> lines;
  const auto records = read_records(in, &lines);
  std::vector<HPoint> points;
  points.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto &f = records[i];
    if (f.size() != 4) {
      throw PreconditionError(line_prefix(lines[i]) + "expected 4 fields, found " +
                              std::to_string(f.size()));
    }
    try {
      points.emplace_back(parse_rational(f[0]), parse_rational(f[1]), parse_rational(f[2]),
                          parse_rational(f[3]));
    } catch (const std::invalid_argument &e) {
      throw PreconditionError(line_prefix(lines[i]) + e.what());
    }
  }
  return points;
}

void write_points(std::ostream &out, const std::vector<HPoint> &points,
                  const std::vector<std::string> &header)
{
  for (const auto &h : header) {
    out << "# " << h << '\n';
  }
  for (const auto &p : points) {
    out << to_string(p[0]) << ' ' << to_string(p[1]) << ' ' << to_string(p[2]) << ' '
        << to_string(p[3]) << '\n';
  }
}

std::vector<Float3> read_float_points(std::istream &in)
{
  std::vector<int> lines;
  const auto records = read_records(in, &lines);
  std::vector<Float3> points;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto &f = records[i];
    if (f.size() != 3) {
      throw PreconditionError(line_prefix(lines[i]) + "expected 3 decimal fields");
    }
    Float3 p{};
    for (int k = 0; k < 3; ++k) {
      const char *first = f[k].data();
      const char *last = first + f[k].size();
      auto [ptr, ec] = std::from_chars(first, last, p[k]);
      if (ec != std::errc() || ptr != last) {
        throw PreconditionError(line_prefix(lines[i]) + "malformed decimal '" + f[k] + "'");
      }
    }
    points.push_back(p);
  }
  return points;
}

void write_float_points(std::ostream &out, const std::vector<Float3> &points,
                        const std::vector<std::string> &header)
{
  for (const auto &h : header) {
    out << "# " << h << '\n';
  }
  char buf[64];
  for (const auto &p : points) {
    for (int k = 0; k < 3; ++k) {
      // 17 significant digits round-trip a double exactly.
      std::snprintf(buf, sizeof buf, "%.17g", p[k]);
      out << (k ? " " : "") << buf;
    }
    out << '\n';
  }
}

std::vector<HPoint> load_points(const std::string &path)
{
  std::ifstream in(path);
  if (!in) {
    throw PreconditionError("cannot open point file '" + path + "'");
  }
  return read_points(in);
}

std::string format_double(double value)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

}  // namespace qplanes
