#include "apexline/track_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace apex {

std::string fmt_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::vector<std::vector<double>> read_numeric_csv(const std::string& path,
                                                  std::size_t columns) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != columns)
      throw std::runtime_error(path + ": expected " + std::to_string(columns) +
                               " columns, got " + std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<CenterlineRow> read_track_csv(const std::string& path) {
  std::vector<CenterlineRow> out;
  for (const auto& r : read_numeric_csv(path, 4))
    out.push_back({r[0], r[1], r[2], r[3]});
  return out;
}

void write_track_csv(const std::string& path, const std::vector<CenterlineRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "# x_m,y_m,w_tr_right_m,w_tr_left_m\n";
  for (const auto& r : rows) {
    out << fmt_double(r.x) << ',' << fmt_double(r.y) << ',' << fmt_double(r.w_right)
        << ',' << fmt_double(r.w_left) << '\n';
  }
}

RacelineOffset read_raceline_csv(const std::string& path) {
  const auto rows = read_numeric_csv(path, 2);
  if (rows.size() < 2) throw std::runtime_error(path + ": too few raceline samples");
  RacelineOffset line;
  line.offsets.reserve(rows.size());
  for (const auto& r : rows) line.offsets.push_back(r[1]);
  line.step = rows[1][0] - rows[0][0];
  line.track_length = line.step * static_cast<double>(rows.size());
  return line;
}

void write_raceline_csv(const std::string& path, const RacelineOffset& line) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "# s_m,d_m\n";
  for (std::size_t i = 0; i < line.offsets.size(); ++i) {
    out << fmt_double(line.step * static_cast<double>(i)) << ','
        << fmt_double(line.offsets[i]) << '\n';
  }
}

std::vector<SolutionRow> read_solution_csv(const std::string& path) {
  std::vector<SolutionRow> out;
  for (const auto& r : read_numeric_csv(path, 3)) out.push_back({r[0], r[1], r[2]});
  return out;
}

void write_solution_csv(const std::string& path, const std::vector<SolutionRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "# s_m,d_m,v_mps\n";
  for (const auto& r : rows) {
    out << fmt_double(r.s) << ',' << fmt_double(r.d) << ',' << fmt_double(r.v) << '\n';
  }
}

}  // namespace apex
