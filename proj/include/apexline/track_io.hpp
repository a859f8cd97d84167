#pragma once
#include <string>
#include <vector>

#include "apexline/track.hpp"

namespace apex {

// Shortest round-trip decimal text for a double ("." decimal separator).
std::string fmt_double(double v);

// Track CSV, TUM racetrack-database convention:
//   # x_m,y_m,w_tr_right_m,w_tr_left_m
std::vector<CenterlineRow> read_track_csv(const std::string& path);
void write_track_csv(const std::string& path, const std::vector<CenterlineRow>& rows);

// Raceline CSV:
//   # s_m,d_m
RacelineOffset read_raceline_csv(const std::string& path);
void write_raceline_csv(const std::string& path, const RacelineOffset& line);

// Solution CSV:
//   # s_m,d_m,v_mps
struct SolutionRow {
  double s{};
  double d{};
  double v{};
};
std::vector<SolutionRow> read_solution_csv(const std::string& path);
void write_solution_csv(const std::string& path, const std::vector<SolutionRow>& rows);

}  // namespace apex
