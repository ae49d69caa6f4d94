#include "fuzzysim/imprecision.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <string>

namespace fuzzysim {

std::vector<Ofn> fuzzify_segment(const SegmentObservation& obs) {
  const auto len = obs.length();
  const auto count = obs.count;
  if (len < 1) {
    throw ObservationError("segment [" + std::to_string(obs.c_start) + "," + std::to_string(obs.c_end) + "] is empty");
  }
  if (count < 0) throw ObservationError("negative vehicle count");
  if (count > len) {
    throw ObservationError(std::to_string(count) + " vehicles cannot fit in " + std::to_string(len) + " cells");
  }
  if (count == 0) return {};
  if (static_cast<std::int64_t>(obs.v_max_list.size()) != count) {
    throw ObservationError("v_max list has " + std::to_string(obs.v_max_list.size()) + " entries for " +
                           std::to_string(count) + " vehicles");
  }

  const auto spacing = len / count;
  // step[i] = min(floor(L/N), v_max_i^(k) + 1) for component k, vehicle i (0-based).
  auto step = [&](std::size_t i, std::size_t k) { return std::min(spacing, obs.v_max_list[i][k] + 1); };

  std::vector<Ofn> out(static_cast<std::size_t>(count));
  for (std::int64_t n = 1; n <= count; ++n) {
    std::int64_t behind = 0;  // sum over i = n+1..N of step(i, 2nd component)
    for (std::int64_t i = n + 1; i <= count; ++i) behind += step(static_cast<std::size_t>(i - 1), 1);
    std::int64_t ahead = 0;  // sum over i = 2..n of step(i, 3rd component)
    for (std::int64_t i = 2; i <= n; ++i) ahead += step(static_cast<std::size_t>(i - 1), 2);
    out[static_cast<std::size_t>(n - 1)] =
        Ofn{obs.c_start + count - n, obs.c_start + behind, obs.c_end - ahead, obs.c_end + 1 - n};
  }
  return out;
}

std::vector<SegmentObservation> aggregate_counts(std::span<const std::int64_t> crisp_positions,
                                                 std::int64_t lane_cells, std::int64_t precision_unit,
                                                 const Ofn& v_max) {
  if (precision_unit < 1) throw ObservationError("precision unit must be >= 1");
  if (lane_cells < 1) throw ObservationError("lane must have at least one cell");
  const auto segments = (lane_cells + precision_unit - 1) / precision_unit;
  std::vector<SegmentObservation> out(static_cast<std::size_t>(segments));
  for (std::int64_t s = 0; s < segments; ++s) {
    auto& o = out[static_cast<std::size_t>(segments - 1 - s)];
    o.c_start = s * precision_unit;
    o.c_end = std::min(lane_cells, (s + 1) * precision_unit) - 1;
  }
  for (auto p : crisp_positions) {
    if (p < 0 || p >= lane_cells) throw ObservationError("position " + std::to_string(p) + " outside the lane");
    auto& o = out[static_cast<std::size_t>(segments - 1 - p / precision_unit)];
    ++o.count;
  }
  for (auto& o : out) o.v_max_list.assign(static_cast<std::size_t>(o.count), v_max);
  return out;
}

Ofn initial_velocity(const Ofn& v_max, InitialVelocity mode) {
  switch (mode) {
    case InitialVelocity::Fused: return Ofn{0, v_max[1], v_max[2], v_max[3]};
    case InitialVelocity::Stopped: return Ofn::zero();
    case InitialVelocity::AtMax: return v_max;
  }
  return Ofn::zero();
}

InitialVelocity parse_initial_velocity(std::string_view text) {
  if (text == "fused") return InitialVelocity::Fused;
  if (text == "stopped") return InitialVelocity::Stopped;
  if (text == "max") return InitialVelocity::AtMax;
  throw std::invalid_argument("initial velocity must be fused, stopped or max, got '" + std::string(text) + "'");
}

std::string_view to_string(InitialVelocity mode) {
  switch (mode) {
    case InitialVelocity::Fused: return "fused";
    case InitialVelocity::Stopped: return "stopped";
    case InitialVelocity::AtMax: return "max";
  }
  return "fused";
}

std::vector<SegmentObservation> read_observations_csv(std::istream& in, const Ofn& v_max) {
  std::vector<SegmentObservation> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#' || line.rfind("segment_start", 0) == 0) continue;
    std::int64_t fields[3]{};
    std::string_view rest = line;
    for (int f = 0; f < 3; ++f) {
      auto comma = rest.find(',');
      auto cell = rest.substr(0, comma);
      while (!cell.empty() && cell.front() == ' ') cell.remove_prefix(1);
      while (!cell.empty() && cell.back() == ' ') cell.remove_suffix(1);
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), fields[f]);
      if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size() || (f < 2) == (comma == rest.npos)) {
        throw ObservationError("observation line " + std::to_string(line_no) + ": expected segment_start,segment_end,count");
      }
      if (comma != rest.npos) rest.remove_prefix(comma + 1);
    }
    SegmentObservation o{fields[0], fields[1], fields[2], {}};
    if (o.c_end < o.c_start || o.count < 0 || o.count > o.length()) {
      throw ObservationError("observation line " + std::to_string(line_no) + ": infeasible segment");
    }
    o.v_max_list.assign(static_cast<std::size_t>(o.count), v_max);
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace fuzzysim
