#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "fuzzysim/ofn.hpp"

namespace fuzzysim {

class ObservationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// `count` vehicles known to be somewhere in cells [c_start, c_end].
struct SegmentObservation {
  std::int64_t c_start = 0;
  std::int64_t c_end = 0;
  std::int64_t count = 0;
  /// Maximal velocity per vehicle, downstream-first. May be left empty when
  /// only counts are of interest.
  std::vector<Ofn> v_max_list;

  std::int64_t length() const { return c_end - c_start + 1; }

  friend bool operator==(const SegmentObservation&, const SegmentObservation&) = default;
};

/// Fuzzy positions for the vehicles of one observed segment, downstream-first.
/// Both extremes (compact queue at either end, and even spacing limited by
/// v_max + 1) are fused into one ordered fuzzy number per vehicle.
std::vector<Ofn> fuzzify_segment(const SegmentObservation& obs);

/// Counts vehicles per consecutive block of `precision_unit` cells (the last
/// block may be shorter). Returned downstream-first, i.e. by decreasing
/// c_start. Every vehicle is given `v_max` when it is non-empty.
std::vector<SegmentObservation> aggregate_counts(std::span<const std::int64_t> crisp_positions,
                                                 std::int64_t lane_cells, std::int64_t precision_unit,
                                                 const Ofn& v_max = Ofn{1, 2, 2, 3});

/// How t = 0 velocities are chosen for vehicles placed from counts.
enum class InitialVelocity {
  Fused,    // (0, v2, v3, v4): possibly stopped, possibly at speed
  Stopped,  // (0,0,0,0)
  AtMax,    // v_max
};

Ofn initial_velocity(const Ofn& v_max, InitialVelocity mode);
InitialVelocity parse_initial_velocity(std::string_view text);
std::string_view to_string(InitialVelocity mode);

/// Reads "segment_start,segment_end,count" rows. Blank lines and lines
/// starting with '#' are skipped, as is a header row starting with
/// "segment_start". Each vehicle gets `v_max`.
std::vector<SegmentObservation> read_observations_csv(std::istream& in, const Ofn& v_max = Ofn{1, 2, 2, 3});

}  // namespace fuzzysim
