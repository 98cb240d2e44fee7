#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "edgecast/domain.hpp"

namespace edgecast {

/// Two-regime link: device-to-device up to the distance threshold
/// (boundary inclusive), cellular broadband beyond it.
struct LinkModel {
  double d2d_threshold_m = 100.0;
  double d2d_throughput_bps = 100e6;
  double cellular_throughput_bps = 20e6;

  void validate() const {
    if (!(d2d_threshold_m > 0.0)) throw std::invalid_argument("d2d threshold must be > 0");
    if (!(d2d_throughput_bps > 0.0 && cellular_throughput_bps > 0.0))
      throw std::invalid_argument("link throughputs must be > 0");
  }

  double throughput_bps(double distance_m) const {
    return distance_m <= d2d_threshold_m ? d2d_throughput_bps
                                         : cellular_throughput_bps;
  }
};

struct LatencyBreakdown {
  double cpu_time_s = 0.0;
  double prop_time_s = 0.0;
  double total_s = 0.0;
};

/// Processing time of a task on an edge computer: IC * CPI / clock rate.
inline double cpu_time(const TaskRequest& task, const EdgeProfile& ec) {
  if (!(ec.clock_rate_hz > 0.0)) throw std::invalid_argument("invalid profile");
  return static_cast<double>(task.instruction_count) * ec.cpi / ec.clock_rate_hz;
}

/// Round-trip propagation time: 2 * message size / link throughput. The
/// factor 2 covers request plus response at the same message size.
inline double prop_time(const TaskRequest& task, double distance_m,
                        const LinkModel& link) {
  if (distance_m < 0.0) throw std::invalid_argument("negative distance");
  return 2.0 * static_cast<double>(task.message_size_bits) /
         link.throughput_bps(distance_m);
}

/// Total response time of assigning a task to an edge computer.
inline LatencyBreakdown response_time(const TaskRequest& task,
                                      const Point& requester_loc,
                                      const EdgeProfile& ec, const Point& ec_loc,
                                      const LinkModel& link) {
  LatencyBreakdown b;
  b.cpu_time_s = cpu_time(task, ec);
  b.prop_time_s = prop_time(task, euclidean(requester_loc, ec_loc), link);
  b.total_s = b.cpu_time_s + b.prop_time_s;
  return b;
}

struct EcCandidate {
  const EdgeProfile* profile = nullptr;
  Point location;
};

/// Index of the candidate with minimum total response time. Ties break by
/// lower load, then lower index, so the choice is deterministic.
inline std::size_t select_min_latency(const TaskRequest& task,
                                      const Point& requester_loc,
                                      const std::vector<EcCandidate>& candidates,
                                      const LinkModel& link) {
  if (candidates.empty()) throw std::invalid_argument("no candidates");
  std::size_t best = 0;
  LatencyBreakdown best_lat =
      response_time(task, requester_loc, *candidates[0].profile,
                    candidates[0].location, link);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const LatencyBreakdown lat = response_time(
        task, requester_loc, *candidates[i].profile, candidates[i].location, link);
    if (lat.total_s < best_lat.total_s ||
        (lat.total_s == best_lat.total_s &&
         candidates[i].profile->load < candidates[best].profile->load)) {
      best = i;
      best_lat = lat;
    }
  }
  return best;
}

}  // namespace edgecast
