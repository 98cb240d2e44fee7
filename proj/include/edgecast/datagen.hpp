#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "edgecast/domain.hpp"
#include "edgecast/latency.hpp"
#include "edgecast/rng.hpp"

namespace edgecast {

/// Parameters of the synthetic IoT population generator.
struct GenConfig {
  std::size_t n_devices = 16216;
  double private_fraction = 14600.0 / 16216.0;
  double computational_fraction = 0.3;
  double area_side_meters = 2000.0;
  std::uint64_t seed = 1;

  // truncated-normal availability model
  double availability_mean = 0.7;
  double availability_std = 0.15;
  double noise_std = 0.05;

  std::vector<std::int64_t> ram_levels = {
      2LL << 30, 4LL << 30, 8LL << 30, 16LL << 30, 32LL << 30, 64LL << 30};
  std::vector<std::string> manufacturer_vocab = {"intel",  "amd",      "arm",
                                                 "apple",  "qualcomm", "samsung"};
  std::pair<double, double> clock_rate_range_hz = {1.5e9, 4.0e9};
  std::pair<double, double> cpi_range = {1.0, 3.0};
  std::size_t n_latent_clusters = 6;

  void validate() const {
    if (n_devices == 0) throw std::invalid_argument("n_devices must be > 0");
    if (!(private_fraction >= 0.0 && private_fraction <= 1.0))
      throw std::invalid_argument("private_fraction out of [0,1]");
    if (!(computational_fraction >= 0.0 && computational_fraction <= 1.0))
      throw std::invalid_argument("computational_fraction out of [0,1]");
    if (!(area_side_meters > 0.0))
      throw std::invalid_argument("area_side_meters must be > 0");
    if (!(availability_std >= 0.0 && noise_std >= 0.0))
      throw std::invalid_argument("availability stds must be >= 0");
    if (ram_levels.empty()) throw std::invalid_argument("ram_levels empty");
    if (manufacturer_vocab.empty())
      throw std::invalid_argument("manufacturer_vocab empty");
    if (!(clock_rate_range_hz.first < clock_rate_range_hz.second) ||
        clock_rate_range_hz.first <= 0.0)
      throw std::invalid_argument("bad clock_rate_range_hz");
    if (!(cpi_range.first < cpi_range.second) || cpi_range.first < 1.0)
      throw std::invalid_argument("bad cpi_range");
    if (n_latent_clusters < 1)
      throw std::invalid_argument("n_latent_clusters must be >= 1");
  }
};

// Task parameter distributions span interactive-to-batch regimes.
inline constexpr double kInstructionCountLo = 1e6;
inline constexpr double kInstructionCountHi = 1e10;
inline constexpr double kMessageBitsLo = 1e3;
inline constexpr double kMessageBitsHi = 1e8;
inline constexpr int kOrdinalLevels = 5;  // importance / priority in 1..5

/// One hardware archetype: edge computers of the same latent cluster share
/// a manufacturer, privilege class, RAM level, and numeric centers, and
/// are placed around a common region of the area.
struct HardwareArchetype {
  std::string manufacturer;
  std::string privileges_class;
  DeviceType device_type = DeviceType::Pc;
  double clock_center_hz = 0.0;
  double cpi_center = 0.0;
  std::size_t ram_index = 0;
  double load_center = 0.0;
  Point region_center;
};

/// Deterministic archetype table for a config. Clock and CPI centers rise
/// together across archetypes, so raw speed stays comparable and the
/// latency-optimal choice is driven by distance as much as by hardware.
inline std::vector<HardwareArchetype> make_archetypes(const GenConfig& cfg) {
  const std::size_t k = cfg.n_latent_clusters;
  const std::size_t cols =
      static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(k))));
  const std::size_t rows = (k + cols - 1) / cols;
  static const DeviceType kCompTypes[] = {DeviceType::Pc, DeviceType::Laptop,
                                          DeviceType::Smartphone,
                                          DeviceType::Tablet, DeviceType::Vehicle};
  std::vector<HardwareArchetype> archetypes(k);
  for (std::size_t a = 0; a < k; ++a) {
    auto& arch = archetypes[a];
    const double frac = (static_cast<double>(a) + 0.5) / static_cast<double>(k);
    arch.manufacturer = cfg.manufacturer_vocab[a % cfg.manufacturer_vocab.size()];
    arch.privileges_class = (a % 2 == 0) ? "private" : "public";
    arch.device_type = kCompTypes[a % 5];
    arch.clock_center_hz =
        cfg.clock_rate_range_hz.first +
        frac * (cfg.clock_rate_range_hz.second - cfg.clock_rate_range_hz.first);
    arch.cpi_center =
        cfg.cpi_range.first + frac * (cfg.cpi_range.second - cfg.cpi_range.first);
    arch.ram_index = a % cfg.ram_levels.size();
    arch.load_center =
        0.2 + 0.4 * static_cast<double>(a) /
                  static_cast<double>(std::max<std::size_t>(k - 1, 1));
    const std::size_t col = a % cols;
    const std::size_t row = a / cols;
    arch.region_center = {
        (static_cast<double>(col) + 0.5) * cfg.area_side_meters /
            static_cast<double>(cols),
        (static_cast<double>(row) + 0.5) * cfg.area_side_meters /
            static_cast<double>(rows)};
  }
  return archetypes;
}

/// Latent generative state behind a population: which archetype produced
/// each device and the availability base per RAM level. The simulation
/// loop uses it to re-sample load/availability as time advances.
struct PopulationLatents {
  std::vector<int> archetype_of_device;  // -1 for non-computational devices
  std::vector<HardwareArchetype> archetypes;
  std::vector<double> availability_base_by_ram_index;
  double noise_std = 0.05;

  void resample_dynamic_fields(DeviceRecord& d, std::size_t device_index,
                               Rng& rng) const {
    if (!d.edge_profile) return;
    const int a = archetype_of_device.at(device_index);
    const auto& arch = archetypes.at(static_cast<std::size_t>(a));
    auto& p = *d.edge_profile;
    p.load = std::clamp(arch.load_center + rng.uniform(-0.1, 0.1), 0.0, 1.0);
    p.availability = rng.truncated_normal(
        availability_base_by_ram_index.at(arch.ram_index), noise_std, 0.0, 1.0);
  }
};

/// Generates the synthetic device population. Deterministic for a given
/// config: exactly round(n * computational_fraction) devices carry an
/// EdgeProfile and exactly round(n * private_fraction) are private.
inline std::vector<DeviceRecord> generate_population(const GenConfig& cfg,
                                                     PopulationLatents* latents_out = nullptr) {
  cfg.validate();
  Rng rng(cfg.seed);
  const std::size_t n = cfg.n_devices;
  const auto n_comp = static_cast<std::size_t>(std::llround(
      static_cast<double>(n) * cfg.computational_fraction));
  const auto n_private = static_cast<std::size_t>(std::llround(
      static_cast<double>(n) * cfg.private_fraction));

  const auto archetypes = make_archetypes(cfg);

  // One saturation base per RAM level; per-device noise is centered on it.
  std::vector<double> avail_base(cfg.ram_levels.size());
  for (auto& b : avail_base)
    b = rng.truncated_normal(cfg.availability_mean, cfg.availability_std, 0.0, 1.0);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<char> is_private(n, 0);
  for (std::size_t i = 0; i < n_private && i < n; ++i) is_private[order[i]] = 1;

  std::vector<int> archetype_of(n, -1);
  std::vector<DeviceRecord> devices(n);
  for (std::size_t i = 0; i < n; ++i) {
    DeviceRecord& d = devices[i];
    d.id = static_cast<std::int64_t>(i);
    d.battery_level = rng.uniform();
    d.privileges = is_private[i] ? Privileges::Private : Privileges::Public;
    d.mobility = rng.uniform() < 0.5 ? Mobility::Mobile : Mobility::Static;

    if (i < n_comp) {
      const std::size_t a = i % archetypes.size();
      const auto& arch = archetypes[a];
      archetype_of[i] = static_cast<int>(a);
      d.device_type = arch.device_type;
      // clustered placement around the archetype's region
      const double sigma = cfg.area_side_meters / 8.0;
      d.location.x = rng.truncated_normal(arch.region_center.x, sigma, 0.0,
                                          cfg.area_side_meters);
      d.location.y = rng.truncated_normal(arch.region_center.y, sigma, 0.0,
                                          cfg.area_side_meters);
      EdgeProfile p;
      p.manufacturer = arch.manufacturer;
      p.privileges_class = arch.privileges_class;
      p.clock_rate_hz = arch.clock_center_hz * (1.0 + rng.uniform(-0.03, 0.03));
      p.cpi = std::max(arch.cpi_center * (1.0 + rng.uniform(-0.03, 0.03)), 1.0);
      p.ram_bytes = cfg.ram_levels[arch.ram_index];
      p.load = std::clamp(arch.load_center + rng.uniform(-0.1, 0.1), 0.0, 1.0);
      p.availability = rng.truncated_normal(avail_base[arch.ram_index],
                                            cfg.noise_std, 0.0, 1.0);
      d.edge_profile = std::move(p);
    } else {
      d.device_type = rng.uniform() < 0.5 ? DeviceType::Sensor : DeviceType::Mobile;
      d.location.x = rng.uniform(0.0, cfg.area_side_meters);
      d.location.y = rng.uniform(0.0, cfg.area_side_meters);
    }
    d.validate();
  }

  if (latents_out != nullptr) {
    latents_out->archetype_of_device = std::move(archetype_of);
    latents_out->archetypes = archetypes;
    latents_out->availability_base_by_ram_index = std::move(avail_base);
    latents_out->noise_std = cfg.noise_std;
  }
  return devices;
}

/// Draws one task for a requester: log-uniform instruction count and
/// message size, uniform importance/priority.
inline TaskRequest sample_task(std::int64_t requester_id, double timestamp_s,
                               Rng& rng) {
  TaskRequest t;
  t.requester_id = requester_id;
  t.instruction_count =
      std::llround(rng.log_uniform(kInstructionCountLo, kInstructionCountHi));
  t.message_size_bits =
      std::llround(rng.log_uniform(kMessageBitsLo, kMessageBitsHi));
  t.importance = static_cast<int>(rng.uniform_int(1, kOrdinalLevels));
  t.priority = static_cast<int>(rng.uniform_int(1, kOrdinalLevels));
  t.timestamp_s = timestamp_s;
  t.validate();
  return t;
}

inline constexpr double kDefaultAvailabilityMin = 0.2;

/// Builds supervised pairs: each task from a non-computational requester is
/// labeled with the profile of the eligible edge computer that attains the
/// minimum response time, so the learning target is the latency-optimal
/// profile.
inline std::vector<Interaction> generate_interactions(
    const std::vector<DeviceRecord>& population, std::size_t n_tasks,
    std::uint64_t seed, const LinkModel& link = {},
    double availability_min = kDefaultAvailabilityMin) {
  std::vector<std::size_t> requesters;
  std::vector<EcCandidate> candidates;
  for (std::size_t i = 0; i < population.size(); ++i) {
    const auto& d = population[i];
    if (d.edge_profile) {
      if (d.edge_profile->availability >= availability_min &&
          d.edge_profile->load < 1.0)
        candidates.push_back({&*d.edge_profile, d.location});
    } else {
      requesters.push_back(i);
    }
  }
  if (candidates.empty()) throw std::runtime_error("no computational devices");
  if (requesters.empty())
    throw std::runtime_error("population has no non-computational requesters");

  Rng rng(seed);
  std::vector<Interaction> pairs;
  pairs.reserve(n_tasks);
  for (std::size_t i = 0; i < n_tasks; ++i) {
    const auto& requester =
        population[requesters[rng.uniform_index(requesters.size())]];
    Interaction it;
    it.task = sample_task(requester.id, static_cast<double>(i), rng);
    const std::size_t best =
        select_min_latency(it.task, requester.location, candidates, link);
    it.target = *candidates[best].profile;
    pairs.push_back(std::move(it));
  }
  return pairs;
}

}  // namespace edgecast
