#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "edgecast/text.hpp"

namespace edgecast {

// ---------------------------------------------------------------------------
// Core value types
// ---------------------------------------------------------------------------

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double euclidean(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

enum class Privileges { Private, Public };
enum class Mobility { Mobile, Static };

enum class DeviceType { Vehicle, Tablet, Mobile, Laptop, Sensor, Pc, Smartphone };

/// Types that can act as edge computers.
inline bool is_computational(DeviceType t) {
  switch (t) {
    case DeviceType::Pc:
    case DeviceType::Laptop:
    case DeviceType::Smartphone:
    case DeviceType::Tablet:
    case DeviceType::Vehicle:
      return true;
    default:
      return false;
  }
}

inline std::string_view to_string(Privileges p) {
  return p == Privileges::Private ? "private" : "public";
}
inline std::string_view to_string(Mobility m) {
  return m == Mobility::Mobile ? "mobile" : "static";
}
inline std::string_view to_string(DeviceType t) {
  switch (t) {
    case DeviceType::Vehicle: return "vehicle";
    case DeviceType::Tablet: return "tablet";
    case DeviceType::Mobile: return "mobile";
    case DeviceType::Laptop: return "laptop";
    case DeviceType::Sensor: return "sensor";
    case DeviceType::Pc: return "pc";
    case DeviceType::Smartphone: return "smartphone";
  }
  return "unknown";
}

inline Privileges privileges_from_string(std::string_view s) {
  if (s == "private") return Privileges::Private;
  if (s == "public") return Privileges::Public;
  throw std::runtime_error("bad privileges value: '" + std::string(s) + "'");
}
inline Mobility mobility_from_string(std::string_view s) {
  if (s == "mobile") return Mobility::Mobile;
  if (s == "static") return Mobility::Static;
  throw std::runtime_error("bad mobility value: '" + std::string(s) + "'");
}
inline DeviceType device_type_from_string(std::string_view s) {
  if (s == "vehicle") return DeviceType::Vehicle;
  if (s == "tablet") return DeviceType::Tablet;
  if (s == "mobile") return DeviceType::Mobile;
  if (s == "laptop") return DeviceType::Laptop;
  if (s == "sensor") return DeviceType::Sensor;
  if (s == "pc") return DeviceType::Pc;
  if (s == "smartphone") return DeviceType::Smartphone;
  throw std::runtime_error("bad device_type value: '" + std::string(s) + "'");
}

/// Computational feature vector of an edge computer: 2 categorical fields
/// plus 5 numeric fields. Numeric fields may be NaN when read from a file
/// with missing cells; the codec imputes those at encode time.
struct EdgeProfile {
  std::string manufacturer;
  std::string privileges_class;  // "private" / "public"
  double clock_rate_hz = 0.0;
  double cpi = 0.0;
  std::int64_t ram_bytes = 0;
  double load = 0.0;
  double availability = 0.0;

  void validate() const {
    if (!(clock_rate_hz > 0.0)) throw std::invalid_argument("invalid profile");
    if (!(cpi >= 1.0)) throw std::invalid_argument("invalid profile");
    if (ram_bytes <= 0) throw std::invalid_argument("invalid profile");
    if (!(load >= 0.0 && load <= 1.0)) throw std::invalid_argument("invalid profile");
    if (!(availability >= 0.0 && availability <= 1.0))
      throw std::invalid_argument("invalid profile");
  }

  bool operator==(const EdgeProfile&) const = default;
};

struct DeviceRecord {
  std::int64_t id = 0;
  Point location;
  double battery_level = 1.0;
  Privileges privileges = Privileges::Private;
  Mobility mobility = Mobility::Static;
  DeviceType device_type = DeviceType::Sensor;
  std::optional<EdgeProfile> edge_profile;

  void validate() const {
    if (!(battery_level >= 0.0 && battery_level <= 1.0))
      throw std::invalid_argument("battery_level out of [0,1]");
    if (edge_profile.has_value() != is_computational(device_type))
      throw std::invalid_argument(
          "edge_profile presence must match computational device_type");
    if (edge_profile) edge_profile->validate();
  }
};

struct TaskRequest {
  std::int64_t requester_id = 0;
  std::int64_t instruction_count = 0;   // IC, instructions
  std::int64_t message_size_bits = 0;   // M, bits
  int importance = 1;
  int priority = 1;
  double timestamp_s = 0.0;

  void validate() const {
    if (instruction_count <= 0) throw std::invalid_argument("instruction_count must be > 0");
    if (message_size_bits <= 0) throw std::invalid_argument("message_size_bits must be > 0");
  }
};

/// One supervised example: a task plus the profile of the edge computer
/// that served it best.
struct Interaction {
  TaskRequest task;
  EdgeProfile target;
};

// ---------------------------------------------------------------------------
// Feature codec
// ---------------------------------------------------------------------------

enum class ScalingScheme { MinMax, ZScore };

inline std::string_view to_string(ScalingScheme s) {
  return s == ScalingScheme::MinMax ? "minmax" : "zscore";
}
inline ScalingScheme scaling_scheme_from_string(std::string_view s) {
  if (s == "minmax") return ScalingScheme::MinMax;
  if (s == "zscore") return ScalingScheme::ZScore;
  throw std::runtime_error("bad scaling scheme: '" + std::string(s) + "'");
}

inline constexpr const char* kOtherCategory = "<other>";

/// Ordered category -> index table with a reserved trailing "<other>" slot.
struct CategoricalMap {
  std::vector<std::string> categories;  // in-vocabulary, insertion order

  std::size_t size() const { return categories.size() + 1; }
  std::size_t other_index() const { return categories.size(); }

  std::size_t index_of(std::string_view cat) const {
    for (std::size_t i = 0; i < categories.size(); ++i)
      if (categories[i] == cat) return i;
    return other_index();
  }

  std::string category_at(std::size_t idx) const {
    if (idx < categories.size()) return categories[idx];
    return kOtherCategory;
  }
};

/// Per-field numeric scaler. MinMax maps [lo,hi] to [0,1]; a degenerate
/// range maps everything to the constant 0.5. ZScore uses population
/// mean/std (std 0 treated as 1). NaN inputs impute the training median.
struct NumericScaler {
  ScalingScheme scheme = ScalingScheme::MinMax;
  double p0 = 0.0;      // minmax: lo, zscore: mean
  double p1 = 1.0;      // minmax: hi, zscore: std
  double median = 0.0;  // imputation value

  static NumericScaler fit(ScalingScheme scheme, std::vector<double> values) {
    NumericScaler s;
    s.scheme = scheme;
    std::erase_if(values, [](double v) { return std::isnan(v); });
    if (values.empty()) {
      s.p0 = 0.0;
      s.p1 = scheme == ScalingScheme::MinMax ? 0.0 : 1.0;
      s.median = 0.0;
      return s;
    }
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    s.median = (n % 2 == 1) ? values[n / 2]
                            : 0.5 * (values[n / 2 - 1] + values[n / 2]);
    if (scheme == ScalingScheme::MinMax) {
      s.p0 = values.front();
      s.p1 = values.back();
    } else {
      double mean = 0.0;
      for (double v : values) mean += v;
      mean /= static_cast<double>(n);
      double var = 0.0;
      for (double v : values) var += (v - mean) * (v - mean);
      var /= static_cast<double>(n);
      s.p0 = mean;
      s.p1 = var > 0.0 ? std::sqrt(var) : 1.0;
    }
    return s;
  }

  bool degenerate() const {
    return scheme == ScalingScheme::MinMax && p1 == p0;
  }

  double encode(double x) const {
    if (std::isnan(x)) x = median;
    if (scheme == ScalingScheme::MinMax) {
      if (degenerate()) return 0.5;
      return (x - p0) / (p1 - p0);
    }
    return (x - p0) / p1;
  }

  double decode(double z) const {
    if (scheme == ScalingScheme::MinMax) {
      if (degenerate()) return p0;
      return p0 + z * (p1 - p0);
    }
    return p0 + z * p1;
  }
};

namespace profile_fields {
// Encoded-vector layout of an EdgeProfile: one-hot categorical blocks in
// this order, then scaled numerics in this order.
inline const std::vector<std::string> kCategoricals = {"manufacturer",
                                                       "privileges_class"};
inline const std::vector<std::string> kNumerics = {
    "clock_rate_hz", "cpi", "ram_bytes", "load", "availability"};
}  // namespace profile_fields

namespace input_fields {
// Encoded-vector layout of (task, requester) model inputs.
inline const std::vector<std::string> kCategoricals = {
    "requester_privileges", "requester_mobility", "requester_device_type"};
inline const std::vector<std::string> kNumerics = {
    "instruction_count", "message_size_bits", "importance",
    "priority",          "requester_x",       "requester_y",
    "requester_battery"};
}  // namespace input_fields

/// Fitted feature maps for both sides of the learning problem: the
/// (task, requester) input vector and the EdgeProfile target vector.
/// Field order is fixed and persisted, so model files stay portable.
struct FeatureCodec {
  ScalingScheme scheme = ScalingScheme::MinMax;

  std::vector<CategoricalMap> profile_categoricals;  // profile_fields order
  std::vector<NumericScaler> profile_numerics;
  std::vector<CategoricalMap> input_categoricals;  // input_fields order
  std::vector<NumericScaler> input_numerics;

  std::size_t profile_vector_length() const {
    std::size_t n = profile_numerics.size();
    for (const auto& m : profile_categoricals) n += m.size();
    return n;
  }
  std::size_t profile_ordinal_length() const {
    return profile_categoricals.size() + profile_numerics.size();
  }
  std::size_t input_vector_length() const {
    std::size_t n = input_numerics.size();
    for (const auto& m : input_categoricals) n += m.size();
    return n;
  }

  const CategoricalMap& manufacturer_map() const { return profile_categoricals[0]; }
  const CategoricalMap& privileges_class_map() const { return profile_categoricals[1]; }

  std::string fingerprint() const;
};

namespace detail {

inline CategoricalMap fit_categorical(const std::vector<std::string>& values) {
  CategoricalMap m;
  for (const auto& v : values) {
    if (v.empty()) continue;  // missing -> handled by the <other> slot
    if (std::find(m.categories.begin(), m.categories.end(), v) ==
        m.categories.end())
      m.categories.push_back(v);
  }
  return m;
}

}  // namespace detail

/// Fits categorical vocabularies and numeric scalers over a dataset.
/// Device rows feed the profile-side fields (computational devices only)
/// and the requester-side input fields; task rows feed the task-side
/// numeric fields.
inline FeatureCodec fit_codec(const std::vector<DeviceRecord>& devices,
                              const std::vector<TaskRequest>& tasks,
                              ScalingScheme scheme = ScalingScheme::MinMax) {
  if (devices.size() + tasks.size() < 2)
    throw std::invalid_argument("empty dataset");

  FeatureCodec c;
  c.scheme = scheme;

  std::vector<std::string> manufacturers, privilege_classes;
  std::array<std::vector<double>, 5> prof_nums;
  for (const auto& d : devices) {
    if (!d.edge_profile) continue;
    const auto& p = *d.edge_profile;
    manufacturers.push_back(p.manufacturer);
    privilege_classes.push_back(p.privileges_class);
    prof_nums[0].push_back(p.clock_rate_hz);
    prof_nums[1].push_back(p.cpi);
    prof_nums[2].push_back(static_cast<double>(p.ram_bytes));
    prof_nums[3].push_back(p.load);
    prof_nums[4].push_back(p.availability);
  }
  c.profile_categoricals.push_back(detail::fit_categorical(manufacturers));
  c.profile_categoricals.push_back(detail::fit_categorical(privilege_classes));
  for (auto& col : prof_nums)
    c.profile_numerics.push_back(NumericScaler::fit(scheme, std::move(col)));

  std::vector<std::string> privs, mobs, types;
  std::vector<double> xs, ys, batteries;
  for (const auto& d : devices) {
    privs.emplace_back(to_string(d.privileges));
    mobs.emplace_back(to_string(d.mobility));
    types.emplace_back(to_string(d.device_type));
    xs.push_back(d.location.x);
    ys.push_back(d.location.y);
    batteries.push_back(d.battery_level);
  }
  c.input_categoricals.push_back(detail::fit_categorical(privs));
  c.input_categoricals.push_back(detail::fit_categorical(mobs));
  c.input_categoricals.push_back(detail::fit_categorical(types));

  std::vector<double> ics, msgs, imps, prios;
  for (const auto& t : tasks) {
    ics.push_back(static_cast<double>(t.instruction_count));
    msgs.push_back(static_cast<double>(t.message_size_bits));
    imps.push_back(static_cast<double>(t.importance));
    prios.push_back(static_cast<double>(t.priority));
  }
  c.input_numerics.push_back(NumericScaler::fit(scheme, std::move(ics)));
  c.input_numerics.push_back(NumericScaler::fit(scheme, std::move(msgs)));
  c.input_numerics.push_back(NumericScaler::fit(scheme, std::move(imps)));
  c.input_numerics.push_back(NumericScaler::fit(scheme, std::move(prios)));
  c.input_numerics.push_back(NumericScaler::fit(scheme, std::move(xs)));
  c.input_numerics.push_back(NumericScaler::fit(scheme, std::move(ys)));
  c.input_numerics.push_back(NumericScaler::fit(scheme, std::move(batteries)));
  return c;
}

namespace detail {

inline void append_one_hot(std::vector<double>& v, const CategoricalMap& m,
                           std::string_view cat) {
  const std::size_t idx = m.index_of(cat);
  for (std::size_t i = 0; i < m.size(); ++i)
    v.push_back(i == idx ? 1.0 : 0.0);
}

inline std::size_t arg_max(const double* begin, std::size_t n) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (begin[i] > begin[best]) best = i;
  return best;
}

inline std::array<double, 5> profile_numeric_values(const EdgeProfile& p) {
  return {p.clock_rate_hz, p.cpi, static_cast<double>(p.ram_bytes), p.load,
          p.availability};
}

}  // namespace detail

/// One-hot categorical blocks followed by scaled numerics.
inline std::vector<double> encode_profile(const EdgeProfile& p,
                                          const FeatureCodec& c) {
  std::vector<double> v;
  v.reserve(c.profile_vector_length());
  detail::append_one_hot(v, c.profile_categoricals[0], p.manufacturer);
  detail::append_one_hot(v, c.profile_categoricals[1], p.privileges_class);
  const auto nums = detail::profile_numeric_values(p);
  for (std::size_t i = 0; i < nums.size(); ++i)
    v.push_back(c.profile_numerics[i].encode(nums[i]));
  return v;
}

/// Inverts encode_profile. Categorical blocks decode by argmax, numerics
/// inverse-scale and clamp into their valid physical ranges, so the same
/// routine also turns raw model outputs into a well-formed profile.
inline EdgeProfile decode_profile(const std::vector<double>& v,
                                  const FeatureCodec& c) {
  if (v.size() != c.profile_vector_length())
    throw std::invalid_argument("encoded profile length mismatch");
  EdgeProfile p;
  std::size_t off = 0;
  const auto& manuf = c.profile_categoricals[0];
  p.manufacturer = manuf.category_at(detail::arg_max(v.data() + off, manuf.size()));
  off += manuf.size();
  const auto& priv = c.profile_categoricals[1];
  p.privileges_class = priv.category_at(detail::arg_max(v.data() + off, priv.size()));
  off += priv.size();

  const double clock = c.profile_numerics[0].decode(v[off + 0]);
  const double cpi = c.profile_numerics[1].decode(v[off + 1]);
  const double ram = c.profile_numerics[2].decode(v[off + 2]);
  p.clock_rate_hz = std::max(clock, 1.0);
  p.cpi = std::max(cpi, 1.0);
  p.ram_bytes = std::max<std::int64_t>(std::llround(ram), 1);
  p.load = std::clamp(c.profile_numerics[3].decode(v[off + 3]), 0.0, 1.0);
  p.availability = std::clamp(c.profile_numerics[4].decode(v[off + 4]), 0.0, 1.0);
  return p;
}

/// Ordinal target embedding used by the baseline regressors: categorical
/// fields as raw class indices, then scaled numerics.
inline std::vector<double> encode_profile_ordinal(const EdgeProfile& p,
                                                  const FeatureCodec& c) {
  std::vector<double> v;
  v.reserve(c.profile_ordinal_length());
  v.push_back(static_cast<double>(c.profile_categoricals[0].index_of(p.manufacturer)));
  v.push_back(static_cast<double>(c.profile_categoricals[1].index_of(p.privileges_class)));
  const auto nums = detail::profile_numeric_values(p);
  for (std::size_t i = 0; i < nums.size(); ++i)
    v.push_back(c.profile_numerics[i].encode(nums[i]));
  return v;
}

/// Threshold decoding of an ordinal-encoded profile: a predicted value v
/// maps to class i iff v lies in [i-0.5, i+0.5), clamped to the vocabulary
/// (binary fields reduce to the 0.5 rule, with 0.5 itself rounding up).
inline EdgeProfile decode_profile_thresholds(const std::vector<double>& v,
                                             const FeatureCodec& c) {
  if (v.size() != c.profile_ordinal_length())
    throw std::invalid_argument("encoded profile length mismatch");
  const auto decode_class = [](const CategoricalMap& m, double x) {
    const double r = std::floor(x + 0.5);
    const double hi = static_cast<double>(m.size() - 1);
    return static_cast<std::size_t>(std::clamp(r, 0.0, hi));
  };
  EdgeProfile p;
  p.manufacturer = c.profile_categoricals[0].category_at(
      decode_class(c.profile_categoricals[0], v[0]));
  p.privileges_class = c.profile_categoricals[1].category_at(
      decode_class(c.profile_categoricals[1], v[1]));
  p.clock_rate_hz = std::max(c.profile_numerics[0].decode(v[2]), 1.0);
  p.cpi = std::max(c.profile_numerics[1].decode(v[3]), 1.0);
  p.ram_bytes = std::max<std::int64_t>(std::llround(c.profile_numerics[2].decode(v[4])), 1);
  p.load = std::clamp(c.profile_numerics[3].decode(v[5]), 0.0, 1.0);
  p.availability = std::clamp(c.profile_numerics[4].decode(v[6]), 0.0, 1.0);
  return p;
}

/// Model input vector for (task, requester): one-hot categorical blocks
/// followed by scaled numerics, in the input_fields order.
inline std::vector<double> encode_input(const TaskRequest& t,
                                        const DeviceRecord& requester,
                                        const FeatureCodec& c) {
  std::vector<double> v;
  v.reserve(c.input_vector_length());
  detail::append_one_hot(v, c.input_categoricals[0], to_string(requester.privileges));
  detail::append_one_hot(v, c.input_categoricals[1], to_string(requester.mobility));
  detail::append_one_hot(v, c.input_categoricals[2], to_string(requester.device_type));
  const std::array<double, 7> nums = {
      static_cast<double>(t.instruction_count),
      static_cast<double>(t.message_size_bits),
      static_cast<double>(t.importance),
      static_cast<double>(t.priority),
      requester.location.x,
      requester.location.y,
      requester.battery_level};
  for (std::size_t i = 0; i < nums.size(); ++i)
    v.push_back(c.input_numerics[i].encode(nums[i]));
  return v;
}

// ---------------------------------------------------------------------------
// Codec persistence (JSON, "codec_version": 1)
// ---------------------------------------------------------------------------

namespace detail {

inline nlohmann::json categoricals_to_json(const std::vector<std::string>& fields,
                                           const std::vector<CategoricalMap>& maps) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < maps.size(); ++i)
    arr.push_back({{"field", fields[i]}, {"categories", maps[i].categories}});
  return arr;
}

inline nlohmann::json numerics_to_json(const std::vector<std::string>& fields,
                                       const std::vector<NumericScaler>& scalers) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < scalers.size(); ++i)
    arr.push_back({{"field", fields[i]},
                   {"p0", scalers[i].p0},
                   {"p1", scalers[i].p1},
                   {"median", scalers[i].median}});
  return arr;
}

inline void categoricals_from_json(const nlohmann::json& arr,
                                   const std::vector<std::string>& fields,
                                   std::vector<CategoricalMap>& maps) {
  if (arr.size() != fields.size())
    throw std::runtime_error("codec schema mismatch: categorical field count");
  maps.clear();
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (arr[i].at("field").get<std::string>() != fields[i])
      throw std::runtime_error("codec schema mismatch: field order");
    CategoricalMap m;
    m.categories = arr[i].at("categories").get<std::vector<std::string>>();
    maps.push_back(std::move(m));
  }
}

inline void numerics_from_json(const nlohmann::json& arr,
                               const std::vector<std::string>& fields,
                               ScalingScheme scheme,
                               std::vector<NumericScaler>& scalers) {
  if (arr.size() != fields.size())
    throw std::runtime_error("codec schema mismatch: numeric field count");
  scalers.clear();
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (arr[i].at("field").get<std::string>() != fields[i])
      throw std::runtime_error("codec schema mismatch: field order");
    NumericScaler s;
    s.scheme = scheme;
    s.p0 = arr[i].at("p0").get<double>();
    s.p1 = arr[i].at("p1").get<double>();
    s.median = arr[i].at("median").get<double>();
    scalers.push_back(s);
  }
}

}  // namespace detail

inline nlohmann::json codec_to_json(const FeatureCodec& c) {
  return {
      {"codec_version", 1},
      {"scheme", std::string(to_string(c.scheme))},
      {"profile",
       {{"categoricals", detail::categoricals_to_json(profile_fields::kCategoricals,
                                                      c.profile_categoricals)},
        {"numerics", detail::numerics_to_json(profile_fields::kNumerics,
                                              c.profile_numerics)}}},
      {"input",
       {{"categoricals", detail::categoricals_to_json(input_fields::kCategoricals,
                                                      c.input_categoricals)},
        {"numerics", detail::numerics_to_json(input_fields::kNumerics,
                                              c.input_numerics)}}}};
}

inline FeatureCodec codec_from_json(const nlohmann::json& j) {
  if (!j.contains("codec_version") || j.at("codec_version").get<int>() != 1)
    throw std::runtime_error("codec schema mismatch: unsupported codec_version");
  FeatureCodec c;
  c.scheme = scaling_scheme_from_string(j.at("scheme").get<std::string>());
  detail::categoricals_from_json(j.at("profile").at("categoricals"),
                                 profile_fields::kCategoricals,
                                 c.profile_categoricals);
  detail::numerics_from_json(j.at("profile").at("numerics"),
                             profile_fields::kNumerics, c.scheme,
                             c.profile_numerics);
  detail::categoricals_from_json(j.at("input").at("categoricals"),
                                 input_fields::kCategoricals,
                                 c.input_categoricals);
  detail::numerics_from_json(j.at("input").at("numerics"),
                             input_fields::kNumerics, c.scheme,
                             c.input_numerics);
  return c;
}

inline std::string FeatureCodec::fingerprint() const {
  return hex64(fnv1a64(codec_to_json(*this).dump()));
}

// ---------------------------------------------------------------------------
// Predictor contract
// ---------------------------------------------------------------------------

/// Anything that can propose an edge-computer profile for a task: the
/// hybrid network, a baseline regressor, or a test oracle.
class ProfilePredictor {
 public:
  virtual ~ProfilePredictor() = default;
  virtual EdgeProfile predict_profile(const TaskRequest& task,
                                      const DeviceRecord& requester) const = 0;
};

// ---------------------------------------------------------------------------
// Dataset files (CSV)
// ---------------------------------------------------------------------------

inline const std::string kPopulationHeader =
    "id,x_meters,y_meters,battery_level,privileges,mobility,device_type,"
    "manufacturer,privileges_class,clock_rate_hz,cpi,ram_bytes,load,availability";

inline const std::string kInteractionsHeader =
    "requester_id,instruction_count,message_size_bits,importance,priority,"
    "timestamp_s,manufacturer,privileges_class,clock_rate_hz,cpi,ram_bytes,"
    "load,availability";

inline std::string population_to_csv(const std::vector<DeviceRecord>& devices,
                                     const std::string& meta_comment = "") {
  std::string out;
  if (!meta_comment.empty()) out += "# " + meta_comment + "\n";
  out += kPopulationHeader + "\n";
  for (const auto& d : devices) {
    out += std::to_string(d.id);
    out += ',' + format_double(d.location.x);
    out += ',' + format_double(d.location.y);
    out += ',' + format_double(d.battery_level);
    out += ',' + std::string(to_string(d.privileges));
    out += ',' + std::string(to_string(d.mobility));
    out += ',' + std::string(to_string(d.device_type));
    if (d.edge_profile) {
      const auto& p = *d.edge_profile;
      out += ',' + p.manufacturer;
      out += ',' + p.privileges_class;
      out += ',' + format_double(p.clock_rate_hz);
      out += ',' + format_double(p.cpi);
      out += ',' + std::to_string(p.ram_bytes);
      out += ',' + format_double(p.load);
      out += ',' + format_double(p.availability);
    } else {
      out += ",,,,,,,";
    }
    out += '\n';
  }
  return out;
}

inline std::vector<DeviceRecord> population_from_csv_table(const CsvTable& t) {
  if (t.header != split_csv_line(kPopulationHeader))
    throw std::runtime_error("population schema mismatch");
  std::vector<DeviceRecord> devices;
  devices.reserve(t.rows.size());
  for (const auto& r : t.rows) {
    if (r.size() != 14) throw std::runtime_error("population schema mismatch");
    DeviceRecord d;
    d.id = parse_int(r[0]);
    d.location = {parse_double(r[1]), parse_double(r[2])};
    d.battery_level = parse_double(r[3]);
    d.privileges = privileges_from_string(r[4]);
    d.mobility = mobility_from_string(r[5]);
    d.device_type = device_type_from_string(r[6]);
    const bool any_profile_cell =
        std::any_of(r.begin() + 7, r.end(), [](const std::string& s) { return !s.empty(); });
    if (any_profile_cell) {
      EdgeProfile p;
      p.manufacturer = r[7];
      p.privileges_class = r[8];
      const double nan = std::numeric_limits<double>::quiet_NaN();
      p.clock_rate_hz = r[9].empty() ? nan : parse_double(r[9]);
      p.cpi = r[10].empty() ? nan : parse_double(r[10]);
      p.ram_bytes = r[11].empty() ? 0 : parse_int(r[11]);
      p.load = r[12].empty() ? nan : parse_double(r[12]);
      p.availability = r[13].empty() ? nan : parse_double(r[13]);
      d.edge_profile = std::move(p);
    }
    devices.push_back(std::move(d));
  }
  return devices;
}

inline std::vector<DeviceRecord> read_population_csv(const std::string& path) {
  return population_from_csv_table(read_csv(path));
}

inline std::string interactions_to_csv(const std::vector<Interaction>& pairs,
                                       const std::string& meta_comment = "") {
  std::string out;
  if (!meta_comment.empty()) out += "# " + meta_comment + "\n";
  out += kInteractionsHeader + "\n";
  for (const auto& it : pairs) {
    out += std::to_string(it.task.requester_id);
    out += ',' + std::to_string(it.task.instruction_count);
    out += ',' + std::to_string(it.task.message_size_bits);
    out += ',' + std::to_string(it.task.importance);
    out += ',' + std::to_string(it.task.priority);
    out += ',' + format_double(it.task.timestamp_s);
    out += ',' + it.target.manufacturer;
    out += ',' + it.target.privileges_class;
    out += ',' + format_double(it.target.clock_rate_hz);
    out += ',' + format_double(it.target.cpi);
    out += ',' + std::to_string(it.target.ram_bytes);
    out += ',' + format_double(it.target.load);
    out += ',' + format_double(it.target.availability);
    out += '\n';
  }
  return out;
}

inline std::vector<Interaction> interactions_from_csv_table(const CsvTable& t) {
  if (t.header != split_csv_line(kInteractionsHeader))
    throw std::runtime_error("interactions schema mismatch");
  std::vector<Interaction> pairs;
  pairs.reserve(t.rows.size());
  for (const auto& r : t.rows) {
    if (r.size() != 13) throw std::runtime_error("interactions schema mismatch");
    Interaction it;
    it.task.requester_id = parse_int(r[0]);
    it.task.instruction_count = parse_int(r[1]);
    it.task.message_size_bits = parse_int(r[2]);
    it.task.importance = static_cast<int>(parse_int(r[3]));
    it.task.priority = static_cast<int>(parse_int(r[4]));
    it.task.timestamp_s = parse_double(r[5]);
    it.target.manufacturer = r[6];
    it.target.privileges_class = r[7];
    it.target.clock_rate_hz = parse_double(r[8]);
    it.target.cpi = parse_double(r[9]);
    it.target.ram_bytes = parse_int(r[10]);
    it.target.load = parse_double(r[11]);
    it.target.availability = parse_double(r[12]);
    pairs.push_back(std::move(it));
  }
  return pairs;
}

inline std::vector<Interaction> read_interactions_csv(const std::string& path) {
  return interactions_from_csv_table(read_csv(path));
}

}  // namespace edgecast
