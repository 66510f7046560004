#ifndef TMDETECT_TYPES_HPP_
#define TMDETECT_TYPES_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tmdetect {

enum class Mode { walk, bike, bus, railway, unknown };

inline constexpr std::array<Mode, 5> kAllModes = {
    Mode::walk, Mode::bike, Mode::bus, Mode::railway, Mode::unknown};

inline const char* to_string(Mode mode) {
  switch (mode) {
    case Mode::walk:
      return "walk";
    case Mode::bike:
      return "bike";
    case Mode::bus:
      return "bus";
    case Mode::railway:
      return "railway";
    case Mode::unknown:
      return "unknown";
  }
  return "unknown";
}

inline std::optional<Mode> mode_from_string(std::string_view name) {
  for (Mode mode : kAllModes) {
    if (name == to_string(mode)) return mode;
  }
  return std::nullopt;
}

// One timestamped position with the device-reported horizontal accuracy
// in meters. Timestamps are integer epoch seconds (UTC); the native
// collection interval is 1 s, so sub-second precision buys nothing and
// integer time keeps resampling arithmetic exact.
struct GpsRecord {
  double lat = 0.0;        // decimal degrees, [-90, 90]
  double lon = 0.0;        // decimal degrees, [-180, 180]
  std::int64_t timestamp = 0;  // seconds since epoch, UTC
  double error_m = 0.0;    // reported horizontal accuracy, >= 0

  bool operator==(const GpsRecord&) const = default;
};

// Ordered sequence of records sharing one travel mode. Records are
// non-empty with strictly increasing timestamps.
struct Trip {
  std::string trip_id;
  Mode mode = Mode::unknown;
  std::vector<GpsRecord> records;

  std::int64_t duration_s() const {
    return records.empty() ? 0
                           : records.back().timestamp - records.front().timestamp;
  }

  bool operator==(const Trip&) const = default;
};

// A collection of trips with unique trip ids. `provenance` is in-memory
// metadata (a free-text source tag); the trip CSV format does not carry
// it, so serialization round-trips the trips only.
struct Dataset {
  std::vector<Trip> trips;
  std::string provenance;

  bool operator==(const Dataset&) const = default;
};

inline void validate_record(const GpsRecord& rec) {
  if (!(rec.lat >= -90.0 && rec.lat <= 90.0))
    throw std::invalid_argument("latitude out of range [-90, 90]");
  if (!(rec.lon >= -180.0 && rec.lon <= 180.0))
    throw std::invalid_argument("longitude out of range [-180, 180]");
  if (!(std::isfinite(rec.error_m) && rec.error_m >= 0.0))
    throw std::invalid_argument("error_m must be finite and non-negative");
}

inline void validate_trip(const Trip& trip) {
  if (trip.records.empty())
    throw std::invalid_argument("trip '" + trip.trip_id + "' has no records");
  for (const GpsRecord& rec : trip.records) validate_record(rec);
  for (std::size_t i = 1; i < trip.records.size(); ++i) {
    if (trip.records[i].timestamp <= trip.records[i - 1].timestamp)
      throw std::invalid_argument("trip '" + trip.trip_id +
                                  "' timestamps not strictly increasing");
  }
}

inline void validate_dataset(const Dataset& dataset) {
  for (const Trip& trip : dataset.trips) validate_trip(trip);
  for (std::size_t i = 0; i < dataset.trips.size(); ++i) {
    for (std::size_t j = i + 1; j < dataset.trips.size(); ++j) {
      if (dataset.trips[i].trip_id == dataset.trips[j].trip_id)
        throw std::invalid_argument("duplicate trip_id '" +
                                    dataset.trips[i].trip_id + "'");
    }
  }
}

}  // namespace tmdetect

#endif  // TMDETECT_TYPES_HPP_
