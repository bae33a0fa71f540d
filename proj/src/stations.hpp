#ifndef CDRSCOPE_STATIONS_HPP
#define CDRSCOPE_STATIONS_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "geo.hpp"

namespace cdrscope {

struct BaseStation {
  std::int64_t station_id = 0;
  double lon = 0;
  double lat = 0;
};

// ANT_POS.TSV: `<station_id>\t<lon>\t<lat>`, no header. Strict parse: any
// malformed line, out-of-range coordinate or duplicate id aborts with the
// offending line number. Station files are small and authoritative, unlike
// CDR dumps, so there is no skip path here.
std::vector<BaseStation> parse_stations(const std::string& path);
void write_stations(const std::string& path, const std::vector<BaseStation>& stations);

// One group per distinct location. Stations whose coordinates agree within
// `tolerance_deg` on both axes are merged transitively (single link); the
// group takes the coordinate of its lowest station id.
struct DistinctLocation {
  double lon = 0;
  double lat = 0;
  std::vector<std::int64_t> member_ids;  // ascending
};

std::vector<DistinctLocation> dedupe_station_locations(
    const std::vector<BaseStation>& stations, double tolerance_deg = 0.0);

class StationTable {
 public:
  explicit StationTable(std::vector<BaseStation> stations);

  const std::vector<BaseStation>& all() const { return stations_; }
  bool contains(std::int64_t id) const { return by_id_.count(id) != 0; }
  const BaseStation& by_id(std::int64_t id) const;
  std::size_t size() const { return stations_.size(); }

 private:
  std::vector<BaseStation> stations_;
  std::unordered_map<std::int64_t, std::size_t> by_id_;
};

}  // namespace cdrscope

#endif
