#pragma once

#include <string>

#include <json.hpp>

#include "freeconv/hausdorff.hpp"
#include "freeconv/measure.hpp"
#include "freeconv/support.hpp"

namespace freeconv {

// {"atoms":[{"x":..,"m":..}], "segments":[{"xs":[..],"ys":[..]}]}
MeasureSpec measure_from_json(const nlohmann::json& j, bool renormalize = false);
MeasureSpec read_measure_file(const std::string& path, bool renormalize = false);

// {"t":.., "ac":[[lo,hi],..], "atoms":[{"x":..,"m":..}], "density":[[u,p],..],
//  "flags":[..], "mass":{..}}
nlohmann::json snapshot_to_json(const SupportSnapshot& snap);
SupportSnapshot snapshot_from_json(const nlohmann::json& j);
SupportSnapshot read_snapshot_file(const std::string& path);

nlohmann::json profile_to_json(const SupportSnapshot& snap);
std::string profile_to_csv(const SupportSnapshot& snap);

nlohmann::json table_to_json(const ContinuityTable& table);
std::string table_to_csv(const ContinuityTable& table);

// Writes via a temporary file plus rename, so failures leave no partial file.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace freeconv
