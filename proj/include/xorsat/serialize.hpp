#pragma once

#include <string>

#include "xorsat/ensembles.hpp"

namespace xorsat {

// Canonical instance JSON:
//   {"m":..,"n":..,"k":..,"d":..,"B_rows":[[sorted col indices],..],
//    "v":"bitstring","seed":..,"ensemble":".."}
// Field order and formatting are fixed so that load + re-serialize is
// byte-identical.
std::string instance_to_json(const XorSatInstance& inst);

XorSatInstance instance_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace xorsat
