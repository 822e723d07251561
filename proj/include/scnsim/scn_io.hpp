#pragma once

#include <iosfwd>
#include <string>

#include "scnsim/network.hpp"

namespace scnsim {

// scn/1: line-oriented network document with sections products, bom,
// vertices, edges, policy. Writing is byte-stable: entities sorted by id,
// quantities in fixed six-decimal form.
void write_scn(std::ostream& os, const NetworkModel& model);
std::string to_scn_string(const NetworkModel& model);
void save_scn(const std::string& path, const NetworkModel& model);

NetworkModel read_scn(std::istream& is);
NetworkModel parse_scn_string(const std::string& text);
NetworkModel load_scn(const std::string& path);

}  // namespace scnsim
