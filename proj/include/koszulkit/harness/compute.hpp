#pragma once

#include <string>
#include <vector>

#include "koszulkit/harness/instance.hpp"

namespace koszulkit::harness {

// koszul, ext, tor, depth, width, pdepth, pwidth, socle, localhom.
const std::vector<std::string>& compute_targets();

// The finite backend is chosen when the ring literal parses as a finite ring
// (and spec.backend is rewritten accordingly). localhom needs the finite
// backend; socle, pdepth and pwidth need the polynomial one. Both mismatches
// throw CapabilityError.
nlohmann::ordered_json run_compute(const std::string& what, InstanceSpec spec);

}  // namespace koszulkit::harness
