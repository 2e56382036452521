#pragma once

#include <string>
#include <vector>

#include "hartogs/domain.hpp"
#include "hartogs/spectral.hpp"

namespace hartogs {

// Curated test domains exercising both boundary cases.
struct ZooEntry {
    std::string name;
    std::string description;
    TrendVerdict expected;       // Divergent = compact-type, Bounded = noncompact-type
    complexd symbol_center{0.0, 0.0};
    double symbol_radius = 1.0;  // a: symbol support disc radius
    double v1_radius = 1.2;      // a1: V1 = D(z0, a1) intersected with the base

    HartogsDomain build() const;
};

const std::vector<ZooEntry>& zoo();
const ZooEntry& zoo_entry(const std::string& name);

// canonical mode list for trend diagnostics (geometric, reaches the
// saturation regime of the harmonic-patch entry)
std::vector<int> zoo_mode_list();

}  // namespace hartogs
