#include "hartogs/zoo.hpp"

#include <cmath>
#include <stdexcept>

namespace hartogs {

HartogsDomain ZooEntry::build() const {
    Region base = Region::disc({0.0, 0.0}, 1.0);
    if (name == "Z1") {
        return make_domain(base, RadialProfile("constant", {0.0}),
                           RadialProfile("constant", {std::log(2.0)}),
                           CaseTag::Case1);
    }
    if (name == "Z2") {
        return make_domain(base, RadialProfile("quadratic-radial", {1.0}),
                           RadialProfile("constant", {std::log(4.0)}),
                           CaseTag::Case1);
    }
    if (name == "Z3") {
        return make_domain(base, RadialProfile("mollified-plateau", {0.25, 2.8}),
                           RadialProfile("constant", {std::log(4.0)}),
                           CaseTag::Case1);
    }
    if (name == "Z4") {
        return make_domain(base, RadialProfile("paraboloid-cap", {0.15, 0.1}),
                           RadialProfile("quadratic-radial", {-1.0}),
                           CaseTag::Case2);
    }
    throw std::invalid_argument("unknown zoo entry '" + name + "'");
}

const std::vector<ZooEntry>& zoo() {
    static const std::vector<ZooEntry> entries = {
        {"Z1", "product-annulus: D(0,1) x A(1,2)", TrendVerdict::Bounded},
        {"Z2", "superharmonic-shell: inner e^{|z|^2}, outer 4", TrendVerdict::Divergent},
        {"Z3", "harmonic-patch: plateau inner profile, outer 4", TrendVerdict::Bounded},
        {"Z4", "complete-hartogs: outer e^{-|z|^2}, paraboloid inner cap",
         TrendVerdict::Divergent},
    };
    return entries;
}

const ZooEntry& zoo_entry(const std::string& name) {
    for (const auto& e : zoo())
        if (e.name == name) return e;
    throw std::invalid_argument("unknown zoo entry '" + name + "'");
}

std::vector<int> zoo_mode_list() { return {2, 3, 4, 8, 16, 32, 64, 128, 256}; }

}  // namespace hartogs
