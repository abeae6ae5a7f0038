#pragma once

#include <array>
#include <string>
#include <vector>

#include "bridge/mcg.hpp"

namespace bridge {

// One crossing in PD form: edge labels counterclockwise starting from the
// incoming under-strand. sign is +1 for sigma_i, -1 for sigma_i^-1.
struct PdCrossing {
    std::array<int, 4> labels;
    int sign;
};

// Plat closure of a word: 2n vertical strands, letters stacked bottom to top
// in word order, sigma_i crossing positions i and i+1 with the strand from
// position i over. Top and bottom are capped by the standard pairing.
struct PlatLink {
    int n = 0;
    McgWord source_word;
    std::vector<PdCrossing> pd_code;  // one per letter, word order
    int components = 0;
    // per component: +c passing over crossing c (1-based), -c passing under
    std::vector<std::vector<int>> gauss;

    // Every edge label appears exactly twice.
    bool labels_paired() const;
};

PlatLink plat_closure(const McgWord& w, SurfaceSpec spec);
int orbit_components(const McgWord& w, SurfaceSpec spec);

// "pd": PD[X(a,b,c,d),...]; "gauss": "1,-2/2,-1"; "csv": one row of
// word,n,components,crossings. Unknown formats throw ConfigError.
std::string export_link(const PlatLink& link, const std::string& format);
std::string plat_csv_header();

}  // namespace bridge
