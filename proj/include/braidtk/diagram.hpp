#pragma once

#include <utility>
#include <vector>

#include "braid.hpp"

namespace braidtk {

/// Closed-braid link diagram: the braid axis is implicit, crossings are
/// listed top to bottom as (generator index, sign).
struct ClosedBraidDiagram {
    int strands = 1;
    std::vector<std::pair<int, int>> crossings;
    int components = 1;

    friend bool operator==(const ClosedBraidDiagram&, const ClosedBraidDiagram&) = default;
};

inline ClosedBraidDiagram closure(const BraidWord& w) {
    ClosedBraidDiagram d;
    d.strands = w.strands();
    d.crossings.reserve(w.length());
    for (const auto& l : w.letters()) d.crossings.emplace_back(l.index, l.sign);
    d.components = component_count(w);
    return d;
}

inline int writhe(const ClosedBraidDiagram& d) {
    int s = 0;
    for (auto [i, sg] : d.crossings) {
        (void)i;
        s += sg;
    }
    return s;
}

/// Seifert circle and Euler characteristic data for the surface obtained
/// by resolving every crossing along orientation. For a closed braid every
/// Seifert circle is a strand circle, so circles == strands and
/// chi = strands - crossings.
struct SeifertData {
    int circles = 0;
    int crossings = 0;
    int chi = 0;

    friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

inline SeifertData seifert(const ClosedBraidDiagram& d) {
    SeifertData s;
    s.circles = d.strands;
    s.crossings = static_cast<int>(d.crossings.size());
    s.chi = s.circles - s.crossings;
    return s;
}

/// Euler characteristic of the Bennequin surface of the braid word:
/// strands minus letters. Equals seifert(closure(w)).chi.
inline int bennequin_chi(const BraidWord& w) {
    return w.strands() - static_cast<int>(w.length());
}

}  // namespace braidtk
