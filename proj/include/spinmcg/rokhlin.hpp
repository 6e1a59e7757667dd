#pragma once

// Arf invariants of Rokhlin forms from signature data, and the plane-curve
// surfaces in CP^2.

#include <optional>
#include <string>

#include "spinmcg/homology.hpp"

namespace spinmcg {

// ((sigma - F.F) / 8) mod 2. Throws unless 8 divides sigma - F.F.
int arf_from_signature(const Integer& sigma, const Integer& self_intersection);

// (d - 1)(d - 2) / 2, d >= 1
Integer plane_curve_genus(const Integer& d);

struct KnottedSurfaceData {
    std::string name;
    Integer sigma;
    Integer self_intersection;
    Integer genus;
    // empty for non-characteristic surfaces
    std::optional<int> arf() const;
};

// "cp2-Kd(<d>)" or "cp2-K3-sum(<g>)"
KnottedSurfaceData surface_catalog(const std::string& name);
KnottedSurfaceData plane_curve(const Integer& d);
KnottedSurfaceData cubic_sum(const Integer& g);

}  // namespace spinmcg
