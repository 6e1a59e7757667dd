#include "spinmcg/rokhlin.hpp"

#include <regex>

#include "spinmcg/errors.hpp"

namespace spinmcg {

int arf_from_signature(const Integer& sigma, const Integer& self_intersection) {
    const Integer diff = sigma - self_intersection;
    if (diff % 8 != 0)
        throw Error("sigma - F.F = " + diff.get_str() + " is not divisible by 8; the surface is not characteristic");
    Integer k = diff / 8;
    return mpz_odd_p(k.get_mpz_t()) ? 1 : 0;
}

Integer plane_curve_genus(const Integer& d) {
    if (d < 1) throw Error("plane curve degree must be >= 1");
    return Integer((d - 1) * (d - 2) / 2);
}

std::optional<int> KnottedSurfaceData::arf() const {
    const Integer diff = sigma - self_intersection;
    if (diff % 8 != 0) return std::nullopt;
    return arf_from_signature(sigma, self_intersection);
}

KnottedSurfaceData plane_curve(const Integer& d) {
    return {"cp2-Kd(" + d.get_str() + ")", 1, d * d, plane_curve_genus(d)};
}

KnottedSurfaceData cubic_sum(const Integer& g) {
    if (g < 1) throw Error("genus must be >= 1");
    return {"cp2-K3-sum(" + g.get_str() + ")", 1, 9, g};
}

KnottedSurfaceData surface_catalog(const std::string& name) {
    static const std::regex kd(R"(cp2-Kd\((\d+)\))"), k3(R"(cp2-K3-sum\((\d+)\))");
    std::smatch m;
    if (std::regex_match(name, m, kd)) return plane_curve(Integer(m[1].str()));
    if (std::regex_match(name, m, k3)) return cubic_sum(Integer(m[1].str()));
    throw Error("unknown surface '" + name + "'");
}

}  // namespace spinmcg
