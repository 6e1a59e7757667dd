#include "spinmcg/spin_membership.hpp"

#include "spinmcg/errors.hpp"

namespace spinmcg {

MembershipReport is_spin_member(const SymplecticMatrixF2& image, const QuadraticForm& q) {
    require_same_genus(q.genus(), image.genus());
    MembershipReport r{true, std::nullopt, image};
    for (int k = 0; k < image.dim(); ++k) {
        const std::uint64_t e = std::uint64_t{1} << k;
        if (q(image.apply(e)) != q(e)) {
            r.member = false;
            r.failing_class = F2Class(q.genus(), e);
            break;
        }
    }
    return r;
}

MembershipReport is_spin_member(const TwistWord& w, const QuadraticForm& q, Genus g) {
    require_same_genus(g, q.genus());
    return is_spin_member(evaluate_mod2(w, g), q);
}

bool is_extendable_k3_sum(const TwistWord& w, Genus g) {
    if (g.value() < 2) throw Error("extendability test needs genus >= 2");
    return is_spin_member(w, QuadraticForm::q1(g), g).member;
}

std::optional<Witness> non_preserving_witness(const QuadraticForm& q) {
    const std::uint64_t top = full_mask(q.genus());
    for (std::uint64_t v = 1; v <= top; ++v) {
        if (q(v) == 0) {
            F2Class z(q.genus(), v);
            return Witness{z, SymplecticMatrixF2::transvection(z)};
        }
    }
    return std::nullopt;
}

}  // namespace spinmcg
