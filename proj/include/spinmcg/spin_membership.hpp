#pragma once

#include <optional>

#include "spinmcg/quadform.hpp"
#include "spinmcg/twist_words.hpp"

namespace spinmcg {

struct MembershipReport {
    bool member = false;
    // first basis element whose q-value changes under the image
    std::optional<F2Class> failing_class;
    SymplecticMatrixF2 image;
};

MembershipReport is_spin_member(const TwistWord& w, const QuadraticForm& q, Genus g);
MembershipReport is_spin_member(const SymplecticMatrixF2& image, const QuadraticForm& q);

// Membership in Spin(g, q1). q1 is the Rokhlin form of the connected sum
// of a cubic with a genus g-1 surface, so this decides extendability over
// that pair. Throws for g < 2.
bool is_extendable_k3_sum(const TwistWord& w, Genus g);

struct Witness {
    F2Class z;
    SymplecticMatrixF2 transvection;
};

// Least nonzero z (mask order) with q(z) = 0 together with T_z, which moves q.
// Empty only when every nonzero class has q-value 1 (the odd form at genus 1).
std::optional<Witness> non_preserving_witness(const QuadraticForm& q);

}  // namespace spinmcg
