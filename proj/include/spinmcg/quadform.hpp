#pragma once

// Z2-valued quadratic forms on H1(S; F2) compatible with the mod-2
// intersection pairing: q(u + v) = q(u) + q(v) + (u, v).

#include <cstdint>
#include <string>
#include <vector>

#include "spinmcg/homology.hpp"

namespace spinmcg {

class QuadraticForm {
public:
    // bit k of basis_values is q(e_k) in the (x1, y1, ..., xg, yg) order
    QuadraticForm(Genus g, std::uint64_t basis_values);
    static QuadraticForm q0(Genus g);
    // q(x1) = q(y1) = 1, zero on the other basis elements
    static QuadraticForm q1(Genus g);
    static QuadraticForm parse(Genus g, const std::string& text);

    Genus genus() const noexcept { return g_; }
    std::uint64_t basis_values() const noexcept { return v_; }

    int operator()(std::uint64_t cls) const;
    int operator()(F2Class cls) const;

    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
    std::string to_string() const;

private:
    Genus g_;
    std::uint64_t v_;
};

int eval_form(const QuadraticForm& q, F2Class v);
int arf(const QuadraticForm& q);

// (q . M)(v) = q(M v). Throws for non-symplectic M.
QuadraticForm act_form(const QuadraticForm& q, const SymplecticMatrixF2& m);

// x -> x + (z, x) z. Throws for z = 0.
SymplecticMatrixF2 z2_transvection(F2Class z);

// z1 + (z2, z1) z2; both arguments must have q-value 1.
F2Class box(const QuadraticForm& q, F2Class z1, F2Class z2);

constexpr int kDefaultEnumerationCap = 8;

// All classes with q(z) = 1, increasing mask order.
std::vector<F2Class> enumerate_lambda(const QuadraticForm& q, int cap = kDefaultEnumerationCap);
// All forms of the given Arf invariant, increasing basis-value order.
std::vector<QuadraticForm> enumerate_forms(Genus g, int arf_value, int cap = kDefaultEnumerationCap);

// number of classes with q = 1: 2^(2g-1) + 2^(g-1) for odd forms,
// 2^(2g-1) - 2^(g-1) for even ones
std::uint64_t lambda_size(Genus g, int arf_value);

}  // namespace spinmcg
