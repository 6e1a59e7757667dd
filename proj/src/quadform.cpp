#include "spinmcg/quadform.hpp"

#include <bit>

#include "spinmcg/errors.hpp"

namespace spinmcg {

namespace {

std::uint64_t x_mask(Genus g) { return full_mask(g) & 0x5555555555555555ULL; }

void check_cap(Genus g, int cap) {
    if (g.value() > cap)
        throw CapExceeded("enumeration at genus " + std::to_string(g.value()) + " exceeds cap " + std::to_string(cap), 0);
}

}  // namespace

QuadraticForm::QuadraticForm(Genus g, std::uint64_t basis_values) : g_(g), v_(basis_values) {
    if (g.dim() > 64) throw Error("genus too large for a packed form");
    if (v_ & ~full_mask(g)) throw Error("form has bits outside the basis");
}

QuadraticForm QuadraticForm::q0(Genus g) { return QuadraticForm(g, 0); }
QuadraticForm QuadraticForm::q1(Genus g) { return QuadraticForm(g, 0b11); }

QuadraticForm QuadraticForm::parse(Genus g, const std::string& text) {
    return QuadraticForm(g, F2Class::parse(g, text).bits());
}

int QuadraticForm::operator()(std::uint64_t v) const {
    // sum of basis values plus one (x_i, y_i) cross term per full block
    const std::uint64_t cross = v & (v >> 1) & x_mask(g_);
    return (std::popcount(v & v_) + std::popcount(cross)) & 1;
}

int QuadraticForm::operator()(F2Class v) const {
    require_same_genus(g_, v.genus());
    return (*this)(v.bits());
}

std::string QuadraticForm::to_string() const { return F2Class(g_, v_).to_string(); }

int eval_form(const QuadraticForm& q, F2Class v) { return q(v); }

int arf(const QuadraticForm& q) {
    const std::uint64_t v = q.basis_values();
    return std::popcount(v & (v >> 1) & full_mask(q.genus()) & 0x5555555555555555ULL) & 1;
}

QuadraticForm act_form(const QuadraticForm& q, const SymplecticMatrixF2& m) {
    require_same_genus(q.genus(), m.genus());
    if (!m.is_symplectic()) throw Error("act_form: matrix does not preserve the mod-2 pairing");
    std::uint64_t out = 0;
    for (int k = 0; k < m.dim(); ++k)
        if (q(m.columns()[static_cast<std::size_t>(k)])) out |= std::uint64_t{1} << k;
    return QuadraticForm(q.genus(), out);
}

SymplecticMatrixF2 z2_transvection(F2Class z) {
    if (z.is_zero()) throw Error("transvection about the zero class");
    return SymplecticMatrixF2::transvection(z);
}

F2Class box(const QuadraticForm& q, F2Class z1, F2Class z2) {
    if (q(z1) != 1 || q(z2) != 1) throw Error("box: argument has q-value 0");
    return intersection_mod2(z2, z1) ? z1 + z2 : z1;
}

std::vector<F2Class> enumerate_lambda(const QuadraticForm& q, int cap) {
    check_cap(q.genus(), cap);
    std::vector<F2Class> out;
    const std::uint64_t top = full_mask(q.genus());
    for (std::uint64_t v = 1; v <= top; ++v)
        if (q(v)) out.emplace_back(q.genus(), v);
    return out;
}

std::vector<QuadraticForm> enumerate_forms(Genus g, int arf_value, int cap) {
    check_cap(g, cap);
    std::vector<QuadraticForm> out;
    const std::uint64_t top = full_mask(g);
    for (std::uint64_t v = 0; v <= top; ++v) {
        QuadraticForm q(g, v);
        if (arf(q) == arf_value) out.push_back(q);
    }
    return out;
}

std::uint64_t lambda_size(Genus g, int arf_value) {
    const std::uint64_t a = std::uint64_t{1} << (2 * g.value() - 1);
    const std::uint64_t b = std::uint64_t{1} << (g.value() - 1);
    // zeros of q (counting 0) number 2^(2g-1) + (-1)^arf 2^(g-1)
    return arf_value ? a + b : a - b;
}

}  // namespace spinmcg
