#pragma once

// First homology of a closed genus-g surface over Z and over F2.
//
// Coordinates are ordered (x1, y1, x2, y2, ..., xg, yg). The intersection
// pairing satisfies (xi, yj) = delta_ij and (xi, xj) = (yi, yj) = 0, so its
// Gram matrix J is block diagonal with 2x2 blocks [[0, 1], [-1, 0]].
// Matrices act on column vectors from the left.
//
// Over F2 a class is a bit mask: bit 2(i-1) is xi and bit 2(i-1)+1 is yi.
// Ordering classes by their mask value is the lexicographic order used for
// deterministic witness searches.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace spinmcg {

using Integer = mpz_class;

class Genus {
public:
    explicit Genus(int g);
    int value() const noexcept { return g_; }
    int dim() const noexcept { return 2 * g_; }
    friend bool operator==(Genus, Genus) = default;

private:
    int g_;
};

void require_same_genus(Genus a, Genus b);

class HomologyClass {
public:
    explicit HomologyClass(Genus g);
    HomologyClass(Genus g, std::vector<Integer> coeffs);
    HomologyClass(Genus g, std::initializer_list<long> coeffs);

    static HomologyClass x(Genus g, int i);
    static HomologyClass y(Genus g, int i);

    Genus genus() const noexcept { return g_; }
    int dim() const noexcept { return g_.dim(); }
    const Integer& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    Integer& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<Integer>& coeffs() const noexcept { return c_; }

    bool is_zero() const;
    // gcd of the coefficients is 1
    bool is_primitive() const;
    std::uint64_t mod2() const;

    HomologyClass operator-() const;
    friend HomologyClass operator+(const HomologyClass& a, const HomologyClass& b);
    friend HomologyClass operator-(const HomologyClass& a, const HomologyClass& b);
    friend HomologyClass operator*(const Integer& s, const HomologyClass& a);
    friend bool operator==(const HomologyClass& a, const HomologyClass& b);

    std::string to_string() const;

private:
    Genus g_;
    std::vector<Integer> c_;
};

Integer intersection(const HomologyClass& u, const HomologyClass& v);

// v + (a, v) a
HomologyClass transvect(const HomologyClass& a, const HomologyClass& v);

class SymplecticMatrix {
public:
    // Unchecked; use is_symplectic() where the invariant matters.
    SymplecticMatrix(Genus g, std::vector<Integer> row_major);
    static SymplecticMatrix identity(Genus g);
    static SymplecticMatrix from_rows(Genus g, const std::vector<std::vector<long>>& rows);

    Genus genus() const noexcept { return g_; }
    int dim() const noexcept { return g_.dim(); }
    const Integer& at(int r, int c) const { return e_[static_cast<std::size_t>(r * dim() + c)]; }
    Integer& at(int r, int c) { return e_[static_cast<std::size_t>(r * dim() + c)]; }

    bool is_symplectic() const;
    bool is_identity() const;
    // -J M^T J; valid for symplectic M
    SymplecticMatrix symplectic_inverse() const;

    HomologyClass apply(const HomologyClass& v) const;
    HomologyClass column(int c) const;

    // this * T_a^power, computed column-wise in O(n^2)
    void right_multiply_transvection(const HomologyClass& a, long power);

    friend SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b);
    friend bool operator==(const SymplecticMatrix& a, const SymplecticMatrix& b);

    std::vector<std::vector<std::string>> rows_as_strings() const;
    std::string to_string() const;

private:
    Genus g_;
    std::vector<Integer> e_;
};

SymplecticMatrix transvection_matrix(const HomologyClass& a);
// Throws for a non-primitive a.
SymplecticMatrix square_transvection_matrix(const HomologyClass& a);

// ---------------------------------------------------------------- F2 side

class F2Class {
public:
    F2Class(Genus g, std::uint64_t bits);
    static F2Class x(Genus g, int i) { return F2Class(g, std::uint64_t{1} << (2 * (i - 1))); }
    static F2Class y(Genus g, int i) { return F2Class(g, std::uint64_t{1} << (2 * (i - 1) + 1)); }
    // Bracket notation "[e1,d1,...,eg,dg]" over the basis order.
    static F2Class parse(Genus g, const std::string& text);

    Genus genus() const noexcept { return g_; }
    std::uint64_t bits() const noexcept { return bits_; }
    bool bit(int k) const noexcept { return (bits_ >> k) & 1u; }
    bool is_zero() const noexcept { return bits_ == 0; }

    friend F2Class operator+(F2Class a, F2Class b);
    friend bool operator==(F2Class a, F2Class b) = default;
    friend auto operator<=>(F2Class a, F2Class b) { return a.bits_ <=> b.bits_; }

    std::string to_string() const;
    // e.g. "x1+y2"
    std::string to_symbolic() const;

private:
    Genus g_;
    std::uint64_t bits_;
};

std::uint64_t full_mask(Genus g);
int intersection_mod2(F2Class u, F2Class v);
int intersection_mod2(std::uint64_t u, std::uint64_t v);

// Column k holds the image of basis vector k.
class SymplecticMatrixF2 {
public:
    SymplecticMatrixF2(Genus g, std::vector<std::uint64_t> columns);
    static SymplecticMatrixF2 identity(Genus g);
    // x -> x + (z, x) z
    static SymplecticMatrixF2 transvection(F2Class z);

    Genus genus() const noexcept { return g_; }
    int dim() const noexcept { return g_.dim(); }
    const std::vector<std::uint64_t>& columns() const noexcept { return cols_; }
    bool entry(int r, int c) const { return (cols_[static_cast<std::size_t>(c)] >> r) & 1u; }

    std::uint64_t apply(std::uint64_t v) const;
    F2Class apply(F2Class v) const;
    bool is_symplectic() const;
    bool is_identity() const;

    friend SymplecticMatrixF2 operator*(const SymplecticMatrixF2& a, const SymplecticMatrixF2& b);
    friend bool operator==(const SymplecticMatrixF2& a, const SymplecticMatrixF2& b) = default;

    std::vector<std::vector<int>> rows() const;
    std::string to_string() const;

private:
    Genus g_;
    std::vector<std::uint64_t> cols_;
};

SymplecticMatrixF2 mod2_reduce(const SymplecticMatrix& m);

// Membership in the level-2 congruence subgroup. Throws for non-symplectic m.
bool in_level2_kernel(const SymplecticMatrix& m);

}  // namespace spinmcg
