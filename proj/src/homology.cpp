#include "spinmcg/homology.hpp"

#include <bit>
#include <sstream>

#include "spinmcg/errors.hpp"

namespace spinmcg {

Genus::Genus(int g) : g_(g) {
    if (g < 1) throw Error("genus must be at least 1, got " + std::to_string(g));
}

void require_same_genus(Genus a, Genus b) {
    if (a != b) throw GenusMismatch(a.value(), b.value());
}

// ------------------------------------------------------------ HomologyClass

HomologyClass::HomologyClass(Genus g) : g_(g), c_(static_cast<std::size_t>(g.dim())) {}

HomologyClass::HomologyClass(Genus g, std::vector<Integer> coeffs) : g_(g), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != g.dim())
        throw Error("homology class needs " + std::to_string(g.dim()) + " coefficients");
}

HomologyClass::HomologyClass(Genus g, std::initializer_list<long> coeffs) : g_(g) {
    if (static_cast<int>(coeffs.size()) != g.dim())
        throw Error("homology class needs " + std::to_string(g.dim()) + " coefficients");
    for (long v : coeffs) c_.emplace_back(v);
}

HomologyClass HomologyClass::x(Genus g, int i) {
    if (i < 1 || i > g.value()) throw Error("basis index out of range: x" + std::to_string(i));
    HomologyClass h(g);
    h[2 * (i - 1)] = 1;
    return h;
}

HomologyClass HomologyClass::y(Genus g, int i) {
    if (i < 1 || i > g.value()) throw Error("basis index out of range: y" + std::to_string(i));
    HomologyClass h(g);
    h[2 * (i - 1) + 1] = 1;
    return h;
}

bool HomologyClass::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

bool HomologyClass::is_primitive() const {
    Integer d = 0;
    for (const auto& v : c_) mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), v.get_mpz_t());
    return d == 1;
}

std::uint64_t HomologyClass::mod2() const {
    std::uint64_t bits = 0;
    for (int k = 0; k < dim(); ++k)
        if (mpz_odd_p(c_[static_cast<std::size_t>(k)].get_mpz_t())) bits |= std::uint64_t{1} << k;
    return bits;
}

HomologyClass HomologyClass::operator-() const {
    HomologyClass r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

HomologyClass operator+(const HomologyClass& a, const HomologyClass& b) {
    require_same_genus(a.g_, b.g_);
    HomologyClass r(a);
    for (int k = 0; k < a.dim(); ++k) r[k] += b[k];
    return r;
}

HomologyClass operator-(const HomologyClass& a, const HomologyClass& b) { return a + (-b); }

HomologyClass operator*(const Integer& s, const HomologyClass& a) {
    HomologyClass r(a);
    for (auto& v : r.c_) v *= s;
    return r;
}

bool operator==(const HomologyClass& a, const HomologyClass& b) { return a.g_ == b.g_ && a.c_ == b.c_; }

std::string HomologyClass::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int k = 0; k < dim(); ++k) os << (k ? "," : "") << c_[static_cast<std::size_t>(k)];
    os << ']';
    return os.str();
}

Integer intersection(const HomologyClass& u, const HomologyClass& v) {
    require_same_genus(u.genus(), v.genus());
    Integer s = 0;
    for (int i = 0; i < u.genus().value(); ++i) s += u[2 * i] * v[2 * i + 1] - u[2 * i + 1] * v[2 * i];
    return s;
}

HomologyClass transvect(const HomologyClass& a, const HomologyClass& v) {
    return v + intersection(a, v) * a;
}

// --------------------------------------------------------- SymplecticMatrix

SymplecticMatrix::SymplecticMatrix(Genus g, std::vector<Integer> row_major) : g_(g), e_(std::move(row_major)) {
    if (static_cast<int>(e_.size()) != g.dim() * g.dim()) throw Error("matrix size does not match genus");
}

SymplecticMatrix SymplecticMatrix::identity(Genus g) {
    std::vector<Integer> e(static_cast<std::size_t>(g.dim() * g.dim()));
    for (int k = 0; k < g.dim(); ++k) e[static_cast<std::size_t>(k * g.dim() + k)] = 1;
    return SymplecticMatrix(g, std::move(e));
}

SymplecticMatrix SymplecticMatrix::from_rows(Genus g, const std::vector<std::vector<long>>& rows) {
    std::vector<Integer> e;
    if (static_cast<int>(rows.size()) != g.dim()) throw Error("matrix size does not match genus");
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != g.dim()) throw Error("matrix size does not match genus");
        for (long v : r) e.emplace_back(v);
    }
    return SymplecticMatrix(g, std::move(e));
}

HomologyClass SymplecticMatrix::column(int c) const {
    HomologyClass h(g_);
    for (int r = 0; r < dim(); ++r) h[r] = at(r, c);
    return h;
}

bool SymplecticMatrix::is_symplectic() const {
    // (M e_i, M e_j) must equal (e_i, e_j) for every pair of basis vectors
    std::vector<HomologyClass> cols;
    cols.reserve(static_cast<std::size_t>(dim()));
    for (int c = 0; c < dim(); ++c) cols.push_back(column(c));
    for (int i = 0; i < dim(); ++i)
        for (int j = i + 1; j < dim(); ++j) {
            int expected = (i % 2 == 0 && j == i + 1) ? 1 : 0;
            if (intersection(cols[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]) != expected)
                return false;
        }
    return true;
}

bool SymplecticMatrix::is_identity() const { return *this == identity(g_); }

SymplecticMatrix SymplecticMatrix::symplectic_inverse() const {
    // For M^T J M = J the inverse is J^{-1} M^T J; entrywise with J = diag([[0,1],[-1,0]]).
    SymplecticMatrix r(g_, std::vector<Integer>(e_.size()));
    auto partner = [](int k) { return k ^ 1; };
    auto sign = [](int k) { return (k % 2 == 0) ? 1 : -1; };
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            // (J^{-1} M^T J)_{ij} = sum J^{-1}_{i a} M_{b a} J_{b j}
            int a = partner(i);
            int b = partner(j);
            int s = -sign(i) * sign(b);
            r.at(i, j) = s * at(b, a);
        }
    return r;
}

HomologyClass SymplecticMatrix::apply(const HomologyClass& v) const {
    require_same_genus(g_, v.genus());
    HomologyClass out(g_);
    for (int r = 0; r < dim(); ++r) {
        Integer s = 0;
        for (int c = 0; c < dim(); ++c) s += at(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

void SymplecticMatrix::right_multiply_transvection(const HomologyClass& a, long power) {
    require_same_genus(g_, a.genus());
    if (power == 0) return;
    // (M T_a^p) e_k = M e_k + p (a, e_k) M a
    HomologyClass ma = apply(a);
    for (int k = 0; k < dim(); ++k) {
        // (a, x_i) = -a_{y_i}, (a, y_i) = a_{x_i}
        Integer pairing = (k % 2 == 0) ? Integer(-a[k + 1]) : Integer(a[k - 1]);
        if (pairing == 0) continue;
        Integer f = pairing * power;
        for (int r = 0; r < dim(); ++r) at(r, k) += f * ma[r];
    }
}

SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b) {
    require_same_genus(a.g_, b.g_);
    const int n = a.dim();
    SymplecticMatrix r(a.g_, std::vector<Integer>(a.e_.size()));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Integer& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

bool operator==(const SymplecticMatrix& a, const SymplecticMatrix& b) { return a.g_ == b.g_ && a.e_ == b.e_; }

std::vector<std::vector<std::string>> SymplecticMatrix::rows_as_strings() const {
    std::vector<std::vector<std::string>> rows;
    for (int r = 0; r < dim(); ++r) {
        rows.emplace_back();
        for (int c = 0; c < dim(); ++c) rows.back().push_back(at(r, c).get_str());
    }
    return rows;
}

std::string SymplecticMatrix::to_string() const {
    auto rows = rows_as_strings();
    std::size_t w = 1;
    for (const auto& r : rows)
        for (const auto& s : r) w = std::max(w, s.size());
    std::ostringstream os;
    for (const auto& r : rows) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c) os << ' ';
            os << std::string(w - r[c].size(), ' ') << r[c];
        }
        os << '\n';
    }
    return os.str();
}

SymplecticMatrix transvection_matrix(const HomologyClass& a) {
    SymplecticMatrix m = SymplecticMatrix::identity(a.genus());
    m.right_multiply_transvection(a, 1);
    return m;
}

SymplecticMatrix square_transvection_matrix(const HomologyClass& a) {
    if (!a.is_primitive()) throw Error("square transvection needs a primitive class, got " + a.to_string());
    SymplecticMatrix m = SymplecticMatrix::identity(a.genus());
    m.right_multiply_transvection(a, 2);
    return m;
}

// ----------------------------------------------------------------- F2 side

std::uint64_t full_mask(Genus g) {
    return g.dim() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.dim()) - 1;
}

F2Class::F2Class(Genus g, std::uint64_t bits) : g_(g), bits_(bits) {
    if (g.dim() > 64) throw Error("F2 classes support genus up to 32");
    if (bits & ~full_mask(g)) throw Error("F2 class has bits beyond dimension " + std::to_string(g.dim()));
}

F2Class F2Class::parse(Genus g, const std::string& text) {
    std::uint64_t bits = 0;
    int k = 0;
    for (std::size_t p = 0; p < text.size(); ++p) {
        char ch = text[p];
        if (ch == '0' || ch == '1') {
            if (k >= g.dim()) throw ParseError("too many entries for genus " + std::to_string(g.value()), p);
            if (ch == '1') bits |= std::uint64_t{1} << k;
            ++k;
        } else if (ch != '[' && ch != ']' && ch != ',' && ch != ' ' && ch != '(' && ch != ')') {
            throw ParseError(std::string("unexpected character '") + ch + "'", p);
        }
    }
    if (k != g.dim())
        throw ParseError("expected " + std::to_string(g.dim()) + " entries, got " + std::to_string(k), text.size());
    return F2Class(g, bits);
}

F2Class operator+(F2Class a, F2Class b) {
    require_same_genus(a.g_, b.g_);
    return F2Class(a.g_, a.bits_ ^ b.bits_);
}

std::string F2Class::to_string() const {
    std::string s = "[";
    for (int k = 0; k < g_.dim(); ++k) {
        if (k) s += ',';
        s += bit(k) ? '1' : '0';
    }
    return s + "]";
}

std::string F2Class::to_symbolic() const {
    if (bits_ == 0) return "0";
    std::string s;
    for (int k = 0; k < g_.dim(); ++k) {
        if (!bit(k)) continue;
        if (!s.empty()) s += '+';
        s += (k % 2 == 0 ? 'x' : 'y');
        s += std::to_string(k / 2 + 1);
    }
    return s;
}

int intersection_mod2(std::uint64_t u, std::uint64_t v) {
    constexpr std::uint64_t even = 0x5555555555555555ull;
    // swap each (x_i, y_i) bit pair of v, then count overlaps
    std::uint64_t sw = ((v & even) << 1) | ((v >> 1) & even);
    return std::popcount(u & sw) & 1;
}

int intersection_mod2(F2Class u, F2Class v) {
    require_same_genus(u.genus(), v.genus());
    return intersection_mod2(u.bits(), v.bits());
}

SymplecticMatrixF2::SymplecticMatrixF2(Genus g, std::vector<std::uint64_t> columns) : g_(g), cols_(std::move(columns)) {
    if (static_cast<int>(cols_.size()) != g.dim()) throw Error("F2 matrix size does not match genus");
}

SymplecticMatrixF2 SymplecticMatrixF2::identity(Genus g) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(g.dim()));
    for (int k = 0; k < g.dim(); ++k) c[static_cast<std::size_t>(k)] = std::uint64_t{1} << k;
    return SymplecticMatrixF2(g, std::move(c));
}

SymplecticMatrixF2 SymplecticMatrixF2::transvection(F2Class z) {
    auto m = identity(z.genus());
    for (auto& c : m.cols_)
        if (intersection_mod2(z.bits(), c)) c ^= z.bits();
    return m;
}

std::uint64_t SymplecticMatrixF2::apply(std::uint64_t v) const {
    std::uint64_t out = 0;
    while (v) {
        int k = std::countr_zero(v);
        out ^= cols_[static_cast<std::size_t>(k)];
        v &= v - 1;
    }
    return out;
}

F2Class SymplecticMatrixF2::apply(F2Class v) const {
    require_same_genus(g_, v.genus());
    return F2Class(g_, apply(v.bits()));
}

bool SymplecticMatrixF2::is_symplectic() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = i + 1; j < dim(); ++j) {
            int expected = (i % 2 == 0 && j == i + 1) ? 1 : 0;
            if (intersection_mod2(cols_[static_cast<std::size_t>(i)], cols_[static_cast<std::size_t>(j)]) != expected)
                return false;
        }
    return true;
}

bool SymplecticMatrixF2::is_identity() const { return *this == identity(g_); }

SymplecticMatrixF2 operator*(const SymplecticMatrixF2& a, const SymplecticMatrixF2& b) {
    require_same_genus(a.g_, b.g_);
    std::vector<std::uint64_t> c(b.cols_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.apply(b.cols_[k]);
    return SymplecticMatrixF2(a.g_, std::move(c));
}

std::vector<std::vector<int>> SymplecticMatrixF2::rows() const {
    std::vector<std::vector<int>> r(static_cast<std::size_t>(dim()), std::vector<int>(static_cast<std::size_t>(dim())));
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry(i, j);
    return r;
}

std::string SymplecticMatrixF2::to_string() const {
    std::ostringstream os;
    for (const auto& r : rows()) {
        for (std::size_t c = 0; c < r.size(); ++c) os << (c ? " " : "") << r[c];
        os << '\n';
    }
    return os.str();
}

SymplecticMatrixF2 mod2_reduce(const SymplecticMatrix& m) {
    std::vector<std::uint64_t> cols(static_cast<std::size_t>(m.dim()));
    for (int c = 0; c < m.dim(); ++c) cols[static_cast<std::size_t>(c)] = m.column(c).mod2();
    return SymplecticMatrixF2(m.genus(), std::move(cols));
}

bool in_level2_kernel(const SymplecticMatrix& m) {
    if (!m.is_symplectic()) throw Error("level-2 kernel test needs a symplectic matrix");
    return mod2_reduce(m).is_identity();
}

}  // namespace spinmcg
