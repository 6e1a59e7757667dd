#pragma once

// Dehn-twist words and their homology representation.
//
// Composition is functional: in the word "C2 C1" the twist C1 acts first.
// Evaluation therefore multiplies transvection matrices left to right,
// Phi(w1 w2) = Phi(w1) Phi(w2).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinmcg/homology.hpp"

namespace spinmcg {

enum class SymbolKind {
    C,       // C_i = T_{c_i}
    B,       // B_{2j} = T_{b_{2j}}
    BPrime,  // B'_4 = T_{b'_4}
    X,       // X_i = C_{i+1} C_i C_{i+1}^-1
    XStar,   // X*_i = C_{i+1}^-1 C_i C_{i+1}
    Y,       // Y_{2j} = C_{2j} B_{2j} C_{2j}^-1
    YStar,   // Y*_{2j} = C_{2j}^-1 B_{2j} C_{2j}
    D,       // D_i = C_i^2
    DB,      // DB_{2j} = B_{2j}^2
    T1,      // B_4 C_5 C_7 ... C_{2g+1}
};

struct Symbol {
    SymbolKind kind;
    int index = 0;
    long exponent = 1;

    bool same_letter(const Symbol& o) const { return kind == o.kind && index == o.index; }
    std::string name() const;
    friend bool operator==(const Symbol&, const Symbol&) = default;
};

class TwistWord {
public:
    TwistWord() = default;
    explicit TwistWord(std::vector<Symbol> factors);
    static TwistWord letter(SymbolKind kind, int index, long exponent = 1);

    const std::vector<Symbol>& factors() const noexcept { return f_; }
    bool empty() const noexcept { return f_.empty(); }
    std::size_t size() const noexcept { return f_.size(); }

    // Appending merges equal adjacent letters and drops zero exponents.
    TwistWord& append(const Symbol& s);
    TwistWord& append(const TwistWord& w);
    TwistWord inverse() const;
    TwistWord power(long n) const;
    // a * b = a b a^-1
    TwistWord conjugated_by(const TwistWord& a) const;

    friend TwistWord operator*(TwistWord a, const TwistWord& b) { return a.append(b); }
    friend bool operator==(const TwistWord&, const TwistWord&) = default;

    // "1" for the empty word; exponents printed as "^k" when k != 1.
    std::string to_string() const;

    // Throws if some index is invalid for g.
    void validate(Genus g) const;
    // Rewrites derived names into C, B and B' letters.
    TwistWord expanded(Genus g) const;

private:
    std::vector<Symbol> f_;
};

TwistWord parse_word(std::string_view text, Genus g);

// Named curves: c1..c{2g+1}, b4..b{2g-2} (even), b4', cbeta.
class CurveCatalog {
public:
    explicit CurveCatalog(Genus g);
    Genus genus() const noexcept { return g_; }

    HomologyClass c(int i) const;
    HomologyClass b(int k) const;
    HomologyClass b4_prime() const;
    HomologyClass beta() const { return beta_; }
    // The beta curve's class is not pinned down by the source figures.
    void set_beta(const HomologyClass& cls);

    HomologyClass lookup(const std::string& name) const;
    HomologyClass of(const Symbol& primitive) const;

private:
    Genus g_;
    std::vector<HomologyClass> c_;
    std::vector<std::optional<HomologyClass>> b_;
    std::optional<HomologyClass> b4p_;
    HomologyClass beta_;
};

HomologyClass curve_class(const std::string& name, Genus g);

SymplecticMatrix evaluate(const TwistWord& w, Genus g);
SymplecticMatrix evaluate(const TwistWord& w, const CurveCatalog& catalog);
// Same as mod2_reduce(evaluate(w, g)) but computed with bit operations.
SymplecticMatrixF2 evaluate_mod2(const TwistWord& w, Genus g);

// Generators of the odd spin subgroup candidate G_g, g >= 2.
std::vector<TwistWord> gg_generators(Genus g);
// Whether a written symbol is one of the G_g generators or a derived
// name known to lie in G_g (X*, Y*).
bool is_gg_symbol(const Symbol& s, Genus g);

}  // namespace spinmcg
