#include "spinmcg/twist_words.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>

#include "spinmcg/errors.hpp"

namespace spinmcg {

namespace {

const char* kind_prefix(SymbolKind k) {
    switch (k) {
    case SymbolKind::C: return "C";
    case SymbolKind::B: return "B";
    case SymbolKind::BPrime: return "B";
    case SymbolKind::X: return "X";
    case SymbolKind::XStar: return "Xs";
    case SymbolKind::Y: return "Y";
    case SymbolKind::YStar: return "Ys";
    case SymbolKind::D: return "D";
    case SymbolKind::DB: return "DB";
    case SymbolKind::T1: return "T";
    }
    return "?";
}

bool even_b_index(int k, Genus g) { return k % 2 == 0 && k >= 4 && k <= 2 * g.value() - 2; }

void check_index(const Symbol& s, Genus g) {
    const int n = 2 * g.value() + 1;
    auto fail = [&](const std::string& range) {
        throw Error("index out of range: " + s.name() + " (" + range + ")");
    };
    switch (s.kind) {
    case SymbolKind::C:
    case SymbolKind::D:
        if (s.index < 1 || s.index > n) fail("valid 1.." + std::to_string(n));
        break;
    case SymbolKind::B:
    case SymbolKind::Y:
    case SymbolKind::YStar:
    case SymbolKind::DB:
        if (!even_b_index(s.index, g)) {
            if (g.value() < 3) fail("needs genus >= 3");
            fail("valid even 4.." + std::to_string(2 * g.value() - 2));
        }
        break;
    case SymbolKind::BPrime:
    case SymbolKind::T1:
        if (g.value() < 3) fail("needs genus >= 3");
        break;
    case SymbolKind::X:
    case SymbolKind::XStar:
        if (s.index < 4 || s.index > 2 * g.value()) fail("valid 4.." + std::to_string(2 * g.value()));
        break;
    }
}

}  // namespace

std::string Symbol::name() const {
    std::string s = kind_prefix(kind);
    if (kind == SymbolKind::BPrime) return "B4'";
    if (kind == SymbolKind::T1) return "T1";
    return s + std::to_string(index);
}

// ---------------------------------------------------------------- TwistWord

TwistWord::TwistWord(std::vector<Symbol> factors) {
    for (const auto& s : factors) append(s);
}

TwistWord TwistWord::letter(SymbolKind kind, int index, long exponent) {
    TwistWord w;
    w.append(Symbol{kind, index, exponent});
    return w;
}

TwistWord& TwistWord::append(const Symbol& s) {
    if (s.exponent == 0) return *this;
    if (!f_.empty() && f_.back().same_letter(s)) {
        f_.back().exponent += s.exponent;
        if (f_.back().exponent == 0) f_.pop_back();
    } else {
        f_.push_back(s);
    }
    return *this;
}

TwistWord& TwistWord::append(const TwistWord& w) {
    for (const auto& s : w.f_) append(s);
    return *this;
}

TwistWord TwistWord::inverse() const {
    TwistWord r;
    for (auto it = f_.rbegin(); it != f_.rend(); ++it) r.append(Symbol{it->kind, it->index, -it->exponent});
    return r;
}

TwistWord TwistWord::power(long n) const {
    TwistWord base = n < 0 ? inverse() : *this;
    TwistWord r;
    for (long i = 0; i < (n < 0 ? -n : n); ++i) r.append(base);
    return r;
}

TwistWord TwistWord::conjugated_by(const TwistWord& a) const {
    TwistWord r = a;
    r.append(*this);
    r.append(a.inverse());
    return r;
}

std::string TwistWord::to_string() const {
    if (f_.empty()) return "1";
    std::string out;
    for (const auto& s : f_) {
        if (!out.empty()) out += ' ';
        out += s.name();
        if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
    }
    return out;
}

void TwistWord::validate(Genus g) const {
    for (const auto& s : f_) check_index(s, g);
}

TwistWord TwistWord::expanded(Genus g) const {
    validate(g);
    TwistWord r;
    auto c = [](int i, long e = 1) { return Symbol{SymbolKind::C, i, e}; };
    auto b = [](int i, long e = 1) { return Symbol{SymbolKind::B, i, e}; };
    for (const auto& s : f_) {
        const long e = s.exponent;
        switch (s.kind) {
        case SymbolKind::C:
        case SymbolKind::B:
        case SymbolKind::BPrime:
            r.append(s);
            break;
        case SymbolKind::X:
            r.append(c(s.index + 1)).append(c(s.index, e)).append(c(s.index + 1, -1));
            break;
        case SymbolKind::XStar:
            r.append(c(s.index + 1, -1)).append(c(s.index, e)).append(c(s.index + 1));
            break;
        case SymbolKind::Y:
            r.append(c(s.index)).append(b(s.index, e)).append(c(s.index, -1));
            break;
        case SymbolKind::YStar:
            r.append(c(s.index, -1)).append(b(s.index, e)).append(c(s.index));
            break;
        case SymbolKind::D:
            r.append(c(s.index, 2 * e));
            break;
        case SymbolKind::DB:
            r.append(b(s.index, 2 * e));
            break;
        case SymbolKind::T1:
            // the factors commute, so T1^e = B4^e C5^e C7^e ...
            r.append(b(4, e));
            for (int i = 5; i <= 2 * g.value() + 1; i += 2) r.append(c(i, e));
            break;
        }
    }
    return r;
}

// ------------------------------------------------------------------ parsing

namespace {

class WordParser {
public:
    WordParser(std::string_view text, Genus g) : t_(text), g_(g) {}

    TwistWord parse() {
        TwistWord w = parse_sequence(false);
        skip_ws();
        if (p_ != t_.size()) throw ParseError("unexpected ')'", p_);
        return w;
    }

private:
    void skip_ws() {
        while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
    }

    long parse_exponent() {
        // after '^'
        std::size_t start = p_;
        bool neg = false;
        if (p_ < t_.size() && (t_[p_] == '-' || t_[p_] == '+')) neg = t_[p_++] == '-';
        if (p_ >= t_.size() || !std::isdigit(static_cast<unsigned char>(t_[p_])))
            throw ParseError("expected integer exponent", start);
        long v = 0;
        while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) {
            v = v * 10 + (t_[p_++] - '0');
            if (v > 1'000'000) throw ParseError("exponent too large", start);
        }
        if (v == 0) throw ParseError("exponent must be nonzero", start);
        return neg ? -v : v;
    }

    long optional_exponent() {
        if (p_ < t_.size() && t_[p_] == '^') {
            ++p_;
            return parse_exponent();
        }
        return 1;
    }

    TwistWord parse_sequence(bool nested) {
        TwistWord w;
        while (true) {
            skip_ws();
            if (p_ >= t_.size()) {
                if (nested) throw ParseError("missing ')'", p_);
                return w;
            }
            char ch = t_[p_];
            if (ch == ')') {
                if (!nested) throw ParseError("unexpected ')'", p_);
                return w;
            }
            if (ch == '(') {
                ++p_;
                TwistWord inner = parse_sequence(true);
                ++p_;  // ')'
                long e = optional_exponent();
                w.append(inner.power(e));
                continue;
            }
            if (ch == '1' && (p_ + 1 == t_.size() || !std::isdigit(static_cast<unsigned char>(t_[p_ + 1])))) {
                ++p_;  // identity
                optional_exponent();
                continue;
            }
            w.append(parse_symbol());
        }
    }

    Symbol parse_symbol() {
        const std::size_t start = p_;
        std::string name;
        while (p_ < t_.size() && std::isalpha(static_cast<unsigned char>(t_[p_]))) name += t_[p_++];
        if (name.empty()) throw ParseError(std::string("unexpected character '") + t_[p_] + "'", p_);
        if (p_ >= t_.size() || !std::isdigit(static_cast<unsigned char>(t_[p_])))
            throw ParseError("expected index after '" + name + "'", p_);
        int index = 0;
        while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) {
            index = index * 10 + (t_[p_++] - '0');
            if (index > 100000) throw ParseError("index too large", start);
        }
        bool prime = false;
        if (p_ < t_.size() && t_[p_] == '\'') {
            prime = true;
            ++p_;
        }
        static const std::map<std::string, SymbolKind> kinds = {
            {"C", SymbolKind::C},      {"B", SymbolKind::B},  {"X", SymbolKind::X},
            {"Xs", SymbolKind::XStar}, {"Y", SymbolKind::Y},  {"Ys", SymbolKind::YStar},
            {"D", SymbolKind::D},      {"DB", SymbolKind::DB}, {"T", SymbolKind::T1},
        };
        auto it = kinds.find(name);
        if (it == kinds.end()) throw ParseError("unknown generator '" + name + "'", start);
        Symbol s{it->second, index, 1};
        if (prime) {
            if (s.kind != SymbolKind::B || index != 4) throw ParseError("only B4' may carry a prime", start);
            s.kind = SymbolKind::BPrime;
        }
        if (s.kind == SymbolKind::T1 && index != 1) throw ParseError("only T1 is defined", start);
        s.exponent = optional_exponent();
        try {
            check_index(s, g_);
        } catch (const Error& e) {
            throw ParseError(e.what(), start);
        }
        return s;
    }

    std::string_view t_;
    Genus g_;
    std::size_t p_ = 0;
};

}  // namespace

TwistWord parse_word(std::string_view text, Genus g) { return WordParser(text, g).parse(); }

// ------------------------------------------------------------------ catalog

CurveCatalog::CurveCatalog(Genus g) : g_(g), beta_(HomologyClass::x(g, g.value() >= 2 ? 2 : 1)) {
    const int n = g.value();
    c_.assign(static_cast<std::size_t>(2 * n + 2), HomologyClass(g));
    c_[1] = -HomologyClass::x(g, 1);
    for (int k = 1; k <= n; ++k) c_[static_cast<std::size_t>(2 * k)] = -HomologyClass::y(g, k);
    for (int i = 1; i <= n - 1; ++i)
        c_[static_cast<std::size_t>(2 * i + 1)] = HomologyClass::x(g, i) + HomologyClass::x(g, i + 1);
    c_[static_cast<std::size_t>(2 * n + 1)] = HomologyClass::x(g, n);

    b_.assign(static_cast<std::size_t>(2 * n + 1), std::nullopt);
    for (int i = 2; i <= n - 1; ++i) b_[static_cast<std::size_t>(2 * i)] = HomologyClass::x(g, i);

    if (n >= 3) {
        // b4' = C4 C3 C2 C1 C1 C2 C3 C4 (b4), rightmost twist first
        HomologyClass v = *b_[4];
        for (int i : {4, 3, 2, 1, 1, 2, 3, 4}) v = transvect(c(i), v);
        b4p_ = v;
    }
}

HomologyClass CurveCatalog::c(int i) const {
    if (i < 1 || i > 2 * g_.value() + 1) throw Error("curve c" + std::to_string(i) + " out of range");
    return c_[static_cast<std::size_t>(i)];
}

HomologyClass CurveCatalog::b(int k) const {
    if (k < 0 || k >= static_cast<int>(b_.size()) || !b_[static_cast<std::size_t>(k)])
        throw Error("curve b" + std::to_string(k) + " not defined at genus " + std::to_string(g_.value()));
    return *b_[static_cast<std::size_t>(k)];
}

HomologyClass CurveCatalog::b4_prime() const {
    if (!b4p_) throw Error("curve b4' needs genus >= 3");
    return *b4p_;
}

void CurveCatalog::set_beta(const HomologyClass& cls) {
    require_same_genus(g_, cls.genus());
    if (!cls.is_primitive()) throw Error("beta class must be primitive");
    beta_ = cls;
}

HomologyClass CurveCatalog::lookup(const std::string& name) const {
    auto index_of = [&](std::size_t from) {
        if (from >= name.size()) throw Error("unknown curve '" + name + "'");
        for (std::size_t k = from; k < name.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(name[k]))) throw Error("unknown curve '" + name + "'");
        return std::stoi(name.substr(from));
    };
    if (name == "b4'") return b4_prime();
    if (name == "cbeta" || name == "c_beta") {
        if (g_.value() < 3) throw Error("curve cbeta needs genus >= 3");
        return beta_;
    }
    if (!name.empty() && name[0] == 'c') return c(index_of(1));
    if (!name.empty() && name[0] == 'b') return b(index_of(1));
    throw Error("unknown curve '" + name + "'");
}

HomologyClass CurveCatalog::of(const Symbol& s) const {
    switch (s.kind) {
    case SymbolKind::C: return c(s.index);
    case SymbolKind::B: return b(s.index);
    case SymbolKind::BPrime: return b4_prime();
    default: throw Error("symbol " + s.name() + " is not a single twist");
    }
}

namespace {

const CurveCatalog& shared_catalog(Genus g) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CurveCatalog>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[g.value()];
    if (!slot) slot = std::make_unique<CurveCatalog>(g);
    return *slot;
}

}  // namespace

HomologyClass curve_class(const std::string& name, Genus g) { return shared_catalog(g).lookup(name); }

SymplecticMatrix evaluate(const TwistWord& w, const CurveCatalog& catalog) {
    const Genus g = catalog.genus();
    SymplecticMatrix m = SymplecticMatrix::identity(g);
    const TwistWord flat = w.expanded(g);
    for (const auto& s : flat.factors()) m.right_multiply_transvection(catalog.of(s), s.exponent);
    return m;
}

SymplecticMatrix evaluate(const TwistWord& w, Genus g) { return evaluate(w, shared_catalog(g)); }

SymplecticMatrixF2 evaluate_mod2(const TwistWord& w, Genus g) {
    const CurveCatalog& cat = shared_catalog(g);
    std::vector<std::uint64_t> cols = SymplecticMatrixF2::identity(g).columns();
    const TwistWord flat = w.expanded(g);
    for (const auto& s : flat.factors()) {
        if (s.exponent % 2 == 0) continue;
        const std::uint64_t z = cat.of(s).mod2();
        // M T_z: column k gains M z whenever (z, e_k) = 1
        SymplecticMatrixF2 cur(g, cols);
        const std::uint64_t mz = cur.apply(z);
        for (int k = 0; k < g.dim(); ++k)
            if (intersection_mod2(z, std::uint64_t{1} << k)) cols[static_cast<std::size_t>(k)] ^= mz;
    }
    return SymplecticMatrixF2(g, std::move(cols));
}

std::vector<TwistWord> gg_generators(Genus g) {
    const int n = g.value();
    if (n < 2) throw Error("the generator set G_g needs genus >= 2");
    std::vector<TwistWord> out;
    for (int i = 1; i <= 3; ++i) out.push_back(TwistWord::letter(SymbolKind::C, i));
    if (n == 2) {
        out.push_back(TwistWord::letter(SymbolKind::X, 4));
        for (int i = 1; i <= 5; ++i) out.push_back(TwistWord::letter(SymbolKind::D, i));
        return out;
    }
    for (int i = 4; i <= 2 * n; ++i) out.push_back(TwistWord::letter(SymbolKind::X, i));
    for (int j = 2; j <= n - 1; ++j) out.push_back(TwistWord::letter(SymbolKind::Y, 2 * j));
    for (int k = 1; k <= 2 * n + 1; ++k) out.push_back(TwistWord::letter(SymbolKind::D, k));
    for (int l = 2; l <= n - 1; ++l) out.push_back(TwistWord::letter(SymbolKind::DB, 2 * l));
    out.push_back(TwistWord::letter(SymbolKind::T1, 1));
    return out;
}

bool is_gg_symbol(const Symbol& s, Genus g) {
    try {
        check_index(s, g);
    } catch (const Error&) {
        return false;
    }
    switch (s.kind) {
    case SymbolKind::C: return s.index <= 3;
    case SymbolKind::B:
    case SymbolKind::BPrime: return false;
    case SymbolKind::T1: return g.value() >= 3;
    default: return true;
    }
}

}  // namespace spinmcg
