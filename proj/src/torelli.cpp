#include "spinmcg/torelli.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <mutex>
#include <set>
#include <stdexcept>

#include "spinmcg/errors.hpp"

namespace spinmcg::torelli {

namespace {

std::uint64_t tack_mask(Genus g) {
    const int n = 2 * g.value() + 2;
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::uint64_t bit(int k) { return std::uint64_t{1} << (k - 1); }

TwistWord w_of(const std::string& s, Genus g) { return parse_word(s, g); }

}  // namespace

// ------------------------------------------------------------- sequences

TackSequence::TackSequence(Genus g, std::uint64_t bits) : g_(g), bits_(bits) {
    if (2 * g.value() + 2 > 64) throw Error("tack sequences are limited to genus 31");
    if (bits & ~tack_mask(g)) throw Error("tack outside 1.." + std::to_string(2 * g.value() + 2));
}

TackSequence TackSequence::from_string(Genus g, const std::string& s) {
    std::string t;
    for (char ch : s)
        if (ch == '0' || ch == '1') t += ch;
        else if (ch != ',' && ch != ' ' && ch != '[' && ch != ']')
            throw ParseError(std::string("unexpected character '") + ch + "' in tack sequence", 0);
    if (static_cast<int>(t.size()) != 2 * g.value() + 2)
        throw Error("tack sequence needs " + std::to_string(2 * g.value() + 2) + " tacks, got " + std::to_string(t.size()));
    std::uint64_t b = 0;
    for (std::size_t k = 0; k < t.size(); ++k)
        if (t[k] == '1') b |= std::uint64_t{1} << k;
    return TackSequence(g, b);
}

TackSequence TackSequence::from_indices(Genus g, const std::vector<int>& idx) {
    std::uint64_t b = 0;
    int prev = 0;
    for (int k : idx) {
        if (k <= prev) throw Error("chain indices must be strictly increasing");
        if (k > 2 * g.value() + 2) throw Error("chain index " + std::to_string(k) + " exceeds 2g+2");
        b |= bit(k);
        prev = k;
    }
    return TackSequence(g, b);
}

int TackSequence::popcount() const { return std::popcount(bits_); }

std::vector<int> TackSequence::indices() const {
    std::vector<int> out;
    for (int k = 1; k <= length(); ++k)
        if (has(k)) out.push_back(k);
    return out;
}

std::string TackSequence::to_string() const {
    std::string s;
    for (int k = 1; k <= length(); ++k) s += has(k) ? '1' : '0';
    return s;
}

std::string TackSequence::to_bracket_string() const {
    std::string s = "[";
    for (int k : indices()) s += (s.size() > 1 ? "," : "") + std::to_string(k);
    return s + "]";
}

TackStats tack_stats(const TackSequence& s) {
    TackStats st;
    for (int k = 1; k <= 3; ++k) st.h += s.has(k);
    int k = 4;
    while (k <= s.length() && s.has(k)) {
        ++st.b;
        ++k;
    }
    for (; k <= s.length(); ++k) st.t += s.has(k);
    return st;
}

// ----------------------------------------------------------------- oracle

OracleResult conjugation_oracle(int j, int sign, const TackSequence& s) {
    if (j < 1 || j > 2 * s.genus().value() + 1) throw Error("chain index C" + std::to_string(j) + " out of range");
    if (sign != 1 && sign != -1) throw Error("conjugation sign must be +1 or -1");
    const bool a = s.has(j), b = s.has(j + 1);
    if (a == b) return {OracleOutcome::Commutes, s};
    if (sign < 0 && a) return {OracleOutcome::Moved, TackSequence(s.genus(), (s.bits() & ~bit(j)) | bit(j + 1))};
    if (sign > 0 && b) return {OracleOutcome::Moved, TackSequence(s.genus(), (s.bits() & ~bit(j + 1)) | bit(j))};
    return {OracleOutcome::Unlicensed, s};
}

std::optional<TackSequence> conjugate(const TwistWord& w, const TackSequence& s) {
    const TwistWord flat = w.expanded(s.genus());
    TackSequence cur = s;
    const auto& f = flat.factors();
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        const long n = it->exponent < 0 ? -it->exponent : it->exponent;
        const int sign = it->exponent < 0 ? -1 : 1;
        for (long r = 0; r < n; ++r) {
            if (it->kind == SymbolKind::C) {
                auto res = conjugation_oracle(it->index, sign, cur);
                if (res.outcome == OracleOutcome::Unlicensed) return std::nullopt;
                cur = res.result;
            } else if (it->kind == SymbolKind::B && it->index == 4) {
                const std::uint64_t head = cur.bits() & 0xFu;
                if (head != 0 && head != 0xFu) return std::nullopt;
            } else {
                return std::nullopt;
            }
        }
    }
    return cur;
}

// ------------------------------------------------------------------ moves

bool complement_applies(const TackSequence& s) {
    const Genus g = s.genus();
    if (g.value() < 4) return false;
    const std::uint64_t middle = 0x3F0;  // tacks 5..10
    const std::uint64_t mirror = tack_mask(g) & ~middle;
    return s.bits() == middle || s.bits() == mirror;
}

TackSequence complement(const TackSequence& s) {
    if (!complement_applies(s))
        throw Error("complement: sequence " + s.to_string() + " is not [[0,0,0,0,1,1,1,1,1,1,0...]] or its mirror");
    return TackSequence(s.genus(), tack_mask(s.genus()) & ~s.bits());
}

namespace {

std::string rule_of(const TwistWord& w) {
    const auto& f = w.factors();
    if (f.size() != 1) return "word";
    switch (f[0].kind) {
    case SymbolKind::C: return "c123";
    case SymbolKind::X: return "shiftL1";
    case SymbolKind::XStar: return "shiftL2";
    case SymbolKind::T1: return "t1";
    default: return "word";
    }
}

const std::vector<TwistWord>& move_generators(Genus g) {
    static std::mutex mu;
    static std::map<int, std::vector<TwistWord>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& v = cache[g.value()];
    if (v.empty()) {
        auto add = [&](SymbolKind k, int i) {
            v.push_back(TwistWord::letter(k, i, 1));
            v.push_back(TwistWord::letter(k, i, -1));
        };
        for (int i = 1; i <= 3; ++i) add(SymbolKind::C, i);
        for (int i = 4; i <= 2 * g.value(); ++i) add(SymbolKind::X, i);
        for (int i = 4; i <= 2 * g.value(); ++i) add(SymbolKind::XStar, i);
        add(SymbolKind::T1, 1);
    }
    return v;
}

}  // namespace

std::vector<RewriteStep> licensed_moves(const TackSequence& s) {
    std::vector<RewriteStep> out;
    for (const auto& w : move_generators(s.genus())) {
        auto r = conjugate(w, s);
        if (r && !(*r == s)) out.push_back({rule_of(w), w, s, *r});
    }
    return out;
}

RewriteStep apply_move(const std::string& rule, int position, const TackSequence& s, Direction dir) {
    const Genus g = s.genus();
    const int n = 2 * g.value();
    const bool left = dir == Direction::Left;
    auto fail = [&](const std::string& why) -> RewriteStep { throw Error(rule + " at " + std::to_string(position) + ": " + why); };
    auto in = [&](int k) { return k >= 1 && k <= s.length() && s.has(k); };
    TwistWord conj;
    if (rule == "c123") {
        if (position < 1 || position > 3) return fail("position must be 1, 2 or 3");
        if (left && !(in(position + 1) && !in(position))) return fail("needs a 1-tack at j+1 and a 0-tack at j");
        if (!left && !(in(position) && !in(position + 1))) return fail("needs a 1-tack at j and a 0-tack at j+1");
        conj = TwistWord::letter(SymbolKind::C, position, left ? 1 : -1);
    } else if (rule == "shiftL1") {
        const int i = position;
        if (!in(i) || !in(i + 1)) return fail("needs adjacent 1-tacks at i and i+1");
        if (left) {
            if (in(i - 1) || i - 1 < 1) return fail("needs a 0-tack at i-1");
            if (i - 1 < 4) return fail("conjugator X" + std::to_string(i - 1) + " is not in G_g");
            conj = TwistWord::letter(SymbolKind::X, i - 1, 1);
        } else {
            if (i + 2 > s.length() || in(i + 2)) return fail("needs a 0-tack at i+2");
            if (i < 4 || i > n) return fail("conjugator X" + std::to_string(i) + " is not in G_g");
            conj = TwistWord::letter(SymbolKind::X, i, -1);
        }
    } else if (rule == "shiftL2") {
        const int i = position;
        if (!in(i)) return fail("needs a 1-tack at i");
        if (left) {
            if (i - 2 < 1 || in(i - 1) || in(i - 2)) return fail("needs two 0-tacks before i");
            if (i - 2 < 4) return fail("conjugator Xs" + std::to_string(i - 2) + " is not in G_g");
            conj = TwistWord::letter(SymbolKind::XStar, i - 2, 1);
        } else {
            if (i + 2 > s.length() || in(i + 1) || in(i + 2)) return fail("needs two 0-tacks after i");
            if (i < 4 || i > n) return fail("conjugator Xs" + std::to_string(i) + " is not in G_g");
            conj = TwistWord::letter(SymbolKind::XStar, i, -1);
        }
    } else if (rule == "t1") {
        if (g.value() < 3) return fail("T1 needs genus >= 3");
        const std::uint64_t head = s.bits() & 0xFu;
        if (head != 0 && head != 0xFu) return fail("B4 commutes only with prefix 0000 or 1111");
        conj = TwistWord::letter(SymbolKind::T1, 1, left ? 1 : -1);
    } else if (rule == "complement") {
        return {"complement", TwistWord(), s, complement(s)};
    } else {
        return fail("unknown rule");
    }
    auto r = conjugate(conj, s);
    if (!r) return fail("conjugation by " + conj.to_string() + " is not licensed");
    if (*r == s) return fail("conjugation by " + conj.to_string() + " does not move any tack");
    return {rule, conj, s, *r};
}

std::optional<ChainShortening> chain_shorten(const TackSequence& s) {
    const Genus g = s.genus();
    for (int k = 1; k <= 5; ++k)
        if (!s.has(k)) return std::nullopt;
    std::vector<int> tail;
    for (int k = 6; k <= s.length(); ++k)
        if (s.has(k)) tail.push_back(k);
    if (tail.empty() || s.popcount() % 2) return std::nullopt;
    auto with = [&](std::vector<int> head) {
        head.insert(head.end(), tail.begin(), tail.end());
        return TackSequence::from_indices(g, head);
    };
    return ChainShortening{s, with({4}), TackSequence::from_indices(g, {1, 2, 3, 5}), with({1, 2, 4}), with({3, 4, 5})};
}

BetaConversion beta_convert(const std::vector<int>& idx, Genus g) {
    if (g.value() < 3) throw Error("beta chain needs genus >= 3");
    BetaConversion r;
    const bool has_beta = !idx.empty() && idx.front() == 0;
    std::vector<int> rest(idx.begin() + (has_beta ? 1 : 0), idx.end());
    if (idx.size() % 2) throw Error("odd subchain maps have an even number of indices");
    for (int k : rest)
        if (k < 5) throw Error("beta chain indices are beta, 5, 6, ..., 2g+2");
    if (std::count(idx.begin(), idx.end(), 0) > (has_beta ? 1 : 0)) throw Error("beta must come first");
    if (!has_beta) {
        r.straight = TackSequence::from_indices(g, rest);
        return r;
    }
    r.requires_geometry = true;
    std::string t;
    for (int i = 2 * g.value() + 1; i >= 5; i -= 2) t += "C" + std::to_string(i) + "^e" + std::to_string(i) + " ";
    r.conjugator_template = t + "B4^-1";
    return r;
}

// ----------------------------------------------------------- certificates

TwistWord CertNode::flatten() const {
    TwistWord w;
    switch (op) {
    case Op::Leaf: w = word; break;
    case Op::Conj: {
        TwistWord inner;
        for (const auto& c : children) inner.append(c.flatten());
        w = inner.conjugated_by(word);
        break;
    }
    case Op::Prod:
        for (const auto& c : children) w.append(c.flatten());
        break;
    }
    return inverse ? w.inverse() : w;
}

std::size_t CertNode::size() const {
    std::size_t n = 1;
    for (const auto& c : children) n += c.size();
    return n;
}

namespace {

TwistWord path_conjugator(const std::vector<RewriteStep>& steps) {
    // W_k * ... * W_1 * [s] = [m]  gives  [s] = (W_1^-1 ... W_k^-1) * [m]
    TwistWord u;
    for (const auto& st : steps) u.append(st.conjugator.inverse());
    return u;
}

struct Verifier {
    Genus g;
    VerifyReport rep;

    void fail(const std::string& path, const std::string& why) {
        rep.ok = false;
        rep.failures.push_back((path.empty() ? "root" : path) + ": " + why);
    }

    void check_symbols(const TwistWord& w, const std::string& path) {
        for (const auto& s : w.factors())
            if (!is_gg_symbol(s, g)) {
                fail(path, "symbol " + s.name() + " is not a G_g generator");
                return;
            }
    }

    std::optional<TackSequence> child_tacks(const CertNode& n) {
        if (n.children.size() != 1) return std::nullopt;
        return n.children[0].tacks;
    }

    SymplecticMatrix visit(const CertNode& n, const std::string& path) {
        ++rep.nodes;
        SymplecticMatrix m = SymplecticMatrix::identity(g);
        try {
            switch (n.op) {
            case CertNode::Op::Leaf: m = leaf(n, path); break;
            case CertNode::Op::Conj: m = conj(n, path); break;
            case CertNode::Op::Prod: m = prod(n, path); break;
            }
        } catch (const Error& e) {
            fail(path, e.what());
        }
        if (n.inverse) m = m.symplectic_inverse();
        if (!m.is_identity()) fail(path, "image in Sp(2g,Z) is not the identity");
        return m;
    }

    SymplecticMatrix leaf(const CertNode& n, const std::string& path) {
        check_symbols(n.word, path);
        if (n.rule == "trivial") {
            if (!n.word.empty()) fail(path, "trivial leaf carries a word");
            if (n.tacks && n.tacks->popcount() != 2) fail(path, "trivial leaf needs two tacks");
        } else {
            bool known = false;
            for (Terminal t : {Terminal::A, Terminal::B, Terminal::C}) {
                if (n.rule != terminal_name(t)) continue;
                known = true;
                if (!n.tacks || !(*n.tacks == terminal_tacks(t, g))) fail(path, "tacks do not match " + n.rule);
                if (!(n.word == terminal_expansion(t, g))) fail(path, "expansion differs from the canonical " + n.rule);
            }
            if (!known) fail(path, "unknown leaf rule '" + n.rule + "'");
        }
        return evaluate(n.word, g);
    }

    SymplecticMatrix conj(const CertNode& n, const std::string& path) {
        check_symbols(n.word, path);
        if (n.children.size() != 1) {
            fail(path, "conjugation node needs one child");
            return SymplecticMatrix::identity(g);
        }
        auto inner_tacks = child_tacks(n);
        if (n.rule == "moves") {
            if (!n.tacks || !inner_tacks) fail(path, "move node without tacks");
            else if (n.steps.empty()) fail(path, "move node without steps");
            else {
                TackSequence cur = *n.tacks;
                for (std::size_t k = 0; k < n.steps.size(); ++k) {
                    const auto& st = n.steps[k];
                    const std::string sp = path + "/step" + std::to_string(k);
                    if (!(st.before == cur)) fail(sp, "step does not start where the previous ended");
                    auto r = conjugate(st.conjugator, st.before);
                    if (!r) fail(sp, "conjugation by " + st.conjugator.to_string() + " is not licensed on " + st.before.to_string());
                    else if (!(*r == st.after)) fail(sp, "replay gives " + r->to_string() + ", step claims " + st.after.to_string());
                    check_symbols(st.conjugator, sp);
                    cur = st.after;
                }
                if (!(cur == *inner_tacks)) fail(path, "steps end at " + cur.to_string() + ", child is " + inner_tacks->to_string());
                if (!(n.word == path_conjugator(n.steps))) fail(path, "conjugator does not match the recorded steps");
            }
        } else if (n.rule == "complement") {
            if (!n.tacks || !inner_tacks || !complement_applies(*n.tacks) || !(complement(*n.tacks) == *inner_tacks))
                fail(path, "complement does not apply");
            if (!n.word.empty()) fail(path, "complement carries a conjugator");
        } else if (n.rule != "chain-shorten-conjugator") {
            fail(path, "unknown conjugation rule '" + n.rule + "'");
        }
        const SymplecticMatrix w = evaluate(n.word, g);
        return w * visit(n.children[0], path + "/0") * w.symplectic_inverse();
    }

    SymplecticMatrix prod(const CertNode& n, const std::string& path) {
        if (n.rule == "chain-shorten") {
            auto cs = n.tacks ? chain_shorten(*n.tacks) : std::nullopt;
            const auto& c = n.children;
            auto inner = [&](std::size_t k) -> std::optional<TackSequence> {
                return c[k].children.size() == 1 ? c[k].children[0].tacks : std::nullopt;
            };
            if (!cs) fail(path, "chain shortening needs prefix 11111 and a longer tail");
            else if (c.size() != 4) fail(path, "chain shortening has four factors");
            else {
                if (!c[0].inverse || c[0].tacks != cs->inverse_factor) fail(path + "/0", "expected inverse of " + cs->inverse_factor.to_string());
                if (c[1].op != CertNode::Op::Conj || !(c[1].word == w_of("D4", g)) || inner(1) != cs->d4_factor)
                    fail(path + "/1", "expected D4 * " + cs->d4_factor.to_string());
                if (c[2].inverse || c[2].tacks != cs->plain_factor) fail(path + "/2", "expected " + cs->plain_factor.to_string());
                if (c[3].op != CertNode::Op::Conj || !(c[3].word == w_of("Y4", g)) || inner(3) != cs->y4_factor)
                    fail(path + "/3", "expected Y4 * " + cs->y4_factor.to_string());
            }
        } else if (!n.rule.empty()) {
            fail(path, "unknown product rule '" + n.rule + "'");
        }
        SymplecticMatrix m = SymplecticMatrix::identity(g);
        for (std::size_t k = 0; k < n.children.size(); ++k) m = m * visit(n.children[k], path + "/" + std::to_string(k));
        return m;
    }
};

}  // namespace

VerifyReport verify_certificate(const Certificate& c) {
    Verifier v{c.genus, {}};
    v.visit(c.root, "");
    return v.rep;
}

// --------------------------------------------------------------- rewriter

Rewriter::Rewriter(Genus g) : g_(g) {
    if (g.value() < 3) throw Error("subchain factorization needs genus >= 3");
    if (g.value() > 7) throw Error("subchain factorization is limited to genus <= 7");
    const std::uint64_t top = tack_mask(g);
    for (std::uint64_t b = 0; b <= top; ++b) {
        const int pc = std::popcount(b);
        if (pc < 4 || pc % 2 || orbit_of_.count(b)) continue;
        const int id = static_cast<int>(orbits_.size());
        orbits_.push_back({b});
        orbit_of_[b] = id;
        for (std::size_t i = 0; i < orbits_[id].size(); ++i)
            for (const auto& st : licensed_moves(TackSequence(g, orbits_[id][i])))
                if (orbit_of_.emplace(st.after.bits(), id).second) orbits_[id].push_back(st.after.bits());
        std::sort(orbits_[id].begin(), orbits_[id].end());
    }
    orbit_rank_.assign(orbits_.size(), -1);
    orbit_best_.assign(orbits_.size(), 0);
    best_kind_.assign(orbits_.size(), -1);
    for (std::size_t o = 0; o < orbits_.size(); ++o)
        for (auto b : orbits_[o])
            if (terminal_kind(TackSequence(g, b))) {
                orbit_rank_[o] = 0;
                orbit_best_[o] = b;
                best_kind_[o] = 0;
                break;
            }
    // a map is ranked r once one orbit member decomposes into maps ranked below r
    for (int r = 1;; ++r) {
        auto below = [&](const TackSequence& f) {
            if (f.popcount() == 2) return true;
            const int fr = orbit_rank_[static_cast<std::size_t>(orbit_of_.at(f.bits()))];
            return fr >= 0 && fr < r;
        };
        bool any = false;
        for (std::size_t o = 0; o < orbits_.size(); ++o) {
            if (orbit_rank_[o] >= 0) continue;
            for (auto b : orbits_[o]) {
                TackSequence m(g, b);
                if (auto cs = chain_shorten(m);
                    cs && below(cs->inverse_factor) && below(cs->d4_factor) && below(cs->plain_factor) && below(cs->y4_factor)) {
                    orbit_rank_[o] = r;
                    orbit_best_[o] = b;
                    best_kind_[o] = 1;
                } else if (complement_applies(m) && below(complement(m))) {
                    orbit_rank_[o] = r;
                    orbit_best_[o] = b;
                    best_kind_[o] = 2;
                }
                if (orbit_rank_[o] >= 0) break;
            }
            any = any || orbit_rank_[o] == r;
        }
        if (!any) break;
    }
}

const Rewriter& Rewriter::shared(Genus g) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Rewriter>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[g.value()];
    if (!slot) slot = std::make_unique<Rewriter>(g);
    return *slot;
}

std::optional<int> Rewriter::rank(const TackSequence& s) const {
    if (s.popcount() == 2) return 0;
    auto it = orbit_of_.find(s.bits());
    if (it == orbit_of_.end()) return std::nullopt;
    const int r = orbit_rank_[static_cast<std::size_t>(it->second)];
    if (r < 0) return std::nullopt;
    return r;
}

std::size_t Rewriter::unranked_orbits() const {
    return static_cast<std::size_t>(std::count(orbit_rank_.begin(), orbit_rank_.end(), -1));
}

int Rewriter::max_rank() const { return orbit_rank_.empty() ? 0 : *std::max_element(orbit_rank_.begin(), orbit_rank_.end()); }

std::optional<std::vector<RewriteStep>> Rewriter::path(const TackSequence& s, const TackSequence& t) const {
    std::map<std::uint64_t, RewriteStep> parent;
    std::deque<TackSequence> q{s};
    std::set<std::uint64_t> seen{s.bits()};
    while (!q.empty() && !seen.count(t.bits())) {
        TackSequence cur = q.front();
        q.pop_front();
        for (auto& st : licensed_moves(cur))
            if (seen.insert(st.after.bits()).second) {
                parent.emplace(st.after.bits(), st);
                q.push_back(st.after);
            }
    }
    if (!seen.count(t.bits())) return std::nullopt;
    std::vector<RewriteStep> steps;
    for (std::uint64_t b = t.bits(); b != s.bits();) {
        const RewriteStep& st = parent.at(b);
        steps.push_back(st);
        b = st.before.bits();
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

CertNode Rewriter::build(const TackSequence& s) const {
    require_same_genus(g_, s.genus());
    if (s.popcount() == 2) return CertNode{CertNode::Op::Leaf, {}, s, "trivial", {}, false, {}};
    if (s.popcount() < 2 || s.popcount() % 2) throw Error("odd subchain maps have an even number (>= 2) of tacks: " + s.to_string());
    const auto o = static_cast<std::size_t>(orbit_of_.at(s.bits()));
    if (orbit_rank_[o] < 0) throw Error("no decomposition reachable from " + s.to_string());
    const TackSequence m(g_, orbit_best_[o]);
    CertNode inner = decompose(m);
    if (m == s) return inner;
    auto steps = path(s, m);
    if (!steps) throw std::logic_error("orbit member unreachable");
    CertNode n{CertNode::Op::Conj, path_conjugator(*steps), s, "moves", std::move(*steps), false, {}};
    n.children.push_back(std::move(inner));
    return n;
}

CertNode Rewriter::decompose(const TackSequence& m) const {
    const auto o = static_cast<std::size_t>(orbit_of_.at(m.bits()));
    const int r = orbit_rank_[o];
    auto child = [&](const TackSequence& f) {
        auto fr = rank(f);
        if (!fr || (f.popcount() > 2 && *fr >= r)) throw std::logic_error("rank does not decrease at " + m.to_string());
        return build(f);
    };
    switch (best_kind_[o]) {
    case 0: {
        const Terminal t = *terminal_kind(m);
        return CertNode{CertNode::Op::Leaf, terminal_expansion(t, g_), m, terminal_name(t), {}, false, {}};
    }
    case 1: {
        const auto cs = *chain_shorten(m);
        CertNode p{CertNode::Op::Prod, {}, m, "chain-shorten", {}, false, {}};
        CertNode f0 = child(cs.inverse_factor);
        f0.inverse = true;
        CertNode f1{CertNode::Op::Conj, w_of("D4", g_), std::nullopt, "chain-shorten-conjugator", {}, false, {child(cs.d4_factor)}};
        CertNode f3{CertNode::Op::Conj, w_of("Y4", g_), std::nullopt, "chain-shorten-conjugator", {}, false, {child(cs.y4_factor)}};
        p.children = {std::move(f0), std::move(f1), child(cs.plain_factor), std::move(f3)};
        return p;
    }
    case 2: {
        const TackSequence c = complement(m);
        CertNode n{CertNode::Op::Conj, {}, m, "complement", {{"complement", TwistWord(), m, c}}, false, {}};
        n.children.push_back(child(c));
        return n;
    }
    }
    throw std::logic_error("unranked orbit");
}

Certificate Rewriter::factorize(const TackSequence& s) const { return Certificate{g_, build(s)}; }

Certificate factorize(const TackSequence& s) { return Rewriter::shared(s.genus()).factorize(s); }

// ------------------------------------------------------------------- json

namespace {

const char* op_name(CertNode::Op op) {
    switch (op) {
    case CertNode::Op::Conj: return "conj";
    case CertNode::Op::Prod: return "prod";
    case CertNode::Op::Leaf: return "leaf";
    }
    return "?";
}

CertNode node_from_json(const nlohmann::json& j, Genus g) {
    CertNode n;
    const std::string op = j.at("op").get<std::string>();
    if (op == "conj") n.op = CertNode::Op::Conj;
    else if (op == "prod") n.op = CertNode::Op::Prod;
    else if (op == "leaf") n.op = CertNode::Op::Leaf;
    else throw Error("unknown certificate op '" + op + "'");
    if (j.contains("word")) n.word = parse_word(j["word"].get<std::string>(), g);
    if (j.contains("tacks")) n.tacks = TackSequence::from_string(g, j["tacks"].get<std::string>());
    if (j.contains("rule")) n.rule = j["rule"].get<std::string>();
    if (j.contains("inverse")) n.inverse = j["inverse"].get<bool>();
    if (j.contains("steps"))
        for (const auto& s : j["steps"])
            n.steps.push_back({s.at("rule").get<std::string>(), parse_word(s.at("conjugator").get<std::string>(), g),
                               TackSequence::from_string(g, s.at("before").get<std::string>()),
                               TackSequence::from_string(g, s.at("after").get<std::string>())});
    if (j.contains("children"))
        for (const auto& c : j["children"]) n.children.push_back(node_from_json(c, g));
    return n;
}

}  // namespace

nlohmann::json to_json(const CertNode& n) {
    nlohmann::json j;
    j["op"] = op_name(n.op);
    if (n.op != CertNode::Op::Prod || !n.word.empty()) j["word"] = n.word.to_string();
    if (n.tacks) j["tacks"] = n.tacks->to_string();
    if (!n.rule.empty()) j["rule"] = n.rule;
    if (n.inverse) j["inverse"] = true;
    if (!n.steps.empty()) {
        j["steps"] = nlohmann::json::array();
        for (const auto& s : n.steps)
            j["steps"].push_back({{"rule", s.rule}, {"conjugator", s.conjugator.to_string()},
                                  {"before", s.before.to_string()}, {"after", s.after.to_string()}});
    }
    if (!n.children.empty()) {
        j["children"] = nlohmann::json::array();
        for (const auto& c : n.children) j["children"].push_back(to_json(c));
    }
    return j;
}

nlohmann::json to_json(const Certificate& c) { return {{"genus", c.genus.value()}, {"root", to_json(c.root)}}; }

Certificate certificate_from_json(const nlohmann::json& j) {
    const Genus g(j.at("genus").get<int>());
    return Certificate{g, node_from_json(j.at("root"), g)};
}

}  // namespace spinmcg::torelli
