#include "spinmcg/errors.hpp"
#include "spinmcg/torelli.hpp"

namespace spinmcg::torelli {

namespace {

using Pairs = std::vector<std::pair<const char*, const char*>>;

// B4 B4'^-1 as a product of conjugated squares of C twists
const Pairs kRawA = {
    {"B4 C4 C3 C2", "C1^2"}, {"B4 C4 C3", "C2^2"}, {"B4 C4", "C3^2"}, {"B4", "C4^2"},
    {"C4^-1 C3^-1 C2^-1", "C1^-2"}, {"C4^-1 C3^-1", "C2^-2"}, {"C4^-1", "C3^-2"}, {"1", "C4^-2"},
};

const Pairs kA = {
    {"C1^-1 C2^-1 C3^-1", "Ys4^2"}, {"C2^-1 C3^-1", "Ys4^2"}, {"C3^-1", "Ys4^2"}, {"1", "Ys4^2"},
    {"C1 C2 C3", "D4^-1"}, {"C2 C3", "D4^-1"}, {"C3", "D4^-1"}, {"1", "D4^-1"},
};

const Pairs kB = {
    {"Ys4 C3 C2", "D1"}, {"Ys4 C3", "D2"}, {"Ys4", "D3"}, {"Ys4", "D4"},
    {"D4^-1 C3^-1 C2^-1", "D1^-1"}, {"D4^-1 C3^-1", "D2^-1"}, {"D4^-1", "D3^-1"}, {"1", "D4^-1"},
};

// the squares of the last four factors are inverse squares
const Pairs kC = {
    {"C1^-1 Ys4 C2^-1 C3 Xs5", "D4"},
    {"Ys4 C2^-1 C3 Xs5", "D4"},
    {"Ys4 C3 D4^-1", "Xs5^2"},
    {"C3 Ys4 Xs5 D4^-1", "D3"},
    {"C1 C3 C2 D4^-1 Xs5^-1 D4^-1", "D3^-1"},
    {"C3 C2 D4^-1 Xs5^-1 D4^-1", "D3^-1"},
    {"C3 Xs5^2", "D4^-1"},
    {"C3 X4", "D6^-1"},
};

const char* prefix(Terminal t) {
    switch (t) {
    case Terminal::A: return "1";
    case Terminal::B: return "C4^-1";
    case Terminal::C: return "C4^-1 C3^-1 C6^-1 C5^-1 C4^-1";
    }
    return "1";
}

std::vector<ExpansionFactor> build(const Pairs& p, Genus g, const TwistWord& pre = {}) {
    std::vector<ExpansionFactor> out;
    for (const auto& [conj, sq] : p) out.push_back({pre * parse_word(conj, g), parse_word(sq, g)});
    return out;
}

void require(Genus g) {
    if (g.value() < 3) throw Error("terminal subchain maps need genus >= 3");
}

}  // namespace

const char* terminal_name(Terminal t) {
    switch (t) {
    case Terminal::A: return "terminal-A";
    case Terminal::B: return "terminal-B";
    case Terminal::C: return "terminal-C";
    }
    return "?";
}

TackSequence terminal_tacks(Terminal t, Genus g) {
    switch (t) {
    case Terminal::A: return TackSequence::from_indices(g, {1, 2, 3, 4});
    case Terminal::B: return TackSequence::from_indices(g, {1, 2, 3, 5});
    case Terminal::C: return TackSequence::from_indices(g, {1, 2, 5, 7});
    }
    throw Error("unknown terminal");
}

std::optional<Terminal> terminal_kind(const TackSequence& s) {
    for (Terminal t : {Terminal::A, Terminal::B, Terminal::C})
        if (s == terminal_tacks(t, s.genus())) return t;
    return std::nullopt;
}

std::vector<ExpansionFactor> terminal_factors(Terminal t, Genus g) {
    require(g);
    switch (t) {
    case Terminal::A: return build(kA, g);
    case Terminal::B: return build(kB, g);
    case Terminal::C: return build(kC, g);
    }
    return {};
}

std::vector<ExpansionFactor> terminal_raw_factors(Terminal t, Genus g) {
    require(g);
    return build(kRawA, g, parse_word(prefix(t), g));
}

TwistWord terminal_expansion(Terminal t, Genus g) {
    TwistWord w;
    for (const auto& f : terminal_factors(t, g)) w.append(f.word());
    return w;
}

TwistWord terminal_direct(Terminal t, Genus g) {
    require(g);
    return parse_word("B4 B4'^-1", g).conjugated_by(parse_word(prefix(t), g));
}

}  // namespace spinmcg::torelli
