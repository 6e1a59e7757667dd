#pragma once

// Rewriting odd subchain maps of the chain c1, ..., c(2g+1) into products
// of conjugates of G_g elements.
//
// A subchain map is stored as its tack sequence: bit k-1 set when k is one
// of the chain indices, 1 <= k <= 2g+2. Conjugating by a twist moves tacks
// according to a small set of licensed rules; everything else is refused.
// A conjugator word w acts by w*[s] = w [s] w^-1, its rightmost letter first.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinmcg/twist_words.hpp"

namespace spinmcg::torelli {

class TackSequence {
public:
    TackSequence(Genus g, std::uint64_t bits);
    static TackSequence from_string(Genus g, const std::string& bits);  // "11110000"
    static TackSequence from_indices(Genus g, const std::vector<int>& indices);

    Genus genus() const noexcept { return g_; }
    int length() const noexcept { return 2 * g_.value() + 2; }
    std::uint64_t bits() const noexcept { return bits_; }
    bool has(int k) const { return (bits_ >> (k - 1)) & 1u; }
    int popcount() const;
    std::vector<int> indices() const;

    std::string to_string() const;          // "11110000"
    std::string to_bracket_string() const;  // "[1,2,3,4]"
    friend bool operator==(const TackSequence& a, const TackSequence& b) { return a.bits_ == b.bits_ && a.g_ == b.g_; }
    friend bool operator<(const TackSequence& a, const TackSequence& b) { return a.bits_ < b.bits_; }

private:
    Genus g_;
    std::uint64_t bits_;
};

// h: 1-tacks among the first three, b: length of the block of 1-tacks
// starting at tack 4, t: remaining 1-tacks after that block.
struct TackStats {
    int h = 0, b = 0, t = 0;
};
TackStats tack_stats(const TackSequence& s);

enum class OracleOutcome { Commutes, Moved, Unlicensed };

struct OracleResult {
    OracleOutcome outcome;
    TackSequence result;
};

// Conjugation by C_j^sign, sign = +1 or -1, 1 <= j <= 2g+1.
OracleResult conjugation_oracle(int j, int sign, const TackSequence& s);

// Folds a conjugator through the oracle. B4 letters are accepted only while
// the first four tacks are all 0 or all 1. Empty on any refused step.
std::optional<TackSequence> conjugate(const TwistWord& w, const TackSequence& s);

struct RewriteStep {
    std::string rule;  // c123 | shiftL1 | shiftL2 | t1 | complement
    TwistWord conjugator;
    TackSequence before;
    TackSequence after;
};

enum class Direction { Left, Right };

// c123: position j in 1..3; shiftL1: position of the first tack of a pair of
// adjacent 1-tacks; shiftL2: position of a single 1-tack, moved two steps;
// t1: position ignored, Left slides the tail toward tack 5 by T1, Right by
// T1^-1; complement: position and direction ignored.
RewriteStep apply_move(const std::string& rule, int position, const TackSequence& s, Direction dir = Direction::Left);

// True when s is [[0,0,0,0,1,1,1,1,1,1,0...]] or its mirror
// [[1,1,1,1,0,0,0,0,0,0,1...]] and g >= 4.
bool complement_applies(const TackSequence& s);
TackSequence complement(const TackSequence& s);

// Every licensed single-generator move available from s.
std::vector<RewriteStep> licensed_moves(const TackSequence& s);

struct ChainShortening {
    TackSequence input;
    // [4, n...]^-1 . D4*[1,2,3,5] . [1,2,4,n...] . Y4*[3,4,5,n...]
    TackSequence inverse_factor, d4_factor, plain_factor, y4_factor;
};
std::optional<ChainShortening> chain_shorten(const TackSequence& s);

enum class Terminal { A, B, C };
std::optional<Terminal> terminal_kind(const TackSequence& s);
TackSequence terminal_tacks(Terminal t, Genus g);
const char* terminal_name(Terminal t);

struct ExpansionFactor {
    TwistWord conjugator;
    TwistWord square;
    TwistWord word() const { return square.conjugated_by(conjugator); }
};
// Products of conjugated squares of G_g elements equal to the terminal map.
std::vector<ExpansionFactor> terminal_factors(Terminal t, Genus g);
// The same factors before the braid rewriting, conjugated squares of
// C and B twists.
std::vector<ExpansionFactor> terminal_raw_factors(Terminal t, Genus g);
TwistWord terminal_expansion(Terminal t, Genus g);
// B4 B4'^-1 conjugated into the terminal's position.
TwistWord terminal_direct(Terminal t, Genus g);

struct BetaConversion {
    bool requires_geometry = false;
    std::optional<TackSequence> straight;
    std::string conjugator_template;
};
// indices of the beta chain (beta, 5, 6, ..., 2g+2); 0 stands for beta
BetaConversion beta_convert(const std::vector<int>& indices, Genus g);

// ------------------------------------------------------------ certificates

struct CertNode {
    enum class Op { Conj, Prod, Leaf } op = Op::Leaf;
    TwistWord word;
    std::optional<TackSequence> tacks;
    std::string rule;
    std::vector<RewriteStep> steps;
    bool inverse = false;
    std::vector<CertNode> children;

    // word evaluated by this node; inverse applied
    TwistWord flatten() const;
    std::size_t size() const;
};

struct Certificate {
    Genus genus;
    CertNode root;
};

struct VerifyReport {
    bool ok = true;
    std::size_t nodes = 0;
    std::vector<std::string> failures;  // "path: reason"
};

VerifyReport verify_certificate(const Certificate& c);

// Orbit structure of all even tack sequences of length >= 4 for a genus,
// computed once and cached.
class Rewriter {
public:
    explicit Rewriter(Genus g);
    static const Rewriter& shared(Genus g);

    Genus genus() const noexcept { return g_; }
    // empty when the orbit of s reaches no decomposition
    std::optional<int> rank(const TackSequence& s) const;
    std::size_t orbit_count() const noexcept { return orbit_rank_.size(); }
    std::size_t unranked_orbits() const;
    int max_rank() const;

    Certificate factorize(const TackSequence& s) const;
    // Path of licensed moves from s to t inside one orbit.
    std::optional<std::vector<RewriteStep>> path(const TackSequence& s, const TackSequence& t) const;

private:
    CertNode build(const TackSequence& s) const;
    CertNode decompose(const TackSequence& m) const;

    Genus g_;
    std::map<std::uint64_t, int> orbit_of_;
    std::vector<std::vector<std::uint64_t>> orbits_;
    std::vector<int> orbit_rank_;           // -1 when unranked
    std::vector<std::uint64_t> orbit_best_;  // member carrying the decomposition
    std::vector<int> best_kind_;             // 0 terminal, 1 chain-shorten, 2 complement
};

Certificate factorize(const TackSequence& s);

nlohmann::json to_json(const CertNode& n);
nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace spinmcg::torelli
