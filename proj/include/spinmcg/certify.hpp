#pragma once

// Homology-level checks behind the generation argument for the odd spin
// mapping class group: images of the generators mod 2, reduction of the
// q1 = 1 classes under the box operation, square transvections and the
// block moves used to normalize them.

#include <optional>
#include <string>
#include <vector>

#include "spinmcg/quadform.hpp"
#include "spinmcg/twist_words.hpp"

namespace spinmcg {

struct Phi2Entry {
    std::string word;
    F2Class expected;
    bool ok = false;
};

struct Phi2Report {
    std::vector<Phi2Entry> entries;
    bool ok() const;
    // index of the first failing entry
    std::optional<std::size_t> first_mismatch() const;
};

// C1, C2, C3 and the X / Y twists against their mod-2 transvection classes.
Phi2Report verify_phi2_images(Genus g);

// x1, y1, x1+x2, xi+yi, xi+yi+x(i+1), xi+x(i+1)+y(i+1)
std::vector<F2Class> lambda_base(Genus g);
bool in_lambda_base(F2Class z);

struct BoxStep {
    F2Class before;
    F2Class by;
    F2Class after;
};

struct LambdaTrace {
    F2Class start;
    std::vector<BoxStep> steps;
    F2Class end() const { return steps.empty() ? start : steps.back().after; }
};

// Reduces z (q1(z) = 1) to a base class by box steps with base classes.
LambdaTrace lambda_reduce(F2Class z);
// Replays every step with box() and checks the end lies in the base.
bool replay_trace(const LambdaTrace& t);

struct GenerationCertificate {
    Genus genus;
    std::vector<F2Class> base;
    Phi2Report phi2;
    std::vector<LambdaTrace> traces;
    std::uint64_t lambda_count = 0;
    std::size_t max_trace_length = 0;
    // pairs (z1, z2) for which T_{z2} T_{z1} T_{z2} = T_{z1 box z2} was checked
    std::uint64_t conjugation_checks = 0;
    bool conjugation_exhaustive = false;
    bool traces_ok = false;
    bool conjugation_ok = false;
    bool ok() const { return phi2.ok() && traces_ok && conjugation_ok; }
};

// Exhaustive conjugation check for g <= 3, used-pairs check above that.
GenerationCertificate certify_o_q1_generation(Genus g, int cap = kDefaultEnumerationCap);

// Word whose action on homology is the square transvection about the
// 0/1 class z, for the patterns with a catalog realization.
std::optional<TwistWord> square_transvection_realization(F2Class z);

struct SquareTransvectionReport {
    std::uint64_t classes = 0;
    std::uint64_t in_kernel = 0;
    std::uint64_t realized = 0;
    std::uint64_t realized_match = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return in_kernel == classes && realized_match == realized && mismatches.empty(); }
};

SquareTransvectionReport verify_square_transvections(Genus g);

struct BlockMove {
    char rule;
    int block;  // i: the move acts on blocks i and i+1
    TwistWord word;
    F2Class from;
    F2Class to;
    F2Class image;
    bool ok() const { return image == to; }
};

// Rules (a)-(e) for every admissible i; (a), (b) need 2 <= i <= g-1 and
// (c)-(e) need 2 <= i <= g-2.
std::vector<BlockMove> verify_block_moves(Genus g);

}  // namespace spinmcg
