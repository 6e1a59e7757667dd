#include "spinmcg/certify.hpp"

#include <set>

#include "spinmcg/errors.hpp"

namespace spinmcg {

namespace {

std::uint64_t xb(int i) { return std::uint64_t{1} << (2 * (i - 1)); }
std::uint64_t yb(int i) { return std::uint64_t{1} << (2 * (i - 1) + 1); }

// block i as 2 bits: bit 0 = x, bit 1 = y
int block(std::uint64_t z, int i) { return static_cast<int>((z >> (2 * (i - 1))) & 3u); }

constexpr int B00 = 0, B10 = 1, B01 = 2, B11 = 3;

}  // namespace

bool Phi2Report::ok() const { return !first_mismatch(); }

std::optional<std::size_t> Phi2Report::first_mismatch() const {
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!entries[i].ok) return i;
    return std::nullopt;
}

Phi2Report verify_phi2_images(Genus g) {
    const int n = g.value();
    if (n < 2) throw Error("image dictionary needs genus >= 2");
    std::vector<std::pair<std::string, std::uint64_t>> dict = {
        {"C1", xb(1)}, {"C2", yb(1)}, {"C3", xb(1) | xb(2)}};
    for (int i = 2; i <= n - 1; ++i) {
        dict.emplace_back("X" + std::to_string(2 * i), xb(i) | yb(i) | xb(i + 1));
        dict.emplace_back("X" + std::to_string(2 * i + 1), xb(i) | xb(i + 1) | yb(i + 1));
        dict.emplace_back("Y" + std::to_string(2 * i), xb(i) | yb(i));
    }
    dict.emplace_back("X" + std::to_string(2 * n), xb(n) | yb(n));
    Phi2Report r;
    for (const auto& [name, cls] : dict) {
        F2Class z(g, cls);
        bool ok = evaluate_mod2(parse_word(name, g), g) == SymplecticMatrixF2::transvection(z);
        r.entries.push_back({name, z, ok});
    }
    return r;
}

std::vector<F2Class> lambda_base(Genus g) {
    const int n = g.value();
    std::vector<F2Class> out = {F2Class(g, xb(1)), F2Class(g, yb(1))};
    if (n >= 2) out.emplace_back(g, xb(1) | xb(2));
    for (int i = 2; i <= n; ++i) out.emplace_back(g, xb(i) | yb(i));
    for (int i = 2; i <= n - 1; ++i) out.emplace_back(g, xb(i) | yb(i) | xb(i + 1));
    for (int i = 2; i <= n - 1; ++i) out.emplace_back(g, xb(i) | xb(i + 1) | yb(i + 1));
    return out;
}

bool in_lambda_base(F2Class z) {
    for (const auto& b : lambda_base(z.genus()))
        if (b == z) return true;
    return false;
}

LambdaTrace lambda_reduce(F2Class z0) {
    const Genus g = z0.genus();
    const int n = g.value();
    const QuadraticForm q = QuadraticForm::q1(g);
    if (q(z0) != 1) throw Error("lambda_reduce: class " + z0.to_symbolic() + " has q1-value 0");

    LambdaTrace t{z0, {}};
    std::uint64_t z = z0.bits();
    auto step = [&](std::uint64_t w) {
        F2Class before(g, z), by(g, w);
        F2Class after = box(q, before, by);
        t.steps.push_back({before, by, after});
        z = after.bits();
    };
    auto done = [&] { return in_lambda_base(F2Class(g, z)); };
    auto guard = [&] {
        if (t.steps.size() > static_cast<std::size_t>(16 * n + 16))
            throw Error("lambda_reduce did not terminate on " + z0.to_symbolic());
    };

    // move the rightmost (1,1) block to the front
    while (!done()) {
        guard();
        int j = 0;
        for (int i = n; i >= 1; --i)
            if (block(z, i) == B11) {
                j = i;
                break;
            }
        if (j >= 3) {
            switch (block(z, j - 1)) {
            case B11: step(xb(j - 1) | xb(j) | yb(j)); break;
            case B00: step(xb(j - 1) | yb(j - 1) | xb(j)); break;
            case B01: step(xb(j - 1) | xb(j) | yb(j)); break;
            case B10:
                step(xb(j - 1) | yb(j - 1));
                if (!done()) step(xb(j - 1) | xb(j) | yb(j));
                break;
            }
        } else if (j == 2) {
            step(xb(1) | xb(2));
            if (!done()) step(yb(1));
        } else if (j == 0) {
            // no (1,1) block: q1 = 1 forces block 1 to be (1,0) or (0,1)
            step(block(z, 1) == B10 ? yb(1) : xb(1));
        } else {
            break;
        }
    }
    if (done()) return t;

    // first block is (1,1), no other (1,1) blocks
    bool rest_zero = true;
    for (int i = 2; i <= n; ++i) rest_zero = rest_zero && block(z, i) == B00;
    if (rest_zero) {
        step(yb(1));
        return t;
    }
    // fill the zero blocks from their nonzero neighbours
    for (bool changed = true; changed && !done();) {
        changed = false;
        for (int i = 2; i <= n && !changed; ++i) {
            if (block(z, i) != B00) continue;
            if (i + 1 <= n && block(z, i + 1) != B00) {
                step(xb(i) | xb(i + 1) | yb(i + 1));
                changed = true;
            } else if (i - 1 >= 2 && block(z, i - 1) != B00) {
                step(xb(i - 1) | yb(i - 1) | xb(i));
                changed = true;
            }
        }
        guard();
    }
    for (int i = 2; i <= n && !done(); ++i)
        if (block(z, i) == B01) step(xb(i) | yb(i));
    for (int k = n; k >= 3 && !done(); --k) {
        step(xb(k - 1) | yb(k - 1) | xb(k));
        if (!done()) step(xb(k - 1) | yb(k - 1));
    }
    if (!done()) step(xb(1) | xb(2));
    if (!done()) throw Error("lambda_reduce ended off the base at " + F2Class(g, z).to_symbolic());
    return t;
}

bool replay_trace(const LambdaTrace& t) {
    const QuadraticForm q = QuadraticForm::q1(t.start.genus());
    F2Class cur = t.start;
    for (const auto& s : t.steps) {
        if (!(s.before == cur) || !in_lambda_base(s.by)) return false;
        cur = box(q, cur, s.by);
        if (!(cur == s.after)) return false;
    }
    return in_lambda_base(cur);
}

namespace {

bool conjugation_identity(F2Class z1, F2Class z2, const QuadraticForm& q) {
    auto t1 = SymplecticMatrixF2::transvection(z1);
    auto t2 = SymplecticMatrixF2::transvection(z2);
    return t2 * t1 * t2 == SymplecticMatrixF2::transvection(box(q, z1, z2));
}

}  // namespace

GenerationCertificate certify_o_q1_generation(Genus g, int cap) {
    if (g.value() < 2) throw Error("generation certificate needs genus >= 2");
    const QuadraticForm q = QuadraticForm::q1(g);
    const auto lambda = enumerate_lambda(q, cap);
    GenerationCertificate c{g, lambda_base(g), verify_phi2_images(g), {}, lambda.size()};
    c.traces_ok = true;
    for (const auto& z : lambda) {
        c.traces.push_back(lambda_reduce(z));
        c.max_trace_length = std::max(c.max_trace_length, c.traces.back().steps.size());
        c.traces_ok = c.traces_ok && replay_trace(c.traces.back());
    }
    c.conjugation_ok = true;
    if (g.value() <= 3) {
        c.conjugation_exhaustive = true;
        for (const auto& z1 : lambda)
            for (const auto& z2 : lambda) {
                ++c.conjugation_checks;
                c.conjugation_ok = c.conjugation_ok && conjugation_identity(z1, z2, q);
            }
    } else {
        std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
        for (const auto& t : c.traces)
            for (const auto& s : t.steps)
                if (seen.emplace(s.before.bits(), s.by.bits()).second) {
                    ++c.conjugation_checks;
                    c.conjugation_ok = c.conjugation_ok && conjugation_identity(s.before, s.by, q);
                }
    }
    return c;
}

std::optional<TwistWord> square_transvection_realization(F2Class z) {
    const Genus g = z.genus();
    const int n = g.value();
    const std::uint64_t v = z.bits();
    auto w = [&](const std::string& s) { return std::optional<TwistWord>(parse_word(s, g)); };
    std::vector<int> nonzero;
    for (int i = 1; i <= n; ++i)
        if (block(v, i) != B00) nonzero.push_back(i);
    if (nonzero.size() == 1) {
        const int j = nonzero[0];
        const std::string J = std::to_string(2 * j);
        switch (block(v, j)) {
        case B01: return w("D" + J);
        case B10:
            if (j == 1) return w("D1");
            if (j == n) return w("D" + std::to_string(2 * n + 1));
            return w("DB" + J);
        case B11:
            if (j == 1) return w("(C1 C2 C1^-1)^2");
            if (j == n) return w("X" + J + "^2");
            return w("Ys" + J + "^2");
        }
    }
    if (nonzero.size() == 2 && nonzero[1] == nonzero[0] + 1) {
        const int i = nonzero[0];
        const int a = block(v, i), b = block(v, i + 1);
        if (a == B10 && b == B10) return w("D" + std::to_string(2 * i + 1));
        if (a == B11 && b == B10 && i >= 2) return w("X" + std::to_string(2 * i) + "^2");
        // X(2i+1) twists about xi + x(i+1) - y(i+1); the starred form has the + sign
        if (a == B10 && b == B11 && i >= 2) return w("Xs" + std::to_string(2 * i + 1) + "^2");
    }
    return std::nullopt;
}

SquareTransvectionReport verify_square_transvections(Genus g) {
    if (g.value() > 6) throw Error("square transvection sweep is limited to genus <= 6");
    SquareTransvectionReport r;
    const std::uint64_t top = full_mask(g);
    for (std::uint64_t v = 1; v <= top; ++v) {
        HomologyClass a(g);
        for (int k = 0; k < g.dim(); ++k)
            if ((v >> k) & 1u) a[k] = 1;
        ++r.classes;
        const SymplecticMatrix sq = square_transvection_matrix(a);
        if (in_level2_kernel(sq)) ++r.in_kernel;
        F2Class z(g, v);
        if (auto word = square_transvection_realization(z)) {
            ++r.realized;
            if (evaluate(*word, g) == sq)
                ++r.realized_match;
            else
                r.mismatches.push_back(z.to_symbolic() + " vs " + word->to_string());
        }
    }
    return r;
}

std::vector<BlockMove> verify_block_moves(Genus g) {
    const int n = g.value();
    std::vector<BlockMove> out;
    auto add = [&](char rule, int i, const std::vector<std::string>& labels, int from_a, int from_b, int to_a, int to_b) {
        // the first label acts first, so the word lists labels right to left
        TwistWord w;
        for (auto it = labels.rbegin(); it != labels.rend(); ++it) w.append(parse_word(*it, g));
        auto cls = [&](int a, int b) {
            return F2Class(g, (static_cast<std::uint64_t>(a) << (2 * (i - 1))) |
                                  (static_cast<std::uint64_t>(b) << (2 * i)));
        };
        F2Class from = cls(from_a, from_b);
        out.push_back({rule, i, w, from, cls(to_a, to_b), evaluate_mod2(w, g).apply(from)});
    };
    for (int i = 2; i <= n - 1; ++i) {
        const std::string I0 = std::to_string(2 * i), I1 = std::to_string(2 * i + 1), I2 = std::to_string(2 * i + 2);
        add('a', i, {"Xs" + I1 + "^-1", "Xs" + I0 + "^-1"}, B00, B01, B01, B00);
        add('b', i, {"Xs" + I0 + "^-1", "D" + I0 + "^-1"}, B00, B11, B11, B01);
        if (i > n - 2) continue;
        add('c', i, {"X" + I0, "DB" + I2 + "^-1", "Xs" + I0 + "^-1 Xs" + I1 + "^-1"}, B11, B11, B01, B00);
        add('d', i, {"Ys" + I2 + "^-1", "X" + I0 + "^-1", "Ys" + I0}, B01, B01, B01, B00);
        add('e', i, {"DB" + I2 + "^-1", "X" + I1 + "^-1", "DB" + I0 + "^-1"}, B01, B11, B11, B00);
    }
    return out;
}

}  // namespace spinmcg
