#include "spinmcg/group_bfs.hpp"

#include <bit>
#include <deque>
#include <set>
#include <unordered_set>

#include "spinmcg/errors.hpp"

namespace spinmcg {

namespace {

// columns packed dim bits apiece; fits when dim*dim <= 64 (g <= 4)
std::uint64_t pack(const std::vector<std::uint64_t>& cols, int dim) {
    std::uint64_t key = 0;
    for (std::size_t k = 0; k < cols.size(); ++k) key |= cols[k] << (k * static_cast<std::size_t>(dim));
    return key;
}

// Columns of a*b without building the matrix object.
void multiply(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b, std::vector<std::uint64_t>& out) {
    for (std::size_t k = 0; k < b.size(); ++k) {
        std::uint64_t v = b[k], r = 0;
        while (v) {
            const int bit = std::countr_zero(v);
            r ^= a[static_cast<std::size_t>(bit)];
            v &= v - 1;
        }
        out[k] = r;
    }
}

template <class Seen, class Key>
std::uint64_t closure(const std::vector<SymplecticMatrixF2>& gens, std::uint64_t cap, Seen& seen, Key key) {
    const Genus g = gens.front().genus();
    std::deque<std::vector<std::uint64_t>> frontier;
    auto id = SymplecticMatrixF2::identity(g).columns();
    seen.insert(key(id));
    frontier.push_back(id);
    std::vector<std::uint64_t> next(id.size());
    std::uint64_t count = 1;
    while (!frontier.empty()) {
        auto cur = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& gen : gens) {
            multiply(cur, gen.columns(), next);
            if (seen.insert(key(next)).second) {
                if (++count > cap) throw CapExceeded("group closure exceeded cap " + std::to_string(cap), count);
                frontier.push_back(next);
            }
        }
    }
    return count;
}

}  // namespace

std::uint64_t group_order_bfs(const std::vector<SymplecticMatrixF2>& gens, std::uint64_t cap) {
    if (gens.empty()) return 1;
    const Genus g = gens.front().genus();
    for (const auto& m : gens) require_same_genus(g, m.genus());
    const int dim = g.dim();
    if (dim * dim <= 64) {
        std::unordered_set<std::uint64_t> seen;
        return closure(gens, cap, seen, [dim](const std::vector<std::uint64_t>& c) { return pack(c, dim); });
    }
    std::set<std::vector<std::uint64_t>> seen;
    return closure(gens, cap, seen, [](const std::vector<std::uint64_t>& c) { return c; });
}

std::vector<QuadraticForm> form_orbit(const std::vector<SymplecticMatrixF2>& gens, const QuadraticForm& q) {
    std::vector<QuadraticForm> out{q};
    std::unordered_set<std::uint64_t> seen{q.basis_values()};
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& m : gens) {
            QuadraticForm r = act_form(out[i], m);
            if (seen.insert(r.basis_values()).second) out.push_back(r);
        }
    }
    return out;
}

std::vector<F2Class> class_orbit(const std::vector<SymplecticMatrixF2>& gens, F2Class z) {
    std::vector<F2Class> out{z};
    std::unordered_set<std::uint64_t> seen{z.bits()};
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& m : gens) {
            F2Class r = m.apply(out[i]);
            if (seen.insert(r.bits()).second) out.push_back(r);
        }
    }
    return out;
}

}  // namespace spinmcg
