#pragma once

// Closure of finite subgroups of Sp(2g, F2) by breadth-first search.

#include <cstdint>
#include <vector>

#include "spinmcg/homology.hpp"
#include "spinmcg/quadform.hpp"

namespace spinmcg {

// Exact order of <gens>. Throws CapExceeded once more than cap elements
// have been seen; the exception carries the partial count.
std::uint64_t group_order_bfs(const std::vector<SymplecticMatrixF2>& gens, std::uint64_t cap);

// Orbit of a form under the right action of <gens>, in discovery order.
std::vector<QuadraticForm> form_orbit(const std::vector<SymplecticMatrixF2>& gens, const QuadraticForm& q);

// Orbit of a class under <gens>, in discovery order.
std::vector<F2Class> class_orbit(const std::vector<SymplecticMatrixF2>& gens, F2Class z);

}  // namespace spinmcg
