#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gpw/graph.hpp"

// Named graphs with the vertex labels used in the classical drawings.
// Graphs that are drawn through their opposite (P1(7), P2(7), Phi_i,
// Lambda_i, the 12-vertex comb example) are built as the opposite of the
// drawn edge list.
namespace gpw::catalog {

/// Labels a, b, c, ... (v0, v1, ... beyond 26 vertices).
std::vector<std::string> letters(std::size_t n);

SimpleGraph cycle(std::size_t m);     // C_m, m >= 3
SimpleGraph path(std::size_t n);      // P_n, n >= 1
SimpleGraph complete(std::size_t n);  // K_n
SimpleGraph edgeless(std::size_t n);

/// Labels must be disjoint.
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);
/// Disjoint union plus every edge between the two sides.
SimpleGraph join(const SimpleGraph& a, const SimpleGraph& b);

SimpleGraph p1_7();
SimpleGraph p2_7();
SimpleGraph phi(int i);     // 1..5, eight vertices each
SimpleGraph lambda(int i);  // 0..11
/// Opposite of the path a..f with a pendant vertex a'..f' at each vertex.
SimpleGraph figure_eight();

/// Registry lookup: C<m>, P<n>, K<n>, E<n>, P1_7, P2_7, Phi<i>, Lambda<i>,
/// Fig8, with an optional "opp" suffix. Throws std::invalid_argument.
SimpleGraph by_name(std::string_view name);

/// Example names accepted by by_name, for help texts.
std::vector<std::string> known_names();

}  // namespace gpw::catalog
