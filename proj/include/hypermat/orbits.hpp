#pragma once

// Static catalog of the ten GL-orbits of 2 x 2 x n hypermatrices: dimensions,
// closure order, subspace-variety and determinantal identifications,
// component groups, projective duality, the Fourier permutation of the simple
// equivariant D-modules, and their characteristic-cycle supports.

#include "hypermat/weights.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hypermat {

// Simple equivariant D-modules D_0..D_9 plus the nontrivial local system
// D6' on the orbit of border rank 2.
enum class SimpleLabel { D0, D1, D2, D3, D4, D5, D6, D6p, D7, D8, D9 };

// Labels appearing in composition ledgers: the simples, the aliases E (point
// support) and S (full support), and the composite determinantal quotients
// Q1, Q2, Q3 of the localization at the 4 x 4 determinant.
enum class ModLabel { D0, D1, D2, D3, D4, D5, D6, D6p, D7, D8, D9, E, S, Q1, Q2, Q3 };

std::string to_string(SimpleLabel s);
std::string to_string(ModLabel s);
SimpleLabel parse_simple(const std::string& s);
ModLabel simple_to_mod(SimpleLabel s);

// Simples defined for the given n (D9 exists only for n >= 4).
std::vector<SimpleLabel> simples_for(int n);
bool simple_valid(SimpleLabel s, int n);

// E and S resolve per n; Q labels expand to their composition factors in
// sub-to-quotient order.
std::vector<SimpleLabel> expand_label(ModLabel m, int n);

struct OrbitEntry {
  int index = 0;                               // 0..9
  std::string label;                           // "O0".."O9"
  long long dim = 0;
  std::string representative;                  // symbolic tensor
  std::vector<std::string> closure_covers;     // Hasse edges downward
  std::optional<std::array<int, 3>> subspace_id;
  std::optional<std::string> determinantal_id; // flattening tag
  bool z2_component_group = false;
  std::optional<std::string> dual_orbit;       // projective duality partner
  std::vector<std::string> conormal_cycle;     // char cycle support of the IC simple
  bool hypersurface = false;
  bool dense = false;
  bool rank_conditions_cut_union_only = false; // O3, O4 caveat
};

// Complete catalog for n >= 3 (O9 omitted for n = 3).
std::vector<OrbitEntry> orbit_catalog(int n);

long long orbit_dim(int index, int n);
int orbit_of_simple(SimpleLabel s);
SimpleLabel ic_simple_of_orbit(int index);

// Fourier involution on the simple labels.
SimpleLabel fourier(SimpleLabel s, int n);

// Characteristic-cycle support of a simple, as orbit labels.
std::vector<std::string> conormal_cycle(SimpleLabel s, int n);

// Projective-duality exchange on orbit indices (pairs with the Fourier map).
int dual_orbit_index(int index, int n);

// Closure containment derived from the Hasse diagram.
bool closure_contains(int outer, int inner, int n);

// Roots of the Bernstein-Sato polynomial of the n = 3 semi-invariant,
// (root numerator, root denominator, multiplicity).
struct BFunctionRoot {
  int num;
  int den;
  int mult;
};
std::vector<BFunctionRoot> semi_invariant_b_roots_n3();

// Hasse diagram in DOT format.
std::string hasse_dot(int n);

} // namespace hypermat
