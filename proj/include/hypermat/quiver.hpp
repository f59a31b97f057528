#pragma once

// The quivers with relations presenting the category of equivariant
// D-modules for n = 3, n = 4, and n >= 5: construction, path spaces modulo
// the relation ideal, and symmetry verification.

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hypermat {

struct Arrow {
  std::string name;
  std::string src, dst;
};

// Formal integer combination of composable paths (a path is a sequence of
// arrow indices, left to right).  The built-in quivers only ever need single
// unit-coefficient paths, but sums are representable.
struct Relation {
  struct Term {
    long long coeff = 1;
    std::vector<int> path;
  };
  std::vector<Term> terms;
  bool monomial() const { return terms.size() == 1 && terms[0].coeff == 1; }
};

struct Quiver {
  int n = 0;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;

  int arrow_index(const std::string& name) const;
  std::optional<int> arrow_between(const std::string& src, const std::string& dst) const;
  std::string path_str(const std::vector<int>& path) const;
};

Quiver build_quiver(int n);

struct PathSpace {
  std::string source, target;
  std::vector<std::vector<int>> basis;  // arrow-index sequences; empty = trivial path
  int dim() const { return static_cast<int>(basis.size()); }
};

// Basis of paths from i to j modulo the relation ideal, enumerated with a
// depth cap.  Throws if a nonzero path of full cap length survives anywhere
// (which would leave finiteness uncertified).
PathSpace path_space(const Quiver& q, const std::string& i, const std::string& j, int depth_cap = 8);

// Longest surviving path length over all vertex pairs (for the finiteness
// assertion), capped.
int longest_nonzero_path(const Quiver& q, int depth_cap = 8);

struct SymReport {
  bool fourier_automorphism = false;
  bool fourier_involution_on_arrows = false;
  bool reversal_preserves_relations = false;
  std::string detail;
};

// (a) the Fourier vertex permutation extends to a quiver automorphism
// preserving the relation ideal; (b) arrow reversal maps the relation set to
// itself.
SymReport check_symmetries(const Quiver& q);

// Connected-component census: list of (sorted vertex sets, kind) where kind
// is "isolated", "doubled-A2" or "doubled-A3".
std::vector<std::pair<std::vector<std::string>, std::string>> component_census(const Quiver& q);

// Indecomposable representations of a doubled-A2 component with both
// 2-cycles zero: the two simples and the two nontrivial extensions.
std::vector<std::string> doubled_a2_indecomposables(const Quiver& q, const std::string& vertex);

std::string quiver_dot(const Quiver& q);

} // namespace hypermat
