#pragma once

// Grothendieck-group ledgers for local cohomology with support in the orbit
// closures, long-exact-sequence consistency checks, Lyubeznik numbers, and
// intersection cohomology.  The tables are stored data with provenance
// strings; the consistency operations re-derive whatever admits an
// independent route and compare.

#include "hypermat/orbits.hpp"
#include "hypermat/schur.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hypermat {

// One cohomological degree of a ledger: composition factors in
// sub-to-quotient order when `chain` (a recorded non-split series), an
// honest direct sum otherwise.  `h0` stores the resolved point-support
// cohomology of the extension when the connecting maps matter.
struct LedgerEntry {
  std::vector<ModLabel> factors;
  bool chain = false;
  std::optional<std::map<int, int>> h0;
};

struct Ledger {
  std::string support;
  int n = 0;
  std::map<int, LedgerEntry> rows;
  std::string provenance;
  bool derived = false;

  std::vector<SimpleLabel> expanded_factors(int degree) const;
};

// Supports: "O0".."O9" are orbit closures ("O0" is the origin), and
// "O1-orbit", "O6-orbit" the locally closed orbits where tabulated.
Ledger local_cohomology(const std::string& support, int n);
std::vector<std::string> tabulated_supports(int n);

// Grothendieck class with signs by cohomological degree.
using ChiClass = std::map<SimpleLabel, long long>;
ChiClass chi(const Ledger& ledger);

struct LesReport {
  bool ok = false;
  ChiClass residual;  // chi(Z) - chi(Y) - chi(Z') when nonzero
};

// Checks chi(Z) = chi(Z \ Z') + chi(Z') for closed Z' inside Z.  Pass
// support labels for Z' and Z; Z' may be "none".
LesReport les_consistency(const std::string& z_prime, const std::string& z, int n);

// Coefficients of the Poincare polynomial of the product of two projective
// lines with projective (n-1)-space, index = power of q.
std::vector<long long> poincare_segre(int n);

// Point-support cohomology table of a simple (or recorded composite):
// degree -> multiplicity of the point module.  Throws when untabulated.
std::map<int, int> origin_table(ModLabel label, int n);
bool origin_table_available(ModLabel label, int n);

// Intersection cohomology dimensions of an orbit closure, index = degree.
std::vector<int> ih_dims(const std::string& orbit, int n);

struct LyubeznikTable {
  std::string orbit;
  int n = 0;
  std::map<std::pair<int, int>, int> values;  // (p, i) -> lambda_{p,i}
  std::string provenance;
};
LyubeznikTable lyubeznik(const std::string& orbit, int n);

// Consistency of the iterated-support spectral sequence: the grid assembled
// from the ledger and the origin tables must admit a cancellation pattern
// whose abutment is a single point module in total degree 4n.
struct SSReport {
  std::string orbit;
  int n = 0;
  bool certified = false;         // some complete cancellation pattern exists
  long long patterns = 0;         // number of distinct cell-level patterns
  bool named_pattern_found = false;  // the recorded cancellation occurs in a pattern
  std::string notes;
};
SSReport ss_consistency(const std::string& orbit, int n);

// Orbits with complete origin data at this n (the sweep domain for the
// spectral-sequence and Lyubeznik checks).
std::vector<std::string> ss_supported_orbits(int n);

} // namespace hypermat
