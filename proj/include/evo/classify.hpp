#pragma once

// The thirteen families of 4-dimensional perfect tensorially decomposable
// evolution algebras: static family data, instantiation from factor
// templates, invariant extraction, candidate narrowing, and the end-to-end
// classification pipeline.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evo/decompose.hpp"
#include "evo/evolution.hpp"
#include "evo/matrix.hpp"
#include "evo/polynomial.hpp"

namespace evo {

enum class Family {
  I = 1, II, III, IV, V, VI, VII, VIII, IX, X, XI, XII, XIII
};

const char* family_name(Family f);
const std::array<Family, 13>& all_families();

// 2x2 factor template cell: fixed 0, fixed 1, or a named parameter.
struct TCell {
  enum Kind { Zero, One, Param } kind;
  char param;  // meaningful when kind == Param
};

struct FamilyInfo {
  Family id;
  int z1, z2;              // zero counts of the two factor templates
  TCell m1[2][2], m2[2][2];
  std::string params;      // parameter names in canonical order, e.g. "abcd"
  std::string conditions;  // human-readable constraint text
  // Invariants of every valid instantiation (computed values; simplicity is
  // determined by the strong-connectivity criterion on the product support).
  bool simple;
  int z, z_d;
  Poly p_c, p_m;
};

const std::array<FamilyInfo, 13>& family_table();

struct Instantiated {
  Mat m1, m2;   // the two 2x2 factors
  Mat product;  // kron(m1, m2)
};

// Builds the factors from the family's templates and the named parameters;
// throws std::invalid_argument when a parameter is missing or a family
// condition (e.g. "ab != 1") is violated.
Instantiated instantiate_family(Family f, const std::map<char, Rat>& params);

struct InvariantRecord {
  int z, z_d;
  bool simple;
  Poly p_c, p_m;  // characteristic/minimal polynomial of the 0/1 support
};

// Invariants of a perfect evolution algebra (throws otherwise).
InvariantRecord invariants(const EvoAlg& e);

// Families matching on the triple (z, z_d, simple) intersected with those
// matching on the pair (p_c, p_m).
std::vector<Family> candidate_families(const InvariantRecord& inv);

enum class Verdict {
  NotPerfect,
  ScreenedIndecomposable,
  OrbitIndecomposable,  // indecomposable under the permutation-orbit test
  Decomposed,
};

const char* verdict_name(Verdict v);

struct Report {
  bool perfect = false;
  std::optional<InvariantRecord> inv;
  std::optional<Screen> screen_result;
  std::vector<Family> candidates;
  std::optional<Witness> witness;
  std::optional<Family> confirmed;
  Verdict verdict = Verdict::NotPerfect;
};

// Full pipeline for 4-dimensional algebras: perfectness, invariants,
// screening, candidate families, permutation-orbit search.
Report classify(const EvoAlg& e);

}  // namespace evo
