#include "evo/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "evo/graph.hpp"

namespace evo {

const char* family_name(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
    case Family::IV: return "IV";
    case Family::V: return "V";
    case Family::VI: return "VI";
    case Family::VII: return "VII";
    case Family::VIII: return "VIII";
    case Family::IX: return "IX";
    case Family::X: return "X";
    case Family::XI: return "XI";
    case Family::XII: return "XII";
    case Family::XIII: return "XIII";
  }
  return "?";
}

const std::array<Family, 13>& all_families() {
  static const std::array<Family, 13> fams = {
      Family::I,   Family::II, Family::III, Family::IV,  Family::V,
      Family::VI,  Family::VII, Family::VIII, Family::IX, Family::X,
      Family::XI,  Family::XII, Family::XIII};
  return fams;
}

namespace {

constexpr TCell Z{TCell::Zero, 0};
constexpr TCell O{TCell::One, 0};
constexpr TCell P(char c) { return TCell{TCell::Param, c}; }

FamilyInfo make_family(Family id, int z1, int z2, const TCell m1[2][2],
                       const TCell m2[2][2], std::string params,
                       std::string conditions, bool simple, int z, int z_d,
                       Poly p_c, Poly p_m) {
  FamilyInfo f;
  f.id = id;
  f.z1 = z1;
  f.z2 = z2;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      f.m1[i][j] = m1[i][j];
      f.m2[i][j] = m2[i][j];
    }
  f.params = std::move(params);
  f.conditions = std::move(conditions);
  f.simple = simple;
  f.z = z;
  f.z_d = z_d;
  f.p_c = std::move(p_c);
  f.p_m = std::move(p_m);
  return f;
}

std::array<FamilyInfo, 13> build_family_table() {
  const Poly X = Poly::x();
  const Poly one = Poly::constant(Rat(1));
  auto shift = [&](long r) { return X - Poly::constant(Rat(r)); };  // x - r

  // The three 2x2 perfect shapes and their degenerations, as cell grids.
  const TCell full_a[2][2] = {{O, P('a')}, {P('b'), O}};    // [[1,a],[b,1]]
  const TCell full_c[2][2] = {{O, P('c')}, {P('d'), O}};    // [[1,c],[d,1]]
  const TCell row01b[2][2] = {{Z, O}, {P('b'), O}};         // [[0,1],[b,1]]
  const TCell row01d[2][2] = {{Z, O}, {P('d'), O}};         // [[0,1],[d,1]]
  const TCell low_b[2][2] = {{O, Z}, {P('b'), O}};          // [[1,0],[b,1]]
  const TCell low_d[2][2] = {{O, Z}, {P('d'), O}};          // [[1,0],[d,1]]
  const TCell anti_a[2][2] = {{Z, P('a')}, {O, Z}};         // [[0,a],[1,0]]
  const TCell ident[2][2] = {{O, Z}, {Z, O}};               // [[1,0],[0,1]]
  const TCell cycle_d[2][2] = {{Z, O}, {P('d'), Z}};        // [[0,1],[d,0]]

  const Poly q2 = X * X - Poly{2} * X - Poly{4};   // x^2-2x-4
  const Poly q4 = X * X - Poly{3} * X + one;       // x^2-3x+1
  const Poly golden = X * X - X - one;             // x^2-x-1
  const Poly golden2 = X * X + X - one;            // x^2+x-1

  // Simplicity flags hold the value computed by the strong-connectivity
  // criterion on each family's support (the III and V products are block
  // reducible, with proper ideals spanned by basis vectors).
  return {
      make_family(Family::I, 0, 0, full_a, full_c, "abcd",
                  "ab != 1, cd != 1, abcd != 0", true, 0, 0,
                  X.pow(3) * shift(4), X * shift(4)),
      make_family(Family::II, 1, 0, row01b, full_c, "bcd",
                  "bcd != 0, cd != 1", true, 4, 2, X.pow(2) * q2, X * q2),
      make_family(Family::III, 1, 0, low_b, full_c, "bcd",
                  "cd != 1, bcd != 0", false, 4, 0,
                  X.pow(2) * shift(2).pow(2), X * shift(2).pow(2)),
      make_family(Family::IV, 1, 1, row01b, row01d, "bd", "bd != 0", true, 7,
                  3, shift(-1).pow(2) * q4, shift(-1) * q4),
      make_family(Family::V, 1, 1, row01b, low_d, "bd", "bd != 0", false, 7,
                  2, golden.pow(2), golden.pow(2)),
      make_family(Family::VI, 1, 1, low_b, low_d, "bd", "bd != 0", false, 7,
                  0, shift(1).pow(4), shift(1).pow(3)),
      make_family(Family::VII, 2, 0, anti_a, full_c, "acd",
                  "acd != 0, cd != 1", true, 8, 4,
                  X.pow(2) * shift(-2) * shift(2), X * shift(-2) * shift(2)),
      make_family(Family::VIII, 2, 0, ident, full_c, "cd",
                  "cd != 0, cd != 1", false, 8, 0,
                  X.pow(2) * shift(2).pow(2), X * shift(2)),
      make_family(Family::IX, 2, 1, ident, row01d, "d", "d != 0", false, 10,
                  2, golden.pow(2), golden),
      make_family(Family::X, 2, 1, ident, low_d, "d", "d != 0", false, 10, 0,
                  shift(1).pow(4), shift(1).pow(2)),
      make_family(Family::XI, 2, 1, anti_a, row01d, "ad", "ad != 0", true, 10,
                  4, golden * golden2, golden * golden2),
      make_family(Family::XII, 2, 1, anti_a, low_d, "ad", "ad != 0", false,
                  10, 4, shift(1).pow(2) * shift(-1).pow(2),
                  shift(1).pow(2) * shift(-1).pow(2)),
      make_family(Family::XIII, 2, 2, ident, cycle_d, "d", "d != 0", false,
                  12, 4, shift(1).pow(2) * shift(-1).pow(2),
                  shift(1) * shift(-1)),
  };
}

Rat param_value(const std::map<char, Rat>& params, char name, Family id) {
  const auto it = params.find(name);
  if (it == params.end())
    throw std::invalid_argument(std::string("family ") + family_name(id) +
                                " requires parameter '" + name + "'");
  return it->second;
}

Mat instantiate_cells(const TCell cells[2][2],
                      const std::map<char, Rat>& params, Family id) {
  Mat m(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      switch (cells[i][j].kind) {
        case TCell::Zero: m.at(i, j) = 0; break;
        case TCell::One: m.at(i, j) = 1; break;
        case TCell::Param:
          m.at(i, j) = param_value(params, cells[i][j].param, id);
          break;
      }
    }
  return m;
}

bool conditions_hold(Family id, const std::map<char, Rat>& p) {
  auto v = [&](char c) { return param_value(p, c, id); };
  switch (id) {
    case Family::I:
      return v('a') * v('b') != 1 && v('c') * v('d') != 1 &&
             !is_zero(v('a') * v('b') * v('c') * v('d'));
    case Family::II:
    case Family::III:
      return !is_zero(v('b') * v('c') * v('d')) && v('c') * v('d') != 1;
    case Family::IV:
    case Family::V:
    case Family::VI:
      return !is_zero(v('b') * v('d'));
    case Family::VII:
      return !is_zero(v('a') * v('c') * v('d')) && v('c') * v('d') != 1;
    case Family::VIII:
      return !is_zero(v('c') * v('d')) && v('c') * v('d') != 1;
    case Family::IX:
    case Family::X:
    case Family::XIII:
      return !is_zero(v('d'));
    case Family::XI:
    case Family::XII:
      return !is_zero(v('a') * v('d'));
  }
  return false;
}

const FamilyInfo& info_of(Family id) {
  for (const FamilyInfo& f : family_table())
    if (f.id == id) return f;
  throw std::logic_error("unknown family");
}

}  // namespace

const std::array<FamilyInfo, 13>& family_table() {
  static const std::array<FamilyInfo, 13> table = build_family_table();
  return table;
}

Instantiated instantiate_family(Family id, const std::map<char, Rat>& params) {
  // mpq_class does not canonicalize two-argument construction, so normalize
  // caller-supplied values before the equality-based condition checks.
  std::map<char, Rat> ps = params;
  for (auto& [name, value] : ps) value.canonicalize();
  const FamilyInfo& f = info_of(id);
  if (!conditions_hold(id, ps))
    throw std::invalid_argument(std::string("family ") + family_name(id) +
                                " condition violated: " + f.conditions);
  Instantiated out;
  out.m1 = instantiate_cells(f.m1, ps, id);
  out.m2 = instantiate_cells(f.m2, ps, id);
  out.product = kron(out.m1, out.m2);
  return out;
}

InvariantRecord invariants(const EvoAlg& e) {
  if (!is_perfect(e))
    throw std::invalid_argument("invariants require a perfect algebra");
  const ZeroProfile p = zero_profile(e.matrix());
  const Mat s = to_matrix(support(e.matrix()));
  return InvariantRecord{p.z, p.z_d, is_simple(e), charpoly(s), minpoly(s)};
}

std::vector<Family> candidate_families(const InvariantRecord& inv) {
  std::vector<Family> out;
  for (const FamilyInfo& f : family_table()) {
    const bool triple =
        f.z == inv.z && f.z_d == inv.z_d && f.simple == inv.simple;
    const bool polys = f.p_c == inv.p_c && f.p_m == inv.p_m;
    if (triple && polys) out.push_back(f.id);
  }
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NotPerfect: return "not-perfect";
    case Verdict::ScreenedIndecomposable: return "screened-indecomposable";
    case Verdict::OrbitIndecomposable: return "orbit-indecomposable";
    case Verdict::Decomposed: return "decomposed";
  }
  return "?";
}

Report classify(const EvoAlg& e) {
  if (e.dim() != 4)
    throw std::invalid_argument("classification is defined for dimension 4");
  Report r;
  r.perfect = is_perfect(e);
  if (!r.perfect) {
    r.verdict = Verdict::NotPerfect;
    return r;
  }
  r.inv = invariants(e);
  r.screen_result = screen(e.matrix());
  r.candidates = candidate_families(*r.inv);
  if (!r.screen_result->passes()) {
    r.verdict = Verdict::ScreenedIndecomposable;
    return r;
  }
  r.witness = orbit_search(e, 2, 2);
  if (!r.witness) {
    r.verdict = Verdict::OrbitIndecomposable;
    return r;
  }
  r.verdict = Verdict::Decomposed;
  // The two invariant systems are each complete for the thirteen families,
  // so a decomposable input narrows to a single candidate.
  if (r.candidates.size() == 1) r.confirmed = r.candidates.front();
  return r;
}

}  // namespace evo
