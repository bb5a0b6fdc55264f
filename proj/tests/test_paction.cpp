#include "doctest.h"
#include "fixtures.hpp"

#include <algorithm>
#include <set>

using namespace whopf;
using namespace fixtures;

namespace {

// λ on ℚ from a groupoid table: λ(Σ_e δ_e) = 1 and λ(g)λ(h) = λ(g)λ(gh) when gh
// is defined, λ(g)λ(h) = 0 otherwise (Δ(δ_g) = δ_g⊗δ_g).
bool table_ground_check(const FiniteGroupoid& g, const std::vector<int>& lam) {
  int unit = 0;
  for (int e : g.identities()) unit += lam[static_cast<std::size_t>(e)];
  if (unit != 1) return false;
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b) {
      const int lhs = lam[static_cast<std::size_t>(a)] * lam[static_cast<std::size_t>(b)];
      const int rhs = g.composable(a, b) ? lam[static_cast<std::size_t>(a)] * lam[static_cast<std::size_t>(g.comp[a][b])] : 0;
      if (lhs != rhs) return false;
    }
  return true;
}

std::set<std::vector<int>> table_oracle(const FiniteGroupoid& g) {
  std::set<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1U << g.size()); ++mask) {
    std::vector<int> lam(static_cast<std::size_t>(g.size()));
    for (int a = 0; a < g.size(); ++a) lam[static_cast<std::size_t>(a)] = (mask >> a) & 1U;
    if (table_ground_check(g, lam)) out.insert(lam);
  }
  return out;
}

std::vector<int> as_ints(const Vector& v) {
  std::vector<int> out;
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i) == Rational(1) ? 1 : 0);
  return out;
}

}  // namespace

TEST_CASE("partial action axioms") {
  const FiniteGroupoid z = z2();
  const WeakHopfAlgebra H = groupoid_algebra(z);
  const PartialActionMap trivial = ground_field_action(H, H.coalg.counit);
  CHECK(check_partial_action(trivial).ok());

  const GroupoidActionCase lemma = pair2_on_q2(false);
  const PartialActionMap p = groupoid_to_algebra_action(lemma.g, lemma.pga);
  CHECK(check_partial_action(p).ok());
  CHECK(check_symmetric(p));

  PartialActionMap bad = p;
  bad.act(0, tensor_index(lemma.g.index_of("(2,2)"), 1, 2)) = 1;  // δ_{e2}·u2 gains a u1 component
  const VerificationReport r = check_partial_action(bad);
  CHECK(r.failed("unit"));

  PartialActionMap wrong = p;
  wrong.act = Matrix::Zero(2, 3);
  CHECK_THROWS_AS(check_partial_action(wrong), DimensionMismatch);
}

TEST_CASE("every corpus action satisfies the axioms and the derived identities") {
  for (const ActionCase& c : actions()) {
    INFO(c.name);
    const VerificationReport axioms = check_partial_action(c.p);
    INFO(axioms.summary());
    REQUIRE(axioms.ok());
    CHECK(check_symmetric(c.p) == c.symmetric);
    CHECK(is_global(c.p) == c.global);
    const VerificationReport derived = derived_identity_suite(c.p);
    INFO(derived.summary());
    CHECK(derived.ok());
    CHECK(derived.passed("inverse_antipode_expansion"));
    CHECK(derived.passed("HR_unit_via_eps_L"));
    const RightHLModule m = right_HL_module(c.p);
    INFO(m.report.summary());
    CHECK(m.report.ok());
  }
}

TEST_CASE("ground field action of the pair groupoid with V = {e1}") {
  const FiniteGroupoid g = pair_groupoid(2);
  const WeakHopfAlgebra H = groupoid_algebra(g);
  const int e1 = g.index_of("(1,1)"), e2 = g.index_of("(2,2)"), to2 = g.index_of("(2,1)");
  const Vector lambda = indicator(g, {"(1,1)"});
  const PartialActionMap p = ground_field_action(H, lambda);
  CHECK(check_partial_action(p).ok());
  // δ_g·1 = 0 while ε_L(δ_g)·1 = δ_{e2}·1, which is λ(δ_{e2}) = 0 as well; for g = (1,2)
  // ε_L(δ_g) = δ_{e1} and δ_{e1}·1 = 1 ≠ 0 = δ_g·1.
  const int to1 = g.index_of("(1,2)");
  CHECK(lambda(to1) == Rational(0));
  CHECK(lambda(g.r[to1]) == Rational(1));
  CHECK_FALSE(is_global(p));
  CHECK(lambda(to2) == Rational(0));

  // (δ_e·a)b = δ_e·ab with a = b = 1 is λ(δ_e) = λ(δ_e).
  const VerificationReport d = derived_identity_suite(p);
  CHECK(d.passed("HL_right_linear"));

  // 1◁δ_{e1} = 1 and 1◁δ_{e2} = 0.
  const RightHLModule m = right_HL_module(p);
  REQUIRE(m.HL.dim() == 2);
  for (Index i = 0; i < 2; ++i) {
    const Vector z = m.HL.vector(i);
    const Rational expected = z == basis_vector(4, e1) ? Rational(1) : Rational(0);
    CHECK((z == basis_vector(4, e1) || z == basis_vector(4, e2)));
    CHECK(m.maps[static_cast<std::size_t>(i)](0, 0) == expected);
  }

  const GroupoidCorrespondence back = algebra_to_groupoid_action(g, p);
  CHECK(back.steps.ok());
  CHECK(back.action.domains[static_cast<std::size_t>(e1)].dim() == 1);
  CHECK(back.action.domains[static_cast<std::size_t>(e2)].dim() == 0);
  CHECK(back.action.domains[static_cast<std::size_t>(to2)].dim() == 0);
  CHECK(back.action.domains[static_cast<std::size_t>(to1)].dim() == 0);
}

TEST_CASE("component indicator is global") {
  const FiniteGroupoid g = z2_z2();
  const WeakHopfAlgebra H = groupoid_algebra(g);
  const Vector lambda = indicator(g, {"G1:e", "G1:a"});
  CHECK(ground_field_check(H, lambda));
  CHECK(ground_field_is_global(H, lambda));
  CHECK(is_global(ground_field_action(H, lambda)));
}

TEST_CASE("globality criterion on the global groupoid action") {
  const GroupoidActionCase c = pair2_on_q2(true);
  CHECK(is_global(groupoid_to_algebra_action(c.g, c.pga)));
  const ActionFlags f = action_flags(groupoid_to_algebra_action(c.g, c.pga));
  CHECK(f.is_partial);
  CHECK(f.is_symmetric);
  CHECK(f.is_global);
  const GroupoidActionCase q3 = pair2_on_q3();
  const ActionFlags f3 = action_flags(groupoid_to_algebra_action(q3.g, q3.pga));
  CHECK(f3.is_symmetric);
  CHECK_FALSE(f3.is_global);
}

TEST_CASE("identity-only groupoid acts by multiplication with the units") {
  // Two objects, no non-identity arrows.
  FiniteGroupoid g = disjoint_union_of_groups({cyclic_group(1), cyclic_group(1)});
  PartialGroupoidAction pga;
  pga.A = diagonal_algebra(2);
  for (Index e = 0; e < 2; ++e) {
    pga.domains.push_back(Subspace::span(2, {basis_vector(2, e)}));
    pga.units.push_back(basis_vector(2, e));
    pga.isos.push_back(transfer(2, {{e, e}}));
  }
  const PartialActionMap p = groupoid_to_algebra_action(g, pga);
  for (Index e = 0; e < 2; ++e)
    for (Index a = 0; a < 2; ++a)
      CHECK(p.act_basis(e, basis_vector(2, a)) == pga.A.product(basis_vector(2, a), pga.units[static_cast<std::size_t>(e)]));
  CHECK(is_global(p));
}

TEST_CASE("groupoid correspondence round trips") {
  for (const GroupoidActionCase& c : groupoid_actions()) {
    INFO(c.name);
    const VerificationReport check = check_groupoid_paction(c.g, c.pga);
    INFO(check.summary());
    REQUIRE(check.ok());
    const PartialActionMap p = groupoid_to_algebra_action(c.g, c.pga);
    CHECK(check_partial_action(p).ok());
    CHECK(check_symmetric(p));
    const GroupoidCorrespondence back = algebra_to_groupoid_action(c.g, p);
    CHECK(back.steps.ok());
    for (int a = 0; a < c.g.size(); ++a) {
      const auto i = static_cast<std::size_t>(a);
      CHECK(back.action.domains[i] == c.pga.domains[i]);
      CHECK(back.action.units[i] == c.pga.units[i]);
      CHECK(back.action.isos[i] == c.pga.isos[i]);
    }
    CHECK(groupoid_to_algebra_action(c.g, back.action).act == p.act);
  }
  for (const ActionCase& c : actions()) {
    if (c.p.A.dim() != 1) continue;
    // Ground-field actions: recover the groupoid action and come back.
    for (const auto& [name, g] : groupoids()) {
      if (g.size() != c.p.dim_H() || groupoid_algebra(g).alg.mult != c.p.H.alg.mult) continue;
      CHECK(groupoid_to_algebra_action(g, algebra_to_groupoid_action(g, c.p).action).act == c.p.act);
    }
  }
}

TEST_CASE("unit conjugation identity for symmetric groupoid algebra actions") {
  for (const GroupoidActionCase& c : groupoid_actions()) {
    const PartialActionMap p = groupoid_to_algebra_action(c.g, c.pga);
    const Vector one = p.A.one();
    for (int g = 0; g < c.g.size(); ++g)
      for (Index a = 0; a < p.dim_A(); ++a) {
        const Vector x = basis_vector(p.dim_A(), a);
        const Vector unit = p.act_basis(g, one);
        CHECK(p.A.product(unit, x) == p.act_basis(g, p.act_basis(c.g.inv[g], x)));
        CHECK(p.A.product(x, unit) == p.A.product(unit, x));
      }
  }
}

TEST_CASE("invalid groupoid actions are rejected") {
  GroupoidActionCase c = pair2_on_q3();
  const int to2 = c.g.index_of("(2,1)");
  // α_g no longer multiplicative-compatible with the units: send u1 to 2u2.
  c.pga.isos[static_cast<std::size_t>(to2)] *= Rational(2);
  CHECK_FALSE(check_groupoid_paction(c.g, c.pga).ok());
  CHECK_THROWS_AS(groupoid_to_algebra_action(c.g, c.pga), InvalidGroupoidAction);

  GroupoidActionCase d = pair2_on_q2(false);
  // D_{e1} no longer complements D_{e2}.
  d.pga.domains[static_cast<std::size_t>(d.g.index_of("(1,1)"))] = Subspace(2);
  CHECK(check_groupoid_paction(d.g, d.pga).failed("direct_sum_spans"));
}

TEST_CASE("algebra_to_groupoid_action preconditions") {
  const FiniteGroupoid g = pair_groupoid(2);
  const WeakHopfAlgebra z = groupoid_algebra(z2());
  CHECK_THROWS_AS(algebra_to_groupoid_action(g, ground_field_action(z, z.coalg.counit)), NotAGroupoidAlgebra);
  // A map that is not a partial action cannot be a symmetric one.
  const WeakHopfAlgebra H = groupoid_algebra(g);
  CHECK_THROWS_AS(algebra_to_groupoid_action(g, ground_field_action(H, H.coalg.counit)), NotSymmetric);
}

TEST_CASE("induced partial actions") {
  const GroupoidActionCase c = pair2_on_q2(true);
  const PartialActionMap global = groupoid_to_algebra_action(c.g, c.pga);
  const PartialActionMap same = induced_partial_action(global, Subspace::full(2), global.A.one());
  CHECK(same.act == global.act);
  CHECK(same.A.mult == global.A.mult);

  // Restricting to D_{e1} = ℚu1 gives the partial action with D_g = 0.
  const Subspace d1 = Subspace::span(2, {basis_vector(2, 0)});
  const PartialActionMap restricted = induced_partial_action(global, d1, basis_vector(2, 0));
  CHECK(check_partial_action(restricted).ok());
  CHECK_FALSE(is_global(restricted));

  CHECK_THROWS_AS(induced_partial_action(global, Subspace(2), Vector::Zero(2)), NotUnitalSubalgebra);
  CHECK_THROWS_AS(induced_partial_action(global, d1, basis_vector(2, 1)), NotUnitalSubalgebra);
}

TEST_CASE("ground field criterion") {
  const WeakHopfAlgebra z = groupoid_algebra(z2());
  CHECK(ground_field_check(z, z.coalg.counit));
  CHECK(ground_field_is_global(z, z.coalg.counit));
  const FiniteGroupoid u = z2_z2();
  const WeakHopfAlgebra H = groupoid_algebra(u);
  CHECK_FALSE(ground_field_check(H, H.coalg.counit));
  // ε(δ_{G1:a})ε(δ_{G2:a}) = 1 but δ_{G1:a}δ_{G2:a} = 0.
  CHECK_FALSE(u.composable(u.index_of("G1:a"), u.index_of("G2:a")));
  const Vector v = indicator(u, {"G1:e"});
  CHECK(ground_field_check(H, v));
  // a·a = e ∈ V with a ∉ V: λ(a)λ(a) = 0 ≠ 1 = λ(aa).
  CHECK_FALSE(ground_field_is_global(H, v));
  CHECK_FALSE(ground_field_check(H, Vector::Zero(4)));
}

TEST_CASE("ground field classification") {
  const FiniteGroupoid p2 = pair_groupoid(2);
  const auto c = classify_ground_field(p2);
  REQUIRE(c.size() == 2);
  CHECK(std::none_of(c.begin(), c.end(), [](const GroundFieldAction& a) { return a.global; }));

  const auto u = classify_ground_field(z2_z2());
  CHECK(u.size() == 4);
  CHECK(std::count_if(u.begin(), u.end(), [](const GroundFieldAction& a) { return a.global; }) == 2);
  for (const auto& a : u) CHECK(a.global == (a.subgroup->arrows.size() == 2));

  const FiniteGroupoid z = z2();
  const auto zc = classify_ground_field(z);
  REQUIRE(zc.size() == 2);
  CHECK(zc[1].lambda == groupoid_algebra(z).coalg.counit);
  CHECK(zc[1].global);
  CHECK_FALSE(zc[0].global);

  for (const auto& [name, g] : groupoids()) {
    INFO(name);
    std::set<std::vector<int>> classified, oracle;
    for (const auto& a : classify_ground_field(g)) classified.insert(as_ints(a.lambda));
    for (const auto& l : classify_ground_field_oracle(g)) oracle.insert(as_ints(l));
    CHECK(classified == oracle);
    CHECK(oracle == table_oracle(g));
  }
  CHECK(classify_ground_field_oracle(p2).size() == 2);
  const auto z3o = classify_ground_field_oracle(z3());
  REQUIRE(z3o.size() == 2);
  CHECK(z3o[0] == indicator(z3(), {"G1:e"}));
  CHECK(z3o[1] == indicator(z3(), {"G1:e", "G1:a", "G1:a2"}));
  CHECK_THROWS_AS(classify_ground_field_oracle(pair_groupoid(5)), BoundExceeded);
  CHECK_THROWS_AS(classify_ground_field_oracle(pair_groupoid(3), 8), BoundExceeded);
}

TEST_CASE("Hopf if and only if the counit acts") {
  CHECK(hopf_iff_epsilon(groupoid_algebra(z2())));
  CHECK_FALSE(hopf_iff_epsilon(groupoid_algebra(pair_groupoid(2))));
  CHECK_FALSE(hopf_iff_epsilon(groupoid_algebra(z2_z2())));
}
