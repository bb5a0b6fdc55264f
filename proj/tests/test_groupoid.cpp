#include "doctest.h"
#include "whopf/groupoid.hpp"

using namespace whopf;

TEST_CASE("validate_groupoid") {
  CHECK(validate_groupoid(disjoint_union_of_groups({cyclic_group(2)})).ok());
  const FiniteGroupoid p = pair_groupoid(2);
  CHECK(validate_groupoid(p).ok());
  // (1,2) is e2 -> e1, so its inverse (2,1) must start at e1.
  CHECK(p.d[p.index_of("(2,1)")] == p.index_of("(1,1)"));
  CHECK(p.comp[p.index_of("(1,2)")][p.index_of("(2,1)")] == p.index_of("(1,1)"));
  CHECK_FALSE(p.composable(p.index_of("(1,2)"), p.index_of("(1,2)")));

  FiniteGroupoid bad = p;
  bad.inv[p.index_of("(1,2)")] = p.index_of("(1,2)");
  const VerificationReport r = validate_groupoid(bad);
  CHECK(r.failed("inverse_law"));
  CHECK_THROWS_AS(groupoid_algebra(bad), NotAGroupoid);
}

TEST_CASE("disjoint unions of groups") {
  const FiniteGroupoid one = disjoint_union_of_groups({cyclic_group(2)});
  CHECK(one.size() == 2);
  CHECK(one.identities().size() == 1);
  const FiniteGroupoid two = disjoint_union_of_groups({cyclic_group(2), cyclic_group(2)});
  CHECK(two.size() == 4);
  CHECK(two.identities().size() == 2);
  CHECK_FALSE(two.composable(two.index_of("G1:a"), two.index_of("G2:a")));
  const FiniteGroupoid mixed = disjoint_union_of_groups({cyclic_group(3), cyclic_group(2)});
  CHECK(mixed.size() == 5);
  CHECK(validate_groupoid(mixed).ok());

  GroupTable broken = cyclic_group(2);
  broken.mul[1][1] = 1;
  CHECK_THROWS_AS(disjoint_union_of_groups({cyclic_group(2), broken}), NotAGroup);
}

TEST_CASE("pair groupoids") {
  const FiniteGroupoid p1 = pair_groupoid(1);
  CHECK(p1.size() == 1);
  CHECK(p1.is_identity(0));
  const FiniteGroupoid p2 = pair_groupoid(2);
  CHECK(p2.size() == 4);
  CHECK(p2.identities().size() == 2);
  for (int e : p2.identities()) CHECK(isotropy_arrows(p2, e).size() == 1);
  CHECK(pair_groupoid(3).size() == 9);
  CHECK(validate_groupoid(pair_groupoid(3)).ok());
}

TEST_CASE("isotropy groups") {
  const FiniteGroupoid p2 = pair_groupoid(2);
  CHECK(isotropy_group(p2, p2.index_of("(1,1)")).size() == 1);
  CHECK_THROWS_AS(isotropy_group(p2, p2.index_of("(1,2)")), NotAnIdentity);
  const FiniteGroupoid two = disjoint_union_of_groups({cyclic_group(2), cyclic_group(2)});
  const GroupTable g1 = isotropy_group(two, two.index_of("G1:e"));
  CHECK(g1.size() == 2);
  CHECK(validate_group(g1) == 0);
  const FiniteGroupoid z3 = disjoint_union_of_groups({cyclic_group(3)});
  CHECK(isotropy_group(z3, 0).size() == 3);
}

TEST_CASE("subgroups of isotropy groups") {
  const FiniteGroupoid p2 = pair_groupoid(2);
  const auto s = subgroups_of_isotropy(p2);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == IsotropySubgroup{p2.index_of("(1,1)"), {p2.index_of("(1,1)")}});
  CHECK(s[1] == IsotropySubgroup{p2.index_of("(2,2)"), {p2.index_of("(2,2)")}});
  CHECK(subgroups_of_isotropy(disjoint_union_of_groups({cyclic_group(2), cyclic_group(2)})).size() == 4);
  CHECK(subgroups_of_isotropy(disjoint_union_of_groups({cyclic_group(3)})).size() == 2);
  // ℤ/2 × ℤ/2 has five subgroups.
  GroupTable klein;
  klein.labels = {"e", "a", "b", "c"};
  klein.mul = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  CHECK(subgroups_of_isotropy(disjoint_union_of_groups({klein})).size() == 5);
}

TEST_CASE("groupoid algebras") {
  const WeakHopfAlgebra z2 = groupoid_algebra(disjoint_union_of_groups({cyclic_group(2)}));
  CHECK(z2.unit_coproduct() == Vector(tensor_vec(z2.one(), z2.one())));
  CHECK(is_hopf_algebra(z2));

  const FiniteGroupoid p2 = pair_groupoid(2);
  const WeakHopfAlgebra h = groupoid_algebra(p2);
  CHECK(h.dim() == 4);
  CHECK(canonical_projections(h).HL.dim() == 2);

  const FiniteGroupoid two = disjoint_union_of_groups({cyclic_group(2), cyclic_group(2)});
  const WeakHopfAlgebra k = groupoid_algebra(two);
  CHECK(k.dim() == 4);
  Vector unit = Vector::Zero(4);
  unit(two.index_of("G1:e")) = 1;
  unit(two.index_of("G2:e")) = 1;
  CHECK(k.one() == unit);
  for (const auto& gr : {p2, two, pair_groupoid(3)}) {
    const WeakHopfAlgebra a = groupoid_algebra(gr);
    CHECK(check_all_axioms(a).ok());
    CHECK(lemma_suite(a).ok());
  }
}
