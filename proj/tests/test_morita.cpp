#include "fixtures.hpp"
#include "whopf/morita.hpp"

#include <doctest.h>

using namespace whopf;
using namespace fixtures;

TEST_CASE("pair groupoid on the ground field with V = {e1}") {
  const FiniteGroupoid g = pair_groupoid(2);
  const WeakHopfAlgebra H = groupoid_algebra(g);
  const PartialActionMap p = ground_field_action(H, indicator(g, {"(1,1)"}));
  const Globalization glob = standard_globalization(p);
  const MoritaContextData ctx = build_M_N(p, glob);
  CHECK(ctx.report.ok());
  CHECK(ctx.AH.dim() == 2);
  CHECK(ctx.corner.dim() == 1);
  // B = ℚδ*_{(1,1)} ⊕ ℚδ*_{(1,2)} with D_{e1}, D_{e2} one-dimensional: dim B#H = Σ_x dim D_{r(x)} = 4.
  CHECK(ctx.BH.dim() == 4);
  CHECK(ctx.has_unit_B);
  CHECK(rank(ctx.psi()) == 2);
  CHECK(ctx.M.dim() == 2);
  CHECK(ctx.M_corner.dim() == 1);
  CHECK(ctx.N.dim() == 2);

  const MoritaSurjectivity s = check_morita_surjectivity(ctx);
  CHECK(s.round);
  CHECK(s.square);
  CHECK(s.MN == ctx.M_corner);
  CHECK(s.witness.ok());
  CHECK(check_context_associativity(ctx).ok());
}

TEST_CASE("every symmetric corpus action gives a surjective Morita context") {
  for (const ActionCase& c : actions()) {
    if (!c.symmetric) continue;
    CAPTURE(c.name);
    const Globalization glob = standard_globalization(c.p);
    const MoritaContextData ctx = build_M_N(c.p, glob);
    CHECK(ctx.report.ok());
    CHECK(ctx.embedding.report.ok());
    CHECK(rank(ctx.psi()) == ctx.AH.dim());
    CHECK(ctx.BH.report.ok());
    const MoritaSurjectivity s = check_morita_surjectivity(ctx);
    CHECK(s.round);
    CHECK(s.square);
    CHECK(s.witness.ok());
    CHECK(check_context_associativity(ctx).ok());
    if (c.global) {
      CHECK(ctx.M_corner == ctx.M);
      CHECK(rank(ctx.psi()) == ctx.BH.dim());
    }
  }
}

TEST_CASE("global Hopf case: M = N = B#H") {
  const FiniteGroupoid g = z2();
  const WeakHopfAlgebra H = groupoid_algebra(g);
  const PartialActionMap p = ground_field_action(H, H.coalg.counit);
  const MoritaContextData ctx = build_M_N(p, standard_globalization(p));
  const Subspace all = Subspace::full(ctx.BH.dim());
  CHECK(ctx.M == all);
  CHECK(ctx.N == all);
  CHECK(ctx.M_corner == all);
  CHECK(ctx.psi() == Matrix::Identity(2, 2));
}

TEST_CASE("Ψ transports the left unit") {
  const GroupoidActionCase c = pair2_on_q3();
  const PartialActionMap p = groupoid_to_algebra_action(c.g, c.pga);
  const MoritaContextData ctx = build_M_N(p, standard_globalization(p));
  const Vector u = apply(ctx.psi(), *ctx.AH.left_unit);
  for (Index i = 0; i < ctx.corner.dim(); ++i) {
    const Vector x = apply(ctx.psi(), ctx.corner.subspace.vector(i));
    CHECK(ctx.BH.product(u, x) == x);
  }
  CHECK(ctx.BH.product(u, u) == u);
  CHECK(ctx.embedding.psi_prime * ctx.embedding.image.coordinates(u) == *ctx.AH.left_unit);
}

TEST_CASE("preconditions of the Morita context") {
  const FiniteGroupoid g = pair_groupoid(2);
  const WeakHopfAlgebra H = groupoid_algebra(g);
  const PartialActionMap p = ground_field_action(H, indicator(g, {"(1,1)"}));
  const Globalization glob = standard_globalization(p);

  PartialActionMap broken = p;
  broken.H.antipode.setZero();
  CHECK_THROWS_AS(build_M_N(broken, glob), AntipodeNotInvertible);

  const PartialActionMap not_symmetric = ground_field_action(H, indicator(g, {"(1,1)", "(1,2)", "(2,1)"}));
  CHECK_FALSE(check_symmetric(not_symmetric));
  CHECK_THROWS_AS(build_M_N(not_symmetric, glob), NotSymmetric);
}
