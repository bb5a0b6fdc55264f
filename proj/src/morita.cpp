#include "whopf/morita.hpp"

#include <string>
#include <vector>

namespace whopf {

namespace {

/// Products x·y for all basis pairs of two subspaces.
Subspace span_of_products(const SmashAlgebra& s, const Subspace& X, const Subspace& Y) {
  std::vector<Vector> out;
  for (Index i = 0; i < X.dim(); ++i)
    for (Index j = 0; j < Y.dim(); ++j) out.push_back(s.product(X.vector(i), Y.vector(j)));
  return Subspace::span(s.dim(), out);
}

/// X·Y ⊆ Z on basis pairs, recorded under `axiom`.
void expect_closed(VerificationReport& rep, const std::string& axiom, const SmashAlgebra& s, const Subspace& X,
                   const Subspace& Y, const Subspace& Z) {
  for (Index i = 0; i < X.dim(); ++i)
    for (Index j = 0; j < Y.dim(); ++j) rep.expect(axiom, {i, j}, Z.contains(s.product(X.vector(i), Y.vector(j))));
}

}  // namespace

SmashEmbedding build_psi(const SmashAlgebra& AH, const SmashAlgebra& BH, const Matrix& theta_B) {
  const Index nH = AH.action.dim_H();
  if (BH.action.dim_H() != nH || theta_B.cols() != AH.action.dim_A() || theta_B.rows() != BH.action.dim_A())
    throw DimensionMismatch("Ψ: inconsistent dimensions");
  const Matrix lift = kron(theta_B, Matrix::Identity(nH, nH));
  SmashEmbedding e;
  e.report = VerificationReport("smash embedding");

  const Subspace& rel = AH.quot.relations();
  for (Index r = 0; r < rel.dim(); ++r)
    e.report.expect("well_defined", {r}, is_zero_vector(BH.project(apply(lift, rel.vector(r)))));
  if (!e.report.ok()) throw IllDefined("Ψ does not respect the H_L-relations: " + e.report.summary());

  e.psi = BH.quot.projection_matrix() * lift * AH.quot.section_matrix();
  e.image = Subspace::column_span(e.psi);

  // Ψ′[θ(a)⊗h] = [a⊗h], defined through the generators of the image.
  const Index n = AH.ambient_dim();
  Matrix src(e.image.dim(), n);
  Matrix dst(AH.dim(), n);
  for (Index k = 0; k < n; ++k) {
    const Vector x = basis_vector(n, k);
    src.col(k) = e.image.coordinates(BH.project(apply(lift, x)));
    dst.col(k) = AH.project(x);
  }
  const auto inv = linear_map_through(src, dst);
  if (!inv) throw IllDefined("Ψ′ is not well defined on θ(A)⊗_{H_L}H");
  e.psi_prime = *inv;

  Matrix image_coords(e.image.dim(), AH.dim());
  for (Index i = 0; i < AH.dim(); ++i) image_coords.col(i) = e.image.coordinates(e.psi.col(i));
  e.report.expect("left_inverse", {}, Matrix(e.psi_prime * image_coords) == Matrix::Identity(AH.dim(), AH.dim()));
  for (Index i = 0; i < AH.dim(); ++i)
    for (Index j = 0; j < AH.dim(); ++j)
      e.report.expect_equal("multiplicative", {i, j}, apply(e.psi, AH.product(AH.basis(i), AH.basis(j))),
                            BH.product(e.psi.col(i), e.psi.col(j)));
  return e;
}

MoritaContextData build_M_N(const PartialActionMap& p, const Globalization& g) {
  if (!check_symmetric(p)) throw NotSymmetric("the Morita context needs a symmetric partial action");
  if (!antipode_inverse(p.H)) throw AntipodeNotInvertible("the Morita context needs an invertible antipode");

  MoritaContextData ctx;
  ctx.AH = build_smash(p);
  ctx.BH = build_smash(restrict_to_B(g));
  ctx.corner = build_partial_smash(ctx.AH);
  ctx.has_unit_B = g.has_unit();
  ctx.report = VerificationReport("Morita context");
  const Index nH = p.dim_H();
  const Index nA = p.dim_A();
  const SmashAlgebra& BH = ctx.BH;
  const PartialActionMap& onB = BH.action;
  auto act_B = [&](Index h, const Vector& b) { return onB.act_basis(h, b); };

  ctx.theta_B = Matrix(g.B.dim(), nA);
  for (Index j = 0; j < nA; ++j) ctx.theta_B.col(j) = g.B.coordinates(g.theta.col(j));
  ctx.embedding = build_psi(ctx.AH, BH, ctx.theta_B);
  ctx.report.merge(ctx.embedding.report);
  const Matrix& psi = ctx.embedding.psi;
  ctx.M = ctx.embedding.image;
  ctx.M_corner = Subspace::column_span(Matrix(psi * ctx.corner.subspace.basis_columns()));

  std::vector<Vector> n_gens;
  for (Index h = 0; h < nH; ++h)
    for (Index a = 0; a < nA; ++a) {
      Vector x = Vector::Zero(BH.dim());
      for (Index idx = 0; idx < nH * nH; ++idx) {
        const Rational& c = p.H.coalg.delta(idx, h);
        if (!c.is_zero()) x += c * BH.element(act_B(idx / nH, ctx.theta_B.col(a)), p.H.basis(idx % nH));
      }
      n_gens.push_back(x);
    }
  ctx.N = Subspace::span(BH.dim(), n_gens);

  // S_R⁻¹(z)▷θ(a) = θ(1_A)∗(S_R⁻¹(z)▷θ(a)) for z ∈ H_L.
  const CanonicalProjections proj = canonical_projections(p.H);
  const Vector one = g.theta_one();
  for (Index i = 0; i < proj.HL.dim(); ++i) {
    const Vector s = proj.S_R_inv * proj.HL.vector(i);
    for (Index a = 0; a < nA; ++a) {
      const Vector x = g.ambient.act_on(s, g.theta.col(a));
      ctx.report.expect_equal("counital_action_absorbed", {i, a}, x, g.ambient.A.product(one, x));
    }
  }

  const Vector psi_unit = apply(psi, *ctx.AH.left_unit);
  const Subspace corner_image = ctx.M_corner;
  for (Index i = 0; i < corner_image.dim(); ++i)
    ctx.report.expect_equal("unit_transport", {i}, BH.product(psi_unit, corner_image.vector(i)),
                            corner_image.vector(i));

  // (θ(a)#h)(k▷θ(b)#g) = θ(a(h_1k·b))#h_2g
  for (Index a = 0; a < nA; ++a)
    for (Index h = 0; h < nH; ++h)
      for (Index k = 0; k < nH; ++k)
        for (Index b = 0; b < nA; ++b)
          for (Index gi = 0; gi < nH; ++gi) {
            const Vector lhs = BH.product(BH.element(ctx.theta_B.col(a), p.H.basis(h)),
                                          BH.element(act_B(k, ctx.theta_B.col(b)), p.H.basis(gi)));
            Vector rhs = Vector::Zero(BH.dim());
            for (Index idx = 0; idx < nH * nH; ++idx) {
              const Rational& c = p.H.coalg.delta(idx, h);
              if (c.is_zero()) continue;
              const Vector hk = p.H.product(p.H.basis(idx / nH), p.H.basis(k));
              const Vector ab = p.A.product(p.A.basis(a), p.act_on(hk, p.A.basis(b)));
              rhs += c * BH.element(apply(ctx.theta_B, ab), p.H.product(p.H.basis(idx % nH), p.H.basis(gi)));
            }
            ctx.report.expect_equal("closure_witness", {a, h, k, b, gi}, lhs, rhs);
          }

  const Subspace all = Subspace::full(BH.dim());
  VerificationReport closure("module closures");
  expect_closed(closure, "M_right_BH", BH, ctx.M, all, ctx.M);
  expect_closed(closure, "N_left_BH", BH, all, ctx.N, ctx.N);
  expect_closed(closure, "M_left_corner", BH, ctx.M_corner, ctx.M, ctx.M);
  expect_closed(closure, "N_right_corner", BH, ctx.N, ctx.M_corner, ctx.N);
  ctx.report.merge(closure);
  if (!closure.ok()) throw ClosureFailure(closure.summary());
  return ctx;
}

MoritaSurjectivity check_morita_surjectivity(const MoritaContextData& ctx) {
  const SmashAlgebra& BH = ctx.BH;
  const PartialActionMap& onB = BH.action;
  const WeakHopfAlgebra& H = onB.H;
  const Index nH = H.dim();
  MoritaSurjectivity out;
  out.MN = span_of_products(BH, ctx.M, ctx.N);
  out.NM = span_of_products(BH, ctx.N, ctx.M);
  out.round = out.MN == ctx.M_corner;
  out.square = out.NM == Subspace::full(BH.dim());

  out.witness = VerificationReport("surjectivity witness");
  const Vector theta_one = apply(ctx.theta_B, ctx.AH.action.A.one());
  for (Index h = 0; h < nH; ++h) {
    const Vector d2 = H.double_coproduct(H.basis(h));
    for (Index a = 0; a < ctx.theta_B.cols(); ++a) {
      const Vector ta = ctx.theta_B.col(a);
      for (Index g = 0; g < nH; ++g) {
        Vector lhs = Vector::Zero(BH.dim());
        for (Index idx = 0; idx < d2.size(); ++idx) {
          if (d2(idx).is_zero()) continue;
          const Index h1 = idx / (nH * nH), h2 = (idx / nH) % nH, h3 = idx % nH;
          lhs += d2(idx) * BH.product(BH.element(onB.act_basis(h1, ta), H.basis(h2)),
                                      BH.element(theta_one, H.product(H.S(H.basis(h3)), H.basis(g))));
        }
        out.witness.expect_equal("witness_identity", {h, a, g}, lhs, BH.element(onB.act_basis(h, ta), H.basis(g)));
      }
    }
  }
  return out;
}

VerificationReport check_context_associativity(const MoritaContextData& ctx) {
  const SmashAlgebra& s = ctx.BH;
  VerificationReport rep("context associativity");
  const Subspace& M = ctx.M;
  const Subspace& N = ctx.N;
  for (Index i = 0; i < M.dim(); ++i)
    for (Index j = 0; j < N.dim(); ++j) {
      const Vector mn = s.product(M.vector(i), N.vector(j));
      const Vector nm = s.product(N.vector(j), M.vector(i));
      for (Index k = 0; k < M.dim(); ++k)
        rep.expect_equal("round_then_module", {i, j, k}, s.product(mn, M.vector(k)),
                         s.product(M.vector(i), s.product(N.vector(j), M.vector(k))));
      for (Index k = 0; k < N.dim(); ++k)
        rep.expect_equal("square_then_module", {j, i, k}, s.product(nm, N.vector(k)),
                         s.product(N.vector(j), s.product(M.vector(i), N.vector(k))));
    }
  return rep;
}

}  // namespace whopf
