#include "whopf/smash.hpp"

#include <string>

namespace whopf {

namespace {

void check_shape(const PartialActionMap& p) {
  const Index nA = p.dim_A();
  if (p.act.rows() != nA || p.act.cols() != p.dim_H() * nA)
    throw DimensionMismatch("action matrix must be dim(A) x dim(H)*dim(A)");
  if (p.A.mult.cols() != nA * nA) throw DimensionMismatch("algebra table must be dim x dim^2");
  if (p.A.unit.size() != 0 && p.A.unit.size() != nA) throw DimensionMismatch("unit has wrong length");
}

/// (e_a⊗e_h)(e_b⊗e_g) = e_a(h_1·e_b) ⊗ h_2e_g.
Vector basic_product(const PartialActionMap& p, Index x, Index y) {
  const Index nA = p.dim_A();
  const Index nH = p.dim_H();
  const Index a = x / nH, h = x % nH, b = y / nH, g = y % nH;
  Vector out = Vector::Zero(nA * nH);
  for (Index idx = 0; idx < nH * nH; ++idx) {
    const Rational& c = p.H.coalg.delta(idx, h);
    if (c.is_zero()) continue;
    const Index h1 = idx / nH, h2 = idx % nH;
    Vector left = Vector::Zero(nA);
    for (Index k = 0; k < nA; ++k) {
      const Rational& w = p.act(k, tensor_index(h1, b, nA));
      if (!w.is_zero()) left += w * p.A.mult.col(tensor_index(a, k, nA));
    }
    if (is_zero_vector(left)) continue;
    const Vector right = p.H.alg.mult.col(tensor_index(h2, g, nH));
    out += c * tensor_vec(left, right);
  }
  return out;
}

}  // namespace

QuotientSpace tensor_over_HL(const PartialActionMap& p) {
  check_shape(p);
  const Index nA = p.dim_A();
  const Index nH = p.dim_H();
  const CanonicalProjections proj = canonical_projections(p.H);
  Matrix rows(proj.HL.dim() * nA * nH, nA * nH);
  Index r = 0;
  for (Index i = 0; i < proj.HL.dim(); ++i) {
    const Vector z = proj.HL.vector(i);
    const Matrix right_action = p.operator_of(Vector(proj.S_R_inv * z));
    for (Index a = 0; a < nA; ++a)
      for (Index h = 0; h < nH; ++h) {
        const Vector zh = p.H.product(z, p.H.basis(h));
        rows.row(r++) = (tensor_vec(right_action.col(a), p.H.basis(h)) - tensor_vec(p.A.basis(a), zh)).transpose();
      }
  }
  return quotient(nA * nH, Subspace::row_span(rows));
}

Vector SmashAlgebra::raw_product(const Vector& x, const Vector& y) const {
  Vector out = Vector::Zero(ambient_dim());
  for (Index i = 0; i < x.size(); ++i) {
    if (x(i).is_zero()) continue;
    for (Index j = 0; j < y.size(); ++j)
      if (!y(j).is_zero()) out += (x(i) * y(j)) * basic_product(action, i, j);
  }
  return out;
}

SmashAlgebra build_smash(const PartialActionMap& p) {
  SmashAlgebra s{p, tensor_over_HL(p), Matrix(), std::nullopt, VerificationReport("smash product")};
  const Index n = s.ambient_dim();
  const Index q = s.dim();
  const Subspace& rel = s.quot.relations();

  for (Index r = 0; r < rel.dim(); ++r) {
    const Vector g = rel.vector(r);
    for (Index j = 0; j < n; ++j) {
      const Vector e = basis_vector(n, j);
      s.report.expect("well_defined_left", {r, j}, rel.contains(s.raw_product(g, e)));
      s.report.expect("well_defined_right", {r, j}, rel.contains(s.raw_product(e, g)));
    }
  }
  if (s.report.failed("well_defined_left") || s.report.failed("well_defined_right"))
    throw WellDefinednessFailure("smash product is not well defined: " + s.report.summary());

  const auto& reps = s.quot.representatives();
  s.mult = Matrix::Zero(q, q * q);
  for (Index i = 0; i < q; ++i)
    for (Index j = 0; j < q; ++j)
      s.mult.col(tensor_index(i, j, q)) =
          s.project(basic_product(p, reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)]));

  for (Index i = 0; i < q; ++i)
    for (Index j = 0; j < q; ++j) {
      const Vector ij = s.mult.col(tensor_index(i, j, q));
      for (Index k = 0; k < q; ++k)
        s.report.expect_equal("associativity", {i, j, k}, s.product(ij, s.basis(k)),
                              s.product(s.basis(i), s.mult.col(tensor_index(j, k, q))));
    }

  if (p.A.unit.size() == p.dim_A()) {
    const Vector u = s.element(p.A.one(), p.H.one());
    s.left_unit = u;
    for (Index i = 0; i < q; ++i) s.report.expect_equal("left_unit", {i}, s.product(u, s.basis(i)), s.basis(i));
  } else {
    s.report.skip("left_unit", "algebra has no unit");
  }
  return s;
}

PartialSmashAlgebra build_partial_smash(const SmashAlgebra& s) {
  if (!s.left_unit) throw NotUnitalSubalgebra("smash algebra has no class [1_A⊗1_H]");
  const Vector& u = *s.left_unit;
  const Index q = s.dim();
  Matrix gens(q, q);
  for (Index i = 0; i < q; ++i) gens.col(i) = s.product(s.basis(i), u);

  PartialSmashAlgebra c{Subspace::column_span(gens), Matrix(), u, VerificationReport("partial smash product")};
  const Index d = c.dim();
  c.mult = Matrix::Zero(d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const Vector xy = s.product(c.subspace.vector(i), c.subspace.vector(j));
      if (c.report.expect("closed", {i, j}, c.subspace.contains(xy)))
        c.mult.col(tensor_index(i, j, d)) = c.subspace.coordinates(xy);
    }
  c.report.expect("unit_in_corner", {}, c.subspace.contains(u));
  for (Index i = 0; i < d; ++i) {
    const Vector x = c.subspace.vector(i);
    c.report.expect_equal("unit_left", {i}, s.product(u, x), x);
    c.report.expect_equal("unit_right", {i}, s.product(x, u), x);
  }
  return c;
}

bool right_unit_holds(const SmashAlgebra& s) {
  if (!s.left_unit) return false;
  for (Index i = 0; i < s.dim(); ++i)
    if (s.product(s.basis(i), *s.left_unit) != s.basis(i)) return false;
  return true;
}

std::pair<bool, bool> check_unit_iff_global(const PartialActionMap& p, const SmashAlgebra& s) {
  const std::pair<bool, bool> out{right_unit_holds(s), is_global(p)};
  if (out.first != out.second)
    throw ConsistencyFailure(std::string("right unit ") + (out.first ? "holds" : "fails") + " but the action is " +
                             (out.second ? "global" : "not global"));
  return out;
}

}  // namespace whopf
