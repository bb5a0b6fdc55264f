#include "whopf/wha.hpp"

#include <string>
#include <utility>

namespace whopf {

Vector multiply(const Matrix& mult, const Vector& x, const Vector& y) {
  const Index n = x.size();
  if (y.size() != n || mult.cols() != n * n) throw DimensionMismatch("multiply: operand sizes disagree with table");
  Vector out = Vector::Zero(mult.rows());
  for (Index i = 0; i < n; ++i) {
    if (x(i).is_zero()) continue;
    for (Index j = 0; j < n; ++j) {
      if (y(j).is_zero()) continue;
      const Rational c = x(i) * y(j);
      const Index col = tensor_index(i, j, n);
      for (Index k = 0; k < mult.rows(); ++k)
        if (!mult(k, col).is_zero()) out(k) += c * mult(k, col);
    }
  }
  return out;
}

Vector tensor_power_multiply(const Matrix& mult, int factors, const Vector& x, const Vector& y) {
  const Index n = mult.rows();
  Index total = 1;
  for (int s = 0; s < factors; ++s) total *= n;
  if (x.size() != total || y.size() != total) throw DimensionMismatch("tensor_power_multiply: size mismatch");
  Vector out = Vector::Zero(total);
  std::vector<Index> xi(static_cast<std::size_t>(factors)), yi(static_cast<std::size_t>(factors));
  std::vector<std::pair<Index, Rational>> terms, next;
  for (Index I = 0; I < total; ++I) {
    if (x(I).is_zero()) continue;
    for (Index t = I, s = factors - 1; s >= 0; --s, t /= n) xi[static_cast<std::size_t>(s)] = t % n;
    for (Index J = 0; J < total; ++J) {
      if (y(J).is_zero()) continue;
      for (Index t = J, s = factors - 1; s >= 0; --s, t /= n) yi[static_cast<std::size_t>(s)] = t % n;
      terms.assign(1, {0, x(I) * y(J)});
      for (int s = 0; s < factors && !terms.empty(); ++s) {
        next.clear();
        const Index col = tensor_index(xi[static_cast<std::size_t>(s)], yi[static_cast<std::size_t>(s)], n);
        for (const auto& [idx, c] : terms)
          for (Index r = 0; r < n; ++r)
            if (!mult(r, col).is_zero()) next.emplace_back(idx * n + r, c * mult(r, col));
        terms.swap(next);
      }
      for (const auto& [idx, c] : terms) out(idx) += c;
    }
  }
  return out;
}

Vector flip(const Vector& x, Index dim_left, Index dim_right) {
  Vector y = Vector::Zero(x.size());
  for (Index i = 0; i < dim_left; ++i)
    for (Index j = 0; j < dim_right; ++j) y(tensor_index(j, i, dim_left)) = x(tensor_index(i, j, dim_right));
  return y;
}

Matrix FinDimAlgebra::left_multiplication(const Vector& x) const {
  Matrix m(dim(), dim());
  for (Index j = 0; j < dim(); ++j) m.col(j) = product(x, basis(j));
  return m;
}

Matrix FinDimAlgebra::right_multiplication(const Vector& x) const {
  Matrix m(dim(), dim());
  for (Index j = 0; j < dim(); ++j) m.col(j) = product(basis(j), x);
  return m;
}

FinDimAlgebra ground_field_algebra() { return diagonal_algebra(1); }

FinDimAlgebra diagonal_algebra(Index n) {
  FinDimAlgebra a;
  a.mult = Matrix::Zero(n, n * n);
  a.unit = Vector::Constant(n, Rational(1));
  for (Index i = 0; i < n; ++i) {
    a.mult(i, tensor_index(i, i, n)) = 1;
    a.labels.push_back(n == 1 ? std::string("1") : "u" + std::to_string(i + 1));
  }
  return a;
}

Rational WeakHopfAlgebra::counit(const Vector& x) const {
  Rational s;
  for (Index i = 0; i < x.size(); ++i)
    if (!x(i).is_zero()) s += x(i) * coalg.counit(i);
  return s;
}

Matrix WeakHopfAlgebra::counit_form() const {
  const Index n = dim();
  Matrix e(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Rational s;
      const Index col = tensor_index(i, j, n);
      for (Index k = 0; k < n; ++k)
        if (!alg.mult(k, col).is_zero()) s += alg.mult(k, col) * coalg.counit(k);
      e(i, j) = s;
    }
  return e;
}

namespace {

/// Reshape x ∈ H⊗H into the n x n coefficient matrix.
Matrix as_square(const Vector& x, Index n) {
  Matrix m(n, n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) m(a, b) = x(tensor_index(a, b, n));
  return m;
}

Matrix row(const Vector& v) { return v.transpose(); }

Vector tv(const Vector& a, const Vector& b) { return tensor_vec(a, b); }

}  // namespace

Matrix WeakHopfAlgebra::eps_L() const {
  // ε_L(h) = ε(1_1 h) 1_2
  const Matrix d1 = as_square(unit_coproduct(), dim());
  return d1.transpose() * counit_form();
}

Matrix WeakHopfAlgebra::eps_R() const {
  // ε_R(h) = 1_1 ε(h 1_2)
  const Matrix d1 = as_square(unit_coproduct(), dim());
  return d1 * counit_form().transpose();
}

VerificationReport check_algebra(const FinDimAlgebra& a) {
  const Index n = a.mult.rows();
  if (a.mult.cols() != n * n) throw DimensionMismatch("algebra: multiplication table must be dim x dim^2");
  if (a.unit.size() != n) throw DimensionMismatch("algebra: unit length differs from dim");
  if (!a.labels.empty() && static_cast<Index>(a.labels.size()) != n)
    throw DimensionMismatch("algebra: label count differs from dim");
  VerificationReport r("algebra");
  r.touch("associativity");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vector ij = a.mult.col(tensor_index(i, j, n));
      for (Index k = 0; k < n; ++k) {
        const Vector jk = a.mult.col(tensor_index(j, k, n));
        r.expect_equal("associativity", {i, j, k}, a.product(ij, a.basis(k)), a.product(a.basis(i), jk));
      }
    }
  for (Index i = 0; i < n; ++i) {
    r.expect_equal("unit_left", {i}, a.product(a.unit, a.basis(i)), a.basis(i));
    r.expect_equal("unit_right", {i}, a.product(a.basis(i), a.unit), a.basis(i));
  }
  return r;
}

VerificationReport check_coalgebra(const FinDimCoalgebra& c) {
  const Index n = c.counit.size();
  if (c.delta.rows() != n * n || c.delta.cols() != n)
    throw DimensionMismatch("coalgebra: comultiplication must be dim^2 x dim");
  VerificationReport r("coalgebra");
  const Matrix eps = row(c.counit);
  for (Index i = 0; i < n; ++i) {
    const Vector d = c.delta.col(i);
    r.expect_equal("coassociativity", {i}, apply_block(d, 1, n, c.delta), apply_block(d, n, 1, c.delta));
    const Vector ei = basis_vector(n, i);
    r.expect_equal("counit_left", {i}, apply_block(d, 1, n, eps), ei);
    r.expect_equal("counit_right", {i}, apply_block(d, n, 1, eps), ei);
  }
  return r;
}

namespace {

void check_shapes(const WeakHopfAlgebra& h) {
  const Index n = h.alg.dim();
  if (h.alg.mult.cols() != n * n || h.alg.unit.size() != n)
    throw DimensionMismatch("weak Hopf algebra: malformed algebra part");
  if (h.coalg.counit.size() != n || h.coalg.delta.rows() != n * n || h.coalg.delta.cols() != n)
    throw DimensionMismatch("weak Hopf algebra: coalgebra dimension differs from algebra dimension");
  if (h.antipode.rows() != n || h.antipode.cols() != n)
    throw DimensionMismatch("weak Hopf algebra: antipode must be dim x dim");
}

}  // namespace

VerificationReport check_weak_bialgebra(const WeakHopfAlgebra& h) {
  check_shapes(h);
  const Index n = h.dim();
  const Matrix& mult = h.alg.mult;
  VerificationReport r("weak bialgebra");
  r.merge(check_algebra(h.alg));
  r.merge(check_coalgebra(h.coalg));

  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      r.expect_equal("delta_multiplicative", {i, j}, h.coproduct(mult.col(tensor_index(i, j, n))),
                     tensor_power_multiply(mult, 2, h.coalg.delta.col(i), h.coalg.delta.col(j)));

  // ε(k h_1) ε(h_2 g) = ε(k h g) = ε(k h_2) ε(h_1 g), as n x n matrices in (k, g) per h.
  const Matrix e = h.counit_form();
  r.touch("weak_counit_left");
  r.touch("weak_counit_right");
  for (Index hi = 0; hi < n; ++hi) {
    const Matrix d = as_square(h.coalg.delta.col(hi), n);
    Matrix ph(n, n);
    for (Index g = 0; g < n; ++g) ph.col(g) = mult.col(tensor_index(hi, g, n));
    const Matrix mid = e * ph;
    const Matrix left = e * d * e;
    const Matrix right = e * d.transpose() * e;
    for (Index k = 0; k < n; ++k)
      for (Index g = 0; g < n; ++g) {
        r.expect_equal("weak_counit_left", {k, hi, g}, left(k, g), mid(k, g));
        r.expect_equal("weak_counit_right", {k, hi, g}, right(k, g), mid(k, g));
      }
  }

  // (1 ⊗ Δ(1))(Δ(1) ⊗ 1) = Δ²(1) = (Δ(1) ⊗ 1)(1 ⊗ Δ(1))
  const Vector one = h.one();
  const Vector d1 = h.unit_coproduct();
  const Vector dd1 = h.double_coproduct(one);
  const Vector x = tv(one, d1);
  const Vector y = tv(d1, one);
  r.expect_equal("weak_unit_left", {}, tensor_power_multiply(mult, 3, x, y), dd1);
  r.expect_equal("weak_unit_right", {}, tensor_power_multiply(mult, 3, y, x), dd1);
  return r;
}

VerificationReport check_weak_hopf(const WeakHopfAlgebra& h) {
  check_shapes(h);
  const Index n = h.dim();
  const Matrix& mult = h.alg.mult;
  const Matrix& s = h.antipode;
  const Matrix el = h.eps_L();
  const Matrix er = h.eps_R();
  VerificationReport r("weak Hopf antipode");
  for (Index i = 0; i < n; ++i) {
    const Vector d = h.coalg.delta.col(i);
    // h_1 S(h_2) = ε_L(h)
    r.expect_equal("antipode_left", {i}, apply(mult, apply_block(d, n, 1, s)), Vector(el.col(i)));
    // S(h_1) h_2 = ε_R(h)
    r.expect_equal("antipode_right", {i}, apply(mult, apply_block(d, 1, n, s)), Vector(er.col(i)));
    // S(h) = S(h_1) h_2 S(h_3)
    Vector t = apply_block(h.double_coproduct(h.basis(i)), 1, n * n, s);
    t = apply_block(t, n * n, 1, s);
    t = apply_block(t, 1, n, mult);
    r.expect_equal("antipode_sandwich", {i}, apply(mult, t), Vector(s.col(i)));
  }
  return r;
}

VerificationReport check_all_axioms(const WeakHopfAlgebra& h) {
  VerificationReport r("weak Hopf axioms");
  r.merge(check_weak_bialgebra(h));
  r.merge(check_weak_hopf(h));
  return r;
}

namespace {

/// Ambient matrix acting as the inverse of `s` restricted to `domain`,
/// defined on vectors of `target` = s(domain).
Matrix restricted_inverse(const Matrix& s, const Subspace& domain, const Subspace& target, const char* what) {
  const Index n = s.rows();
  const Matrix dom = domain.basis_columns();
  const Matrix img = s * dom;
  if (rank(img) != domain.dim() || Subspace::column_span(img) != target)
    throw AntipodeNotBijectiveOnCounital(std::string("antipode is not a bijection on ") + what);
  Matrix pre(n, target.dim());
  for (Index i = 0; i < target.dim(); ++i) {
    const auto c = solve(img, target.vector(i));
    if (!c) throw AntipodeNotBijectiveOnCounital(std::string("antipode is not onto from ") + what);
    pre.col(i) = dom * *c;
  }
  Matrix select = Matrix::Zero(target.dim(), n);
  for (Index i = 0; i < target.dim(); ++i) select(i, target.pivots()[static_cast<std::size_t>(i)]) = 1;
  return pre * select;
}

}  // namespace

CanonicalProjections canonical_projections(const WeakHopfAlgebra& h) {
  check_shapes(h);
  CanonicalProjections p;
  const Index n = h.dim();
  p.eps_L = h.eps_L();
  p.eps_R = h.eps_R();
  p.HL = Subspace::column_span(p.eps_L);
  p.HR = Subspace::column_span(p.eps_R);
  if (p.HL.dim() != p.HR.dim())
    throw AntipodeNotBijectiveOnCounital("counital subalgebras have different dimensions");
  p.S_L_inv = restricted_inverse(h.antipode, p.HL, p.HR, "H_L");
  p.S_R_inv = restricted_inverse(h.antipode, p.HR, p.HL, "H_R");
  const Vector d1 = h.unit_coproduct();
  p.e_L = apply_block(d1, 1, n, h.antipode);
  p.e_R = apply_block(d1, n, 1, h.antipode);
  return p;
}

VerificationReport lemma_suite(const WeakHopfAlgebra& h) {
  check_shapes(h);
  const Index n = h.dim();
  const Matrix& mult = h.alg.mult;
  const Matrix& s = h.antipode;
  const Vector one = h.one();
  const Vector d1 = h.unit_coproduct();
  const Matrix d1m = as_square(d1, n);
  const Matrix e = h.counit_form();
  const Matrix el = h.eps_L();
  const Matrix er = h.eps_R();
  const Subspace HL = Subspace::column_span(el);
  const Subspace HR = Subspace::column_span(er);
  auto mul = [&](const Vector& x, const Vector& y) { return h.product(x, y); };
  auto mul2 = [&](const Vector& x, const Vector& y) { return tensor_power_multiply(mult, 2, x, y); };
  auto ev = [&](Index i) { return h.basis(i); };
  auto col = [](const Matrix& m, Index i) { return Vector(m.col(i)); };

  VerificationReport r("weak Hopf identities");

  // Counital maps.
  for (Index i = 0; i < n; ++i) {
    r.expect_equal("eps_L_idempotent", {i}, Vector(el * col(el, i)), col(el, i));
    r.expect_equal("eps_R_idempotent", {i}, Vector(er * col(er, i)), col(er, i));
  }
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k) {
      const Vector hk = mul(ev(i), ev(k));
      r.expect_equal("counit_absorbs_eps_L", {i, k}, h.counit(mul(ev(i), col(el, k))), e(i, k));
      r.expect_equal("counit_absorbs_eps_R", {i, k}, h.counit(mul(col(er, i), ev(k))), e(i, k));
      r.expect_equal("eps_L_absorbs_eps_L", {i, k}, Vector(el * mul(ev(i), col(el, k))), Vector(el * hk));
      r.expect_equal("eps_R_absorbs_eps_R", {i, k}, Vector(er * mul(col(er, i), ev(k))), Vector(er * hk));
    }

  // Δ(1) ∈ H_R ⊗ H_L.
  const Subspace hr_hl = Subspace::row_span(kron(HR.basis(), HL.basis()));
  r.expect("unit_coproduct_in_HR_HL", {}, hr_hl.contains(d1));

  // z ∈ H_L  <=>  Δ(z) = 1_1 z ⊗ 1_2, and then Δ(z) = z 1_1 ⊗ 1_2; dually for H_R.
  {
    Matrix left_char(n * n, n), right_char(n * n, n);
    for (Index j = 0; j < n; ++j) {
      const Vector dj = h.coproduct(ev(j));
      left_char.col(j) = dj - mul2(d1, tv(ev(j), one));
      right_char.col(j) = dj - mul2(tv(one, ev(j)), d1);
    }
    r.expect("HL_coproduct_characterization", {}, kernel(left_char) == HL);
    r.expect("HR_coproduct_characterization", {}, kernel(right_char) == HR);
    const Subspace h_hl = Subspace::row_span(kron(Matrix(Matrix::Identity(n, n)), HL.basis()));
    const Subspace hr_h = Subspace::row_span(kron(HR.basis(), Matrix(Matrix::Identity(n, n))));
    for (Index i = 0; i < HL.dim(); ++i) {
      const Vector z = HL.vector(i);
      const Vector dz = h.coproduct(z);
      r.expect_equal("HL_coproduct_left_unit", {i}, dz, mul2(d1, tv(z, one)));
      r.expect_equal("HL_coproduct_right_unit", {i}, dz, mul2(tv(z, one), d1));
      r.expect("coproduct_of_HL_in_H_HL", {i}, h_hl.contains(dz));
    }
    for (Index i = 0; i < HR.dim(); ++i) {
      const Vector w = HR.vector(i);
      const Vector dw = h.coproduct(w);
      r.expect_equal("HR_coproduct_left_unit", {i}, dw, mul2(tv(one, w), d1));
      r.expect_equal("HR_coproduct_right_unit", {i}, dw, mul2(d1, tv(one, w)));
      r.expect("coproduct_of_HR_in_HR_H", {i}, hr_h.contains(dw));
    }
  }

  // H_L, H_R are unital subalgebras and commute with each other.
  r.expect("HL_contains_unit", {}, HL.contains(one));
  r.expect("HR_contains_unit", {}, HR.contains(one));
  for (Index i = 0; i < HL.dim(); ++i)
    for (Index j = 0; j < HL.dim(); ++j) r.expect("HL_closed", {i, j}, HL.contains(mul(HL.vector(i), HL.vector(j))));
  for (Index i = 0; i < HR.dim(); ++i)
    for (Index j = 0; j < HR.dim(); ++j) r.expect("HR_closed", {i, j}, HR.contains(mul(HR.vector(i), HR.vector(j))));
  for (Index i = 0; i < HL.dim(); ++i)
    for (Index j = 0; j < HR.dim(); ++j)
      r.expect_equal("HL_HR_commute", {i, j}, mul(HL.vector(i), HR.vector(j)), mul(HR.vector(j), HL.vector(i)));

  // Coproduct / antipode / counital identities on basis elements.
  for (Index i = 0; i < n; ++i) {
    const Vector hv = ev(i);
    const Vector dd = h.double_coproduct(hv);
    // h_1 ⊗ h_2 S(h_3) = 1_1 h ⊗ 1_2
    r.expect_equal("coproduct_antipode_right_leg", {i}, apply_block(apply_block(dd, n * n, 1, s), n, 1, mult),
                   mul2(d1, tv(hv, one)));
    // S(h_1) h_2 ⊗ h_3 = 1_1 ⊗ h 1_2
    r.expect_equal("antipode_coproduct_left_leg", {i}, apply_block(apply_block(dd, 1, n * n, s), 1, n, mult),
                   mul2(tv(one, hv), d1));
    // h_1 ⊗ S(h_2) h_3 = h 1_1 ⊗ S(1_2)
    r.expect_equal("coproduct_antipode_middle_right", {i}, apply_block(apply_block(dd, n, n, s), n, 1, mult),
                   mul2(tv(hv, one), apply_block(d1, n, 1, s)));
    // h_1 S(h_2) ⊗ h_3 = S(1_1) ⊗ 1_2 h
    r.expect_equal("coproduct_antipode_middle_left", {i}, apply_block(apply_block(dd, n, n, s), 1, n, mult),
                   mul2(apply_block(d1, 1, n, s), tv(one, hv)));

    const Vector dh = h.coproduct(hv);
    const Matrix dhm = as_square(dh, n);
    const Vector sh = h.S(hv);
    Vector via_antipode_counit = Vector::Zero(n), via_antipode_counit_r = Vector::Zero(n);
    Vector via_antipode_unit = Vector::Zero(n), via_antipode_unit_r = Vector::Zero(n);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        if (d1m(a, b).is_zero()) continue;
        // ε_L(h) = ε(S(h) 1_1) 1_2 ;  ε_R(h) = 1_1 ε(1_2 S(h))
        via_antipode_counit += d1m(a, b) * h.counit(mul(sh, ev(a))) * ev(b);
        via_antipode_counit_r += d1m(a, b) * h.counit(mul(ev(b), sh)) * ev(a);
        // ε_L(h) = S(1_1) ε(1_2 h) ;  ε_R(h) = ε(h 1_1) S(1_2)
        via_antipode_unit += d1m(a, b) * e(b, i) * h.S(ev(a));
        via_antipode_unit_r += d1m(a, b) * e(i, a) * h.S(ev(b));
      }
    r.expect_equal("eps_L_via_antipode_counit", {i}, via_antipode_counit, col(el, i));
    r.expect_equal("eps_R_via_antipode_counit", {i}, via_antipode_counit_r, col(er, i));
    r.expect_equal("eps_L_via_antipode_unit", {i}, via_antipode_unit, col(el, i));
    r.expect_equal("eps_R_via_antipode_unit", {i}, via_antipode_unit_r, col(er, i));

    // S(h)_1 ⊗ S(h)_2 = S(h_2) ⊗ S(h_1)
    r.expect_equal("antipode_anti_comultiplicative", {i}, h.coproduct(sh),
                   flip(apply_block(apply_block(dh, 1, n, s), n, 1, s), n, n));
    r.expect_equal("counit_antipode_invariant", {i}, h.counit(sh), h.counit(hv));

    for (Index k = 0; k < n; ++k) {
      const Vector kv = ev(k);
      const Vector dk = h.coproduct(kv);
      // h ε_L(k) = ε(h_1 k) h_2 ;  ε_R(h) k = k_1 ε(h k_2)
      Vector rhs_l = Vector::Zero(n), rhs_r = Vector::Zero(n);
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
          if (!dhm(a, b).is_zero()) rhs_l += dhm(a, b) * e(a, k) * ev(b);
          const Rational& c = dk(tensor_index(a, b, n));
          if (!c.is_zero()) rhs_r += c * e(i, b) * ev(a);
        }
      r.expect_equal("eps_L_via_counit", {i, k}, mul(hv, col(el, k)), rhs_l);
      r.expect_equal("eps_R_via_counit", {i, k}, mul(col(er, i), kv), rhs_r);
      // ε_L(ε_L(h) k) = ε_L(h) ε_L(k) ;  ε_R(h ε_R(k)) = ε_R(h) ε_R(k)
      r.expect_equal("eps_L_multiplicative_on_HL", {i, k}, Vector(el * mul(col(el, i), kv)),
                     mul(col(el, i), col(el, k)));
      r.expect_equal("eps_R_multiplicative_on_HR", {i, k}, Vector(er * mul(hv, col(er, k))),
                     mul(col(er, i), col(er, k)));
      // S(hk) = S(k) S(h)
      r.expect_equal("antipode_anti_multiplicative", {i, k}, h.S(mul(hv, kv)), mul(h.S(kv), sh));
    }
  }

  // ε_L∘S = ε_L∘ε_R = S∘ε_R and ε_R∘S = ε_R∘ε_L = S∘ε_L.
  {
    const Matrix lr = el * er;
    const Matrix rl = er * el;
    const Matrix ls = el * s;
    const Matrix sr = s * er;
    const Matrix rs = er * s;
    const Matrix sl = s * el;
    for (Index i = 0; i < n; ++i) {
      r.expect_equal("eps_L_S_eq_eps_L_eps_R", {i}, col(ls, i), col(lr, i));
      r.expect_equal("S_eps_R_eq_eps_L_eps_R", {i}, col(sr, i), col(lr, i));
      r.expect_equal("eps_R_S_eq_eps_R_eps_L", {i}, col(rs, i), col(rl, i));
      r.expect_equal("S_eps_L_eq_eps_R_eps_L", {i}, col(sl, i), col(rl, i));
    }
  }
  // S(1_1) ⊗ S(1_2) = 1_2 ⊗ 1_1 ;  S(1) = 1
  r.expect_equal("antipode_unit_coproduct_flip", {}, apply_block(apply_block(d1, 1, n, s), n, 1, s), flip(d1, n, n));
  r.expect_equal("antipode_unit", {}, h.S(one), one);

  // S(H_L) = H_R, S(H_R) = H_L, bijectively; separability idempotents.
  r.expect("antipode_maps_HL_onto_HR", {}, Subspace::column_span(Matrix(s * HL.basis_columns())) == HR);
  r.expect("antipode_maps_HR_onto_HL", {}, Subspace::column_span(Matrix(s * HR.basis_columns())) == HL);
  std::optional<CanonicalProjections> proj;
  try {
    proj = canonical_projections(h);
  } catch (const AntipodeNotBijectiveOnCounital& ex) {
    r.expect("antipode_bijective_on_counital", {}, false, ex.what());
  }
  const char* dependent[] = {"S_L_inverse", "S_R_inverse", "separability_L", "separability_R",
                             "unit_coproduct_S_R_inverse", "unit_coproduct_S_L_inverse"};
  if (!proj) {
    for (const char* id : dependent) r.skip(id, "antipode not bijective on counital subalgebras");
    return r;
  }
  r.expect("antipode_bijective_on_counital", {}, true);
  for (Index i = 0; i < HR.dim(); ++i) {
    const Vector w = HR.vector(i);
    r.expect_equal("S_L_inverse", {i}, h.S(proj->S_L_inv * w), w);
    r.expect("S_L_inverse", {i}, HL.contains(Vector(proj->S_L_inv * w)));
    r.expect_equal("S_R_inverse", {i}, Vector(proj->S_R_inv * h.S(w)), w);
  }
  for (Index i = 0; i < HL.dim(); ++i) {
    const Vector z = HL.vector(i);
    r.expect_equal("S_R_inverse", {i}, h.S(proj->S_R_inv * z), z);
    r.expect("S_R_inverse", {i}, HR.contains(Vector(proj->S_R_inv * z)));
    r.expect_equal("S_L_inverse", {i}, Vector(proj->S_L_inv * h.S(z)), z);
  }

  const Subspace hl_hl = Subspace::row_span(kron(HL.basis(), HL.basis()));
  const Subspace hr_hr = Subspace::row_span(kron(HR.basis(), HR.basis()));
  r.expect_equal("separability_L", {}, proj->e_L, apply_block(d1, 1, n, el));
  r.expect("separability_L", {}, hl_hl.contains(proj->e_L));
  r.expect_equal("separability_L", {}, apply(mult, proj->e_L), one);
  r.expect_equal("separability_R", {}, proj->e_R, apply_block(d1, n, 1, er));
  r.expect("separability_R", {}, hr_hr.contains(proj->e_R));
  r.expect_equal("separability_R", {}, apply(mult, proj->e_R), one);
  for (Index i = 0; i < HL.dim(); ++i) {
    const Vector z = HL.vector(i);
    // z S(1_1) ⊗ 1_2 = S(1_1) ⊗ 1_2 z
    r.expect_equal("separability_L", {i}, mul2(tv(z, one), proj->e_L), mul2(proj->e_L, tv(one, z)));
    // 1_1 S_R^{-1}(z) ⊗ 1_2 = 1_1 ⊗ 1_2 z
    r.expect_equal("unit_coproduct_S_R_inverse", {i}, mul2(d1, tv(Vector(proj->S_R_inv * z), one)),
                   mul2(d1, tv(one, z)));
  }
  for (Index i = 0; i < HR.dim(); ++i) {
    const Vector w = HR.vector(i);
    // 1_1 ⊗ S(1_2) w = w 1_1 ⊗ S(1_2)
    r.expect_equal("separability_R", {i}, mul2(proj->e_R, tv(one, w)), mul2(tv(w, one), proj->e_R));
    // 1_1 ⊗ S_L^{-1}(w) 1_2 = w 1_1 ⊗ 1_2
    r.expect_equal("unit_coproduct_S_L_inverse", {i}, mul2(tv(one, Vector(proj->S_L_inv * w)), d1),
                   mul2(tv(w, one), d1));
  }
  return r;
}

std::optional<Matrix> antipode_inverse(const WeakHopfAlgebra& h) { return inverse(h.antipode); }

bool is_hopf_algebra(const WeakHopfAlgebra& h) {
  const Vector one = h.one();
  if (!(h.unit_coproduct() == Vector(tensor_vec(one, one)))) return false;
  const Matrix e = h.counit_form();
  for (Index i = 0; i < h.dim(); ++i)
    for (Index j = 0; j < h.dim(); ++j)
      if (e(i, j) != h.coalg.counit(i) * h.coalg.counit(j)) return false;
  return true;
}

}  // namespace whopf
