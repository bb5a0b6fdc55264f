#include "whopf/globalize.hpp"

#include <string>
#include <utility>
#include <vector>

namespace whopf {

namespace {

/// Σ_{Δx} (x_1▷f)∗(x_2▷g) in a module algebra.
Vector twisted_product(const PartialActionMap& m, Index h, const Vector& f, const Vector& g) {
  const Index nH = m.dim_H();
  Vector out = Vector::Zero(m.dim_A());
  for (Index idx = 0; idx < nH * nH; ++idx) {
    const Rational& c = m.H.coalg.delta(idx, h);
    if (!c.is_zero()) out += c * m.A.product(m.act_basis(idx / nH, f), m.act_basis(idx % nH, g));
  }
  return out;
}

/// h▷θ(a_j) for all (h, j), column tensor_index(h, j, dim A).
Matrix generators(const PartialActionMap& ambient, const Matrix& theta) {
  const Index nH = ambient.dim_H();
  const Index nA = theta.cols();
  Matrix out(theta.rows(), nH * nA);
  for (Index h = 0; h < nH; ++h)
    for (Index j = 0; j < nA; ++j) out.col(tensor_index(h, j, nA)) = ambient.act_basis(h, theta.col(j));
  return out;
}

/// Each generator times each element of θ(A), on the given side, lies in θ(A).
bool ideal_side(const Globalization& g, bool left) {
  const Subspace image = Subspace::column_span(g.theta);
  const Matrix gens = generators(g.ambient, g.theta);
  for (Index k = 0; k < gens.cols(); ++k)
    for (Index j = 0; j < g.theta.cols(); ++j) {
      const Vector x = left ? g.ambient.A.product(gens.col(k), g.theta.col(j))
                            : g.ambient.A.product(g.theta.col(j), gens.col(k));
      if (!image.contains(x)) return false;
    }
  return true;
}

std::vector<std::string> numbered(const std::string& prefix, Index n) {
  std::vector<std::string> out;
  for (Index i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

}  // namespace

ConvolutionAlgebra convolution_algebra(const WeakHopfAlgebra& H, const FinDimAlgebra& A) {
  const Index nH = H.dim();
  const Index nA = A.dim();
  const Index n = nH * nA;
  FinDimAlgebra F;
  for (Index i = 0; i < nH; ++i)
    for (Index j = 0; j < nA; ++j)
      F.labels.push_back(H.labels()[static_cast<std::size_t>(i)] + "*⊗" + A.labels[static_cast<std::size_t>(j)]);

  // (h_i*⊗a_j)∗(h_k*⊗a_l) = Σ_m Δ(h_m)[i,k] h_m*⊗a_ja_l
  F.mult = Matrix::Zero(n, n * n);
  for (Index i = 0; i < nH; ++i)
    for (Index k = 0; k < nH; ++k)
      for (Index m = 0; m < nH; ++m) {
        const Rational& c = H.coalg.delta(tensor_index(i, k, nH), m);
        if (c.is_zero()) continue;
        for (Index j = 0; j < nA; ++j)
          for (Index l = 0; l < nA; ++l) {
            const Index col = tensor_index(tensor_index(i, j, nA), tensor_index(k, l, nA), n);
            for (Index r = 0; r < nA; ++r) {
              const Rational& w = A.mult(r, tensor_index(j, l, nA));
              if (!w.is_zero()) F.mult(tensor_index(m, r, nA), col) += c * w;
            }
          }
      }
  F.unit = tensor_vec(H.coalg.counit, A.unit);

  // h_p▷(h_i*⊗a_j) = Σ_m [coefficient of h_i in h_m h_p] h_m*⊗a_j
  Matrix act = Matrix::Zero(n, nH * n);
  for (Index p = 0; p < nH; ++p)
    for (Index i = 0; i < nH; ++i)
      for (Index m = 0; m < nH; ++m) {
        const Rational& c = H.alg.mult(i, tensor_index(m, p, nH));
        if (c.is_zero()) continue;
        for (Index j = 0; j < nA; ++j) act(tensor_index(m, j, nA), tensor_index(p, tensor_index(i, j, nA), n)) = c;
      }

  ConvolutionAlgebra conv{PartialActionMap{H, std::move(F), std::move(act)}, VerificationReport("convolution algebra")};
  const PartialActionMap& m = conv.module;
  conv.report.merge(check_algebra(m.A));
  for (Index f = 0; f < n; ++f) {
    const Vector x = m.A.basis(f);
    conv.report.expect_equal("unit_action", {f}, m.act_on(H.one(), x), x);
    for (Index g = 0; g < nH; ++g)
      for (Index h = 0; h < nH; ++h)
        conv.report.expect_equal("module_law", {g, h, f}, m.act_basis(g, m.act_basis(h, x)),
                                 m.act_on(H.product(H.basis(g), H.basis(h)), x));
    for (Index g = 0; g < n; ++g)
      for (Index h = 0; h < nH; ++h)
        conv.report.expect_equal("module_algebra", {h, f, g}, m.act_basis(h, m.A.product(x, m.A.basis(g))),
                                 twisted_product(m, h, x, m.A.basis(g)));
  }
  return conv;
}

std::optional<Vector> unit_of(const PartialActionMap& ambient, const Subspace& B) {
  const Index n = B.ambient_dim();
  const Index d = B.dim();
  if (d == 0) return Vector(Vector::Zero(n));
  Matrix lhs = Matrix::Zero(2 * d * n, d);
  Vector rhs(2 * d * n);
  for (Index j = 0; j < d; ++j) {
    const Vector bj = B.vector(j);
    rhs.segment(2 * j * n, n) = bj;
    rhs.segment((2 * j + 1) * n, n) = bj;
    for (Index k = 0; k < d; ++k) {
      lhs.block(2 * j * n, k, n, 1) = ambient.A.product(B.vector(k), bj);
      lhs.block((2 * j + 1) * n, k, n, 1) = ambient.A.product(bj, B.vector(k));
    }
  }
  const auto c = solve(lhs, rhs);
  if (!c) return std::nullopt;
  return Vector(B.basis_columns() * *c);
}

Subspace annihilated_submodule(const Globalization& g) {
  const Index n = g.B.ambient_dim();
  const Index nH = g.ambient.dim_H();
  const Index d = g.B.dim();
  if (d == 0) return Subspace(n);
  const Matrix left = g.ambient.A.left_multiplication(g.theta_one());
  const Matrix basis = g.B.basis_columns();
  Matrix stacked(nH * n, d);
  for (Index h = 0; h < nH; ++h) stacked.middleRows(h * n, n) = left * g.ambient.operator_of(h) * basis;
  const Subspace coords = kernel(stacked);
  if (coords.dim() == 0) return Subspace(n);
  return Subspace::row_span(Matrix(coords.basis() * g.B.basis()));
}

bool check_minimality(const Globalization& g) { return annihilated_submodule(g).dim() == 0; }

Globalization make_globalization(PartialActionMap ambient, Subspace B, Matrix theta, const PartialActionMap& p) {
  if (theta.rows() != ambient.dim_A() || theta.cols() != p.dim_A() || B.ambient_dim() != ambient.dim_A())
    throw DimensionMismatch("globalization data has inconsistent dimensions");
  Globalization g;
  g.ambient = std::move(ambient);
  g.B = std::move(B);
  g.theta = std::move(theta);
  g.induced = PartialActionMap{p.H, p.A, Matrix()};
  const Index nH = p.dim_H();
  const Index nA = p.dim_A();
  const Vector one = g.theta_one();
  Matrix act(nA, nH * nA);
  bool induced_ok = true;
  for (Index h = 0; h < nH && induced_ok; ++h)
    for (Index a = 0; a < nA && induced_ok; ++a) {
      const auto pre = solve(g.theta, g.ambient.A.product(one, g.ambient.act_basis(h, g.theta.col(a))));
      if (pre) act.col(tensor_index(h, a, nA)) = *pre;
      induced_ok = pre.has_value();
    }
  if (induced_ok) g.induced.act = std::move(act);
  g.is_ideal = ideal_side(g, false) && ideal_side(g, true);
  g.is_minimal = check_minimality(g);
  g.unit = unit_of(g.ambient, g.B);
  return g;
}

VerificationReport check_globalization(const Globalization& g, const PartialActionMap& p) {
  VerificationReport rep("globalization");
  const PartialActionMap& m = g.ambient;
  const Index nH = p.dim_H();
  const Index nA = p.dim_A();
  if (g.theta.rows() != m.dim_A() || g.theta.cols() != nA || m.dim_H() != nH)
    throw DimensionMismatch("globalization data has inconsistent dimensions");
  const Subspace image = Subspace::column_span(g.theta);
  const Matrix gens = generators(m, g.theta);
  const Vector one = g.theta_of(p.A.one());

  rep.expect("theta_injective", {}, rank(g.theta) == nA);
  for (Index i = 0; i < nA; ++i)
    for (Index j = 0; j < nA; ++j)
      rep.expect_equal("theta_multiplicative", {i, j}, g.theta_of(p.A.product(p.A.basis(i), p.A.basis(j))),
                       m.A.product(g.theta.col(i), g.theta.col(j)));
  rep.expect_equal("theta_multiplicative_unit", {}, m.A.product(one, one), one);
  for (Index j = 0; j < nA; ++j) rep.expect("theta_into_B", {j}, g.B.contains(Vector(g.theta.col(j))));

  for (Index i = 0; i < g.B.dim(); ++i) {
    const Vector x = g.B.vector(i);
    rep.expect_equal("B_unit_action", {i}, m.act_on(p.H.one(), x), x);
    for (Index h = 0; h < nH; ++h) rep.expect("B_stable", {h, i}, g.B.contains(m.act_basis(h, x)));
    for (Index j = 0; j < g.B.dim(); ++j) {
      const Vector y = g.B.vector(j);
      rep.expect("B_subalgebra", {i, j}, g.B.contains(m.A.product(x, y)));
      for (Index h = 0; h < nH; ++h)
        rep.expect_equal("B_module_algebra", {h, i, j}, m.act_basis(h, m.A.product(x, y)),
                         twisted_product(m, h, x, y));
    }
  }

  for (Index k = 0; k < gens.cols(); ++k)
    for (Index j = 0; j < nA; ++j)
      rep.expect("right_ideal", {k, j}, image.contains(m.A.product(g.theta.col(j), gens.col(k))));
  for (Index h = 0; h < nH; ++h)
    for (Index a = 0; a < nA; ++a)
      rep.expect_equal("induced_action", {h, a}, g.theta_of(p.act_basis(h, p.A.basis(a))),
                       m.A.product(one, gens.col(tensor_index(h, a, nA))));
  rep.expect("spanning", {}, g.B == Subspace::column_span(gens));
  return rep;
}

Globalization standard_globalization(const PartialActionMap& p) {
  check_action_shape(p);
  ConvolutionAlgebra conv = convolution_algebra(p.H, p.A);
  if (!conv.report.ok()) throw GlobalizationAxiomFailure("convolution algebra: " + conv.report.summary());
  const Index nH = p.dim_H();
  const Index nA = p.dim_A();
  // φ(a_j) = Σ_i h_i*⊗(h_i·a_j)
  Matrix theta(nH * nA, nA);
  for (Index i = 0; i < nH; ++i)
    for (Index l = 0; l < nA; ++l)
      for (Index j = 0; j < nA; ++j) theta(tensor_index(i, l, nA), j) = p.act(l, tensor_index(i, j, nA));
  Subspace B = Subspace::column_span(generators(conv.module, theta));
  Globalization g = make_globalization(std::move(conv.module), std::move(B), std::move(theta), p);
  const VerificationReport rep = check_globalization(g, p);
  if (!rep.ok()) throw GlobalizationAxiomFailure(rep.summary());
  return g;
}

std::pair<bool, bool> check_ideal_iff_symmetric(const Globalization& g, const PartialActionMap& p) {
  const std::pair<bool, bool> out{ideal_side(g, false) && ideal_side(g, true), check_symmetric(p)};
  if (out.first != out.second)
    throw ConsistencyFailure(std::string("θ(A) is ") + (out.first ? "" : "not ") + "an ideal but the action is " +
                             (out.second ? "symmetric" : "not symmetric"));
  return out;
}

PartialActionMap restrict_to_B(const Globalization& g) {
  const Index d = g.B.dim();
  const Index nH = g.ambient.dim_H();
  auto coords = [&](const Vector& v) {
    const auto c = g.B.try_coordinates(v);
    if (!c) throw GlobalizationAxiomFailure("B is not closed under the module algebra operations");
    return *c;
  };
  FinDimAlgebra alg;
  alg.labels = numbered("b", d);
  alg.mult = Matrix(d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      alg.mult.col(tensor_index(i, j, d)) = coords(g.ambient.A.product(g.B.vector(i), g.B.vector(j)));
  if (g.unit) alg.unit = coords(*g.unit);
  Matrix act(d, nH * d);
  for (Index h = 0; h < nH; ++h)
    for (Index i = 0; i < d; ++i) act.col(tensor_index(h, i, d)) = coords(g.ambient.act_basis(h, g.B.vector(i)));
  return PartialActionMap{g.ambient.H, std::move(alg), std::move(act)};
}

ComparisonMorphism globalization_morphism(const Globalization& other, const Globalization& standard) {
  if (other.theta.cols() != standard.theta.cols() || other.ambient.dim_H() != standard.ambient.dim_H())
    throw DimensionMismatch("globalizations of different actions");
  const Matrix src_gens = generators(other.ambient, other.theta);
  const Matrix dst_gens = generators(standard.ambient, standard.theta);
  Matrix src(other.B.dim(), src_gens.cols());
  Matrix dst(standard.B.dim(), dst_gens.cols());
  for (Index k = 0; k < src_gens.cols(); ++k) {
    const auto s = other.B.try_coordinates(src_gens.col(k));
    const auto t = standard.B.try_coordinates(dst_gens.col(k));
    if (!s || !t) throw IllDefined("generator h▷θ(a) outside B");
    src.col(k) = *s;
    dst.col(k) = *t;
  }
  const auto phi = linear_map_through(src, dst);
  if (!phi) throw IllDefined("Σ h_i▷θ(a) ↦ Σ h_i▷φ(a) is not a well-defined linear map");

  ComparisonMorphism out{*phi, false, false, VerificationReport("comparison morphism")};
  const Index r = rank(out.phi);
  out.surjective = r == standard.B.dim();
  out.injective = r == other.B.dim();
  out.report.expect("surjective", {}, out.surjective);
  const PartialActionMap from = restrict_to_B(other);
  const PartialActionMap to = restrict_to_B(standard);
  for (Index i = 0; i < from.dim_A(); ++i) {
    const Vector x = from.A.basis(i);
    const Vector fx = apply(out.phi, x);
    for (Index j = 0; j < from.dim_A(); ++j) {
      const Vector y = from.A.basis(j);
      out.report.expect_equal("multiplicative", {i, j}, apply(out.phi, from.A.product(x, y)),
                              to.A.product(fx, apply(out.phi, y)));
    }
    for (Index h = 0; h < from.dim_H(); ++h)
      out.report.expect_equal("equivariant", {h, i}, apply(out.phi, from.act_basis(h, x)), to.act_basis(h, fx));
  }
  return out;
}

}  // namespace whopf
