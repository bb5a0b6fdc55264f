#include "whopf/paction.hpp"

#include <string>
#include <utility>

namespace whopf {

namespace {

struct Term {
  Index left;
  Index right;
  Rational coeff;
};

/// Nonzero terms of a tensor x ∈ H⊗H.
std::vector<Term> terms(const Vector& x, Index n) {
  std::vector<Term> out;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (!x(tensor_index(i, j, n)).is_zero()) out.push_back({i, j, x(tensor_index(i, j, n))});
  return out;
}

/// Evaluation helpers shared by the checks.
class Eval {
 public:
  explicit Eval(const PartialActionMap& p) : p_(p), nH_(p.dim_H()), nA_(p.dim_A()) {
    check_action_shape(p);
    ops_.reserve(static_cast<std::size_t>(nH_));
    for (Index h = 0; h < nH_; ++h) ops_.push_back(p.operator_of(h));
    for (Index h = 0; h < nH_; ++h) delta_.push_back(terms(p.H.coalg.delta.col(h), nH_));
  }

  Index nH() const { return nH_; }
  Index nA() const { return nA_; }
  const Matrix& op(Index h) const { return ops_[static_cast<std::size_t>(h)]; }
  const std::vector<Term>& delta(Index h) const { return delta_[static_cast<std::size_t>(h)]; }
  Vector one() const { return p_.A.one(); }
  Vector hb(Index i) const { return p_.H.basis(i); }
  Vector ab(Index i) const { return p_.A.basis(i); }

  Vector act(Index h, const Vector& a) const { return apply(op(h), a); }
  Vector act(const Vector& x, const Vector& a) const {
    Vector out = Vector::Zero(nA_);
    for (Index i = 0; i < nH_; ++i)
      if (!x(i).is_zero()) out += x(i) * act(i, a);
    return out;
  }
  Vector mul(const Vector& a, const Vector& b) const { return p_.A.product(a, b); }
  Vector hmul(const Vector& x, const Vector& y) const { return p_.H.product(x, y); }
  Vector hmul(Index i, Index j) const { return p_.H.alg.mult.col(tensor_index(i, j, nH_)); }

 private:
  const PartialActionMap& p_;
  Index nH_, nA_;
  std::vector<Matrix> ops_;
  std::vector<std::vector<Term>> delta_;
};

Vector coordinate_combination(const std::vector<Matrix>& maps, const Vector& c, const Vector& a) {
  Vector out = Vector::Zero(a.size());
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (!c(static_cast<Index>(i)).is_zero()) out += c(static_cast<Index>(i)) * apply(maps[i], a);
  return out;
}

}  // namespace

Matrix PartialActionMap::operator_of(const Vector& x) const {
  Matrix m = Matrix::Zero(dim_A(), dim_A());
  for (Index i = 0; i < dim_H(); ++i)
    if (!x(i).is_zero()) m += x(i) * operator_of(i);
  return m;
}

void check_action_shape(const PartialActionMap& p) {
  if (p.act.rows() != p.dim_A() || p.act.cols() != p.dim_H() * p.dim_A())
    throw DimensionMismatch("action matrix must be dim(A) x dim(H)*dim(A)");
  if (p.A.unit.size() != p.dim_A() || p.A.mult.cols() != p.dim_A() * p.dim_A())
    throw DimensionMismatch("acted-on algebra is malformed");
  if (p.H.coalg.delta.rows() != p.dim_H() * p.dim_H() || p.H.coalg.delta.cols() != p.dim_H())
    throw DimensionMismatch("acting weak Hopf algebra is malformed");
}

VerificationReport check_partial_action(const PartialActionMap& p) {
  const Eval ev(p);
  const Index nH = ev.nH(), nA = ev.nA();
  VerificationReport r("partial action");
  const Vector one = ev.one();
  for (Index a = 0; a < nA; ++a) r.expect_equal("unit", {a}, ev.act(p.H.one(), ev.ab(a)), ev.ab(a));
  for (Index h = 0; h < nH; ++h) {
    // h·ab = (h_1·a)(h_2·b)
    for (Index a = 0; a < nA; ++a)
      for (Index b = 0; b < nA; ++b) {
        Vector rhs = Vector::Zero(nA);
        for (const Term& t : ev.delta(h)) rhs += t.coeff * ev.mul(ev.act(t.left, ev.ab(a)), ev.act(t.right, ev.ab(b)));
        r.expect_equal("multiplicative", {h, a, b}, ev.act(h, ev.mul(ev.ab(a), ev.ab(b))), rhs);
      }
    // h·(k·a) = (h_1·1_A)(h_2k·a)
    for (Index k = 0; k < nH; ++k)
      for (Index a = 0; a < nA; ++a) {
        Vector rhs = Vector::Zero(nA);
        for (const Term& t : ev.delta(h))
          rhs += t.coeff * ev.mul(ev.act(t.left, one), ev.act(ev.hmul(t.right, k), ev.ab(a)));
        r.expect_equal("composition", {h, k, a}, ev.act(h, ev.act(k, ev.ab(a))), rhs);
      }
  }
  return r;
}

VerificationReport symmetry_report(const PartialActionMap& p) {
  const Eval ev(p);
  VerificationReport r("symmetry");
  const Vector one = ev.one();
  r.touch("symmetric_composition");
  for (Index h = 0; h < ev.nH(); ++h)
    for (Index k = 0; k < ev.nH(); ++k)
      for (Index a = 0; a < ev.nA(); ++a) {
        // h·(k·a) = (h_1k·a)(h_2·1_A)
        Vector rhs = Vector::Zero(ev.nA());
        for (const Term& t : ev.delta(h))
          rhs += t.coeff * ev.mul(ev.act(ev.hmul(t.left, k), ev.ab(a)), ev.act(t.right, one));
        r.expect_equal("symmetric_composition", {h, k, a}, ev.act(h, ev.act(k, ev.ab(a))), rhs);
      }
  return r;
}

bool check_symmetric(const PartialActionMap& p) { return symmetry_report(p).ok(); }

VerificationReport derived_identity_suite(const PartialActionMap& p) {
  const Eval ev(p);
  const Index nH = ev.nH(), nA = ev.nA();
  const Vector one = ev.one();
  const CanonicalProjections proj = canonical_projections(p.H);
  const bool symmetric = check_symmetric(p);
  const std::optional<Matrix> s_inv = antipode_inverse(p.H);
  const Matrix& s = p.H.antipode;
  const std::vector<Term> d1 = terms(p.H.unit_coproduct(), nH);
  VerificationReport r("partial action identities");

  // Absorption: w·(h·a) = wh·a for w ∈ H_R, and for w ∈ H_L when symmetric.
  auto absorption = [&](const char* id, const Subspace& W) {
    for (Index i = 0; i < W.dim(); ++i)
      for (Index h = 0; h < nH; ++h)
        for (Index a = 0; a < nA; ++a)
          r.expect_equal(id, {i, h, a}, ev.act(W.vector(i), ev.act(h, ev.ab(a))),
                         ev.act(ev.hmul(W.vector(i), ev.hb(h)), ev.ab(a)));
  };
  absorption("HR_absorption", proj.HR);
  if (symmetric)
    absorption("HL_absorption", proj.HL);
  else
    r.skip("HL_absorption", "action is not symmetric");

  for (Index i = 0; i < proj.HL.dim(); ++i) {
    const Vector z = proj.HL.vector(i);
    for (Index a = 0; a < nA; ++a) {
      for (Index b = 0; b < nA; ++b)
        r.expect_equal("HL_right_linear", {i, a, b}, ev.mul(ev.act(z, ev.ab(a)), ev.ab(b)),
                       ev.act(z, ev.mul(ev.ab(a), ev.ab(b))));
      for (Index h = 0; h < nH; ++h)
        r.expect_equal("HL_unit_factor", {i, h, a}, ev.mul(ev.act(z, one), ev.act(h, ev.ab(a))),
                       ev.act(z, ev.act(h, ev.ab(a))));
    }
  }
  for (Index i = 0; i < proj.HR.dim(); ++i) {
    const Vector w = proj.HR.vector(i);
    r.expect_equal("HR_unit_via_eps_L", {i}, ev.act(Vector(proj.eps_L * w), one), ev.act(w, one));
    for (Index a = 0; a < nA; ++a) {
      for (Index b = 0; b < nA; ++b)
        r.expect_equal("HR_left_linear", {i, a, b}, ev.mul(ev.ab(a), ev.act(w, ev.ab(b))),
                       ev.act(w, ev.mul(ev.ab(a), ev.ab(b))));
      for (Index h = 0; h < nH; ++h)
        r.expect_equal("HR_unit_factor", {i, h, a}, ev.mul(ev.act(h, ev.ab(a)), ev.act(w, one)),
                       ev.act(ev.hmul(w, ev.hb(h)), ev.ab(a)));
    }
  }

  if (!symmetric) r.skip("inverse_antipode_expansion", "action is not symmetric");
  else if (!s_inv) r.skip("inverse_antipode_expansion", "antipode is not invertible");
  if (!symmetric) r.skip("nonunital_right", "action is not symmetric");

  for (Index h = 0; h < nH; ++h)
    for (Index k = 0; k < nH; ++k)
      for (Index a = 0; a < nA; ++a)
        for (Index b = 0; b < nA; ++b) {
          const Vector lhs = ev.mul(ev.act(h, ev.ab(a)), ev.act(k, ev.ab(b)));
          // (h·a)(k·b) = (1_1h·a)(1_2k·b)
          Vector split = Vector::Zero(nA);
          for (const Term& t : d1)
            split += t.coeff * ev.mul(ev.act(ev.hmul(t.left, h), ev.ab(a)), ev.act(ev.hmul(t.right, k), ev.ab(b)));
          r.expect_equal("unit_coproduct_split", {h, k, a, b}, lhs, split);
          // (h·a)(k·b) = h_1·(a(S(h_2)k·b))
          Vector expand = Vector::Zero(nA);
          for (const Term& t : ev.delta(h)) {
            const Vector sk = ev.hmul(Vector(s.col(t.right)), ev.hb(k));
            expand += t.coeff * ev.act(t.left, ev.mul(ev.ab(a), ev.act(sk, ev.ab(b))));
          }
          r.expect_equal("antipode_expansion", {h, k, a, b}, lhs, expand);
          // (h·a)(k·b) = k_2·((S⁻¹(k_1)h·a)b)
          if (symmetric && s_inv) {
            Vector inv = Vector::Zero(nA);
            for (const Term& t : ev.delta(k)) {
              const Vector sh = ev.hmul(Vector(s_inv->col(t.left)), ev.hb(h));
              inv += t.coeff * ev.act(t.right, ev.mul(ev.act(sh, ev.ab(a)), ev.ab(b)));
            }
            r.expect_equal("inverse_antipode_expansion", {h, k, a, b}, lhs, inv);
          }
          // h·(a(k·b)) = (h_1·a)(h_2k·b)
          Vector left = Vector::Zero(nA);
          for (const Term& t : ev.delta(h))
            left += t.coeff * ev.mul(ev.act(t.left, ev.ab(a)), ev.act(ev.hmul(t.right, k), ev.ab(b)));
          r.expect_equal("nonunital_left", {h, k, a, b}, ev.act(h, ev.mul(ev.ab(a), ev.act(k, ev.ab(b)))), left);
          // h·((k·a)b) = (h_1k·a)(h_2·b)
          if (symmetric) {
            Vector right = Vector::Zero(nA);
            for (const Term& t : ev.delta(h))
              right += t.coeff * ev.mul(ev.act(ev.hmul(t.left, k), ev.ab(a)), ev.act(t.right, ev.ab(b)));
            r.expect_equal("nonunital_right", {h, k, a, b}, ev.act(h, ev.mul(ev.act(k, ev.ab(a)), ev.ab(b))),
                           right);
          }
        }
  return r;
}

bool is_global(const PartialActionMap& p) {
  const Eval ev(p);
  const Matrix el = p.H.eps_L();
  const Vector one = ev.one();
  bool criterion = true;
  for (Index h = 0; h < ev.nH() && criterion; ++h) criterion = ev.act(h, one) == ev.act(Vector(el.col(h)), one);
  bool module_law = true;
  for (Index h = 0; h < ev.nH() && module_law; ++h)
    for (Index k = 0; k < ev.nH() && module_law; ++k)
      for (Index a = 0; a < ev.nA() && module_law; ++a)
        module_law = ev.act(h, ev.act(k, ev.ab(a))) == ev.act(ev.hmul(h, k), ev.ab(a));
  if (criterion != module_law)
    throw ConsistencyFailure(std::string("globality criterion h·1 = ε_L(h)·1 is ") + (criterion ? "met" : "not met") +
                             " but the module law " + (module_law ? "holds" : "fails"));
  return criterion;
}

ActionFlags action_flags(const PartialActionMap& p) {
  ActionFlags f;
  f.is_partial = check_partial_action(p).ok();
  if (f.is_partial) {
    f.is_symmetric = check_symmetric(p);
    f.is_global = is_global(p);
  }
  return f;
}

PartialActionMap induced_partial_action(const PartialActionMap& global, const Subspace& A, const Vector& one_A,
                                        const std::optional<Subspace>& B) {
  check_action_shape(global);
  const Index nB = global.dim_A();
  const Subspace outer = B ? *B : Subspace::full(nB);
  if (A.ambient_dim() != nB || outer.ambient_dim() != nB || one_A.size() != nB)
    throw DimensionMismatch("induced action: subspace ambient dimension differs from the algebra");
  if (A.dim() == 0) throw NotUnitalSubalgebra("induced action: the subalgebra is zero");
  if (!A.contains(one_A)) throw NotUnitalSubalgebra("induced action: unit does not lie in the subalgebra");
  const FinDimAlgebra& alg = global.A;
  const Index d = A.dim();
  for (Index i = 0; i < d; ++i) {
    const Vector x = A.vector(i);
    if (alg.product(one_A, x) != x || alg.product(x, one_A) != x)
      throw NotUnitalSubalgebra("induced action: given unit is not a two-sided unit");
    for (Index j = 0; j < d; ++j)
      if (!A.contains(alg.product(x, A.vector(j))))
        throw NotUnitalSubalgebra("induced action: subspace is not closed under multiplication");
  }
  if (!outer.contains(A)) throw NotARightIdeal("induced action: subspace does not lie in the ambient algebra");
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < outer.dim(); ++j)
      if (!A.contains(alg.product(A.vector(i), outer.vector(j))))
        throw NotARightIdeal("induced action: subspace is not a right ideal");

  PartialActionMap out;
  out.H = global.H;
  out.A.mult = Matrix(d, d * d);
  for (Index i = 0; i < d; ++i) {
    out.A.labels.push_back("a" + std::to_string(i + 1));
    for (Index j = 0; j < d; ++j)
      out.A.mult.col(tensor_index(i, j, d)) = A.coordinates(alg.product(A.vector(i), A.vector(j)));
  }
  out.A.unit = A.coordinates(one_A);
  out.act = Matrix(d, global.dim_H() * d);
  for (Index h = 0; h < global.dim_H(); ++h)
    for (Index i = 0; i < d; ++i) {
      const Vector moved = global.act_basis(h, A.vector(i));
      if (!outer.contains(moved))
        throw GlobalizationAxiomFailure("induced action: ambient algebra is not stable under the action");
      out.act.col(tensor_index(h, i, d)) = A.coordinates(alg.product(one_A, moved));
    }
  return out;
}

RightHLModule right_HL_module(const PartialActionMap& p) {
  check_action_shape(p);
  const CanonicalProjections proj = canonical_projections(p.H);
  const Eval ev(p);
  const Index nA = ev.nA();
  const Vector one = ev.one();
  RightHLModule m;
  m.HL = proj.HL;
  m.report = VerificationReport("right H_L-module");
  std::vector<Vector> lifts;
  for (Index i = 0; i < m.HL.dim(); ++i) {
    lifts.push_back(proj.S_R_inv * m.HL.vector(i));
    m.maps.push_back(p.operator_of(lifts.back()));
  }
  for (Index a = 0; a < nA; ++a)
    m.report.expect_equal("unit", {a}, coordinate_combination(m.maps, m.HL.coordinates(p.H.one()), ev.ab(a)),
                          ev.ab(a));
  for (Index i = 0; i < m.HL.dim(); ++i) {
    const Vector z = m.HL.vector(i);
    for (Index j = 0; j < m.HL.dim(); ++j) {
      const Vector c = m.HL.coordinates(p.H.product(z, m.HL.vector(j)));
      for (Index a = 0; a < nA; ++a)
        m.report.expect_equal("module_law", {i, j, a}, apply(m.maps[static_cast<std::size_t>(j)],
                                                             apply(m.maps[static_cast<std::size_t>(i)], ev.ab(a))),
                              coordinate_combination(m.maps, c, ev.ab(a)));
    }
    const Vector lift_one = ev.act(lifts[static_cast<std::size_t>(i)], one);
    const Vector z_one = ev.act(z, one);
    for (Index a = 0; a < nA; ++a) {
      const Vector lhs = apply(m.maps[static_cast<std::size_t>(i)], ev.ab(a));
      m.report.expect_equal("right_multiplication_form", {i, a}, lhs, ev.mul(ev.ab(a), lift_one));
      m.report.expect_equal("counital_form", {i, a}, lhs, ev.mul(ev.ab(a), z_one));
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Groupoid correspondence

namespace {

void check_pga_shape(const FiniteGroupoid& g, const PartialGroupoidAction& pga) {
  const auto n = static_cast<std::size_t>(g.size());
  if (pga.domains.size() != n || pga.units.size() != n || pga.isos.size() != n)
    throw DimensionMismatch("groupoid action needs one domain, unit and map per arrow");
  const Index nA = pga.A.dim();
  for (std::size_t i = 0; i < n; ++i)
    if (pga.domains[i].ambient_dim() != nA || pga.units[i].size() != nA || pga.isos[i].rows() != nA ||
        pga.isos[i].cols() != nA)
      throw DimensionMismatch("groupoid action data for arrow " + g.arrows[i] + " has the wrong size");
}

bool is_ideal_of(const FinDimAlgebra& alg, const Subspace& ideal, const Subspace& in) {
  for (Index i = 0; i < ideal.dim(); ++i)
    for (Index j = 0; j < in.dim(); ++j)
      if (!ideal.contains(alg.product(ideal.vector(i), in.vector(j))) ||
          !ideal.contains(alg.product(in.vector(j), ideal.vector(i))))
        return false;
  return in.contains(ideal);
}

bool is_groupoid_algebra_of(const FiniteGroupoid& g, const WeakHopfAlgebra& h) {
  const WeakHopfAlgebra k = groupoid_algebra(g);
  return h.dim() == k.dim() && h.alg.mult == k.alg.mult && h.alg.unit == k.alg.unit &&
         h.coalg.delta == k.coalg.delta && h.coalg.counit == k.coalg.counit && h.antipode == k.antipode;
}

}  // namespace

VerificationReport check_groupoid_paction(const FiniteGroupoid& g, const PartialGroupoidAction& pga) {
  require_groupoid(g);
  check_pga_shape(g, pga);
  const FinDimAlgebra& A = pga.A;
  const Index nA = A.dim();
  const Subspace whole = Subspace::full(nA);
  auto D = [&](int a) -> const Subspace& { return pga.domains[static_cast<std::size_t>(a)]; };
  auto U = [&](int a) -> const Vector& { return pga.units[static_cast<std::size_t>(a)]; };
  auto alpha = [&](int a) -> const Matrix& { return pga.isos[static_cast<std::size_t>(a)]; };
  VerificationReport r("groupoid partial action");
  using I = Index;

  for (int a = 0; a < g.size(); ++a) {
    const Subspace& Da = D(a);
    const int ai = g.inv[a];
    r.expect("unit_in_domain", {I(a)}, Da.contains(U(a)));
    for (Index i = 0; i < Da.dim(); ++i) {
      r.expect_equal("unit_left", {I(a), i}, A.product(U(a), Da.vector(i)), Da.vector(i));
      r.expect_equal("unit_right", {I(a), i}, A.product(Da.vector(i), U(a)), Da.vector(i));
    }
    for (Index j = 0; j < nA; ++j)
      r.expect_equal("unit_central", {I(a), j}, A.product(U(a), A.basis(j)), A.product(A.basis(j), U(a)));
    r.expect("domain_ideal_of_range", {I(a)}, is_ideal_of(A, Da, D(g.r[a])));
    if (g.is_identity(a)) {
      r.expect("identity_domain_ideal", {I(a)}, is_ideal_of(A, Da, whole));
      for (Index i = 0; i < Da.dim(); ++i)
        r.expect_equal("identity_acts_trivially", {I(a), i}, apply(alpha(a), Da.vector(i)), Da.vector(i));
    }
    // Ambient form: x ↦ α_a(x 1_{a⁻¹}) with image in D_a.
    for (Index j = 0; j < nA; ++j) {
      const Vector image = apply(alpha(a), A.basis(j));
      r.expect_equal("map_ambient_form", {I(a), j}, image, apply(alpha(a), A.product(A.basis(j), U(ai))));
      r.expect("map_into_domain", {I(a), j}, Da.contains(image));
    }
    const Subspace& Dinv = D(ai);
    const Matrix restricted = alpha(a) * Dinv.basis_columns();
    r.expect("map_bijective", {I(a)}, Dinv.dim() == Da.dim() && rank(restricted) == Dinv.dim());
    for (Index i = 0; i < Da.dim(); ++i)
      r.expect_equal("map_inverse", {I(a), i}, apply(alpha(a), apply(alpha(ai), Da.vector(i))), Da.vector(i));
    for (Index i = 0; i < Dinv.dim(); ++i) {
      for (Index j = 0; j < Dinv.dim(); ++j)
        r.expect_equal("map_multiplicative", {I(a), i, j}, apply(alpha(a), A.product(Dinv.vector(i), Dinv.vector(j))),
                       A.product(apply(alpha(a), Dinv.vector(i)), apply(alpha(a), Dinv.vector(j))));
    }
  }

  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b) {
      if (!g.composable(a, b)) continue;
      const int ab = g.comp[a][b];
      const int ai = g.inv[a], bi = g.inv[b], abi = g.inv[ab];
      // α_b⁻¹(D_{a⁻¹} ∩ D_b) ⊆ D_{(ab)⁻¹}, and α_a α_b = α_ab there.
      const Subspace meet = intersect(D(ai), D(b));
      for (Index i = 0; i < meet.dim(); ++i) {
        const Vector x = apply(alpha(bi), meet.vector(i));
        r.expect("domain_compatibility", {I(a), I(b), i}, D(abi).contains(x));
        r.expect_equal("composition", {I(a), I(b), i}, apply(alpha(a), apply(alpha(b), x)), apply(alpha(ab), x));
      }
      // α_a(α_b(x 1_{b⁻¹}) 1_{a⁻¹}) = α_ab(x 1_{(ab)⁻¹}) 1_a on D_{b⁻¹} ∩ D_{(ab)⁻¹}
      const Subspace both = intersect(D(bi), D(abi));
      for (Index i = 0; i < both.dim(); ++i) {
        const Vector x = both.vector(i);
        r.expect_equal("composition_with_units", {I(a), I(b), i}, apply(alpha(a), apply(alpha(b), x)),
                       A.product(apply(alpha(ab), x), U(a)));
      }
    }

  Subspace total(nA);
  const std::vector<int> ids = g.identities();
  for (int e : ids) total = total + D(e);
  r.expect("direct_sum_spans", {}, total == whole);
  for (int e : ids)
    for (int f : ids)
      if (e != f)
        r.expect("direct_sum_orthogonal_units", {I(e), I(f)}, is_zero_vector(A.product(U(e), U(f))));
  return r;
}

PartialActionMap groupoid_to_algebra_action(const FiniteGroupoid& g, const PartialGroupoidAction& pga) {
  const VerificationReport rep = check_groupoid_paction(g, pga);
  if (!rep.ok()) throw InvalidGroupoidAction(rep.summary());
  PartialActionMap p;
  p.H = groupoid_algebra(g);
  p.A = pga.A;
  const Index nA = p.A.dim();
  p.act = Matrix(nA, g.size() * nA);
  for (int a = 0; a < g.size(); ++a) p.act.middleCols(a * nA, nA) = pga.isos[static_cast<std::size_t>(a)];
  return p;
}

GroupoidCorrespondence algebra_to_groupoid_action(const FiniteGroupoid& g, const PartialActionMap& p) {
  require_groupoid(g);
  check_action_shape(p);
  if (!is_groupoid_algebra_of(g, p.H)) throw NotAGroupoidAlgebra("acting algebra is not the groupoid algebra");
  if (!check_partial_action(p).ok()) throw NotSymmetric("input is not a partial action");
  if (!check_symmetric(p)) throw NotSymmetric("partial action is not symmetric");

  const FinDimAlgebra& A = p.A;
  const Index nA = A.dim();
  const Vector one = A.one();
  GroupoidCorrespondence out;
  out.action.A = A;
  for (int a = 0; a < g.size(); ++a) {
    const Matrix op = p.operator_of(a);
    out.action.domains.push_back(Subspace::column_span(op));
    out.action.units.push_back(apply(op, one));
    out.action.isos.push_back(op);
  }
  auto D = [&](int a) -> const Subspace& { return out.action.domains[static_cast<std::size_t>(a)]; };
  auto U = [&](int a) -> const Vector& { return out.action.units[static_cast<std::size_t>(a)]; };
  auto op = [&](int a) -> const Matrix& { return out.action.isos[static_cast<std::size_t>(a)]; };
  VerificationReport& s = out.steps;
  s = VerificationReport("groupoid reconstruction");
  using I = Index;

  for (int a = 0; a < g.size(); ++a) {
    const int ai = g.inv[a];
    s.expect_equal("units_idempotent", {I(a)}, A.product(U(a), U(a)), U(a));
    Matrix unit_times(nA, nA);
    for (Index j = 0; j < nA; ++j) {
      const Vector x = A.basis(j);
      const Vector left = A.product(U(a), x);
      unit_times.col(j) = left;
      s.expect_equal("units_central", {I(a), j}, left, A.product(x, U(a)));
      // (δ_a·1)x = δ_a·(δ_{a⁻¹}·x) = x(δ_a·1)
      s.expect_equal("unit_conjugation", {I(a), j}, left, apply(op(a), apply(op(ai), x)));
      s.expect_equal("ambient_form", {I(a), j}, apply(op(a), x), apply(op(a), A.product(x, U(ai))));
    }
    s.expect("domain_generated_by_unit", {I(a)}, D(a) == Subspace::column_span(unit_times));
    std::vector<Vector> cut;
    for (Index i = 0; i < D(g.r[a]).dim(); ++i) cut.push_back(A.product(D(g.r[a]).vector(i), U(a)));
    s.expect("domain_cut_from_range", {I(a)}, D(a) == Subspace::span(nA, cut));
    for (Index i = 0; i < nA; ++i)
      for (Index j = 0; j < nA; ++j) {
        const Vector x = A.product(A.basis(i), U(ai));
        const Vector y = A.product(A.basis(j), U(ai));
        s.expect_equal("maps_multiplicative", {I(a), i, j}, apply(op(a), A.product(x, y)),
                       A.product(apply(op(a), x), apply(op(a), y)));
      }
    for (Index i = 0; i < D(a).dim(); ++i)
      s.expect_equal("maps_inverse", {I(a), i}, apply(op(a), apply(op(ai), D(a).vector(i))), D(a).vector(i));
    if (g.is_identity(a))
      for (Index i = 0; i < D(a).dim(); ++i)
        s.expect_equal("identity_maps_trivial", {I(a), i}, apply(op(a), D(a).vector(i)), D(a).vector(i));
  }
  s.merge(check_groupoid_paction(g, out.action));
  if (!s.ok()) throw ConsistencyFailure("reconstructed groupoid action fails: " + s.summary());
  return out;
}

// ---------------------------------------------------------------------------
// Ground field

bool ground_field_check(const WeakHopfAlgebra& H, const Vector& lambda) {
  const Index n = H.dim();
  if (lambda.size() != n) throw DimensionMismatch("covector length differs from dim(H)");
  auto lam = [&](const Vector& x) { return Rational(lambda.dot(x)); };
  if (lam(H.one()) != Rational(1)) return false;
  for (Index h = 0; h < n; ++h) {
    const std::vector<Term> d = terms(H.coalg.delta.col(h), n);
    for (Index g = 0; g < n; ++g) {
      Rational rhs;
      for (const Term& t : d) rhs += t.coeff * lambda(t.left) * lam(H.alg.mult.col(tensor_index(t.right, g, n)));
      if (lambda(h) * lambda(g) != rhs) return false;
    }
  }
  return true;
}

bool ground_field_is_global(const WeakHopfAlgebra& H, const Vector& lambda) {
  const Index n = H.dim();
  if (lambda.size() != n) throw DimensionMismatch("covector length differs from dim(H)");
  auto lam = [&](const Vector& x) { return Rational(lambda.dot(x)); };
  if (lam(H.one()) != Rational(1)) return false;
  for (Index h = 0; h < n; ++h) {
    for (Index g = 0; g < n; ++g)
      if (lam(H.alg.mult.col(tensor_index(h, g, n))) != lambda(h) * lambda(g)) return false;
    Rational conv;
    for (const Term& t : terms(H.coalg.delta.col(h), n)) conv += t.coeff * lambda(t.left) * lambda(t.right);
    if (conv != lambda(h)) return false;
  }
  return true;
}

PartialActionMap ground_field_action(const WeakHopfAlgebra& H, const Vector& lambda) {
  if (lambda.size() != H.dim()) throw DimensionMismatch("covector length differs from dim(H)");
  PartialActionMap p;
  p.H = H;
  p.A = ground_field_algebra();
  p.act = lambda.transpose();
  return p;
}

std::vector<GroundFieldAction> classify_ground_field(const FiniteGroupoid& g) {
  const WeakHopfAlgebra H = groupoid_algebra(g);
  std::vector<GroundFieldAction> out;
  for (const IsotropySubgroup& v : subgroups_of_isotropy(g)) {
    GroundFieldAction a;
    a.lambda = Vector::Zero(g.size());
    for (int x : v.arrows) a.lambda(x) = 1;
    if (!ground_field_check(H, a.lambda))
      throw ConsistencyFailure("subgroup indicator at " + g.arrows[static_cast<std::size_t>(v.identity)] +
                               " is not a partial action");
    a.global = ground_field_is_global(H, a.lambda);
    a.subgroup = v;
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<Vector> classify_ground_field_oracle(const FiniteGroupoid& g, int bound) {
  constexpr int kHardLimit = 24;
  if (g.size() > bound || g.size() > kHardLimit)
    throw BoundExceeded("groupoid has " + std::to_string(g.size()) + " arrows, oracle bound is " +
                        std::to_string(bound < kHardLimit ? bound : kHardLimit));
  const WeakHopfAlgebra H = groupoid_algebra(g);
  std::vector<Vector> out;
  const unsigned long total = 1UL << g.size();
  for (unsigned long mask = 0; mask < total; ++mask) {
    Vector lambda = Vector::Zero(g.size());
    for (int x = 0; x < g.size(); ++x)
      if (mask & (1UL << x)) lambda(x) = 1;
    if (ground_field_check(H, lambda)) out.push_back(lambda);
  }
  return out;
}

bool hopf_iff_epsilon(const WeakHopfAlgebra& H) {
  const bool eps_acts = ground_field_check(H, H.coalg.counit);
  if (eps_acts != is_hopf_algebra(H))
    throw ConsistencyFailure("ε acting on the ground field disagrees with the Hopf test");
  return eps_acts;
}

}  // namespace whopf
