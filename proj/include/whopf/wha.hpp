// Finite-dimensional algebras, coalgebras and weak Hopf algebras given by
// structure constants, with axiom checks and the counital subalgebras.
#pragma once

#include "whopf/linalg.hpp"
#include "whopf/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace whopf {

/// x * y for the bilinear map whose column tensor_index(i, j, n) is e_i e_j.
Vector multiply(const Matrix& mult, const Vector& x, const Vector& y);

/// Product in A^{⊗factors}: (x_1⊗...⊗x_k)(y_1⊗...⊗y_k) = x_1y_1⊗...⊗x_ky_k.
Vector tensor_power_multiply(const Matrix& mult, int factors, const Vector& x, const Vector& y);

/// Flip u⊗v -> v⊗u on (dim_left * dim_right)-vectors.
Vector flip(const Vector& x, Index dim_left, Index dim_right);

/// Unital associative algebra: e_i e_j = sum_k mult(k, i*dim + j) e_k.
struct FinDimAlgebra {
  std::vector<std::string> labels;
  Matrix mult;
  Vector unit;

  Index dim() const { return mult.rows(); }
  Vector basis(Index i) const { return basis_vector(dim(), i); }
  Vector one() const { return unit; }
  Vector product(const Vector& x, const Vector& y) const { return multiply(mult, x, y); }
  /// Left multiplication by x as a dim x dim matrix.
  Matrix left_multiplication(const Vector& x) const;
  Matrix right_multiplication(const Vector& x) const;
};

/// The one-dimensional algebra of scalars.
FinDimAlgebra ground_field_algebra();
/// Product of n copies of the ground field (orthogonal idempotents u1..un).
FinDimAlgebra diagonal_algebra(Index n);

struct FinDimCoalgebra {
  Matrix delta;   ///< dim^2 x dim; column i is Δ(e_i), entry tensor_index(j, k, dim) the e_j⊗e_k coefficient
  Vector counit;  ///< ε(e_i)

  Index dim() const { return counit.size(); }
};

/// Weak Hopf algebra (H, m, u, Δ, ε, S) by structure constants.
struct WeakHopfAlgebra {
  FinDimAlgebra alg;
  FinDimCoalgebra coalg;
  Matrix antipode;

  Index dim() const { return alg.dim(); }
  const std::vector<std::string>& labels() const { return alg.labels; }
  Vector basis(Index i) const { return alg.basis(i); }
  Vector one() const { return alg.unit; }
  Vector product(const Vector& x, const Vector& y) const { return alg.product(x, y); }
  Vector coproduct(const Vector& x) const { return apply(coalg.delta, x); }
  /// (Δ ⊗ id) Δ(x) in H⊗H⊗H.
  Vector double_coproduct(const Vector& x) const { return apply_block(coproduct(x), 1, dim(), coalg.delta); }
  Rational counit(const Vector& x) const;
  Vector S(const Vector& x) const { return apply(antipode, x); }
  /// Δ(1_H).
  Vector unit_coproduct() const { return coproduct(one()); }
  /// Bilinear form (i, j) -> ε(e_i e_j).
  Matrix counit_form() const;
  Matrix eps_L() const;
  Matrix eps_R() const;
};

/// ε_L, ε_R, the counital subalgebras H_L = ε_L(H), H_R = ε_R(H), the inverses
/// of the antipode restricted to them and the separability idempotents.
struct CanonicalProjections {
  Matrix eps_L;
  Matrix eps_R;
  Subspace HL;
  Subspace HR;
  /// Inverse of S restricted to H_L, acting on vectors of H_R (ambient matrix).
  Matrix S_L_inv;
  /// Inverse of S restricted to H_R, acting on vectors of H_L (ambient matrix).
  Matrix S_R_inv;
  Vector e_L;  ///< S(1_1) ⊗ 1_2
  Vector e_R;  ///< 1_1 ⊗ S(1_2)
};

VerificationReport check_algebra(const FinDimAlgebra& a);
VerificationReport check_coalgebra(const FinDimCoalgebra& c);
/// Algebra and coalgebra laws, multiplicativity of Δ, the weak counit axiom
/// and weak comultiplicativity of the unit.
VerificationReport check_weak_bialgebra(const WeakHopfAlgebra& h);
/// The three antipode axioms.
VerificationReport check_weak_hopf(const WeakHopfAlgebra& h);
/// Weak bialgebra and antipode axioms in one report.
VerificationReport check_all_axioms(const WeakHopfAlgebra& h);

CanonicalProjections canonical_projections(const WeakHopfAlgebra& h);

/// The standard identities that hold in every weak Hopf algebra.
VerificationReport lemma_suite(const WeakHopfAlgebra& h);

std::optional<Matrix> antipode_inverse(const WeakHopfAlgebra& h);

/// Δ(1) = 1⊗1 and ε multiplicative.
bool is_hopf_algebra(const WeakHopfAlgebra& h);

}  // namespace whopf
