// Globalizations: the convolution algebra Hom(H, A), the standard enveloping
// action B = H▷φ(A), its axioms, minimality and the comparison map.
#pragma once

#include "whopf/linalg.hpp"
#include "whopf/paction.hpp"
#include "whopf/report.hpp"

#include <optional>
#include <utility>

namespace whopf {

/// Hom(H, A) in the basis h_i*⊗a_j (index tensor_index(i, j, dim A)) with
/// (f∗g)(h) = f(h_1)g(h_2), unit ε⊗1_A and (h▷f)(k) = f(kh).
struct ConvolutionAlgebra {
  PartialActionMap module;
  VerificationReport report;

  Index dim() const { return module.dim_A(); }
  Vector product(const Vector& f, const Vector& g) const { return module.A.product(f, g); }
  Vector act(Index h, const Vector& f) const { return module.act_basis(h, f); }
};

ConvolutionAlgebra convolution_algebra(const WeakHopfAlgebra& H, const FinDimAlgebra& A);

/// B ⊆ ambient with θ: A → B. The ambient is a global H-module algebra
/// (Hom(H, A) for the standard construction); B need not be unital.
struct Globalization {
  PartialActionMap ambient;
  Subspace B;
  Matrix theta;  ///< ambient_dim x dim A; column j is θ(a_j)
  /// θ⁻¹(θ(1_A)∗(h▷θ(a))) on the original algebra; act is empty when this
  /// leaves θ(A).
  PartialActionMap induced;
  bool is_ideal = false;    ///< θ(A) is a two-sided ideal of B
  bool is_minimal = false;
  std::optional<Vector> unit;  ///< unit of B in ambient coordinates

  bool has_unit() const { return unit.has_value(); }
  Vector theta_of(const Vector& a) const { return apply(theta, a); }
  Vector theta_one() const { return theta_of(induced.A.one()); }
};

/// Fills induced and the flags from the data.
Globalization make_globalization(PartialActionMap ambient, Subspace B, Matrix theta, const PartialActionMap& p);

/// φ(a)(h) = h·a inside Hom(H, A). Throws GlobalizationAxiomFailure when the
/// result fails check_globalization.
Globalization standard_globalization(const PartialActionMap& p);

/// Injectivity and multiplicativity of θ, stability of B, the right ideal
/// property, the induced action and B = H▷θ(A).
VerificationReport check_globalization(const Globalization& g, const PartialActionMap& p);

/// (two-sided ideal, symmetric). Throws ConsistencyFailure if they differ.
std::pair<bool, bool> check_ideal_iff_symmetric(const Globalization& g, const PartialActionMap& p);

/// The largest H-submodule M of B with θ(1_A)∗M = 0, in ambient coordinates.
Subspace annihilated_submodule(const Globalization& g);
bool check_minimality(const Globalization& g);

/// Unit of the subalgebra B (ambient coordinates), if any.
std::optional<Vector> unit_of(const PartialActionMap& ambient, const Subspace& B);

/// B with its multiplication and action written in B-coordinates, unit
/// included when B has one.
PartialActionMap restrict_to_B(const Globalization& g);

/// Σ h_i▷θ(a) ↦ Σ h_i▷φ(a) from another globalization onto the standard one,
/// in B-coordinates of both.
struct ComparisonMorphism {
  Matrix phi;
  bool surjective = false;
  bool injective = false;
  VerificationReport report;
};

/// Throws IllDefined when the assignment on generators is not linear.
ComparisonMorphism globalization_morphism(const Globalization& other, const Globalization& standard);

}  // namespace whopf
