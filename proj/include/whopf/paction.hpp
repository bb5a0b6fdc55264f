// Partial actions h ⊗ a ↦ h·a of a weak Hopf algebra on a unital algebra,
// the groupoid correspondence and partial actions on the ground field.
#pragma once

#include "whopf/groupoid.hpp"
#include "whopf/linalg.hpp"
#include "whopf/report.hpp"
#include "whopf/wha.hpp"

#include <optional>
#include <vector>

namespace whopf {

/// act is dim(A) x (dim(H)·dim(A)); column tensor_index(h, a, dim(A)) is e_h·e_a.
struct PartialActionMap {
  WeakHopfAlgebra H;
  FinDimAlgebra A;
  Matrix act;

  Index dim_H() const { return H.dim(); }
  Index dim_A() const { return A.dim(); }
  /// a ↦ e_h·a.
  Matrix operator_of(Index h) const { return act.middleCols(h * dim_A(), dim_A()); }
  /// a ↦ x·a for arbitrary x ∈ H.
  Matrix operator_of(const Vector& x) const;
  Vector act_on(const Vector& x, const Vector& a) const { return apply(operator_of(x), a); }
  Vector act_basis(Index h, const Vector& a) const { return apply(operator_of(h), a); }
};

/// Throws DimensionMismatch unless act has the documented shape.
void check_action_shape(const PartialActionMap& p);

/// Unit, multiplicativity and the partial composition law on basis tuples.
VerificationReport check_partial_action(const PartialActionMap& p);
/// h·(k·a) = (h_1k·a)(h_2·1_A) on basis tuples, as a report.
VerificationReport symmetry_report(const PartialActionMap& p);
bool check_symmetric(const PartialActionMap& p);

/// Consequences of the axioms: absorption by H_R (and H_L when symmetric),
/// H_L/H_R linearity, the antipode expansions and the one-sided forms.
VerificationReport derived_identity_suite(const PartialActionMap& p);

/// h·1_A = ε_L(h)·1_A for all basis h. Throws ConsistencyFailure when this
/// criterion disagrees with the module law h·(k·a) = hk·a.
bool is_global(const PartialActionMap& p);

struct ActionFlags {
  bool is_partial = false;
  bool is_symmetric = false;
  bool is_global = false;
};
/// Symmetry and globality are only evaluated for valid partial actions.
ActionFlags action_flags(const PartialActionMap& p);

/// h·a = 1_A(h▷a) on a right ideal A of B with unit one_A. B defaults to the
/// whole algebra of `global`. The result is written in A-subspace coordinates.
/// Throws NotUnitalSubalgebra or NotARightIdeal.
PartialActionMap induced_partial_action(const PartialActionMap& global, const Subspace& A, const Vector& one_A,
                                        const std::optional<Subspace>& B = std::nullopt);

/// Right H_L-module a◁z = S_R⁻¹(z)·a, one matrix per basis vector of H_L.
struct RightHLModule {
  Subspace HL;
  std::vector<Matrix> maps;
  VerificationReport report;
};
RightHLModule right_HL_module(const PartialActionMap& p);

/// Groupoid partial action axioms, ideal and unit conditions, centrality of
/// the units, the composition identity on D_{h⁻¹} ∩ D_{(gh)⁻¹} and
/// A = ⊕_{e ∈ G_0} D_e.
VerificationReport check_groupoid_paction(const FiniteGroupoid& g, const PartialGroupoidAction& pga);

/// δ_g·a = α_g(a·1_{g⁻¹}). Throws InvalidGroupoidAction when the input fails
/// check_groupoid_paction.
PartialActionMap groupoid_to_algebra_action(const FiniteGroupoid& g, const PartialGroupoidAction& pga);

struct GroupoidCorrespondence {
  PartialGroupoidAction action;
  VerificationReport steps;
};
/// D_g = δ_g·A, 1_g = δ_g·1_A, α_g = δ_g·(-). Throws NotAGroupoidAlgebra,
/// NotSymmetric, or ConsistencyFailure when a reconstruction step fails.
GroupoidCorrespondence algebra_to_groupoid_action(const FiniteGroupoid& g, const PartialActionMap& p);

/// λ(h) = h·1 for a partial action on the ground field.
struct GroundFieldAction {
  Vector lambda;
  bool global = false;
  std::optional<IsotropySubgroup> subgroup;
};

/// λ(1_H) = 1 and λ(h)λ(g) = λ(h_1)λ(h_2g) on basis pairs.
bool ground_field_check(const WeakHopfAlgebra& H, const Vector& lambda);
/// λ multiplicative, λ(1_H) = 1 and λ∗λ = λ.
bool ground_field_is_global(const WeakHopfAlgebra& H, const Vector& lambda);
PartialActionMap ground_field_action(const WeakHopfAlgebra& H, const Vector& lambda);

/// Indicators of the subgroups of the isotropy groups, in subgroups_of_isotropy order.
std::vector<GroundFieldAction> classify_ground_field(const FiniteGroupoid& g);
/// Every {0,1}-valued λ on arrows that passes ground_field_check, in
/// increasing bitmask order. Throws BoundExceeded when |G| > bound.
std::vector<Vector> classify_ground_field_oracle(const FiniteGroupoid& g, int bound = 16);

/// Whether ε is a partial action on the ground field. Throws
/// ConsistencyFailure when this disagrees with is_hopf_algebra.
bool hopf_iff_epsilon(const WeakHopfAlgebra& H);

}  // namespace whopf
