// The smash product on A⊗_{H_L}H and its unital corner.
#pragma once

#include "whopf/linalg.hpp"
#include "whopf/paction.hpp"
#include "whopf/report.hpp"

#include <optional>
#include <utility>

namespace whopf {

/// A⊗H modulo span{(a◁z)⊗h − a⊗zh} with a◁z = S_R⁻¹(z)·a. The ambient index
/// of a⊗h is tensor_index(a, h, dim H).
///
/// The action may be global on a non-unital algebra (empty A.unit); the
/// relations only use the action, never the unit.
QuotientSpace tensor_over_HL(const PartialActionMap& p);

/// (a#h)(b#g) = a(h_1·b)#h_2g on the quotient, computed on the canonical
/// section representatives.
struct SmashAlgebra {
  PartialActionMap action;
  QuotientSpace quot;
  Matrix mult;  ///< dim x dim^2 on quotient coordinates
  /// [1_A⊗1_H]; absent when A has no unit.
  std::optional<Vector> left_unit;
  /// Well-definedness, associativity and left-unit certificates.
  VerificationReport report;

  Index dim() const { return quot.dim(); }
  Index ambient_dim() const { return quot.ambient_dim(); }
  Vector product(const Vector& x, const Vector& y) const { return multiply(mult, x, y); }
  Vector basis(Index i) const { return basis_vector(dim(), i); }
  Vector project(const Vector& ambient) const { return quot.project(ambient); }
  /// [a⊗h] for arbitrary a ∈ A, h ∈ H.
  Vector element(const Vector& a, const Vector& h) const { return project(tensor_vec(a, h)); }
  /// The product formula on ambient A⊗H vectors, before projecting.
  Vector raw_product(const Vector& x, const Vector& y) const;
};

/// Throws WellDefinednessFailure when some relation generator times some
/// ambient basis vector (on either side) leaves the relation space.
SmashAlgebra build_smash(const PartialActionMap& p);

/// (A#H)(1_A#1_H) with its restricted multiplication.
struct PartialSmashAlgebra {
  Subspace subspace;  ///< inside the quotient coordinates of the smash algebra
  Matrix mult;        ///< on subspace coordinates
  Vector unit;        ///< [1_A⊗1_H] in quotient coordinates
  VerificationReport report;

  Index dim() const { return subspace.dim(); }
};

/// Throws NotUnitalSubalgebra when the smash algebra has no unit class.
PartialSmashAlgebra build_partial_smash(const SmashAlgebra& s);

/// x·[1_A⊗1_H] = x for every basis class.
bool right_unit_holds(const SmashAlgebra& s);

/// (right_unit_holds, is_global). Throws ConsistencyFailure if they differ.
std::pair<bool, bool> check_unit_iff_global(const PartialActionMap& p, const SmashAlgebra& s);

}  // namespace whopf
