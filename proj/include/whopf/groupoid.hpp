// Finite groupoids, finite group tables and the groupoid algebra.
//
// Composition convention: gh is defined iff d(g) = r(h).
#pragma once

#include "whopf/linalg.hpp"
#include "whopf/report.hpp"
#include "whopf/wha.hpp"

#include <string>
#include <vector>

namespace whopf {

/// Cayley table of a finite group; mul[a][b] = index of ab.
struct GroupTable {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> mul;

  int size() const { return static_cast<int>(labels.size()); }
};

/// Throws NotAGroup unless the table is a group. Returns the identity index.
int validate_group(const GroupTable& t);

/// ℤ/n with elements e, a, a2, ..., a{n-1}.
GroupTable cyclic_group(int n);

struct FiniteGroupoid {
  std::vector<std::string> arrows;
  std::vector<int> d;
  std::vector<int> r;
  std::vector<int> inv;
  /// comp[g][h] = index of gh, or -1 when undefined.
  std::vector<std::vector<int>> comp;

  int size() const { return static_cast<int>(arrows.size()); }
  bool composable(int g, int h) const { return comp[g][h] >= 0; }
  /// G_0 = {d(g)} in arrow order.
  std::vector<int> identities() const;
  bool is_identity(int g) const { return d[g] == g && r[g] == g; }
  /// Index of the arrow with this label; throws ParseError when absent.
  int index_of(const std::string& label) const;
};

/// Groupoid axioms checked exhaustively over the table.
VerificationReport validate_groupoid(const FiniteGroupoid& g);

/// Throws NotAGroupoid with the report summary when validation fails.
void require_groupoid(const FiniteGroupoid& g);

/// Components are the given groups; arrows are labelled "G<k>:<element>".
FiniteGroupoid disjoint_union_of_groups(const std::vector<GroupTable>& groups);

/// Arrows (i,j), 1-based, in lexicographic order; d((i,j)) = (j,j),
/// r((i,j)) = (i,i), (i,j)(j,k) = (i,k).
FiniteGroupoid pair_groupoid(int n);

/// Loops at e, in arrow order.
std::vector<int> isotropy_arrows(const FiniteGroupoid& g, int e);
/// The group of loops at e, labelled by arrow labels. Throws NotAnIdentity.
GroupTable isotropy_group(const FiniteGroupoid& g, int e);

struct IsotropySubgroup {
  int identity;
  std::vector<int> arrows;  ///< ascending arrow indices

  bool operator==(const IsotropySubgroup&) const = default;
};

/// Every subgroup of every isotropy group, ordered by identity (arrow order),
/// then size, then arrow indices. Throws BoundExceeded above 20 loops at one object.
std::vector<IsotropySubgroup> subgroups_of_isotropy(const FiniteGroupoid& g);

/// 𝕜G: δ_gδ_h = δ_{gh} when defined, Δ(δ_g) = δ_g⊗δ_g, ε(δ_g) = 1, S(δ_g) = δ_{g⁻¹}.
WeakHopfAlgebra groupoid_algebra(const FiniteGroupoid& g);

/// A partial action of a groupoid on a unital algebra A, stored per arrow.
/// iso[g] is the ambient matrix x ↦ α_g(x·1_{g⁻¹}); it vanishes off D_{g⁻¹}
/// and has image in D_g.
struct PartialGroupoidAction {
  FinDimAlgebra A;
  std::vector<Subspace> domains;  ///< D_g
  std::vector<Vector> units;      ///< 1_g
  std::vector<Matrix> isos;       ///< α_g, ambient form
};

}  // namespace whopf
