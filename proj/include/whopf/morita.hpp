// The embedding Ψ: A#H → B#H and the surjective Morita context between the
// partial smash product and B#H for a symmetric partial action.
#pragma once

#include "whopf/globalize.hpp"
#include "whopf/smash.hpp"

namespace whopf {

/// Ψ[a⊗h] = [θ(a)⊗h] with its left inverse Ψ′ on the image.
struct SmashEmbedding {
  Matrix psi;        ///< dim(B#H) x dim(A#H)
  Matrix psi_prime;  ///< dim(A#H) x dim(image), in image coordinates
  Subspace image;
  VerificationReport report;
};

/// theta_B is θ written in B-coordinates. Throws IllDefined when Ψ or Ψ′
/// does not respect the relations.
SmashEmbedding build_psi(const SmashAlgebra& AH, const SmashAlgebra& BH, const Matrix& theta_B);

/// All subspaces live in the quotient coordinates of B#H; every module
/// action and pairing is the multiplication of B#H.
struct MoritaContextData {
  SmashAlgebra AH;
  PartialSmashAlgebra corner;  ///< A#̲H inside AH
  SmashAlgebra BH;
  Matrix theta_B;
  SmashEmbedding embedding;
  Subspace M;         ///< Ψ(A#H)
  Subspace M_corner;  ///< Ψ(A#̲H)
  Subspace N;         ///< span{(h_1▷θ(a))#h_2}
  bool has_unit_B = false;
  VerificationReport report;

  const Matrix& psi() const { return embedding.psi; }
};

/// Throws NotSymmetric, AntipodeNotInvertible, or ClosureFailure when one of
/// the module closures fails.
MoritaContextData build_M_N(const PartialActionMap& p, const Globalization& g);

struct MoritaSurjectivity {
  bool round = false;   ///< span(M·N) = Ψ(A#̲H)
  bool square = false;  ///< span(N·M) = B#H
  Subspace MN;
  Subspace NM;
  /// (h_1▷θ(a)#h_2)(θ(1_A)#S(h_3)g) = h▷θ(a)#g on basis triples.
  VerificationReport witness;
};

MoritaSurjectivity check_morita_surjectivity(const MoritaContextData& ctx);

/// (m, n)m' = m[n, m'] and [n, m]n' = n(m, n') on basis triples.
VerificationReport check_context_associativity(const MoritaContextData& ctx);

}  // namespace whopf
