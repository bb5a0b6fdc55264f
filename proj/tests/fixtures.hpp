// Shared inputs for the tests: the groupoids, algebras and actions of the corpus.
#pragma once

#include "whopf/groupoid.hpp"
#include "whopf/paction.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using namespace whopf;

inline FiniteGroupoid z2() { return disjoint_union_of_groups({cyclic_group(2)}); }
inline FiniteGroupoid z3() { return disjoint_union_of_groups({cyclic_group(3)}); }
inline FiniteGroupoid z2_z2() { return disjoint_union_of_groups({cyclic_group(2), cyclic_group(2)}); }
inline FiniteGroupoid z3_z2() { return disjoint_union_of_groups({cyclic_group(3), cyclic_group(2)}); }

inline std::vector<std::pair<std::string, FiniteGroupoid>> groupoids() {
  return {{"Z2", z2()},           {"Z3", z3()},          {"pair2", pair_groupoid(2)},
          {"pair3", pair_groupoid(3)}, {"Z2+Z2", z2_z2()}, {"Z3+Z2", z3_z2()}};
}

inline Vector vec(Index n, std::initializer_list<std::pair<Index, long>> entries) {
  Vector v = Vector::Zero(n);
  for (const auto& [i, x] : entries) v(i) = x;
  return v;
}

/// Ambient matrix sending basis vector `from` to `to` and every other basis vector to 0.
inline Matrix transfer(Index n, std::initializer_list<std::pair<Index, Index>> pairs) {
  Matrix m = Matrix::Zero(n, n);
  for (const auto& [from, to] : pairs) m(to, from) = 1;
  return m;
}

struct GroupoidActionCase {
  std::string name;
  FiniteGroupoid g;
  PartialGroupoidAction pga;
};

/// Pair groupoid on 2 objects acting on ℚ² = ℚu1 ⊕ ℚu2 with D_{e1} = ℚu1,
/// D_{e2} = ℚu2. Globally, (2,1) maps u1 to u2; partially, D_g = D_{g⁻¹} = 0.
inline GroupoidActionCase pair2_on_q2(bool global) {
  GroupoidActionCase c{global ? "pair2 global on Q^2" : "pair2 partial on Q^2", pair_groupoid(2), {}};
  const FiniteGroupoid& g = c.g;
  c.pga.A = diagonal_algebra(2);
  const int e1 = g.index_of("(1,1)"), e2 = g.index_of("(2,2)"), to2 = g.index_of("(2,1)"), to1 = g.index_of("(1,2)");
  c.pga.domains.resize(4, Subspace(2));
  c.pga.units.resize(4, Vector::Zero(2));
  c.pga.isos.resize(4, Matrix::Zero(2, 2));
  auto set = [&](int a, std::vector<Vector> basis, Vector unit, Matrix iso) {
    c.pga.domains[static_cast<std::size_t>(a)] = Subspace::span(2, basis);
    c.pga.units[static_cast<std::size_t>(a)] = std::move(unit);
    c.pga.isos[static_cast<std::size_t>(a)] = std::move(iso);
  };
  set(e1, {vec(2, {{0, 1}})}, vec(2, {{0, 1}}), transfer(2, {{0, 0}}));
  set(e2, {vec(2, {{1, 1}})}, vec(2, {{1, 1}}), transfer(2, {{1, 1}}));
  if (global) {
    set(to2, {vec(2, {{1, 1}})}, vec(2, {{1, 1}}), transfer(2, {{0, 1}}));
    set(to1, {vec(2, {{0, 1}})}, vec(2, {{0, 1}}), transfer(2, {{1, 0}}));
  }
  return c;
}

/// Pair groupoid on 2 objects acting on ℚ³ with D_{e1} = ℚu1, D_{e2} = ℚu2 ⊕ ℚu3,
/// D_{(2,1)} = ℚu2, D_{(1,2)} = ℚu1 and α_{(2,1)}(u1) = u2.
inline GroupoidActionCase pair2_on_q3() {
  GroupoidActionCase c{"pair2 partial on Q^3", pair_groupoid(2), {}};
  const FiniteGroupoid& g = c.g;
  c.pga.A = diagonal_algebra(3);
  const int e1 = g.index_of("(1,1)"), e2 = g.index_of("(2,2)"), to2 = g.index_of("(2,1)"), to1 = g.index_of("(1,2)");
  c.pga.domains.resize(4, Subspace(3));
  c.pga.units.resize(4);
  c.pga.isos.resize(4);
  auto set = [&](int a, std::vector<Vector> basis, Vector unit, Matrix iso) {
    c.pga.domains[static_cast<std::size_t>(a)] = Subspace::span(3, basis);
    c.pga.units[static_cast<std::size_t>(a)] = std::move(unit);
    c.pga.isos[static_cast<std::size_t>(a)] = std::move(iso);
  };
  set(e1, {vec(3, {{0, 1}})}, vec(3, {{0, 1}}), transfer(3, {{0, 0}}));
  set(e2, {vec(3, {{1, 1}}), vec(3, {{2, 1}})}, vec(3, {{1, 1}, {2, 1}}), transfer(3, {{1, 1}, {2, 2}}));
  set(to2, {vec(3, {{1, 1}})}, vec(3, {{1, 1}}), transfer(3, {{0, 1}}));
  set(to1, {vec(3, {{0, 1}})}, vec(3, {{0, 1}}), transfer(3, {{1, 0}}));
  return c;
}

/// ℤ/2 as a one-object groupoid acting on ℚ² with D_a = ℚu1 and α_a = id.
inline GroupoidActionCase z2_on_q2() {
  GroupoidActionCase c{"Z2 partial on Q^2", z2(), {}};
  c.pga.A = diagonal_algebra(2);
  const int e = c.g.index_of("G1:e"), a = c.g.index_of("G1:a");
  c.pga.domains.resize(2, Subspace(2));
  c.pga.units.resize(2);
  c.pga.isos.resize(2);
  c.pga.domains[static_cast<std::size_t>(e)] = Subspace::full(2);
  c.pga.units[static_cast<std::size_t>(e)] = vec(2, {{0, 1}, {1, 1}});
  c.pga.isos[static_cast<std::size_t>(e)] = Matrix::Identity(2, 2);
  c.pga.domains[static_cast<std::size_t>(a)] = Subspace::span(2, {vec(2, {{0, 1}})});
  c.pga.units[static_cast<std::size_t>(a)] = vec(2, {{0, 1}});
  c.pga.isos[static_cast<std::size_t>(a)] = transfer(2, {{0, 0}});
  return c;
}

inline std::vector<GroupoidActionCase> groupoid_actions() {
  return {pair2_on_q2(true), pair2_on_q2(false), pair2_on_q3(), z2_on_q2()};
}

/// λ = 1 on the listed arrows.
inline Vector indicator(const FiniteGroupoid& g, std::initializer_list<const char*> labels) {
  Vector v = Vector::Zero(g.size());
  for (const char* l : labels) v(g.index_of(l)) = 1;
  return v;
}

struct ActionCase {
  std::string name;
  PartialActionMap p;
  bool symmetric;
  bool global;
};

/// Every partial action of the corpus, with its expected flags.
inline std::vector<ActionCase> actions() {
  std::vector<ActionCase> out;
  for (const auto& [name, g] : groupoids()) {
    const WeakHopfAlgebra H = groupoid_algebra(g);
    for (const GroundFieldAction& a : classify_ground_field(g))
      out.push_back({name + " on Q, V at " + g.arrows[static_cast<std::size_t>(a.subgroup->identity)] + " size " +
                         std::to_string(a.subgroup->arrows.size()),
                     ground_field_action(H, a.lambda), true, a.global});
  }
  for (const auto& c : groupoid_actions())
    out.push_back({c.name, groupoid_to_algebra_action(c.g, c.pga), true, c.name == "pair2 global on Q^2"});
  return out;
}

}  // namespace fixtures
