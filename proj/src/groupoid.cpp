#include "whopf/groupoid.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace whopf {

int validate_group(const GroupTable& t) {
  const int n = t.size();
  if (n == 0) throw NotAGroup("group table is empty");
  if (static_cast<int>(t.mul.size()) != n) throw NotAGroup("group table has wrong number of rows");
  for (const auto& row : t.mul) {
    if (static_cast<int>(row.size()) != n) throw NotAGroup("group table row has wrong length");
    for (int x : row)
      if (x < 0 || x >= n) throw NotAGroup("group table is not closed");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]])
          throw NotAGroup("group table is not associative at (" + t.labels[a] + "," + t.labels[b] + "," +
                          t.labels[c] + ")");
  int id = -1;
  for (int e = 0; e < n && id < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = t.mul[e][a] == a && t.mul[a][e] == a;
    if (ok) id = e;
  }
  if (id < 0) throw NotAGroup("group table has no identity");
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n && !has_inverse; ++b) has_inverse = t.mul[a][b] == id && t.mul[b][a] == id;
    if (!has_inverse) throw NotAGroup("element " + t.labels[a] + " has no inverse");
  }
  return id;
}

GroupTable cyclic_group(int n) {
  if (n < 1) throw NotAGroup("cyclic group order must be positive");
  GroupTable t;
  for (int k = 0; k < n; ++k) t.labels.push_back(k == 0 ? "e" : k == 1 ? "a" : "a" + std::to_string(k));
  t.mul.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.mul[a][b] = (a + b) % n;
  return t;
}

std::vector<int> FiniteGroupoid::identities() const {
  std::vector<int> ids;
  for (int g = 0; g < size(); ++g)
    if (std::find(ids.begin(), ids.end(), d[g]) == ids.end()) ids.push_back(d[g]);
  std::sort(ids.begin(), ids.end());
  return ids;
}

int FiniteGroupoid::index_of(const std::string& label) const {
  const auto it = std::find(arrows.begin(), arrows.end(), label);
  if (it == arrows.end()) throw ParseError("unknown arrow label '" + label + "'");
  return static_cast<int>(it - arrows.begin());
}

VerificationReport validate_groupoid(const FiniteGroupoid& g) {
  VerificationReport rep("groupoid");
  const int n = g.size();
  const auto sz = static_cast<std::size_t>(n);
  bool shape = g.d.size() == sz && g.r.size() == sz && g.inv.size() == sz && g.comp.size() == sz;
  for (std::size_t i = 0; shape && i < g.comp.size(); ++i) shape = g.comp[i].size() == sz;
  auto in_range = [n](int x) { return x >= 0 && x < n; };
  for (int a = 0; shape && a < n; ++a) {
    shape = in_range(g.d[a]) && in_range(g.r[a]) && in_range(g.inv[a]);
    for (int b = 0; shape && b < n; ++b) shape = g.comp[a][b] == -1 || in_range(g.comp[a][b]);
  }
  rep.expect("table_shape", {}, shape);
  if (!shape) return rep;

  using I = Index;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      rep.expect("composable_iff_d_eq_r", {I(a), I(b)}, g.composable(a, b) == (g.d[a] == g.r[b]));
      if (!g.composable(a, b)) continue;
      const int ab = g.comp[a][b];
      rep.expect("product_source_target", {I(a), I(b)}, g.d[ab] == g.d[b] && g.r[ab] == g.r[a]);
      for (int c = 0; c < n; ++c) {
        if (!g.composable(b, c)) continue;
        const int bc = g.comp[b][c];
        rep.expect("associativity", {I(a), I(b), I(c)},
                   g.composable(ab, c) && g.composable(a, bc) && g.comp[ab][c] == g.comp[a][bc]);
      }
    }
    const int da = g.d[a], ra = g.r[a], ia = g.inv[a];
    rep.expect("identity_law", {I(a)},
               g.composable(a, da) && g.comp[a][da] == a && g.composable(ra, a) && g.comp[ra][a] == a);
    rep.expect("inverse_law", {I(a)},
               g.d[ia] == ra && g.r[ia] == da && g.composable(ia, a) && g.comp[ia][a] == da &&
                   g.composable(a, ia) && g.comp[a][ia] == ra);
    rep.expect("identities_are_units", {I(a)}, g.is_identity(da) && g.is_identity(ra));
  }
  for (int e : g.identities()) rep.expect("identity_self_inverse", {I(e)}, g.inv[e] == e && g.is_identity(e));
  return rep;
}

void require_groupoid(const FiniteGroupoid& g) {
  const VerificationReport rep = validate_groupoid(g);
  if (!rep.ok()) throw NotAGroupoid(rep.summary());
}

FiniteGroupoid disjoint_union_of_groups(const std::vector<GroupTable>& groups) {
  FiniteGroupoid g;
  std::vector<int> offset, identity;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    int id = 0;
    try {
      id = validate_group(groups[k]);
    } catch (const NotAGroup& ex) {
      throw NotAGroup("group " + std::to_string(k + 1) + ": " + ex.what());
    }
    offset.push_back(g.size());
    identity.push_back(id);
    for (const auto& l : groups[k].labels) g.arrows.push_back("G" + std::to_string(k + 1) + ":" + l);
  }
  const auto n = static_cast<std::size_t>(g.size());
  g.d.resize(n);
  g.r.resize(n);
  g.inv.resize(n);
  g.comp.assign(n, std::vector<int>(n, -1));
  for (std::size_t k = 0; k < groups.size(); ++k) {
    const GroupTable& t = groups[k];
    const int o = offset[k];
    for (int a = 0; a < t.size(); ++a) {
      g.d[o + a] = g.r[o + a] = o + identity[k];
      for (int b = 0; b < t.size(); ++b) {
        g.comp[o + a][o + b] = o + t.mul[a][b];
        if (t.mul[a][b] == identity[k]) g.inv[o + a] = o + b;
      }
    }
  }
  return g;
}

FiniteGroupoid pair_groupoid(int n) {
  if (n < 1) throw NotAGroupoid("pair groupoid needs at least one object");
  FiniteGroupoid g;
  auto idx = [n](int i, int j) { return i * n + j; };
  const auto m = static_cast<std::size_t>(n * n);
  g.d.resize(m);
  g.r.resize(m);
  g.inv.resize(m);
  g.comp.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int a = idx(i, j);
      g.arrows.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      g.d[a] = idx(j, j);
      g.r[a] = idx(i, i);
      g.inv[a] = idx(j, i);
      for (int k = 0; k < n; ++k) g.comp[a][idx(j, k)] = idx(i, k);
    }
  return g;
}

std::vector<int> isotropy_arrows(const FiniteGroupoid& g, int e) {
  if (e < 0 || e >= g.size() || !g.is_identity(e)) throw NotAnIdentity("arrow is not an identity of the groupoid");
  std::vector<int> loops;
  for (int a = 0; a < g.size(); ++a)
    if (g.d[a] == e && g.r[a] == e) loops.push_back(a);
  return loops;
}

GroupTable isotropy_group(const FiniteGroupoid& g, int e) {
  const std::vector<int> loops = isotropy_arrows(g, e);
  GroupTable t;
  const auto m = loops.size();
  t.mul.assign(m, std::vector<int>(m));
  for (std::size_t i = 0; i < m; ++i) {
    t.labels.push_back(g.arrows[static_cast<std::size_t>(loops[i])]);
    for (std::size_t j = 0; j < m; ++j) {
      const int p = g.comp[loops[i]][loops[j]];
      t.mul[i][j] = static_cast<int>(std::find(loops.begin(), loops.end(), p) - loops.begin());
    }
  }
  return t;
}

std::vector<IsotropySubgroup> subgroups_of_isotropy(const FiniteGroupoid& g) {
  constexpr std::size_t kMaxLoops = 20;
  std::vector<IsotropySubgroup> out;
  for (int e : g.identities()) {
    const std::vector<int> loops = isotropy_arrows(g, e);
    if (loops.size() > kMaxLoops)
      throw BoundExceeded("isotropy group at " + g.arrows[static_cast<std::size_t>(e)] + " too large to enumerate");
    std::vector<IsotropySubgroup> here;
    const unsigned long subsets = 1UL << loops.size();
    for (unsigned long mask = 1; mask < subsets; ++mask) {
      std::set<int> v;
      for (std::size_t i = 0; i < loops.size(); ++i)
        if (mask & (1UL << i)) v.insert(loops[i]);
      bool sub = v.count(e) > 0;
      for (auto it = v.begin(); sub && it != v.end(); ++it) {
        sub = v.count(g.inv[*it]) > 0;
        for (auto jt = v.begin(); sub && jt != v.end(); ++jt) sub = v.count(g.comp[*it][*jt]) > 0;
      }
      if (sub) here.push_back({e, std::vector<int>(v.begin(), v.end())});
    }
    std::sort(here.begin(), here.end(), [](const IsotropySubgroup& a, const IsotropySubgroup& b) {
      if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
      return a.arrows < b.arrows;
    });
    out.insert(out.end(), here.begin(), here.end());
  }
  return out;
}

WeakHopfAlgebra groupoid_algebra(const FiniteGroupoid& g) {
  require_groupoid(g);
  const Index n = g.size();
  WeakHopfAlgebra h;
  h.alg.labels = g.arrows;
  h.alg.mult = Matrix::Zero(n, n * n);
  h.alg.unit = Vector::Zero(n);
  h.coalg.delta = Matrix::Zero(n * n, n);
  h.coalg.counit = Vector::Constant(n, Rational(1));
  h.antipode = Matrix::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.composable(a, b)) h.alg.mult(g.comp[a][b], tensor_index(a, b, n)) = 1;
    h.coalg.delta(tensor_index(a, a, n), a) = 1;
    h.antipode(g.inv[a], a) = 1;
  }
  for (int e : g.identities()) h.alg.unit(e) = 1;
  return h;
}

}  // namespace whopf
