// Acceptance run: one line per criterion, exit status 1 if any fails.
// Details of failing instances go to stderr.
#include "fixtures.hpp"
#include "whopf/cli.hpp"
#include "whopf/globalize.hpp"
#include "whopf/morita.hpp"
#include "whopf/smash.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace whopf;
using namespace fixtures;

namespace {

class Criterion {
 public:
  void require(bool ok, const std::string& what) {
    if (ok) return;
    ok_ = false;
    std::cerr << "  failed: " << what << "\n";
  }
  bool ok() const { return ok_; }

 private:
  bool ok_ = true;
};

std::vector<std::string> sorted_lambdas(const std::vector<Vector>& vs) {
  std::vector<std::string> out;
  for (const Vector& v : vs) out.push_back(format_vector(v));
  std::sort(out.begin(), out.end());
  return out;
}

void weak_hopf_axioms(Criterion& c) {
  for (const auto& [name, g] : groupoids()) {
    const WeakHopfAlgebra H = groupoid_algebra(g);
    c.require(check_weak_hopf(H).ok(), name + ": weak Hopf axioms");
    c.require(lemma_suite(H).ok(), name + ": standard identities");
  }
}

void ground_field_classification(Criterion& c) {
  for (const auto& [name, g] : groupoids()) {
    const std::vector<GroundFieldAction> found = classify_ground_field(g);
    std::vector<Vector> lambdas;
    for (const auto& a : found) lambdas.push_back(a.lambda);
    c.require(sorted_lambdas(lambdas) == sorted_lambdas(classify_ground_field_oracle(g)),
              name + ": classification differs from brute force");
    for (const auto& a : found)
      c.require(a.global == ground_field_is_global(groupoid_algebra(g), a.lambda), name + ": global flag");
  }
  c.require(classify_ground_field(pair_groupoid(2)).size() == 2, "pair2 has 2 actions");
  c.require(classify_ground_field(z2_z2()).size() == 4, "Z2+Z2 has 4 actions");
  c.require(classify_ground_field(z3()).size() == 2, "Z3 has 2 actions");
}

void hopf_case(Criterion& c) {
  for (const auto& [name, g] : groupoids()) {
    const WeakHopfAlgebra H = groupoid_algebra(g);
    const bool group = name == "Z2" || name == "Z3";
    c.require(hopf_iff_epsilon(H) == group, name + ": ε is the only action iff H is Hopf");
    c.require(is_hopf_algebra(H) == group, name + ": Hopf detection");
  }
}

void groupoid_correspondence(Criterion& c) {
  bool two_dimensional = false;
  auto roundtrip = [&](const std::string& name, const FiniteGroupoid& g, const PartialActionMap& p,
                       const PartialGroupoidAction* pga) {
    const GroupoidCorrespondence back = algebra_to_groupoid_action(g, p);
    c.require(back.steps.ok(), name + ": reconstruction steps");
    c.require(groupoid_to_algebra_action(g, back.action).act == p.act, name + ": algebra action reproduced");
    if (pga) {
      c.require(back.action.domains == pga->domains, name + ": domains reproduced");
      for (std::size_t x = 0; x < pga->isos.size(); ++x) {
        c.require(back.action.units[x] == pga->units[x], name + ": units reproduced");
        c.require(back.action.isos[x] == pga->isos[x], name + ": isomorphisms reproduced");
      }
    }
    two_dimensional = two_dimensional || p.dim_A() >= 2;
  };
  for (const auto& [name, g] : groupoids())
    for (const auto& a : classify_ground_field(g))
      roundtrip(name, g, ground_field_action(groupoid_algebra(g), a.lambda), nullptr);
  for (const auto& gc : groupoid_actions()) {
    c.require(check_groupoid_paction(gc.g, gc.pga).ok(), gc.name + ": groupoid action axioms");
    roundtrip(gc.name, gc.g, groupoid_to_algebra_action(gc.g, gc.pga), &gc.pga);
  }
  c.require(two_dimensional, "an algebra of dimension at least 2 is covered");
}

void smash_products(Criterion& c) {
  int global = 0, partial = 0, witnesses = 0;
  for (const ActionCase& ac : actions()) {
    const SmashAlgebra s = build_smash(ac.p);
    c.require(s.report.ok(), ac.name + ": smash product");
    c.require(build_partial_smash(s).report.ok(), ac.name + ": unital corner");
    const auto [right, glob] = check_unit_iff_global(ac.p, s);
    c.require(right == glob && glob == ac.global, ac.name + ": right unit iff global");
    (glob ? global : partial)++;
  }
  c.require(global > 0 && partial > 0, "both global and partial actions are covered");

  for (const auto& [name, g] : groupoids()) {
    const WeakHopfAlgebra H = groupoid_algebra(g);
    for (const auto& a : classify_ground_field(g)) {
      const SmashAlgebra s = build_smash(ground_field_action(H, a.lambda));
      const std::vector<int>& V = a.subgroup->arrows;
      for (int x = 0; x < g.size(); ++x) {
        if (g.r[static_cast<std::size_t>(x)] != a.subgroup->identity || std::count(V.begin(), V.end(), x)) continue;
        const Vector y = s.element(Vector::Ones(1), H.basis(x));
        c.require(!y.isZero() && s.left_unit && s.product(y, *s.left_unit).isZero(),
                  name + ": (1#δ_" + g.arrows[static_cast<std::size_t>(x)] + ")(1#1) = 0 with a nonzero factor");
        ++witnesses;
      }
    }
  }
  c.require(witnesses > 0, "a one-sided unit witness exists");
}

void globalizations(Criterion& c) {
  for (const ActionCase& ac : actions()) {
    const Globalization g = standard_globalization(ac.p);
    c.require(check_globalization(g, ac.p).ok(), ac.name + ": globalization axioms");
    const auto [ideal, symmetric] = check_ideal_iff_symmetric(g, ac.p);
    c.require(ideal == symmetric, ac.name + ": ideal iff symmetric");
    c.require(g.is_minimal && check_minimality(g), ac.name + ": minimal");
    c.require(g.induced.act == ac.p.act, ac.name + ": induced action");

    // B presented as its own ambient algebra is a second minimal globalization.
    if (!g.has_unit()) continue;
    const PartialActionMap onB = restrict_to_B(g);
    Matrix theta(g.B.dim(), ac.p.dim_A());
    for (Index a = 0; a < theta.cols(); ++a) theta.col(a) = g.B.coordinates(g.theta.col(a));
    const Globalization other = make_globalization(onB, Subspace::full(g.B.dim()), theta, ac.p);
    c.require(check_globalization(other, ac.p).ok() && other.is_minimal, ac.name + ": B as ambient");
    const ComparisonMorphism phi = globalization_morphism(other, g);
    c.require(phi.report.ok() && phi.surjective && phi.injective, ac.name + ": comparison is bijective");
  }

  const FiniteGroupoid g = pair_groupoid(2);
  const PartialActionMap p = ground_field_action(groupoid_algebra(g), indicator(g, {"(1,1)"}));
  const Globalization glob = standard_globalization(p);
  c.require(glob.B.dim() == 2, "pair2 with V = {(1,1)}: dim B = 2");
  c.require(glob.induced.act == p.act, "pair2 with V = {(1,1)}: induced action is λ");
}

void morita_contexts(Criterion& c) {
  int symmetric = 0;
  for (const ActionCase& ac : actions()) {
    if (!ac.symmetric) continue;
    ++symmetric;
    const MoritaContextData ctx = build_M_N(ac.p, standard_globalization(ac.p));
    c.require(ctx.report.ok(), ac.name + ": context modules");
    const MoritaSurjectivity s = check_morita_surjectivity(ctx);
    c.require(s.round, ac.name + ": span(M·N) is the corner");
    c.require(s.square, ac.name + ": span(N·M) is B#H");
    c.require(s.witness.ok(), ac.name + ": surjectivity witness");
    c.require(check_context_associativity(ctx).ok(), ac.name + ": associativity");
  }
  c.require(symmetric > 0, "a symmetric action is covered");
}

void determinism(Criterion& c) {
  const std::string dir = WHOPF_DATA_DIR;
  const std::vector<std::vector<std::string>> commands{
      {"verify-wha", "--input", dir + "/wha_z2.json"},
      {"verify-wha", "--input", dir + "/wha_pair2.json"},
      {"verify-wha", "--input", dir + "/wha_z3_bad_antipode.json"},
      {"groupoid-algebra", "--input", dir + "/pair3.json"},
      {"classify-ground", "--input", dir + "/z3_z2.json"},
      {"classify-ground", "--input", dir + "/pair3.json"},
      {"check-paction", "--input", dir + "/pair2_on_q3.json"},
      {"check-paction", "--input", dir + "/z2_counit_explicit.json"},
      {"smash", "--input", dir + "/pair2_ground_e1.json", "--emit-tables"},
      {"smash", "--input", dir + "/z2_z2_component.json", "--emit-tables"},
      {"globalize", "--input", dir + "/pair2_on_q3.json", "--emit-tables"},
      {"globalize", "--input", dir + "/pair2_global_on_q2.json"},
      {"morita", "--input", dir + "/pair2_ground_e1.json"},
      {"morita", "--input", dir + "/pair2_on_q3.json"},
      {"roundtrip", "--input", dir + "/pair2_on_q3.json"},
      {"roundtrip", "--input", dir + "/pair2_global_on_q2.json"}};
  for (const auto& args : commands) {
    std::ostringstream out1, err1, out2, err2;
    const int a = cli::run(args, out1, err1);
    const int b = cli::run(args, out2, err2);
    c.require(a == b && out1.str() == out2.str() && err1.str() == err2.str(), args[0] + " " + args[2]);
    c.require(!out1.str().empty() && a != 2, args[0] + " " + args[2] + " produced a report");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"weak Hopf axioms and identities for groupoid algebras", weak_hopf_axioms},
      {"ground field actions match brute-force enumeration", ground_field_classification},
      {"only ε acts on the ground field exactly for Hopf algebras", hopf_case},
      {"groupoid actions and algebra actions correspond", groupoid_correspondence},
      {"smash products are associative with a one-sided unit", smash_products},
      {"standard globalizations are minimal and universal", globalizations},
      {"Morita context maps are surjective", morita_contexts},
      {"command-line reports are deterministic", determinism}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: " << (c.ok() ? "pass" : "fail") << "\n";
    failed += c.ok() ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
