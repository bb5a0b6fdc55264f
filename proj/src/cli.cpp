#include "whopf/cli.hpp"

#include "whopf/globalize.hpp"
#include "whopf/io.hpp"
#include "whopf/morita.hpp"
#include "whopf/smash.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <utility>

namespace whopf::cli {

namespace {

struct Options {
  std::string input;
  std::string out;
  int oracle_bound = 16;
  bool emit_tables = false;
};

class RunReport {
 public:
  explicit RunReport(std::string command) { set("command", std::move(command)); }

  void set(const std::string& key, const std::string& value) { lines_.emplace_back(key, value); }
  void set(const std::string& key, const char* value) { set(key, std::string(value)); }
  void set(const std::string& key, bool value) { set(key, value ? "true" : "false"); }
  void set(const std::string& key, Index value) { set(key, std::to_string(value)); }
  void set(const std::string& key, int value) { set(key, std::to_string(value)); }
  void set(const std::string& key, std::size_t value) { set(key, std::to_string(value)); }

  void input(const std::string& path, const std::string& bytes) {
    set("input", path);
    set("input.fnv1a64", fnv1a64(bytes));
  }

  /// One summary line per report; concrete failures go to the failure list.
  bool check(const std::string& key, const VerificationReport& r) {
    std::size_t instances = 0;
    for (const auto& item : r.items()) instances += item.instances;
    set("check." + key, std::string(r.ok() ? "pass" : "fail") + " identities=" + std::to_string(r.items().size()) +
                            " instances=" + std::to_string(instances) +
                            " failures=" + std::to_string(r.total_failures()));
    for (const auto& item : r.items())
      if (item.failures > 0) fail(key + "." + item.id + ": " + std::to_string(item.failures) + " failing instances");
    for (const auto& f : r.failures()) {
      std::string at;
      for (std::size_t i = 0; i < f.indices.size(); ++i) at += (i ? "," : "") + std::to_string(f.indices[i]);
      fail(key + "." + f.axiom + " at (" + at + "): " + f.lhs + " != " + f.rhs);
    }
    return r.ok();
  }

  void fail(const std::string& what) { failures_.push_back(what); }
  bool ok() const { return failures_.empty(); }

  std::string str() const {
    std::ostringstream os;
    for (const auto& [k, v] : lines_) os << k << ": " << v << "\n";
    os << "failures: " << failures_.size() << "\n";
    for (const auto& f : failures_) os << "failure: " << f << "\n";
    os << "status: " << (ok() ? "pass" : "fail") << "\n";
    return os.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
  std::vector<std::string> failures_;
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " " : "") + parts[i];
  return out;
}

std::string arrows_of(const FiniteGroupoid& g, const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(g.arrows[static_cast<std::size_t>(i)]);
  return join(out);
}

void emit_table(RunReport& rep, const std::string& key, const Matrix& mult) {
  const Index q = mult.rows();
  for (Index i = 0; i < q; ++i)
    for (Index j = 0; j < q; ++j)
      for (Index k = 0; k < q; ++k) {
        const Rational& c = mult(k, tensor_index(i, j, q));
        if (!c.is_zero())
          rep.set(key, std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(k) + " " + c.str());
      }
}

void verify_wha(RunReport& rep, const io::Json& j, const Options&) {
  const WeakHopfAlgebra H = io::weak_hopf_from(j);
  rep.set("dim", H.dim());
  rep.set("labels", join(H.labels()));
  rep.check("algebra", check_algebra(H.alg));
  rep.check("coalgebra", check_coalgebra(H.coalg));
  rep.check("weak_bialgebra", check_weak_bialgebra(H));
  rep.check("weak_hopf", check_weak_hopf(H));
  try {
    rep.check("lemma_suite", lemma_suite(H));
  } catch (const Error& e) {
    rep.set("check.lemma_suite", "not run");
    rep.fail(std::string("lemma_suite: ") + e.what());
  }
  rep.set("hopf", is_hopf_algebra(H));
}

void classify_ground(RunReport& rep, const io::Json& j, const Options& opt) {
  const FiniteGroupoid g = io::groupoid_from(j);
  const WeakHopfAlgebra H = groupoid_algebra(g);
  rep.set("arrows", g.size());
  rep.set("identities", arrows_of(g, g.identities()));
  const std::vector<GroundFieldAction> found = classify_ground_field(g);
  rep.set("actions", found.size());
  rep.set("global", static_cast<std::size_t>(std::count_if(found.begin(), found.end(),
                                                           [](const GroundFieldAction& a) { return a.global; })));
  for (std::size_t i = 0; i < found.size(); ++i) {
    const std::string key = "action." + std::to_string(i + 1);
    rep.set(key + ".identity", g.arrows[static_cast<std::size_t>(found[i].subgroup->identity)]);
    rep.set(key + ".subgroup", arrows_of(g, found[i].subgroup->arrows));
    rep.set(key + ".lambda", format_vector(found[i].lambda));
    rep.set(key + ".global", found[i].global);
  }
  if (g.size() <= opt.oracle_bound) {
    std::vector<std::string> a, b;
    for (const auto& x : found) a.push_back(format_vector(x.lambda));
    for (const auto& x : classify_ground_field_oracle(g, opt.oracle_bound)) b.push_back(format_vector(x));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    rep.set("oracle", a == b ? "match" : "mismatch");
    if (a != b) rep.fail("classification differs from the brute-force oracle");
  } else {
    rep.set("oracle", "skipped (" + std::to_string(g.size()) + " arrows > bound " + std::to_string(opt.oracle_bound) + ")");
  }
  rep.set("hopf", hopf_iff_epsilon(H));
}

void groupoid_algebra_cmd(RunReport& rep, const io::Json& j, const Options& opt, std::ostream& out) {
  const FiniteGroupoid g = io::groupoid_from(j);
  const WeakHopfAlgebra H = groupoid_algebra(g);
  const std::string text = io::to_json(H).dump(1) + "\n";
  rep.set("arrows", g.size());
  rep.set("dim", H.dim());
  rep.check("groupoid", validate_groupoid(g));
  rep.check("weak_hopf", check_all_axioms(H));
  if (opt.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!(f << text)) throw ParseError("cannot write " + opt.out);
  rep.set("written", opt.out);
  rep.set("written.fnv1a64", fnv1a64(text));
}

bool require_partial(RunReport& rep, const PartialActionMap& p) {
  return rep.check("partial_action", check_partial_action(p));
}

void check_paction(RunReport& rep, const io::Json& j, const Options&) {
  const io::ActionInput in = io::action_from(j);
  const PartialActionMap& p = in.action;
  rep.set("type", in.type);
  rep.set("dim_H", p.dim_H());
  rep.set("dim_A", p.dim_A());
  if (in.groupoid_action) rep.check("groupoid_action", check_groupoid_paction(*in.groupoid, *in.groupoid_action));
  if (!require_partial(rep, p)) return;
  const ActionFlags flags = action_flags(p);
  rep.set("symmetric", flags.is_symmetric);
  rep.set("global", flags.is_global);
  rep.check("derived_identities", derived_identity_suite(p));
  rep.check("right_HL_module", right_HL_module(p).report);
}

void smash(RunReport& rep, const io::Json& j, const Options& opt) {
  const PartialActionMap p = io::action_from(j).action;
  if (!require_partial(rep, p)) return;
  const SmashAlgebra s = build_smash(p);
  const PartialSmashAlgebra c = build_partial_smash(s);
  rep.set("ambient_dim", s.ambient_dim());
  rep.set("relation_dim", s.quot.relations().dim());
  rep.set("quotient_dim", s.dim());
  rep.set("partial_smash_dim", c.dim());
  rep.check("smash", s.report);
  rep.check("partial_smash", c.report);
  const bool right = right_unit_holds(s);
  const bool global = is_global(p);
  rep.set("left_unit", s.left_unit.has_value());
  rep.set("right_unit", right);
  rep.set("global", global);
  if (right != global) rep.fail("right unit law and globality disagree");
  if (opt.emit_tables) emit_table(rep, "table.smash", s.mult);
}

void globalize(RunReport& rep, const io::Json& j, const Options& opt) {
  const PartialActionMap p = io::action_from(j).action;
  if (!require_partial(rep, p)) return;
  const Globalization g = standard_globalization(p);
  rep.set("hom_dim", g.ambient.dim_A());
  rep.set("B_dim", g.B.dim());
  rep.set("has_unit", g.has_unit());
  rep.set("is_ideal", g.is_ideal);
  rep.set("is_minimal", g.is_minimal);
  const bool symmetric = check_symmetric(p);
  rep.set("symmetric", symmetric);
  if (g.is_ideal != symmetric) rep.fail("ideal property and symmetry disagree");
  if (!g.is_minimal) rep.fail("standard globalization is not minimal");
  rep.check("globalization", check_globalization(g, p));
  rep.set("induced_equals_action", g.induced.act == p.act);
  if (!(g.induced.act == p.act)) rep.fail("induced action differs from the input");
  for (Index a = 0; a < g.theta.cols(); ++a) rep.set("theta." + std::to_string(a), format_vector(g.theta.col(a)));
  if (opt.emit_tables)
    for (Index i = 0; i < g.B.dim(); ++i) rep.set("B." + std::to_string(i), format_vector(g.B.vector(i)));
}

void morita(RunReport& rep, const io::Json& j, const Options&) {
  const PartialActionMap p = io::action_from(j).action;
  if (!require_partial(rep, p)) return;
  const MoritaContextData ctx = build_M_N(p, standard_globalization(p));
  const MoritaSurjectivity s = check_morita_surjectivity(ctx);
  const VerificationReport assoc = check_context_associativity(ctx);
  rep.set("smash_dim", ctx.AH.dim());
  rep.set("partial_smash_dim", ctx.corner.dim());
  rep.set("B_smash_dim", ctx.BH.dim());
  rep.set("M_dim", ctx.M.dim());
  rep.set("M_corner_dim", ctx.M_corner.dim());
  rep.set("N_dim", ctx.N.dim());
  rep.set("surjective_round", s.round);
  rep.set("surjective_square", s.square);
  rep.set("associativity", assoc.ok());
  rep.set("has_unit_B", ctx.has_unit_B);
  rep.check("context", ctx.report);
  rep.check("witness", s.witness);
  rep.check("associativity", assoc);
  if (!s.round) rep.fail("span(M·N) differs from Ψ(A#̲H)");
  if (!s.square) rep.fail("span(N·M) differs from B#H");
}

bool same_action(const PartialGroupoidAction& a, const PartialGroupoidAction& b) {
  return a.domains == b.domains && a.units.size() == b.units.size() && a.isos.size() == b.isos.size() &&
         std::equal(a.units.begin(), a.units.end(), b.units.begin(),
                    [](const Vector& x, const Vector& y) { return x == y; }) &&
         std::equal(a.isos.begin(), a.isos.end(), b.isos.begin(),
                    [](const Matrix& x, const Matrix& y) { return x == y; });
}

void roundtrip(RunReport& rep, const io::Json& j, const Options&) {
  const io::ActionInput in = io::action_from(j);
  if (!in.groupoid_action) throw ParseError("roundtrip needs an action of type groupoid_action");
  const FiniteGroupoid& g = *in.groupoid;
  rep.check("groupoid_action", check_groupoid_paction(g, *in.groupoid_action));
  if (!require_partial(rep, in.action)) return;
  const GroupoidCorrespondence back = algebra_to_groupoid_action(g, in.action);
  rep.check("steps", back.steps);
  const bool forward = same_action(back.action, *in.groupoid_action);
  const bool backward = groupoid_to_algebra_action(g, back.action).act == in.action.act;
  rep.set("groupoid_to_algebra_to_groupoid", forward);
  rep.set("algebra_to_groupoid_to_algebra", backward);
  if (!forward) rep.fail("groupoid action is not reproduced");
  if (!backward) rep.fail("algebra action is not reproduced");
}

}  // namespace

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using Handler = std::function<void(RunReport&, const io::Json&, const Options&)>;
  Options opt;
  CLI::App app{"Partial actions of weak Hopf algebras over the rationals", "whopf"};
  app.require_subcommand(1);

  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", opt.input, "input JSON file")->required();
    sub->add_option("--out", opt.out, "write the report (or the generated file) here");
    sub->add_option("--oracle-bound", opt.oracle_bound, "largest groupoid for brute-force enumeration")
        ->capture_default_str();
    sub->add_flag("--emit-tables", opt.emit_tables, "include multiplication tables and bases");
    commands.emplace_back(sub, std::move(h));
  };
  add("verify-wha", "check the weak Hopf axioms and the standard identities", verify_wha);
  add("groupoid-algebra", "emit the groupoid algebra as a weak Hopf algebra file",
      [&](RunReport& r, const io::Json& j, const Options& o) { groupoid_algebra_cmd(r, j, o, out); });
  add("check-paction", "check a partial action and its flags", check_paction);
  add("classify-ground", "classify partial actions on the ground field", classify_ground);
  add("smash", "build the smash product and its unital corner", smash);
  add("globalize", "build and verify the standard globalization", globalize);
  add("morita", "build and verify the Morita context", morita);
  add("roundtrip", "convert a groupoid action to the algebra and back", roundtrip);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    const std::string name = sub->get_name();
    RunReport rep(name);
    int code = 0;
    try {
      const std::string text = io::read_text(opt.input);
      rep.input(opt.input, text);
      handler(rep, io::parse(text), opt);
      code = rep.ok() ? 0 : 1;
    } catch (const ParseError& e) {
      err << "whopf " << name << ": " << e.what() << "\n";
      return 2;
    } catch (const nlohmann::json::exception& e) {
      err << "whopf " << name << ": " << e.what() << "\n";
      return 2;
    } catch (const Error& e) {
      rep.fail(std::string("error: ") + e.what());
      code = 1;
    }
    if (name == "groupoid-algebra" && opt.out.empty()) return code;
    if (opt.out.empty() || name == "groupoid-algebra") {
      out << rep.str();
    } else {
      std::ofstream f(opt.out, std::ios::binary);
      if (!(f << rep.str())) {
        err << "whopf " << name << ": cannot write " << opt.out << "\n";
        return 2;
      }
    }
    return code;
  }
  return 2;
}

}  // namespace whopf::cli
