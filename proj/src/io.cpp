#include "whopf/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace whopf::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Index as_index(const Json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer, got " + j.dump());
  return j.get<Index>();
}

std::vector<std::string> labels_from(const Json& j, Index n, const std::string& prefix) {
  std::vector<std::string> out;
  if (j.is_object() && j.contains("labels")) {
    for (const Json& l : j.at("labels")) out.push_back(l.get<std::string>());
    if (static_cast<Index>(out.size()) != n) throw ParseError("label count does not match the dimension");
    return out;
  }
  for (Index i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

std::vector<int> indices_from(const Json& j, int n) {
  std::vector<int> out;
  for (const Json& x : j) {
    const Index i = as_index(x);
    if (i < -1 || i >= n) throw ParseError("arrow index out of range");
    out.push_back(static_cast<int>(i));
  }
  if (static_cast<int>(out.size()) != n) throw ParseError("index list has wrong length");
  return out;
}

}  // namespace

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

Vector vector_from(const Json& j, Index size) {
  if (!j.is_array() || static_cast<Index>(j.size()) != size)
    throw ParseError("expected a vector of length " + std::to_string(size));
  Vector v(size);
  for (Index i = 0; i < size; ++i) v(i) = rational_from(j[static_cast<std::size_t>(i)]);
  return v;
}

Matrix matrix_from(const Json& j, Index rows, Index cols) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows)
    throw ParseError("expected a matrix with " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) m.row(i) = vector_from(j[static_cast<std::size_t>(i)], cols).transpose();
  return m;
}

Json to_json(const Rational& x) {
  const mpz_class num = x.numerator();
  if (x.denominator() == 1 && num.fits_slong_p()) return Json(num.get_si());
  return Json(x.str());
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) out.push_back(to_json(Vector(m.row(i).transpose())));
  return out;
}

FinDimAlgebra algebra_from(const Json& j) {
  if (j.is_object() && j.contains("kind")) {
    if (j.at("kind") != "diagonal") throw ParseError("unknown algebra kind " + j.at("kind").dump());
    return diagonal_algebra(as_index(field(j, "n")));
  }
  const Json& unit = field(j, "unit");
  const Index n = static_cast<Index>(unit.size());
  FinDimAlgebra a;
  a.labels = labels_from(j, n, "a");
  a.mult = matrix_from(field(j, "mult"), n, n * n);
  a.unit = vector_from(unit, n);
  return a;
}

Json to_json(const FinDimAlgebra& a) {
  Json out;
  out["labels"] = a.labels;
  out["mult"] = to_json(a.mult);
  out["unit"] = to_json(a.unit);
  return out;
}

WeakHopfAlgebra weak_hopf_from(const Json& j) {
  WeakHopfAlgebra h;
  h.alg = algebra_from(j);
  const Index n = h.dim();
  h.coalg.delta = matrix_from(field(j, "delta"), n * n, n);
  h.coalg.counit = vector_from(field(j, "counit"), n);
  h.antipode = matrix_from(field(j, "antipode"), n, n);
  return h;
}

Json to_json(const WeakHopfAlgebra& h) {
  Json out = to_json(h.alg);
  out["delta"] = to_json(h.coalg.delta);
  out["counit"] = to_json(h.coalg.counit);
  out["antipode"] = to_json(h.antipode);
  return out;
}

FiniteGroupoid groupoid_from(const Json& j) {
  if (j.is_object() && j.contains("kind")) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "pair") return pair_groupoid(static_cast<int>(as_index(field(j, "n"))));
    if (kind == "groups") {
      std::vector<GroupTable> groups;
      for (const Json& n : field(j, "orders")) groups.push_back(cyclic_group(static_cast<int>(as_index(n))));
      return disjoint_union_of_groups(groups);
    }
    throw ParseError("unknown groupoid kind \"" + kind + "\"");
  }
  FiniteGroupoid g;
  for (const Json& l : field(j, "arrows")) g.arrows.push_back(l.get<std::string>());
  const int n = g.size();
  g.d = indices_from(field(j, "d"), n);
  g.r = indices_from(field(j, "r"), n);
  g.inv = indices_from(field(j, "inv"), n);
  const Json& comp = field(j, "comp");
  if (!comp.is_array() || static_cast<int>(comp.size()) != n) throw ParseError("comp must have one row per arrow");
  for (const Json& row : comp) g.comp.push_back(indices_from(row, n));
  require_groupoid(g);
  return g;
}

Json to_json(const FiniteGroupoid& g) {
  Json out;
  out["arrows"] = g.arrows;
  out["d"] = g.d;
  out["r"] = g.r;
  out["inv"] = g.inv;
  out["comp"] = g.comp;
  return out;
}

ActionInput action_from(const Json& j) {
  ActionInput in;
  in.type = field(j, "type").get<std::string>();
  if (in.type == "ground_field") {
    in.groupoid = groupoid_from(field(j, "groupoid"));
    Vector lambda = Vector::Zero(in.groupoid->size());
    for (const auto& [arrow, value] : field(j, "lambda").items()) lambda(in.groupoid->index_of(arrow)) = rational_from(value);
    in.action = ground_field_action(groupoid_algebra(*in.groupoid), lambda);
  } else if (in.type == "groupoid_action") {
    in.groupoid = groupoid_from(field(j, "groupoid"));
    const FiniteGroupoid& g = *in.groupoid;
    PartialGroupoidAction pga;
    pga.A = algebra_from(field(j, "algebra"));
    const Index n = pga.A.dim();
    pga.domains.assign(static_cast<std::size_t>(g.size()), Subspace(n));
    pga.units.assign(static_cast<std::size_t>(g.size()), Vector::Zero(n));
    pga.isos.assign(static_cast<std::size_t>(g.size()), Matrix::Zero(n, n));
    for (const auto& [arrow, data] : field(j, "arrows").items()) {
      const auto a = static_cast<std::size_t>(g.index_of(arrow));
      std::vector<Vector> basis;
      for (const Json& v : field(data, "domain")) basis.push_back(vector_from(v, n));
      pga.domains[a] = Subspace::span(n, basis);
      pga.units[a] = vector_from(field(data, "unit"), n);
      pga.isos[a] = matrix_from(field(data, "iso"), n, n);
    }
    in.action = groupoid_to_algebra_action(g, pga);
    in.groupoid_action = std::move(pga);
  } else if (in.type == "explicit") {
    const WeakHopfAlgebra h = weak_hopf_from(field(j, "weak_hopf"));
    FinDimAlgebra a = algebra_from(field(j, "algebra"));
    const Index nA = a.dim();
    Matrix act = matrix_from(field(j, "act"), nA, h.dim() * nA);
    in.action = PartialActionMap{h, std::move(a), std::move(act)};
  } else {
    throw ParseError("unknown action type \"" + in.type + "\"");
  }
  return in;
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot read " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace whopf::io
