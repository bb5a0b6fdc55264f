// JSON encodings of the algebraic inputs.
//
// Scalars are integers or strings "p/q". Matrices are arrays of rows.
// Groupoids are {"kind": "pair", "n": 2}, {"kind": "groups", "orders": [3, 2]}
// or an explicit table {"arrows", "d", "r", "inv", "comp"} with arrow
// indices and -1 for undefined products.
#pragma once

#include "whopf/groupoid.hpp"
#include "whopf/paction.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace whopf::io {

using Json = nlohmann::ordered_json;

Rational rational_from(const Json& j);
Vector vector_from(const Json& j, Index size);
Matrix matrix_from(const Json& j, Index rows, Index cols);
Json to_json(const Rational& x);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);

/// {"kind": "diagonal", "n": k}, or {"labels", "mult", "unit"}.
FinDimAlgebra algebra_from(const Json& j);
Json to_json(const FinDimAlgebra& a);

/// {"labels", "mult", "unit", "delta", "counit", "antipode"}.
WeakHopfAlgebra weak_hopf_from(const Json& j);
Json to_json(const WeakHopfAlgebra& h);

FiniteGroupoid groupoid_from(const Json& j);
Json to_json(const FiniteGroupoid& g);

/// A parsed action file. Types:
///   ground_field:    {"groupoid", "lambda": {arrow: value}}
///   groupoid_action: {"groupoid", "algebra", "arrows": {arrow: {"domain", "unit", "iso"}}}
///   explicit:        {"weak_hopf", "algebra", "act"}
struct ActionInput {
  std::string type;
  std::optional<FiniteGroupoid> groupoid;
  std::optional<PartialGroupoidAction> groupoid_action;
  PartialActionMap action;
};

/// Groupoid actions are converted with groupoid_to_algebra_action.
ActionInput action_from(const Json& j);

/// Whole file contents; throws ParseError when unreadable.
std::string read_text(const std::string& path);
Json parse(const std::string& text);

}  // namespace whopf::io
