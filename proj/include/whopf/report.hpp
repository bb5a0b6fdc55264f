// Verification reports and the error types shared by all modules.
#pragma once

#include "whopf/linalg.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace whopf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define WHOPF_DEFINE_ERROR(Name) \
  class Name : public Error {    \
   public:                       \
    using Error::Error;          \
  }

WHOPF_DEFINE_ERROR(DimensionMismatch);
WHOPF_DEFINE_ERROR(AntipodeNotBijectiveOnCounital);
WHOPF_DEFINE_ERROR(AntipodeNotInvertible);
WHOPF_DEFINE_ERROR(NotAGroup);
WHOPF_DEFINE_ERROR(NotAGroupoid);
WHOPF_DEFINE_ERROR(NotAnIdentity);
WHOPF_DEFINE_ERROR(NotARightIdeal);
WHOPF_DEFINE_ERROR(NotUnitalSubalgebra);
WHOPF_DEFINE_ERROR(NotSymmetric);
WHOPF_DEFINE_ERROR(NotAGroupoidAlgebra);
WHOPF_DEFINE_ERROR(BoundExceeded);
WHOPF_DEFINE_ERROR(WellDefinednessFailure);
WHOPF_DEFINE_ERROR(GlobalizationAxiomFailure);
WHOPF_DEFINE_ERROR(IllDefined);
WHOPF_DEFINE_ERROR(ClosureFailure);
/// An equivalence guaranteed by the theory came out one-sided: the inputs
/// are corrupt or there is a bug.
WHOPF_DEFINE_ERROR(ConsistencyFailure);
WHOPF_DEFINE_ERROR(ParseError);
WHOPF_DEFINE_ERROR(InvalidGroupoidAction);

#undef WHOPF_DEFINE_ERROR

std::string format_vector(const Vector& v);

/// Outcome of a batch of identity checks. Every identity family is listed
/// as an item; the first kMaxStoredFailures concrete failures are kept.
class VerificationReport {
 public:
  static constexpr std::size_t kMaxStoredFailures = 10;

  struct Failure {
    std::string axiom;
    std::vector<Index> indices;
    std::string lhs;
    std::string rhs;
  };

  struct Item {
    std::string id;
    std::size_t instances = 0;
    std::size_t failures = 0;
    bool skipped = false;
    std::string note;
  };

  VerificationReport() = default;
  explicit VerificationReport(std::string name) : name_(std::move(name)) {}

  /// Compares two vectors and records one identity instance.
  bool expect_equal(const std::string& axiom, std::vector<Index> indices, const Vector& lhs, const Vector& rhs);
  bool expect_equal(const std::string& axiom, std::vector<Index> indices, const Rational& lhs, const Rational& rhs);
  /// Records a boolean instance (e.g. a membership test).
  bool expect(const std::string& axiom, std::vector<Index> indices, bool holds, const std::string& detail = {});
  /// Marks an identity family as not applicable for this input.
  void skip(const std::string& axiom, const std::string& reason);
  /// Ensures the family appears in the report even with zero instances.
  void touch(const std::string& axiom);

  void merge(const VerificationReport& other);

  bool ok() const { return total_failures_ == 0; }
  const std::string& name() const { return name_; }
  std::size_t total_failures() const { return total_failures_; }
  const std::vector<Failure>& failures() const { return failures_; }
  const std::vector<Item>& items() const { return items_; }
  const Item* find(const std::string& axiom) const;
  /// True when `axiom` was checked and at least one instance failed.
  bool failed(const std::string& axiom) const;
  bool passed(const std::string& axiom) const;
  std::string summary() const;

 private:
  Item& item(const std::string& axiom);
  void record(const std::string& axiom, std::vector<Index> indices, std::string lhs, std::string rhs);

  std::string name_;
  std::vector<Item> items_;
  std::vector<Failure> failures_;
  std::size_t total_failures_ = 0;
};

}  // namespace whopf
