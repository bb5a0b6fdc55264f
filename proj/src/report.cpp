#include "whopf/report.hpp"

#include <algorithm>
#include <utility>
#include <sstream>

namespace whopf {

std::string format_vector(const Vector& v) {
  std::string s = "[";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v(i).str();
  }
  return s + "]";
}

VerificationReport::Item& VerificationReport::item(const std::string& axiom) {
  auto it = std::find_if(items_.begin(), items_.end(), [&](const Item& x) { return x.id == axiom; });
  if (it != items_.end()) return *it;
  Item fresh;
  fresh.id = axiom;
  items_.push_back(std::move(fresh));
  return items_.back();
}

const VerificationReport::Item* VerificationReport::find(const std::string& axiom) const {
  auto it = std::find_if(items_.begin(), items_.end(), [&](const Item& x) { return x.id == axiom; });
  return it == items_.end() ? nullptr : &*it;
}

bool VerificationReport::failed(const std::string& axiom) const {
  const Item* it = find(axiom);
  return it != nullptr && it->failures > 0;
}

bool VerificationReport::passed(const std::string& axiom) const {
  const Item* it = find(axiom);
  return it != nullptr && !it->skipped && it->failures == 0;
}

void VerificationReport::record(const std::string& axiom, std::vector<Index> indices, std::string lhs,
                                std::string rhs) {
  ++item(axiom).failures;
  ++total_failures_;
  if (failures_.size() < kMaxStoredFailures)
    failures_.push_back(Failure{axiom, std::move(indices), std::move(lhs), std::move(rhs)});
}

bool VerificationReport::expect_equal(const std::string& axiom, std::vector<Index> indices, const Vector& lhs,
                                      const Vector& rhs) {
  ++item(axiom).instances;
  if (lhs.size() == rhs.size() && lhs == rhs) return true;
  record(axiom, std::move(indices), format_vector(lhs), format_vector(rhs));
  return false;
}

bool VerificationReport::expect_equal(const std::string& axiom, std::vector<Index> indices, const Rational& lhs,
                                      const Rational& rhs) {
  ++item(axiom).instances;
  if (lhs == rhs) return true;
  record(axiom, std::move(indices), lhs.str(), rhs.str());
  return false;
}

bool VerificationReport::expect(const std::string& axiom, std::vector<Index> indices, bool holds,
                                const std::string& detail) {
  ++item(axiom).instances;
  if (holds) return true;
  record(axiom, std::move(indices), detail.empty() ? "false" : detail, "true");
  return false;
}

void VerificationReport::skip(const std::string& axiom, const std::string& reason) {
  Item& it = item(axiom);
  it.skipped = true;
  it.note = reason;
}

void VerificationReport::touch(const std::string& axiom) { item(axiom); }

void VerificationReport::merge(const VerificationReport& other) {
  for (const Item& o : other.items_) {
    Item& it = item(o.id);
    it.instances += o.instances;
    it.failures += o.failures;
    it.skipped = it.skipped || o.skipped;
    if (it.note.empty()) it.note = o.note;
  }
  for (const Failure& f : other.failures_)
    if (failures_.size() < kMaxStoredFailures) failures_.push_back(f);
  total_failures_ += other.total_failures_;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << (name_.empty() ? "report" : name_) << ": " << (ok() ? "pass" : "FAIL") << " (" << items_.size()
     << " identities, " << total_failures_ << " failures)";
  for (const Failure& f : failures_) {
    os << "\n  " << f.axiom << " at (";
    for (std::size_t i = 0; i < f.indices.size(); ++i) os << (i ? "," : "") << f.indices[i];
    os << "): " << f.lhs << " != " << f.rhs;
  }
  return os.str();
}

}  // namespace whopf
