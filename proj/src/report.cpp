#include "hopflab/report.hpp"

#include <sstream>
#include <stdexcept>

namespace hopflab {

void Report::add(const std::string& name, bool pass, const std::string& witness) {
  checks_.push_back(Check{name, pass, witness});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) checks_.push_back(Check{prefix + c.name, c.pass, c.witness});
}

bool Report::ok() const {
  for (const auto& c : checks_) {
    if (!c.pass) return false;
  }
  return true;
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool Report::passed(const std::string& name) const {
  const Check* c = find(name);
  if (!c) throw std::out_of_range("no check named " + name);
  return c->pass;
}

std::string Report::to_string() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass && !c.witness.empty()) os << "  [" << c.witness << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace hopflab
