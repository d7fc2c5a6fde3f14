#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>

namespace bicomlab {

/// A named generator of the free algebra. Generators are totally ordered by
/// name; that order is also the tableau filling order.
class Generator {
 public:
  explicit Generator(std::string name) : name_(std::move(name)) {
    if (!valid(name_)) throw std::invalid_argument("bad generator name: '" + name_ + "'");
  }

  const std::string& name() const { return name_; }

  static bool valid(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])))) return false;
    for (char c : s)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
  }

  friend std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
    return a.name_ <=> b.name_;
  }
  friend bool operator==(const Generator&, const Generator&) = default;

 private:
  std::string name_;
};

/// Generator -> multiplicity. Orders and hashes like its map.
using Multidegree = std::map<Generator, int>;

inline int total_degree(const Multidegree& md) {
  int t = 0;
  for (const auto& [g, c] : md) t += c;
  return t;
}

}  // namespace bicomlab
