#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "bicomlab/basis_word.hpp"
#include "bicomlab/rational.hpp"

namespace bicomlab {

/// Element of the free bicommutative algebra: a finite map from canonical
/// basis words to nonzero rationals. Immutable value semantics; the zero
/// element has no terms.
class BicomElement {
 public:
  BicomElement() = default;

  static BicomElement zero() { return {}; }
  static BicomElement generator(const Generator& g) { return word(BasisWord::generator(g)); }
  static BicomElement word(const BasisWord& w) { return term(1, w); }
  static BicomElement term(const Rational& c, const BasisWord& w);

  bool is_zero() const { return terms_.empty(); }
  const std::map<BasisWord, Rational>& terms() const { return terms_; }
  Rational coefficient(const BasisWord& w) const;

  BicomElement operator-() const;
  BicomElement& operator+=(const BicomElement& o);
  BicomElement& operator-=(const BicomElement& o);
  BicomElement& operator*=(const Rational& c);
  friend BicomElement operator+(BicomElement a, const BicomElement& b) { return a += b; }
  friend BicomElement operator-(BicomElement a, const BicomElement& b) { return a -= b; }
  friend BicomElement operator*(const Rational& c, BicomElement e) { return e *= c; }
  friend bool operator==(const BicomElement&, const BicomElement&) = default;

  /// Common multidegree of all terms, or nullopt if inhomogeneous.
  std::optional<Multidegree> multidegree() const;
  bool is_multilinear() const;
  std::set<Generator> generators() const;

  std::string str() const;
  nlohmann::json to_json() const;

 private:
  void add(const BasisWord& w, const Rational& c);
  std::map<BasisWord, Rational> terms_;
};

/// Bilinear extension of the canonical word product.
BicomElement multiply(const BicomElement& f, const BicomElement& g);

/// The involution: identity on generators, column/row swap on pairs,
/// extended linearly.
BicomElement involute(const BicomElement& f);

BicomElement plus_part(const BicomElement& f);   // f + f*
BicomElement minus_part(const BicomElement& f);  // f - f*

/// All canonical words with the given generator multiplicities, sorted by
/// (|col|, col lex, row lex). Throws on an empty multidegree.
std::vector<BasisWord> enumerate_basis(const Multidegree& md);

}  // namespace bicomlab
