#include "bicomlab/bicom_element.hpp"

#include <algorithm>
#include <stdexcept>

namespace bicomlab {

BicomElement BicomElement::term(const Rational& c, const BasisWord& w) {
  BicomElement e;
  e.add(w, c);
  return e;
}

Rational BicomElement::coefficient(const BasisWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void BicomElement::add(const BasisWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BicomElement BicomElement::operator-() const {
  BicomElement e(*this);
  for (auto& [w, c] : e.terms_) c = -c;
  return e;
}

BicomElement& BicomElement::operator+=(const BicomElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

BicomElement& BicomElement::operator-=(const BicomElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

BicomElement& BicomElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, k] : terms_) k *= c;
  return *this;
}

std::optional<Multidegree> BicomElement::multidegree() const {
  std::optional<Multidegree> md;
  for (const auto& [w, c] : terms_) {
    Multidegree m = w.multidegree();
    if (!md)
      md = std::move(m);
    else if (*md != m)
      return std::nullopt;
  }
  if (!md) md = Multidegree{};  // zero element counts as homogeneous
  return md;
}

bool BicomElement::is_multilinear() const {
  auto md = multidegree();
  if (!md) return false;
  for (const auto& [g, c] : *md)
    if (c != 1) return false;
  return true;
}

std::set<Generator> BicomElement::generators() const {
  std::set<Generator> gs;
  for (const auto& [w, c] : terms_) {
    for (const auto& g : w.col()) gs.insert(g);
    for (const auto& g : w.row()) gs.insert(g);
  }
  return gs;
}

std::string BicomElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (a != 1) out += to_string(a) + "*";
    out += w.str();
    first = false;
  }
  return out;
}

nlohmann::json BicomElement::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : terms_) {
    nlohmann::json t;
    t["coeff"] = to_string(c);
    if (w.is_generator()) {
      t["gen"] = w.gen().name();
    } else {
      nlohmann::json col = nlohmann::json::array(), row = nlohmann::json::array();
      for (const auto& g : w.col()) col.push_back(g.name());
      for (const auto& g : w.row()) row.push_back(g.name());
      t["col"] = std::move(col);
      t["row"] = std::move(row);
    }
    terms.push_back(std::move(t));
  }
  return nlohmann::json{{"terms", std::move(terms)}};
}

BicomElement multiply(const BicomElement& f, const BicomElement& g) {
  BicomElement out;
  for (const auto& [u, a] : f.terms())
    for (const auto& [v, b] : g.terms()) out += BicomElement::term(a * b, word_product(u, v));
  return out;
}

BicomElement involute(const BicomElement& f) {
  BicomElement out;
  for (const auto& [w, c] : f.terms()) out += BicomElement::term(c, w.involute());
  return out;
}

BicomElement plus_part(const BicomElement& f) { return f + involute(f); }

BicomElement minus_part(const BicomElement& f) { return f - involute(f); }

std::vector<BasisWord> enumerate_basis(const Multidegree& md) {
  int total = 0;
  for (const auto& [g, c] : md) {
    if (c <= 0) throw std::invalid_argument("multidegree counts must be positive");
    total += c;
  }
  if (total == 0) throw std::invalid_argument("empty multidegree");
  if (total == 1) return {BasisWord::generator(md.begin()->first)};

  std::vector<std::pair<Generator, int>> items(md.begin(), md.end());
  std::vector<BasisWord> out;
  std::vector<int> take(items.size(), 0);  // column multiplicities

  auto emit = [&]() {
    std::vector<Generator> col, row;
    for (std::size_t i = 0; i < items.size(); ++i) {
      for (int k = 0; k < take[i]; ++k) col.push_back(items[i].first);
      for (int k = take[i]; k < items[i].second; ++k) row.push_back(items[i].first);
    }
    if (col.empty() || row.empty()) return;
    out.push_back(BasisWord::pair(std::move(col), std::move(row)));
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == items.size()) {
      emit();
      return;
    }
    for (take[i] = 0; take[i] <= items[i].second; ++take[i]) self(self, i + 1);
    take[i] = 0;
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(), [](const BasisWord& a, const BasisWord& b) {
    if (a.col().size() != b.col().size()) return a.col().size() < b.col().size();
    if (a.col() != b.col()) return a.col() < b.col();
    return a.row() < b.row();
  });
  return out;
}

}  // namespace bicomlab
