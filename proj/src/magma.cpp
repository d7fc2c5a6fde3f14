#include "bicomlab/magma.hpp"

#include <fstream>
#include <stdexcept>

namespace bicomlab {

MagmaPoly MagmaPoly::term(const Rational& c, const MagmaTree& t) {
  MagmaPoly p;
  p.add(t, c);
  return p;
}

void MagmaPoly::add(const MagmaTree& t, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(t, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MagmaPoly MagmaPoly::operator-() const {
  MagmaPoly p(*this);
  for (auto& [t, c] : p.terms_) c = -c;
  return p;
}

MagmaPoly& MagmaPoly::operator+=(const MagmaPoly& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

MagmaPoly& MagmaPoly::operator-=(const MagmaPoly& o) {
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

MagmaPoly& MagmaPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, k] : terms_) k *= c;
  return *this;
}

MagmaPoly MagmaPoly::combine(NodeOp op, const MagmaPoly& a, const MagmaPoly& b) {
  MagmaPoly p;
  for (const auto& [u, x] : a.terms_)
    for (const auto& [v, y] : b.terms_) p.add(MagmaTree::node(op, u, v), x * y);
  return p;
}

std::set<Generator> MagmaPoly::variables() const {
  std::set<Generator> vs;
  for (const auto& [t, c] : terms_)
    for (const auto& [g, k] : t.multidegree()) vs.insert(g);
  return vs;
}

bool MagmaPoly::is_multilinear() const {
  std::set<Generator> vs = variables();
  for (const auto& [t, c] : terms_) {
    Multidegree md = t.multidegree();
    if (md.size() != vs.size()) return false;
    for (const auto& [g, k] : md)
      if (k != 1) return false;
  }
  return true;
}

namespace {

MagmaTree substitute_tree(const MagmaTree& t, const std::map<Generator, MagmaTree>& sigma) {
  if (t.is_leaf()) {
    auto it = sigma.find(t.gen());
    if (it == sigma.end())
      throw std::invalid_argument("substitute: unmapped variable '" + t.gen().name() + "'");
    return it->second;
  }
  return MagmaTree::node(t.op(), substitute_tree(t.left(), sigma),
                         substitute_tree(t.right(), sigma));
}

}  // namespace

MagmaPoly MagmaPoly::substitute(const std::map<Generator, MagmaTree>& sigma) const {
  MagmaPoly p;
  for (const auto& [t, c] : terms_) p.add(substitute_tree(t, sigma), c);
  return p;
}

std::string MagmaPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (a != 1) out += to_string(a) + "*";
    out += t.str();
    first = false;
  }
  return out;
}

BicomElement eval_bicom(const MagmaTree& t, NodeOp product,
                        const std::map<Generator, BicomElement>& sigma) {
  if (t.is_leaf()) {
    auto it = sigma.find(t.gen());
    if (it == sigma.end())
      throw std::invalid_argument("eval: unmapped variable '" + t.gen().name() + "'");
    return it->second;
  }
  BicomElement l = eval_bicom(t.left(), product, sigma);
  BicomElement r = eval_bicom(t.right(), product, sigma);
  NodeOp op = t.op() == NodeOp::plain ? product : t.op();
  switch (op) {
    case NodeOp::plain:
      return multiply(l, r);
    case NodeOp::com:
      return multiply(l, r) - multiply(r, l);
    case NodeOp::anti:
      return multiply(l, r) + multiply(r, l);
  }
  throw std::logic_error("unreachable");
}

BicomElement eval_bicom(const MagmaPoly& p, NodeOp product,
                        const std::map<Generator, BicomElement>& sigma) {
  BicomElement out;
  for (const auto& [t, c] : p.terms()) out += c * eval_bicom(t, product, sigma);
  return out;
}

BicomElement eval_bicom_symbolic(const MagmaPoly& p, NodeOp product) {
  std::map<Generator, BicomElement> sigma;
  for (const auto& g : p.variables()) sigma.emplace(g, BicomElement::generator(g));
  return eval_bicom(p, product, sigma);
}

bool holds_in_bicom(const MagmaPoly& identity, NodeOp product) {
  return eval_bicom_symbolic(identity, product).is_zero();
}

FiniteAlgebra::FiniteAlgebra(std::vector<std::string> basis_names,
                             std::vector<std::vector<Coords>> structure)
    : names_(std::move(basis_names)), c_(std::move(structure)) {
  const std::size_t n = names_.size();
  if (n == 0) throw std::invalid_argument("finite algebra needs positive dimension");
  if (c_.size() != n) throw std::invalid_argument("structure constants: bad shape");
  for (const auto& row : c_) {
    if (row.size() != n) throw std::invalid_argument("structure constants: bad shape");
    for (const auto& v : row)
      if (v.size() != n) throw std::invalid_argument("structure constants: bad shape");
  }
}

FiniteAlgebra FiniteAlgebra::from_json(const nlohmann::json& j) {
  int dim = j.at("dim").get<int>();
  if (dim <= 0) throw std::invalid_argument("finite algebra needs positive dimension");
  std::vector<std::string> names = j.at("basis").get<std::vector<std::string>>();
  if (static_cast<int>(names.size()) != dim)
    throw std::invalid_argument("basis name count does not match dim");
  std::map<std::string, int> index;
  for (int i = 0; i < dim; ++i) {
    if (index.count(names[i])) throw std::invalid_argument("duplicate basis name " + names[i]);
    index[names[i]] = i;
  }
  std::vector<std::vector<Coords>> c(
      dim, std::vector<Coords>(dim, Coords(dim, Rational(0))));
  if (j.contains("products")) {
    for (const auto& p : j.at("products")) {
      int i = p.at("i").get<int>(), k = p.at("j").get<int>();
      if (i < 1 || i > dim || k < 1 || k > dim)
        throw std::invalid_argument("product index out of range");
      for (const auto& [name, coeff] : p.at("out").items()) {
        auto it = index.find(name);
        if (it == index.end()) throw std::invalid_argument("unknown basis name " + name);
        c[i - 1][k - 1][it->second] = parse_rational(coeff.get<std::string>());
      }
    }
  }
  return FiniteAlgebra(std::move(names), std::move(c));
}

FiniteAlgebra FiniteAlgebra::load(const std::string& path_or_name) {
  if (path_or_name == "martin-A") return martin_a();
  std::ifstream in(path_or_name);
  if (!in) throw std::invalid_argument("cannot open algebra file: " + path_or_name);
  nlohmann::json j;
  in >> j;
  return from_json(j);
}

const FiniteAlgebra& FiniteAlgebra::martin_a() {
  static const FiniteAlgebra a = [] {
    nlohmann::json j = {
        {"dim", 4},
        {"basis", {"e1", "e2", "e3", "e4"}},
        {"products",
         {{{"i", 1}, {"j", 1}, {"out", {{"e1", "1"}}}},
          {{"i", 1}, {"j", 2}, {"out", {{"e2", "1/2"}}}},
          {{"i", 2}, {"j", 1}, {"out", {{"e2", "1/2"}}}}}}};
    return from_json(j);
  }();
  return a;
}

FiniteAlgebra::Coords FiniteAlgebra::basis_vector(int i) const {
  Coords v(dim(), Rational(0));
  v.at(i) = 1;
  return v;
}

FiniteAlgebra::Coords FiniteAlgebra::product(const Coords& u, const Coords& v) const {
  const int n = dim();
  if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
    throw std::invalid_argument("finite evaluation: dimension mismatch");
  Coords out(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      const Coords& cij = c_[i][j];
      Rational f = u[i] * v[j];
      for (int k = 0; k < n; ++k)
        if (cij[k] != 0) out[k] += f * cij[k];
    }
  }
  return out;
}

std::string FiniteAlgebra::format(const Coords& v) const {
  std::string out;
  bool first = true;
  for (int k = 0; k < dim(); ++k) {
    if (v[k] == 0) continue;
    bool neg = v[k] < 0;
    Rational a = neg ? Rational(-v[k]) : v[k];
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (a != 1) out += to_string(a) + "*";
    out += names_[k];
    first = false;
  }
  return first ? "0" : out;
}

FiniteAlgebra::Coords eval_finite(const MagmaTree& t, const FiniteAlgebra& a,
                                  const std::map<Generator, FiniteAlgebra::Coords>& sigma) {
  if (t.is_leaf()) {
    auto it = sigma.find(t.gen());
    if (it == sigma.end())
      throw std::invalid_argument("eval: unmapped variable '" + t.gen().name() + "'");
    if (static_cast<int>(it->second.size()) != a.dim())
      throw std::invalid_argument("finite evaluation: dimension mismatch");
    return it->second;
  }
  auto l = eval_finite(t.left(), a, sigma);
  auto r = eval_finite(t.right(), a, sigma);
  auto lr = a.product(l, r);
  if (t.op() == NodeOp::plain) return lr;
  auto rl = a.product(r, l);
  FiniteAlgebra::Coords out(a.dim());
  for (int k = 0; k < a.dim(); ++k) {
    Rational s = t.op() == NodeOp::anti ? Rational(lr[k] + rl[k]) : Rational(lr[k] - rl[k]);
    out[k] = s / 2;
  }
  return out;
}

FiniteAlgebra::Coords eval_finite(const MagmaPoly& p, const FiniteAlgebra& a,
                                  const std::map<Generator, FiniteAlgebra::Coords>& sigma) {
  FiniteAlgebra::Coords out(a.dim(), Rational(0));
  for (const auto& [t, c] : p.terms()) {
    auto v = eval_finite(t, a, sigma);
    for (int k = 0; k < a.dim(); ++k)
      if (v[k] != 0) out[k] += c * v[k];
  }
  return out;
}

FiniteCheck holds_in_finite(const MagmaPoly& identity, const FiniteAlgebra& a) {
  if (!identity.is_multilinear())
    throw std::invalid_argument("finite check requires multilinear identity");
  std::vector<Generator> vars(identity.variables().begin(), identity.variables().end());
  FiniteCheck result;
  if (identity.is_zero()) return result;

  std::vector<int> assign(vars.size(), 0);
  for (;;) {
    std::map<Generator, FiniteAlgebra::Coords> sigma;
    for (std::size_t i = 0; i < vars.size(); ++i)
      sigma.emplace(vars[i], a.basis_vector(assign[i]));
    auto value = eval_finite(identity, a, sigma);
    bool zero = true;
    for (const auto& x : value)
      if (x != 0) {
        zero = false;
        break;
      }
    if (!zero) {
      result.holds = false;
      for (std::size_t i = 0; i < vars.size(); ++i) result.witness[vars[i]] = assign[i];
      result.value = std::move(value);
      return result;
    }
    // next assignment, last variable fastest
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++assign[i] < a.dim()) break;
      assign[i] = 0;
      if (i == 0) return result;
    }
    if (vars.empty()) return result;
  }
}

}  // namespace bicomlab
