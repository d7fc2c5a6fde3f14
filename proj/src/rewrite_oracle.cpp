#include "bicomlab/rewrite_oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace bicomlab::oracle {

namespace {

void check_bound(int degree, int bound) {
  if (degree > bound) throw std::invalid_argument("oracle degree limit");
}

std::vector<std::pair<Multidegree, Multidegree>> splits(const Multidegree& md) {
  // all ordered (left, right) splittings with both parts nonempty
  std::vector<std::pair<Generator, int>> items(md.begin(), md.end());
  std::vector<std::pair<Multidegree, Multidegree>> out;
  std::vector<int> take(items.size(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == items.size()) {
      Multidegree l, r;
      for (std::size_t k = 0; k < items.size(); ++k) {
        if (take[k] > 0) l[items[k].first] = take[k];
        if (take[k] < items[k].second) r[items[k].first] = items[k].second - take[k];
      }
      if (!l.empty() && !r.empty()) out.emplace_back(std::move(l), std::move(r));
      return;
    }
    for (take[i] = 0; take[i] <= items[i].second; ++take[i]) self(self, i + 1);
    take[i] = 0;
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::vector<MagmaTree> enumerate_words(const Multidegree& md, int degree_bound) {
  int degree = total_degree(md);
  if (degree < 1) throw std::invalid_argument("empty multidegree");
  check_bound(degree, degree_bound);
  if (degree == 1) return {MagmaTree::leaf(md.begin()->first)};
  std::vector<MagmaTree> out;
  for (const auto& [l, r] : splits(md)) {
    auto ls = enumerate_words(l, degree_bound);
    auto rs = enumerate_words(r, degree_bound);
    for (const auto& u : ls)
      for (const auto& v : rs) out.push_back(MagmaTree::product(u, v));
  }
  return out;
}

std::vector<MagmaTree> rewrite_neighbours(const MagmaTree& w) {
  std::vector<MagmaTree> out;
  if (w.is_leaf()) return out;
  MagmaTree a = w.left(), bc = w.right();
  // a(bc) -> b(ac)
  if (!bc.is_leaf())
    out.push_back(MagmaTree::product(bc.left(), MagmaTree::product(a, bc.right())));
  // (ab)c -> (ac)b
  if (!a.is_leaf())
    out.push_back(MagmaTree::product(MagmaTree::product(a.left(), bc), a.right()));
  for (const auto& l : rewrite_neighbours(a)) out.push_back(MagmaTree::product(l, bc));
  for (const auto& r : rewrite_neighbours(bc)) out.push_back(MagmaTree::product(a, r));
  return out;
}

std::vector<MagmaTree> closure_of(const MagmaTree& w, int degree_bound) {
  if (!w.all_plain()) throw std::invalid_argument("oracle words must be plain magma words");
  check_bound(w.degree(), degree_bound);
  std::unordered_set<std::string> seen{w.str()};
  std::deque<MagmaTree> queue{w};
  std::vector<MagmaTree> out;
  while (!queue.empty()) {
    MagmaTree t = queue.front();
    queue.pop_front();
    out.push_back(t);
    for (const auto& n : rewrite_neighbours(t))
      if (seen.insert(n.str()).second) queue.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<MagmaTree>> closure_classes(const Multidegree& md, int degree_bound) {
  std::vector<MagmaTree> words = enumerate_words(md, degree_bound);
  std::unordered_set<std::string> assigned;
  std::vector<std::vector<MagmaTree>> classes;
  for (const auto& w : words) {
    if (assigned.count(w.str())) continue;
    auto cls = closure_of(w, degree_bound);
    for (const auto& m : cls) assigned.insert(m.str());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

std::optional<BasisWord> match_canonical_pattern(const MagmaTree& w) {
  if (w.is_leaf()) return BasisWord::generator(w.gen());

  // Peel column entries x_k, ..., x_2 off the outside; each is a leaf
  // multiplied from the left, in non-increasing order going inward.
  std::vector<Generator> col;
  MagmaTree cur = w;
  while (!cur.is_leaf() && cur.left().is_leaf() && !cur.right().is_leaf()) {
    // A left comb core has a non-leaf left child unless it is (x1 y1), so a
    // leaf-times-node shape is always a column peel.
    const Generator& g = cur.left().gen();
    if (!col.empty() && g > col.back()) return std::nullopt;
    col.push_back(g);
    cur = cur.right();
  }

  // The core ((x1 y1) y2 ...) y_l: collect row entries outside in.
  std::vector<Generator> row;
  while (!cur.is_leaf() && !cur.left().is_leaf()) {
    if (!cur.right().is_leaf()) return std::nullopt;
    const Generator& y = cur.right().gen();
    if (!row.empty() && y > row.back()) return std::nullopt;
    row.push_back(y);
    cur = cur.left();
  }
  if (cur.is_leaf() || !cur.left().is_leaf() || !cur.right().is_leaf()) return std::nullopt;
  const Generator& x1 = cur.left().gen();
  if (!col.empty() && x1 > col.back()) return std::nullopt;
  row.push_back(cur.right().gen());
  if (row.size() >= 2 && row[row.size() - 2] < row.back()) return std::nullopt;

  col.push_back(x1);
  std::reverse(col.begin(), col.end());
  std::reverse(row.begin(), row.end());
  return BasisWord::pair(std::move(col), std::move(row));
}

BasisWord oracle_canonical(const MagmaTree& w, int degree_bound) {
  std::optional<BasisWord> found;
  for (const auto& m : closure_of(w, degree_bound)) {
    if (auto b = match_canonical_pattern(m)) {
      if (found && !(*found == *b)) throw std::runtime_error("oracle/basis mismatch");
      found = b;
    }
  }
  if (!found) throw std::runtime_error("oracle/basis mismatch");
  return *found;
}

}  // namespace bicomlab::oracle
