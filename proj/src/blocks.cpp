#include "polydec/blocks.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace polydec {

namespace {

struct UnionFind {
  std::vector<int> parent, size;

  explicit UnionFind(int n) : parent(n), size(n, 1) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }

  int find(int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }

  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    return true;
  }
};

}  // namespace

bool is_transitive(const PermGroup& g) {
  if (g.n == 0) return false;
  std::vector<bool> seen(g.n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& gen : g.gens) {
      int y = gen[x];
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == g.n;
}

PermGroup perms_from_linear_group(const std::vector<LinearPoly>& h,
                                  const std::vector<LinearPoly>& roots) {
  const int n = static_cast<int>(roots.size());
  auto index_of = [&](const LinearPoly& l) -> int {
    for (int i = 0; i < n; ++i)
      if (roots[i] == l) return i;
    return -1;
  };

  PermGroup g;
  g.n = n;
  for (const auto& li : h) {
    std::vector<int> perm(n);
    std::vector<bool> hit(n, false);
    for (int j = 0; j < n; ++j) {
      int k = index_of(roots[j].compose(li));
      require(k >= 0, Errc::NotClosed,
              "composition leaves the root list; upstream factorization is broken");
      perm[j] = k;
      hit[k] = true;
    }
    require(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }), Errc::NotClosed,
            "induced map is not a bijection");
    g.gens.push_back(std::move(perm));
  }
  require(is_transitive(g), Errc::NotClosed, "induced action is not transitive");
  return g;
}

Block atkinson_pair_block(const PermGroup& g, int a, int b) {
  require(is_transitive(g), Errc::NotTransitive, "blocks need a transitive group");
  assert(a != b && a >= 0 && b >= 0 && a < g.n && b < g.n);
  UnionFind uf(g.n);
  uf.join(a, b);
  std::vector<std::pair<int, int>> work{{a, b}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (const auto& gen : g.gens) {
      int gx = gen[x], gy = gen[y];
      if (uf.join(gx, gy)) work.emplace_back(gx, gy);
    }
  }
  Block out;
  int ra = uf.find(a);
  for (int i = 0; i < g.n; ++i)
    if (uf.find(i) == ra) out.members.push_back(i);
  return out;
}

std::vector<Block> minimal_blocks(const PermGroup& g, int a) {
  require(is_transitive(g), Errc::NotTransitive, "blocks need a transitive group");
  std::set<Block> candidates;
  for (int b = 0; b < g.n; ++b) {
    if (b == a) continue;
    candidates.insert(atkinson_pair_block(g, a, b));
  }
  // drop the full set unless the group is primitive
  std::vector<Block> proper;
  for (const auto& c : candidates)
    if (static_cast<int>(c.members.size()) < g.n) proper.push_back(c);
  if (proper.empty()) {
    Block all;
    for (int i = 0; i < g.n; ++i) all.members.push_back(i);
    return {all};
  }
  std::vector<Block> out;
  for (const auto& c : proper) {
    bool minimal = true;
    for (const auto& d : proper) {
      if (d == c) continue;
      if (d.members.size() < c.members.size() &&
          std::includes(c.members.begin(), c.members.end(), d.members.begin(),
                        d.members.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_block(const PermGroup& g, const Block& b) {
  if (b.members.empty() || b.members.size() == 1 ||
      static_cast<int>(b.members.size()) == g.n)
    return true;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work{b.members};
  seen.insert(b.members);
  while (!work.empty()) {
    std::vector<int> cur = std::move(work.back());
    work.pop_back();
    for (const auto& gen : g.gens) {
      std::vector<int> img;
      img.reserve(cur.size());
      for (int x : cur) img.push_back(gen[x]);
      std::sort(img.begin(), img.end());
      // block axiom against the original set
      std::vector<int> inter;
      std::set_intersection(img.begin(), img.end(), b.members.begin(), b.members.end(),
                            std::back_inserter(inter));
      if (!inter.empty() && inter != b.members) return false;
      if (seen.insert(img).second) work.push_back(std::move(img));
    }
  }
  return true;
}

}  // namespace polydec
