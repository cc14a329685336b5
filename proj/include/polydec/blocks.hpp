#pragma once

#include <vector>

#include "polydec/poly.hpp"

namespace polydec {

// Permutation group on 0..n-1 given by generators; gens[g][i] is the image
// of point i.
struct PermGroup {
  int n = 0;
  std::vector<std::vector<int>> gens;
};

// strictly sorted point set satisfying the block axiom
struct Block {
  std::vector<int> members;

  bool operator==(const Block& o) const { return members == o.members; }
  bool operator<(const Block& o) const {
    if (members.size() != o.members.size()) return members.size() < o.members.size();
    return members < o.members;
  }
};

bool is_transitive(const PermGroup& g);

// the induced action of H = {l_i} on the roots l_j(alpha): point j goes to
// the index of l_j ∘ l_i
PermGroup perms_from_linear_group(const std::vector<LinearPoly>& h,
                                  const std::vector<LinearPoly>& roots);

// smallest block containing {a, b}, by union-find partition refinement
Block atkinson_pair_block(const PermGroup& g, int a, int b);

// all inclusion-minimal nontrivial blocks containing a; the whole point set
// when g is primitive
std::vector<Block> minimal_blocks(const PermGroup& g, int a);

bool is_block(const PermGroup& g, const Block& b);

}  // namespace polydec
