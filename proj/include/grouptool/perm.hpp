#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace grouptool {

// Permutation of {0..degree-1} stored as an image table. Composition follows
// the right-action convention: (a * b) means apply a first, then b.
using Perm = std::vector<int>;

Perm perm_identity(int degree);
Perm perm_compose(const Perm& first, const Perm& then);
Perm perm_inverse(const Perm& p);
bool perm_is_valid(const Perm& p);
int perm_order(const Perm& p);
// Pads with fixed points so both have the given degree.
Perm perm_extend(const Perm& p, int degree);

// Canonical cycle notation, 1-based: cycles sorted by smallest moved point,
// each rotated to start at it. Identity prints as "()".
std::string cycle_notation(const Perm& p);

struct ParsedGenerators {
  std::vector<Perm> generators;  // all extended to a common degree
  int degree = 0;
};

// Grammar: generators separated by ','; each generator is one or more cycles
// "(p1 p2 ...)" over 1-based points; "()" is the identity. A point may appear
// at most once per generator. Throws SyntaxError (with position) or
// RepeatedPointInCycle.
ParsedGenerators parse_cycle_notation(const std::string& text);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace grouptool
