#pragma once

#include <string>
#include <vector>

#include "grouptool/group.hpp"

namespace grouptool {
namespace catalog {

struct CatalogEntry {
  std::string name;
  int order = 0;
  bool non_abelian_simple = false;
};

// Recipe names: Ck (cyclic), Dk (dihedral of order k), Sk / Ak (symmetric /
// alternating on k <= 6 points), Qk (generalized quaternion, k = 2^t, t >= 3),
// V4 or klein, Fk (metacyclic Frobenius of order k = p*q with q | p-1), and
// 'x'-joined direct products such as S3xS3. Throws UnknownName / InvalidParams.
GroupPtr build(const std::string& name);

// Individual recipes.
GroupPtr cyclic(int n);
GroupPtr dihedral(int order);
GroupPtr symmetric(int k);
GroupPtr alternating(int k);
GroupPtr generalized_quaternion(int order);
GroupPtr klein();
GroupPtr frobenius_metacyclic(int p, int q);

// Permutation group from cycle-notation generators (see parse_cycle_notation).
GroupPtr from_cycles(const std::string& text, const std::string& name = "");

// 0-based Cayley table, one row per line, comma-separated, no header.
GroupPtr load_cayley_csv(const std::string& path);

const std::vector<CatalogEntry>& entries();
std::vector<CatalogEntry> standard_corpus(int max_order);

}  // namespace catalog
}  // namespace grouptool
