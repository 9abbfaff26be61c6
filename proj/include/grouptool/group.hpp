#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "grouptool/perm.hpp"

namespace grouptool {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

namespace limits {
inline constexpr int kEnumerationCap = 100000;  // closure size bound
inline constexpr int kDenseTableMax = 4096;     // dense Cayley table bound
inline constexpr int kExhaustiveAssocMax = 512;
inline constexpr int kSubgroupCapDefault = 96;  // all_subgroups
inline constexpr int kNormalCapDefault = 512;   // normal_subgroups
}  // namespace limits

// Immutable finite group on element ids 0..order-1. Small groups hold a dense
// multiplication table; groups past the dense bound keep their permutation
// images and compose on demand.
class Group {
 public:
  int order() const noexcept { return order_; }
  int identity() const noexcept { return identity_; }
  int inverse(int a) const { return inv_[a]; }
  int element_order(int a) const { return orders_[a]; }
  int exponent() const noexcept { return exponent_; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::string& name() const noexcept { return name_; }
  const std::string& source() const noexcept { return source_; }

  int mult(int a, int b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
    return index_.at(perm_compose(perms_[a], perms_[b]));
  }
  int power(int a, long long k) const;
  int conjugate(int g, int x) const {  // g x g^-1
    return mult(mult(g, x), inverse(g));
  }
  int commutator(int a, int b) const {  // a b a^-1 b^-1
    return mult(mult(a, b), mult(inverse(a), inverse(b)));
  }

  bool has_permutations() const noexcept { return !perms_.empty(); }
  const Perm& permutation(int a) const { return perms_[a]; }

  // Validated constructions. from_cayley_table and from_mult treat the table
  // as untrusted input and run the full axiom checks; the others are
  // associative by construction and get a sampled cross-check.
  static GroupPtr from_cayley_table(const std::vector<std::vector<int>>& table,
                                    std::string name,
                                    std::vector<std::string> labels = {},
                                    std::string source = "");
  static GroupPtr from_mult(int order, const std::function<int(int, int)>& mult,
                            std::string name, std::vector<std::string> labels,
                            std::string source = "");
  static GroupPtr from_generators(const std::vector<Perm>& gens,
                                  std::string name, std::string source = "",
                                  int cap = limits::kEnumerationCap);
  static GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

  // Internal: subgroup tables and quotient tables are built through here so
  // they skip the exhaustive re-validation (see validate(trusted)).
  static GroupPtr from_trusted_table(std::vector<int> flat_table, int order,
                                     std::string name,
                                     std::vector<std::string> labels,
                                     std::string source);
  static GroupPtr from_trusted_perms(std::vector<Perm> perms, std::string name,
                                     std::string source);

 private:
  Group() = default;
  void finish(bool trusted);
  void validate_shape() const;  // latin square + identity, before order loops
  void validate_assoc(bool trusted) const;
  void compute_inverses();
  void compute_orders();

  int order_ = 0;
  int identity_ = 0;
  int exponent_ = 1;
  std::vector<int> table_;  // row-major order_ x order_; empty if perm-backed
  std::vector<Perm> perms_;
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<int> inv_;
  std::vector<int> orders_;
  std::vector<std::string> labels_;
  std::string name_;
  std::string source_;
};

// Sorted member-id view of a subgroup, carrying its parent for self-contained
// results.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // ascending, unique

  int order() const noexcept { return static_cast<int>(members.size()); }
  bool contains(int x) const;
  bool same_members(const Subgroup& other) const { return members == other.members; }
};

// Surjective homomorphism source -> target with kernel tracking.
struct QuotientMap {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> projection;      // size source order
  std::vector<int> representative;  // per target element, a smallest preimage
  std::vector<int> kernel_members;  // sorted

  std::vector<int> preimage(const std::vector<int>& target_members) const;
  std::vector<int> image(const std::vector<int>& source_members) const;
};

enum class SeriesKind { UpperCentral, Derived, Fitting };

struct SeriesResult {
  SeriesKind kind;
  std::vector<Subgroup> terms;
  // Upper-central and Fitting series aim at the whole group; the derived
  // series aims at the trivial subgroup.
  bool reached = false;
};

}  // namespace grouptool
