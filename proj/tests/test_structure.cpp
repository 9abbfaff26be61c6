#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "grouptool/catalog.hpp"
#include "grouptool/errors.hpp"
#include "grouptool/structure.hpp"

using namespace grouptool;

namespace {

// Independent fixed-point-freeness check: for every nontrivial h in H and
// nontrivial k in K, h k h^-1 != k.
bool acts_fixed_point_freely(const Group& g, const std::vector<int>& kernel,
                             const std::vector<int>& complement) {
  for (int h : complement) {
    if (h == g.identity()) continue;
    for (int k : kernel) {
      if (k == g.identity()) continue;
      if (g.conjugate(h, k) == k) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("kernel criterion on known frobenius groups") {
  auto s3 = catalog::symmetric(3);
  Subgroup a3 = fitting(s3);
  CHECK(is_frobenius_with_kernel(s3, a3.members));
  // The whole group and the trivial subgroup never qualify.
  CHECK_FALSE(is_frobenius_with_kernel(s3, whole_group(s3).members));
  CHECK_FALSE(is_frobenius_with_kernel(s3, trivial_subgroup(s3).members));

  auto f20 = catalog::build("F20");
  CHECK(is_frobenius_with_kernel(f20, fitting(f20).members));

  auto a4 = catalog::alternating(4);
  CHECK(is_frobenius_with_kernel(a4, fitting(a4).members));

  // S4 has normal subgroups V4 and A4 but neither is a Frobenius kernel.
  auto s4 = catalog::symmetric(4);
  for (const auto& n : normal_subgroups(s4)) {
    CAPTURE(n.order());
    CHECK_FALSE(is_frobenius_with_kernel(s4, n.members));
  }
}

TEST_CASE("frobenius detection with witnesses") {
  struct Expected {
    const char* name;
    int kernel_order;  // 0 = not Frobenius
  };
  const Expected cases[] = {
      {"S3", 3}, {"F20", 5}, {"F21", 7}, {"A4", 4},  {"D10", 5},
      {"D14", 7}, {"C12", 0}, {"S4", 0},  {"D12", 0}, {"Q8", 0},
      {"A5", 0},  {"C7", 0},  {"S3xS3", 0},
  };
  for (const auto& c : cases) {
    auto g = catalog::build(c.name);
    auto w = find_frobenius(g);
    CAPTURE(c.name);
    if (c.kernel_order == 0) {
      CHECK_FALSE(w.has_value());
      continue;
    }
    REQUIRE(w.has_value());
    CHECK(w->kernel.order() == c.kernel_order);
    CHECK(is_normal(*g, w->kernel.members));
    REQUIRE(w->complement.has_value());
    CHECK(w->complement->order() * w->kernel.order() == g->order());
    CHECK(w->fixed_point_free_checked);
    CHECK(acts_fixed_point_freely(*g, w->kernel.members, w->complement->members));
  }
}

TEST_CASE("two-frobenius detection") {
  auto s4 = catalog::symmetric(4);
  auto w = find_two_frobenius(s4);
  REQUIRE(w.has_value());
  CHECK(w->lower.order() == 4);
  CHECK(w->middle.order() == 12);
  CHECK(w->middle_group->order() == 12);
  CHECK(w->inner.kernel.order() == 4);
  CHECK(w->by_lower.target->order() == 6);
  CHECK(w->outer.kernel.order() == 3);  // A4/V4 inside S4/V4

  // Frobenius groups and nilpotent groups are not two-Frobenius.
  CHECK_FALSE(find_two_frobenius(catalog::symmetric(3)).has_value());
  CHECK_FALSE(find_two_frobenius(catalog::build("F20")).has_value());
  CHECK_FALSE(find_two_frobenius(catalog::cyclic(12)).has_value());
  CHECK_FALSE(find_two_frobenius(catalog::alternating(5)).has_value());
}

TEST_CASE("semidirect order laws") {
  auto s3 = catalog::symmetric(3);
  Subgroup a3 = fitting(s3);
  int transposition = -1;
  for (int x = 0; x < 6; ++x)
    if (s3->element_order(x) == 2) transposition = x;
  std::vector<int> h = {s3->identity(), transposition};
  std::sort(h.begin(), h.end());

  SemidirectLawReport rep = semidirect_order_law_check(s3, a3.members, h);
  CHECK(rep.frobenius_decomposition);
  CHECK(rep.order_divides);
  CHECK(rep.order_equal);
  CHECK_FALSE(rep.divides_witness.has_value());
  CHECK_FALSE(rep.equal_witness.has_value());

  // C6 = C3 x C2 splits but the action is trivial, so o(xy) = o(x)o(y) breaks
  // the equality law while divisibility survives.
  auto c6 = catalog::cyclic(6);
  std::vector<int> k3, h2;
  for (int x = 0; x < 6; ++x) {
    if (c6->power(x, 3) == c6->identity()) k3.push_back(x);
    if (c6->power(x, 2) == c6->identity()) h2.push_back(x);
  }
  SemidirectLawReport rep6 = semidirect_order_law_check(c6, k3, h2);
  CHECK_FALSE(rep6.frobenius_decomposition);
  CHECK(rep6.order_divides);
  CHECK_FALSE(rep6.order_equal);
  CHECK(rep6.equal_witness.has_value());

  // Malformed decompositions are rejected.
  CHECK_THROWS_AS(semidirect_order_law_check(s3, a3.members, a3.members), Error);
  CHECK_THROWS_AS(
      semidirect_order_law_check(s3, h /* not normal */, a3.members), Error);
  try {
    semidirect_order_law_check(s3, a3.members, {s3->identity()});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotASemidirectDecomposition);
  }
}

TEST_CASE("prime-set condition at full order") {
  CHECK(fro1_condition(catalog::symmetric(3), CoprimePair(3, 2)));
  CHECK(fro1_condition(catalog::build("F20"), CoprimePair(5, 4)));
  CHECK(fro1_condition(catalog::alternating(4), CoprimePair(4, 3)));
  CHECK_FALSE(fro1_condition(catalog::cyclic(12), CoprimePair(4, 3)));
  CHECK_FALSE(fro1_condition(catalog::symmetric(4), CoprimePair(8, 3)));

  // |G| != m*n is a usage error.
  CHECK_THROWS_AS(fro1_condition(catalog::symmetric(4), CoprimePair(4, 3)), Error);
  try {
    fro1_condition(catalog::symmetric(4), CoprimePair(4, 3));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderMismatch);
  }

  // The unrestricted variant ranges over unordered coprime pairs, so both
  // orientations apply; with o(xy) = o(yx) the two containments force
  // o(xy) = 1, which no nontrivial coprime pair satisfies. It therefore
  // holds exactly when no such pair exists, i.e. on prime-power orders.
  CHECK_FALSE(fro1_condition_global(catalog::symmetric(3)));
  CHECK_FALSE(fro1_condition_global(catalog::build("F21")));
  CHECK_FALSE(fro1_condition_global(catalog::cyclic(6)));
  CHECK(fro1_condition_global(catalog::generalized_quaternion(8)));
  CHECK(fro1_condition_global(catalog::cyclic(7)));
}

TEST_CASE("cyclic or generalized quaternion") {
  CHECK(cyclic_or_generalized_quaternion(catalog::cyclic(8)));
  CHECK(cyclic_or_generalized_quaternion(catalog::cyclic(9)));
  CHECK(cyclic_or_generalized_quaternion(catalog::cyclic(1)));
  CHECK(cyclic_or_generalized_quaternion(catalog::generalized_quaternion(8)));
  CHECK(cyclic_or_generalized_quaternion(catalog::generalized_quaternion(16)));
  CHECK_FALSE(cyclic_or_generalized_quaternion(catalog::dihedral(8)));
  CHECK_FALSE(cyclic_or_generalized_quaternion(catalog::klein()));
  CHECK_FALSE(cyclic_or_generalized_quaternion(catalog::build("C3xC3")));
  CHECK_THROWS_AS(cyclic_or_generalized_quaternion(catalog::cyclic(6)), Error);
  CHECK_THROWS_AS(cyclic_or_generalized_quaternion(catalog::symmetric(3)), Error);
}

TEST_CASE("frobenius witness complements act freely across the corpus") {
  for (const auto& entry : catalog::standard_corpus(60)) {
    auto g = catalog::build(entry.name);
    auto w = find_frobenius(g);
    if (!w.has_value()) continue;
    CAPTURE(entry.name);
    CHECK(is_frobenius_with_kernel(g, w->kernel.members));
    if (w->complement.has_value())
      CHECK(acts_fixed_point_freely(*g, w->kernel.members,
                                    w->complement->members));
  }
}
