#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "grouptool/algebra.hpp"
#include "grouptool/catalog.hpp"
#include "grouptool/errors.hpp"
#include "grouptool/group.hpp"

using namespace grouptool;

namespace oracle {

// Naive repeated multiplication, independent of Group's cached orders.
int element_order(const Group& g, int x) {
  int t = x, o = 1;
  while (t != g.identity()) {
    t = g.mult(t, x);
    ++o;
  }
  return o;
}

int exponent(const Group& g) {
  long long e = 1;
  for (int x = 0; x < g.order(); ++x)
    e = std::lcm(e, static_cast<long long>(element_order(g, x)));
  return static_cast<int>(e);
}

std::vector<int> center(const Group& g) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y)
      central = g.mult(x, y) == g.mult(y, x);
    if (central) out.push_back(x);
  }
  return out;
}

// Nilpotency via the coprime order-multiplicativity criterion: o(xy) =
// o(x) o(y) whenever gcd(o(x), o(y)) = 1.
bool nilpotent_by_order_law(const Group& g) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) {
      int ox = g.element_order(x), oy = g.element_order(y);
      if (std::gcd(ox, oy) != 1) continue;
      if (g.element_order(g.mult(x, y)) != ox * oy) return false;
    }
  return true;
}

}  // namespace oracle

TEST_CASE("trivial and tiny constructions") {
  auto c1 = catalog::cyclic(1);
  CHECK(c1->order() == 1);
  CHECK(c1->identity() == 0);
  CHECK(c1->exponent() == 1);

  auto c2 = Group::from_cayley_table({{0, 1}, {1, 0}}, "C2");
  CHECK(c2->order() == 2);
  CHECK(c2->element_order(1) == 2);
  CHECK(c2->inverse(1) == 1);

  // Klein four-group as an explicit table.
  auto v4 = Group::from_cayley_table(
      {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, "V4");
  CHECK(v4->exponent() == 2);
  CHECK(oracle::center(*v4).size() == 4);
}

TEST_CASE("cayley table rejection paths") {
  // Column 1 repeats: not a latin square.
  CHECK_THROWS_WITH_AS(
      Group::from_cayley_table({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}, "bad"),
      doctest::Contains("not a permutation"), Error);

  // Latin square without identity.
  CHECK_THROWS_AS(
      Group::from_cayley_table({{1, 0, 2}, {2, 1, 0}, {0, 2, 1}}, "bad"), Error);
  try {
    Group::from_cayley_table({{1, 0, 2}, {2, 1, 0}, {0, 2, 1}}, "bad");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoIdentity);
  }

  // Latin square with identity but a one-sided inverse.
  try {
    Group::from_cayley_table({{0, 1, 2, 3, 4},
                              {1, 0, 3, 4, 2},
                              {2, 3, 4, 0, 1},
                              {3, 4, 1, 2, 0},
                              {4, 2, 0, 1, 3}},
                             "loop5a");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingInverse);
  }

  // Loop with two-sided inverses that is not associative.
  try {
    Group::from_cayley_table({{0, 1, 2, 3, 4},
                              {1, 0, 3, 4, 2},
                              {2, 4, 0, 1, 3},
                              {3, 2, 4, 0, 1},
                              {4, 3, 1, 2, 0}},
                             "loop5b");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAssociative);
  }

  // Ragged rows.
  CHECK_THROWS_AS(Group::from_cayley_table({{0, 1}, {1}}, "bad"), Error);
}

TEST_CASE("generator enumeration") {
  auto s3 = catalog::symmetric(3);
  CHECK(s3->order() == 6);
  CHECK(s3->label(s3->identity()) == "()");
  CHECK(s3->exponent() == 6);

  auto s4 = catalog::symmetric(4);
  CHECK(s4->order() == 24);
  CHECK(s4->exponent() == 12);

  // All labels round-trip through the parser.
  for (int x = 0; x < s4->order(); ++x) {
    auto parsed = parse_cycle_notation(s4->label(x));
    REQUIRE(parsed.generators.size() == 1);
    CHECK(perm_extend(parsed.generators[0], 4) == s4->permutation(x));
  }

  // Closure cap.
  ParsedGenerators big = parse_cycle_notation("(1 2 3 4 5 6 7 8 9 10 11 12 13), (1 2)");
  CHECK_THROWS_AS(Group::from_generators(big.generators, "S13"), Error);

  // Non-bijective generator.
  CHECK_THROWS_AS(Group::from_generators({{0, 0, 1}}, "bad"), Error);
}

TEST_CASE("orders, powers and exponent agree with naive oracles") {
  for (const char* name : {"S4", "Q16", "F20", "D12"}) {
    auto g = catalog::build(name);
    CAPTURE(name);
    CHECK(g->exponent() == oracle::exponent(*g));
    for (int x = 0; x < g->order(); ++x) {
      CHECK(g->element_order(x) == oracle::element_order(*g, x));
      // power against naive repeated multiplication
      int acc = g->identity();
      for (int k = 0; k <= 5; ++k) {
        CHECK(g->power(x, k) == acc);
        acc = g->mult(acc, x);
      }
      CHECK(g->power(x, -1) == g->inverse(x));
    }
  }
}

TEST_CASE("subgroup generation and Lagrange") {
  auto s4 = catalog::symmetric(4);
  for (int x = 0; x < s4->order(); ++x) {
    Subgroup h = subgroup_generated(s4, {x});
    CHECK(h.order() == s4->element_order(x));
    CHECK(24 % h.order() == 0);
  }
  // A generated subgroup is closed.
  Subgroup h = subgroup_generated(s4, {1, 2});
  for (int a : h.members)
    for (int b : h.members) CHECK(h.contains(s4->mult(a, b)));
}

TEST_CASE("center and centralizer") {
  auto s3 = catalog::symmetric(3);
  CHECK(center(s3).order() == 1);
  CHECK(center(s3).members == oracle::center(*s3));

  auto q8 = catalog::generalized_quaternion(8);
  CHECK(center(q8).order() == 2);
  CHECK(center(q8).members == oracle::center(*q8));

  auto s4 = catalog::symmetric(4);
  // Centralizer of a transposition in S4 has order 4.
  int transposition = -1;
  for (int x = 0; x < 24; ++x)
    if (s4->label(x) == "(1 2)") transposition = x;
  REQUIRE(transposition >= 0);
  CHECK(centralizer(s4, {transposition}).order() == 4);
}

TEST_CASE("normal closure and normality") {
  auto s4 = catalog::symmetric(4);
  int t12 = -1, dd = -1;
  for (int x = 0; x < 24; ++x) {
    if (s4->label(x) == "(1 2)") t12 = x;
    if (s4->label(x) == "(1 2)(3 4)") dd = x;
  }
  REQUIRE(t12 >= 0);
  REQUIRE(dd >= 0);
  CHECK(normal_closure(s4, {t12}).order() == 24);
  Subgroup v4 = normal_closure(s4, {dd});
  CHECK(v4.order() == 4);
  CHECK(is_normal(*s4, v4.members));
  CHECK_FALSE(is_normal(*s4, subgroup_generated(s4, {t12}).members));
}

TEST_CASE("quotients are surjective homomorphisms with even fibers") {
  auto s4 = catalog::symmetric(4);
  Subgroup v4 = p_core(s4, 2);
  REQUIRE(v4.order() == 4);
  QuotientMap qm = quotient(s4, v4.members);
  CHECK(qm.target->order() == 6);
  CHECK(qm.target->exponent() == 6);
  // Non-abelian, so the quotient is S3 rather than C6.
  bool abelian = true;
  for (int a = 0; a < 6 && abelian; ++a)
    for (int b = 0; b < 6 && abelian; ++b)
      abelian = qm.target->mult(a, b) == qm.target->mult(b, a);
  CHECK_FALSE(abelian);

  // Homomorphism, exhaustively.
  for (int a = 0; a < 24; ++a)
    for (int b = 0; b < 24; ++b)
      CHECK(qm.projection[s4->mult(a, b)] ==
            qm.target->mult(qm.projection[a], qm.projection[b]));

  // Fibers all have kernel size.
  std::vector<int> fiber(6, 0);
  for (int x = 0; x < 24; ++x) ++fiber[qm.projection[x]];
  for (int c = 0; c < 6; ++c) CHECK(fiber[c] == 4);

  // image/preimage round trip: the preimage of an image is a union of cosets
  std::vector<int> img = qm.image({0, 1});
  std::vector<int> pre = qm.preimage(img);
  CHECK(pre.size() == 4 * img.size());
  for (int x : {0, 1})
    CHECK(std::binary_search(pre.begin(), pre.end(), x));

  // Quotient by a non-normal subgroup must throw.
  int t12 = -1;
  for (int x = 0; x < 24; ++x)
    if (s4->label(x) == "(1 2)") t12 = x;
  CHECK_THROWS_AS(quotient(s4, subgroup_generated(s4, {t12}).members), Error);
}

TEST_CASE("sylow subgroups via normalizer growth") {
  auto s4 = catalog::symmetric(4);
  CHECK(sylow(s4, 2).order() == 8);
  CHECK(sylow(s4, 3).order() == 3);
  CHECK(sylow(s4, 5).order() == 1);

  // Against the exhaustive lattice: result must occur among the subgroups of
  // the right order.
  auto subs = all_subgroups(s4);
  Subgroup p2 = sylow(s4, 2);
  bool found = false;
  for (const auto& h : subs)
    if (h.members == p2.members) found = true;
  CHECK(found);
  int order8 = 0;
  for (const auto& h : subs)
    if (h.order() == 8) ++order8;
  CHECK(order8 == 3);

  auto c12 = catalog::cyclic(12);
  CHECK(sylow(c12, 2).order() == 4);
  CHECK(sylow(c12, 3).order() == 3);

  auto a5 = catalog::alternating(5);
  CHECK(sylow(a5, 2).order() == 4);
  CHECK(sylow(a5, 5).order() == 5);
}

TEST_CASE("p-cores and fitting subgroup") {
  auto s4 = catalog::symmetric(4);
  CHECK(p_core(s4, 2).order() == 4);
  CHECK(p_core(s4, 3).order() == 1);
  CHECK(fitting(s4).order() == 4);

  auto s3 = catalog::symmetric(3);
  CHECK(fitting(s3).order() == 3);

  auto a5 = catalog::alternating(5);
  CHECK(fitting(a5).order() == 1);

  auto q8 = catalog::generalized_quaternion(8);
  CHECK(fitting(q8).order() == 8);

  // Oracle: the Fitting subgroup contains every normal nilpotent subgroup.
  Subgroup f = fitting(s4);
  for (const auto& h : all_subgroups(s4)) {
    if (!is_normal(*s4, h.members)) continue;
    if (!is_nilpotent(materialize(s4, h.members))) continue;
    CHECK(std::includes(f.members.begin(), f.members.end(), h.members.begin(),
                        h.members.end()));
  }
}

TEST_CASE("series, nilpotency, solvability") {
  auto s3 = catalog::symmetric(3);
  auto s4 = catalog::symmetric(4);
  auto q8 = catalog::generalized_quaternion(8);
  auto a5 = catalog::alternating(5);
  auto c12 = catalog::cyclic(12);

  SeriesResult uc = upper_central_series(q8);
  CHECK(uc.reached);
  std::vector<int> uc_orders;
  for (const auto& t : uc.terms) uc_orders.push_back(t.order());
  CHECK(uc_orders == std::vector<int>{1, 2, 8});

  CHECK_FALSE(upper_central_series(s3).reached);
  CHECK(upper_central_series(s3).terms.size() == 1);  // Z(S3) = 1, stalls at once

  SeriesResult ds = derived_series(s4);
  CHECK(ds.reached);
  std::vector<int> ds_orders;
  for (const auto& t : ds.terms) ds_orders.push_back(t.order());
  CHECK(ds_orders == std::vector<int>{24, 12, 4, 1});
  CHECK_FALSE(derived_series(a5).reached);

  CHECK(is_nilpotent(q8));
  CHECK(is_nilpotent(c12));
  CHECK_FALSE(is_nilpotent(s3));
  CHECK(is_solvable(s4));
  CHECK_FALSE(is_solvable(a5));

  // Baumslag-Wiegold style cross-check.
  for (const char* name : {"S3", "S4", "Q8", "D8", "C12", "A4", "D12", "F20"}) {
    auto g = catalog::build(name);
    CAPTURE(name);
    CHECK(is_nilpotent(g) == oracle::nilpotent_by_order_law(*g));
  }

  SeriesResult fs = fitting_series(s4);
  CHECK(fs.reached);
  std::vector<int> fs_orders;
  for (const auto& t : fs.terms) fs_orders.push_back(t.order());
  CHECK(fs_orders == std::vector<int>{1, 4, 12, 24});
  CHECK(fitting_height(s4) == 3);
  CHECK(fitting_height(s3) == 2);
  CHECK(fitting_height(c12) == 1);
  CHECK(fitting_height(catalog::cyclic(1)) == 1);
  CHECK_FALSE(fitting_height(a5).has_value());
}

TEST_CASE("subgroup lattices") {
  CHECK(all_subgroups(catalog::cyclic(6)).size() == 4);
  CHECK(all_subgroups(catalog::symmetric(3)).size() == 6);
  CHECK(all_subgroups(catalog::symmetric(4)).size() == 30);
  CHECK(all_subgroups(catalog::alternating(4)).size() == 10);

  auto s4 = catalog::symmetric(4);
  std::vector<int> normal_orders;
  for (const auto& n : normal_subgroups(s4)) normal_orders.push_back(n.order());
  CHECK(normal_orders == std::vector<int>{1, 4, 12, 24});

  std::vector<int> a5_orders;
  for (const auto& n : normal_subgroups(catalog::alternating(5)))
    a5_orders.push_back(n.order());
  CHECK(a5_orders == std::vector<int>{1, 60});

  CHECK_THROWS_AS(all_subgroups(catalog::symmetric(4), 20), Error);
}

TEST_CASE("direct products") {
  auto s3 = catalog::symmetric(3);
  auto c2 = catalog::cyclic(2);
  auto p = Group::direct_product(s3, c2);
  CHECK(p->order() == 12);
  CHECK(p->exponent() == 6);
  CHECK(p->name() == "S3xC2");
  CHECK_FALSE(is_nilpotent(p));

  // Projections behave like components.
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 2; ++j) {
      int a = i * 2 + j;
      CHECK(p->element_order(a) ==
            std::lcm(s3->element_order(i), c2->element_order(j)));
    }

  // Large product goes through the permutation backing.
  auto s5 = catalog::symmetric(5);
  auto big = Group::direct_product(s5, s5);
  CHECK(big->order() == 14400);
  CHECK(big->has_permutations());
  CHECK(big->exponent() == 60);
  int x = 7 * 120 + 11;
  CHECK(big->mult(x, big->inverse(x)) == big->identity());
  CHECK(big->element_order(x) ==
        std::lcm(s5->element_order(7), s5->element_order(11)));
}

TEST_CASE("materialized subgroups") {
  auto s3 = catalog::symmetric(3);
  Subgroup a3 = fitting(s3);
  auto g = materialize(s3, a3.members);
  CHECK(g->order() == 3);
  CHECK(g->exponent() == 3);
  CHECK(is_nilpotent(g));
  CHECK_THROWS_AS(materialize(s3, std::vector<int>{0, 1}), Error);  // not closed unless {id, involution}
}
