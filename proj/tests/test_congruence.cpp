#include <doctest.h>

#include "narhoop/axioms.hpp"
#include "narhoop/canonical.hpp"
#include "narhoop/congruence.hpp"
#include "narhoop/enumerate.hpp"
#include "narhoop/errors.hpp"
#include "narhoop/suite.hpp"
#include "oracle.hpp"

using namespace narhoop;

namespace {

using Set = ElementSet;

std::vector<FiniteMagma> narhoops(std::size_t max_n) {
  std::vector<FiniteMagma> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto ms = enumerate({n, ModelClass::narhoop});
    out.insert(out.end(), ms.begin(), ms.end());
  }
  return out;
}

std::vector<std::size_t> ids(const Partition& p) {
  std::vector<std::size_t> out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[x] = p.block_of(Element(x));
  return out;
}

std::set<std::vector<std::size_t>> id_set(const std::vector<CongruenceInfo>& cs) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& c : cs) out.insert(ids(c.partition));
  return out;
}

Set subset_of(std::uint32_t mask, std::size_t n) {
  Set s;
  for (std::size_t x = 0; x < n; ++x)
    if (mask >> x & 1) s.push_back(Element(x));
  return s;
}

bool contains(const Set& s, Element x) { return std::find(s.begin(), s.end(), x) != s.end(); }

}  // namespace

TEST_CASE("partitions") {
  const Partition p({2, 2, 2, 0});
  CHECK(p.block_count() == 2);
  CHECK(p.blocks()[0] == Set{0, 1, 2});
  CHECK(p.blocks()[1] == Set{3});
  CHECK(p.block_of(3) == 1);
  CHECK(Partition::identity(3).block_count() == 3);
  CHECK(Partition::full(3).block_count() == 1);
  CHECK(Partition::from_blocks(3, {{2}, {0, 1}}) == Partition({0, 0, 1}));
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}, {1, 2}}), PreconditionError);
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}}), PreconditionError);
  CHECK_THROWS_AS(Partition::from_blocks(2, {{0, 1}, {}}), PreconditionError);
  CHECK_THROWS_AS(Partition({0, 7}), PreconditionError);
  CHECK(partition_to_json(p).dump() == "[[0,1,2],[3]]");
}

TEST_CASE("all_congruences on fixtures") {
  CHECK(all_congruences(trivial_magma()).size() == 1);

  const auto z2 = all_congruences(fixture("Z2-xor"));
  REQUIRE(z2.size() == 2);
  CHECK(z2[0].partition == Partition::identity(2));
  CHECK(z2[1].partition == Partition::full(2));

  const auto g2 = all_congruences(fixture("G2"));
  REQUIRE(g2.size() == 2);
  for (const auto& c : g2) {
    CHECK(c.is_congruence);
    CHECK(c.is_unital);
  }
}

TEST_CASE("principal congruences") {
  for (const char* name : {"Z2-xor", "G2"}) {
    const FiniteMagma m = fixture(name);
    CHECK(principal_congruence(m, 1, 1).partition == Partition::identity(2));
    CHECK(principal_congruence(m, 0, 1).partition == Partition::full(2));
  }
  CHECK_THROWS_AS(principal_congruence(fixture("G2"), 0, 2), PreconditionError);
}

TEST_CASE("congruences match the brute-force definition") {
  std::vector<FiniteMagma> models;
  for (const auto& f : builtin_fixtures()) models.push_back(f.magma);
  for (std::size_t n = 1; n <= 3; ++n)
    for (ModelClass c : {ModelClass::rres_n, ModelClass::right_quasigroup}) {
      auto ms = enumerate({n, c});
      models.insert(models.end(), ms.begin(), ms.end());
    }
  for (const auto& m : enumerate({4, ModelClass::unital_narhoop})) models.push_back(m);
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) models.push_back(oracle::random_magma(rng, 1 + i % 4));

  for (const auto& m : models) {
    const auto expected = oracle::brute_congruences(m);
    const auto fast = all_congruences(m);
    CHECK(id_set(fast) == expected);
    CHECK(id_set(congruences_by_partition_filter(m)) == expected);
    CHECK(fast.size() == expected.size());
    for (const auto& c : fast) {
      bool unital = true;
      for (std::size_t x = 0; x < m.size(); ++x) unital = unital && c.partition.related(m.div(x, x), m.div(0, 0));
      CHECK(c.is_unital == unital);
      CHECK(c.n_theta.has_value() == unital);
    }
  }
}

TEST_CASE("quotients") {
  const FiniteMagma g2 = fixture("G2");
  const auto id = analyze_partition(g2, Partition::identity(2));
  CHECK(isomorphic(quotient(g2, id), g2));
  const FiniteMagma q = quotient(g2, analyze_partition(g2, Partition::full(2)));
  CHECK(q.size() == 1);
  CHECK(is_unital(q.view()));

  bool found = false;
  for (const auto& m : enumerate({3, ModelClass::rres_n})) {
    for (std::size_t a = 0; a < 3 && !found; ++a)
      for (std::size_t b = a + 1; b < 3 && !found; ++b) {
        std::vector<std::size_t> lab{0, 1, 2};
        lab[b] = a;
        const CongruenceInfo c = analyze_partition(m, Partition(lab));
        if (c.is_congruence) continue;
        CHECK_THROWS_AS(quotient(m, c), PreconditionError);
        found = true;
      }
    if (found) break;
  }
  CHECK(found);

  for (const auto& m : narhoops(3))
    for (const auto& c : all_congruences(m)) {
      const FiniteMagma f = quotient(m, c);
      CHECK(is_member(f.view(), ModelClass::narhoop));
      CHECK(is_unital(f.view()) == c.is_unital);
      if (c.is_unital) CHECK(f.div(0, 0) == c.partition.block_of(c.n_theta->front()));
    }
}

TEST_CASE("inner map generators") {
  const auto one = inn_generators(trivial_magma());
  CHECK(one.size() == 6);
  for (const auto& g : one) CHECK(g.map == Set{0});

  const auto g2 = inn_generators(fixture("G2"));
  REQUIRE(g2.size() == 24);
  // family 1, x = 1, y = 1
  CHECK(g2[3].family == 1);
  CHECK(g2[3].x == 1);
  CHECK(g2[3].y == 1);
  CHECK(g2[3].map == Set{0, 1});

  const auto z2 = inn_generators(fixture("Z2-xor"));
  CHECK(z2[0].map == Set{0, 1});

  for (std::size_t i = 0; i < g2.size(); ++i) {
    CHECK(g2[i].family == int(i / 4) + 1);
    CHECK(g2[i].x == (i / 2) % 2);
    CHECK(g2[i].y == i % 2);
  }
}

TEST_CASE("generator closure gives invariance under the whole semigroup") {
  for (const auto& m : narhoops(3)) {
    std::vector<std::vector<Element>> maps;
    for (const auto& g : inn_generators(m)) maps.push_back(g.map);
    const auto semigroup = oracle::semigroup_closure(maps);
    for (std::uint32_t mask = 1; mask < (1u << m.size()); ++mask) {
      const Set s = subset_of(mask, m.size());
      bool closed = true;
      for (const auto& g : maps)
        for (Element z : s) closed = closed && contains(s, g[z]);
      bool invariant = true;
      for (const auto& f : semigroup)
        for (Element z : s) invariant = invariant && contains(s, f[z]);
      CHECK(closed == invariant);
      CHECK(check_normal(m, s).is_inn_invariant == invariant);
    }
  }
}

TEST_CASE("check_normal") {
  const FiniteMagma g2 = fixture("G2");
  CHECK(check_normal(g2, {0, 1}).is_normal);
  CHECK(check_normal(g2, {1}).is_normal);
  const auto bad = check_normal(g2, {0});
  CHECK_FALSE(bad.is_normal);
  CHECK_FALSE(bad.is_upward_closed);
  CHECK_FALSE(bad.upward_witness.empty());
  CHECK(bad.upward_witness == "0<=1, 1 not in N");
  CHECK_THROWS_AS(check_normal(g2, {}), PreconditionError);
  CHECK_THROWS_AS(check_normal(fixture("A1"), {0}), PreconditionError);
  for (const auto& m : narhoops(3)) {
    Set all;
    for (std::size_t x = 0; x < m.size(); ++x) all.push_back(Element(x));
    CHECK(check_normal(m, all).is_normal);
  }
  const Json j = subset_analysis_to_json(bad);
  CHECK(j["is_normal"] == false);
  CHECK(j.contains("upward_witness"));
}

TEST_CASE("normal subsets by definition") {
  for (const auto& m : narhoops(3)) {
    std::vector<std::vector<Element>> maps;
    for (const auto& g : inn_generators(m)) maps.push_back(g.map);
    const auto semigroup = oracle::semigroup_closure(maps);
    std::set<Set> expected;
    for (std::uint32_t mask = 1; mask < (1u << m.size()); ++mask) {
      const Set s = subset_of(mask, m.size());
      bool ok = true;
      for (Element x : s)
        for (Element y : s) ok = ok && contains(s, m.mul(x, y)) && contains(s, m.div(x, y));
      for (Element x : s)
        for (std::size_t y = 0; y < m.size(); ++y) ok = ok && (!oracle::le(m, x, Element(y)) || contains(s, Element(y)));
      for (const auto& f : semigroup)
        for (Element z : s) ok = ok && contains(s, f[z]);
      if (ok) expected.insert(s);
    }
    const auto got = normal_subsets(m);
    CHECK(std::set<Set>(got.begin(), got.end()) == expected);
    CHECK(got.size() == expected.size());
  }
}

TEST_CASE("N-preorder") {
  const FiniteMagma g2 = fixture("G2");
  const auto full = n_preorder(g2, {0, 1});
  CHECK(std::all_of(full.relation.begin(), full.relation.end(), [](auto v) { return v != 0; }));
  const auto top = n_preorder(g2, {1});
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) CHECK(top.related(x, y) == g2.leq(x, y));
  CHECK(top.holds());
  const auto one = n_preorder(trivial_magma(), {0});
  CHECK(one.relation == std::vector<std::uint8_t>{1});
  CHECK_THROWS_AS(n_preorder(g2, {0}), PreconditionError);

  for (const auto& m : narhoops(3))
    for (const auto& s : normal_subsets(m)) CHECK(n_preorder(m, s).holds());
}

TEST_CASE("theta from N") {
  const FiniteMagma g2 = fixture("G2");
  CHECK(theta_from_N(g2, {0, 1}).partition == Partition::full(2));
  CHECK(theta_from_N(g2, {1}).partition == Partition::identity(2));
  const auto z = theta_from_N(fixture("Z2-xor"), {0});
  CHECK(z.partition == Partition::identity(2));
  CHECK(z.n_theta == Set{0});
  CHECK_THROWS_AS(theta_from_N(g2, {0}), PreconditionError);
}

TEST_CASE("N from theta") {
  const FiniteMagma g2 = fixture("G2");
  CHECK(n_from_theta(g2, analyze_partition(g2, Partition::identity(2))) == Set{1});
  CHECK(n_from_theta(fixture("Z2-xor"), analyze_partition(fixture("Z2-xor"), Partition::identity(2))) == Set{0});
  for (const auto& m : narhoops(3)) {
    Set all;
    for (std::size_t x = 0; x < m.size(); ++x) all.push_back(Element(x));
    CHECK(n_from_theta(m, analyze_partition(m, Partition::full(m.size()))) == all);
    for (const auto& c : all_congruences(m)) {
      if (c.is_unital)
        CHECK(n_from_theta(m, c) == *c.n_theta);
      else
        CHECK_THROWS_AS(n_from_theta(m, c), PreconditionError);
    }
  }
}

TEST_CASE("unital congruences correspond to normal subsets") {
  for (const auto& m : narhoops(3)) {
    const Correspondence c = unital_correspondence(m);
    CHECK_MESSAGE(c.bijective, c.witness);
    CHECK(c.unital_congruences.size() == c.normal_subsets.size());
    for (const auto& t : c.unital_congruences) CHECK(theta_from_N(m, *t.n_theta).partition == t.partition);
  }
  CHECK_THROWS_AS(unital_correspondence(fixture("A1")), PreconditionError);
}

TEST_CASE("congruence JSON") {
  const auto c = all_congruences(fixture("G2"));
  CHECK(congruence_to_json(c[0]).dump() == R"({"blocks":[[0],[1]],"is_congruence":true,"is_unital":true,"n_theta":[1]})");
}

// Only size-4 narhoop with a closed, Inn-invariant subset that is not an up-set.
TEST_CASE("upward closure is not implied by the other two conditions") {
  const FiniteMagma m = FiniteMagma::from_rows({{0, 0, 2, 2}, {0, 1, 2, 2}, {2, 2, 3, 3}, {3, 3, 2, 2}},
                                               {{1, 0, 2, 2}, {1, 1, 2, 2}, {2, 2, 1, 1}, {3, 3, 2, 2}});
  REQUIRE(classify(m).is_narhoop);
  CHECK(oracle::le(m, 3, 0));
  const auto a = check_normal(m, {1, 2, 3});
  CHECK(a.is_subnarhoop);
  CHECK(a.is_inn_invariant);
  CHECK_FALSE(a.is_upward_closed);
  CHECK_FALSE(a.is_normal);

  std::size_t hits = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& x : enumerate({n, ModelClass::narhoop}))
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Set s;
        for (Element e = 0; e < n; ++e)
          if (mask >> e & 1) s.push_back(e);
        const auto b = check_normal(x, s);
        hits += b.is_subnarhoop && b.is_inn_invariant && !b.is_upward_closed;
      }
  CHECK(hits == 1);
}
