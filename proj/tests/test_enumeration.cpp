#include <doctest.h>

#include <cstdlib>
#include <map>

#include "narhoop/canonical.hpp"
#include "narhoop/enumerate.hpp"
#include "narhoop/errors.hpp"
#include "narhoop/suite.hpp"
#include "oracle.hpp"

using namespace narhoop;

namespace {

// Test-local canonical form: least (mul, div) flattening over all relabelings,
// with mul'[p[x]][p[y]] = p[mul[x][y]].
std::vector<Element> brute_canonical(const FiniteMagma& m) {
  const std::size_t n = m.size();
  std::vector<Element> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = Element(i);
  std::vector<Element> best;
  do {
    std::vector<Element> t(2 * n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        t[p[x] * n + p[y]] = p[m.mul(x, y)];
        t[n * n + p[x] * n + p[y]] = p[m.div(x, y)];
      }
    if (best.empty() || t < best) best = t;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Iso classes of all n=2 table pairs satisfying every axiom in `axioms`.
std::size_t brute_count_n2(std::initializer_list<Axiom> axioms) {
  std::set<std::vector<Element>> classes;
  for (unsigned bits = 0; bits < 256; ++bits) {
    std::vector<Element> mul(4), div(4);
    for (int i = 0; i < 4; ++i) {
      mul[i] = Element((bits >> i) & 1);
      div[i] = Element((bits >> (4 + i)) & 1);
    }
    const FiniteMagma m(2, mul, div);
    bool ok = true;
    for (Axiom a : axioms) ok = ok && oracle::holds(m, a);
    if (ok) classes.insert(brute_canonical(m));
  }
  return classes.size();
}

std::set<CanonicalForm> forms(const std::vector<FiniteMagma>& ms) {
  std::set<CanonicalForm> s;
  for (const auto& m : ms) s.insert(canonicalize(m));
  return s;
}

}  // namespace

TEST_CASE("size 1 has one model in every class") {
  for (ModelClass c : all_model_classes()) {
    CHECK(enumerate({1, c}).size() == 1);
    CHECK(enumerate({1, c, SearchMode::generate_and_filter}).size() == 1);
  }
}

TEST_CASE("size 2 counts against a brute-force oracle") {
  CHECK(brute_count_n2({Axiom::RQ}) == 3);
  CHECK(enumerate({2, ModelClass::right_quasigroup}).size() == 3);

  const std::size_t narhoops = brute_count_n2({Axiom::N1, Axiom::N2, Axiom::N3, Axiom::N4});
  CHECK(narhoops == 4);
  CHECK(enumerate({2, ModelClass::narhoop}).size() == narhoops);
  CHECK(enumerate({2, ModelClass::rres_n}).size() == brute_count_n2({Axiom::N, Axiom::RRES}));
  CHECK(enumerate({2, ModelClass::right_hoop}).size() ==
        brute_count_n2({Axiom::COMM_SQCAP, Axiom::RH1, Axiom::RH2}));
}

TEST_CASE("backtracking and generate-and-filter agree at size 2") {
  for (ModelClass c : all_model_classes())
    CHECK(enumerate({2, c}) == enumerate({2, c, SearchMode::generate_and_filter}));
}

TEST_CASE("restricted oracle spaces at size 4") {
  for (ModelClass c : {ModelClass::rres_n, ModelClass::right_quasigroup}) {
    REQUIRE(generate_and_filter_feasible(4, c));
    CHECK(enumerate({4, c}) == enumerate({4, c, SearchMode::generate_and_filter}));
  }
  CHECK_FALSE(generate_and_filter_feasible(4, ModelClass::narhoop));
}

// Backtracking counts, frozen after the acceptance suite's cross-mode check.
TEST_CASE("golden counts") {
  const std::map<ModelClass, std::array<std::size_t, 4>> golden{
      {ModelClass::rres_n, {1, 4, 56, 14867}},
      {ModelClass::narhoop, {1, 4, 52, 14607}},
      {ModelClass::right_quasigroup, {1, 3, 44, 14022}},
      {ModelClass::right_hoop, {1, 1, 2, 8}},
      {ModelClass::unital_narhoop, {1, 2, 9, 285}},
  };
  for (const auto& [c, counts] : golden)
    for (std::size_t n = 1; n <= 4; ++n) CHECK_MESSAGE(enumerate({n, c}).size() == counts[n - 1], model_class_name(c));
}

TEST_CASE("serial and parallel kernels agree") {
  for (ModelClass c : all_model_classes()) {
    SearchStats s, p;
    CHECK(backtrack_serial(3, c, &s) == backtrack_parallel(3, c, 3, &p));
    CHECK(s.nodes > 0);
  }
  const std::array classes{ModelClass::narhoop, ModelClass::right_hoop};
  CHECK(generate_and_filter_serial(2, classes) == generate_and_filter_parallel(2, classes, 2));
  const std::array rq{ModelClass::right_quasigroup};
  CHECK(generate_and_filter_serial(4, rq) == generate_and_filter_parallel(4, rq, 2));
}

TEST_CASE("canonical form") {
  const FiniteMagma one = trivial_magma();
  CHECK(canonicalize(one).magma == one);

  const FiniteMagma a1 = fixture("A1");
  const std::array<Element, 2> swap{1, 0};
  const FiniteMagma a1s = relabel(a1, swap);
  CHECK(a1s != a1);
  CHECK(canonicalize(a1) == canonicalize(a1s));
  CHECK(isomorphic(a1, a1s));

  const FiniteMagma z2 = fixture("Z2-xor");
  CHECK(isomorphic(relabel(z2, swap), z2));
  CHECK(canonicalize(z2).magma == z2);
  CHECK_FALSE(isomorphic(a1, z2));
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937 rng(2024);
  std::vector<FiniteMagma> models;
  for (std::size_t n = 1; n <= 3; ++n)
    for (ModelClass c : {ModelClass::rres_n, ModelClass::narhoop}) {
      auto ms = enumerate({n, c});
      models.insert(models.end(), ms.begin(), ms.end());
    }
  for (int i = 0; i < 40; ++i) models.push_back(oracle::random_magma(rng, 4));
  for (const auto& m : models) {
    const CanonicalForm base = canonicalize(m);
    CHECK(canonicalize(base.magma) == base);
    CHECK(base.magma.mul_table().size() == m.size() * m.size());
    const auto expected = brute_canonical(m);
    std::vector<Element> got = base.magma.mul_table();
    got.insert(got.end(), base.magma.div_table().begin(), base.magma.div_table().end());
    CHECK(got == expected);
    for (int k = 0; k < 20; ++k) {
      const auto p = oracle::random_permutation(rng, m.size());
      CHECK(canonicalize(relabel(m, p)) == base);
    }
  }
}

TEST_CASE("enumeration output is canonical and ascending") {
  for (ModelClass c : all_model_classes()) {
    const auto ms = enumerate({3, c});
    CHECK(std::is_sorted(ms.begin(), ms.end()));
    CHECK(std::adjacent_find(ms.begin(), ms.end()) == ms.end());
    for (const auto& m : ms) {
      CHECK(canonicalize(m).magma == m);
      CHECK(is_member(m.view(), c));
    }
  }
}

TEST_CASE("right hoops and right quasigroups are narhoops") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto nh = forms(enumerate({n, ModelClass::narhoop}));
    for (ModelClass c : {ModelClass::right_hoop, ModelClass::right_quasigroup, ModelClass::unital_narhoop})
      for (const auto& m : enumerate({n, c})) CHECK(nh.contains(CanonicalForm{m}));
    const auto rn = forms(enumerate({n, ModelClass::rres_n}));
    for (const auto& f : nh) CHECK(rn.contains(f));
  }
}

TEST_CASE("count tables") {
  const std::array classes{ModelClass::narhoop, ModelClass::right_quasigroup};
  const CountTable bt = count(2, classes, SearchMode::backtracking);
  const CountTable gf = count(2, classes, SearchMode::generate_and_filter);
  REQUIRE(bt.counts.size() == 2);
  CHECK(bt.counts[0].count == 4);
  CHECK(bt.counts[1].count == 3);
  for (std::size_t i = 0; i < 2; ++i) CHECK(bt.counts[i].count == gf.counts[i].count);
}

TEST_CASE("bad tasks") {
  CHECK_THROWS_AS(enumerate({0, ModelClass::narhoop}), UsageError);
  CHECK_THROWS_AS(enumerate({kMaxSearchSize + 1, ModelClass::narhoop}), UsageError);
  CHECK_THROWS_AS(enumerate({4, ModelClass::narhoop, SearchMode::generate_and_filter}), UsageError);
  CHECK_THROWS_AS(parse_search_mode("random"), UsageError);
  CHECK(parse_search_mode("generate_and_filter") == SearchMode::generate_and_filter);
}

TEST_CASE("NARHOOP_THREADS") {
  setenv("NARHOOP_THREADS", "3", 1);
  CHECK(default_parallel_width() == 3);
  setenv("NARHOOP_THREADS", "zero", 1);
  CHECK(default_parallel_width() == 1);
  unsetenv("NARHOOP_THREADS");
  CHECK(default_parallel_width() == 1);
}
