#include <doctest.h>

#include "support.hpp"

#include <set>

using namespace flatkern;

namespace {

SearchSpec base_spec() {
  SearchSpec s;
  s.base = prym_base_prediagram();
  s.involution = prym_base_involution();
  return s;
}

std::set<std::string> survivor_tuples(const ClassificationResult& r) {
  std::set<std::string> t;
  for (const auto& s : r.survivors) t.insert(s.tuple);
  return t;
}

}  // namespace

TEST_CASE("golden classification on the Prym(1,1,1,1) base") {
  auto r = enumerate_matchings(base_spec());
  CHECK(r.candidates == 720);
  CHECK(survivor_tuples(r) == std::set<std::string>{"cafbed", "cdefab", "cefbda", "fabced", "faecdb"});
  for (const auto& s : r.survivors) {
    bool first = s.tuple == "cafbed" || s.tuple == "fabced";
    CHECK(s.kind == (first ? Kind::First : Kind::Second));
    CHECK(s.fixed_cylinders.size() == 2);
    CHECK(std::find(s.members.begin(), s.members.end(), s.tuple) != s.members.end());
  }
  REQUIRE(r.find_rejection("eafbdc"));
  CHECK(r.find_rejection("eafbdc")->reason == "metric-infeasible");
  REQUIRE(r.find_rejection("cbafed"));
  CHECK(r.find_rejection("cbafed")->reason == "disconnected");
  REQUIRE(r.find_rejection("cfeadb"));
  CHECK(r.find_rejection("cfeadb")->reason == "isomorphic-duplicate");
  CHECK(r.find_rejection("cfeadb")->duplicate_of == "cefbda");
  // every candidate is accounted for exactly once
  CHECK(r.survivors.size() + r.rejected.size() == 720);
  std::size_t sum = 0;
  for (const auto& [k, v] : r.reason_counts()) sum += v;
  CHECK(sum == r.rejected.size());
}

TEST_CASE("survivors are independent of filter order") {
  std::vector<Filter> order{Filter::Connectivity, Filter::Involution, Filter::Metric};
  std::sort(order.begin(), order.end());
  auto want = survivor_tuples(enumerate_matchings(base_spec()));
  do {
    auto spec = base_spec();
    spec.order = order;
    CHECK(survivor_tuples(enumerate_matchings(spec)) == want);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("kind filter") {
  auto spec = base_spec();
  spec.kind_filter = Kind::First;
  auto r = enumerate_matchings(spec);
  CHECK(survivor_tuples(r) == std::set<std::string>{"cafbed", "fabced"});
  CHECK(r.find_rejection("cdefab")->reason == "other-kind");
  spec.kind_filter = Kind::Second;
  CHECK(survivor_tuples(enumerate_matchings(spec)) == std::set<std::string>{"cdefab", "cefbda", "faecdb"});
}

TEST_CASE("survivor witnesses are valid and rho-invariant") {
  auto spec = base_spec();
  auto r = enumerate_matchings(spec);
  for (const auto& s : r.survivors) {
    SeparatrixDiagram d{spec.base, s.matching, s.metric, 0};
    CHECK(validate(d).ok());
    auto surf = Surface::with_defaults(d);
    CHECK(check_involution(surf, s.rho).ok());
    CHECK(classify_kind(spec.base, s.matching, s.rho) == s.kind);
  }
}

TEST_CASE("requesting zero fixed cylinders") {
  auto spec = base_spec();
  spec.required_fixed_cylinders = 0;
  auto r = enumerate_matchings(spec);
  for (const auto& s : r.survivors) CHECK(s.fixed_cylinders.empty());
}

TEST_CASE("stable prediagram enumeration") {
  auto g2 = enumerate_stable_prediagrams({1, 1});
  CHECK(g2.size() == 1);
  CHECK(enumerate_stable_prediagrams({0}).size() == 1);
  auto four = enumerate_stable_prediagrams({1, 1, 1, 1});
  REQUIRE_FALSE(four.empty());
  // the base class is present up to isomorphism or reversal
  auto base = prym_base_prediagram();
  bool found = false;
  for (const auto& sp : four) {
    CHECK(validate(sp.pre).ok());
    CHECK(is_stable(sp.pre));
    found = found || are_isomorphic(sp.pre, base) || are_isomorphic(reversal(sp.pre), base);
  }
  CHECK(found);
  // classes are pairwise distinct
  for (std::size_t i = 0; i < four.size(); ++i)
    for (std::size_t j = i + 1; j < four.size(); ++j) {
      CHECK_FALSE(are_isomorphic(four[i].pre, four[j].pre));
      CHECK_FALSE(are_isomorphic(reversal(four[i].pre), four[j].pre));
    }
  CHECK_THROWS_AS(enumerate_stable_prediagrams({4, 4}), std::length_error);
  CHECK_THROWS(enumerate_stable_prediagrams({-1}));
}

TEST_CASE("kind names") {
  CHECK(kind_name(Kind::First) == "first");
  CHECK(kind_name(Kind::Second) == "second");
}
