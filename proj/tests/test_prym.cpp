#include <doctest.h>

#include "support.hpp"

using namespace flatkern;

TEST_CASE("reversed diagram flips signs and inverts the matching") {
  auto d = load_preset("genus2").diagram;
  auto r = reversed_diagram(d);
  for (int e = 0; e < d.pre.n_ends; ++e) CHECK(r.pre.positive[e] != d.pre.positive[e]);
  for (auto [a, b] : d.matching) CHECK(r.matching.at(b) == a);
  CHECK(validate(r).ok());
}

TEST_CASE("designated involutions on the Prym(1,1,1,1) presets") {
  for (int k = 1; k <= 5; ++k) {
    auto id = "prym1111-s" + std::to_string(k);
    CAPTURE(id);
    auto p = load_preset(id);
    for (const std::string metric : {"golden-irrational", "unit-rational"}) {
      auto s = p.surface(metric);
      auto chk = check_involution(s, *p.involution);
      CHECK(chk.structural);
      CHECK(chk.transports_matching);
      CHECK(chk.preserves_metric);
      CHECK(chk.formula);
      CHECK(fixed_point_count(s, *p.involution) == FixedCounts{0, 0, 2});
    }
  }
}

TEST_CASE("involution counts on the other presets") {
  auto g = load_preset("genus2");
  auto s = g.surface("golden-irrational");
  auto inv = find_prym_involutions(s);
  REQUIRE(inv.size() == 1);
  CHECK(inv[0].fixed == FixedCounts{0, 0, 3});
  CHECK(cycle_notation(inv[0].pi) == "()");

  auto odd = load_preset("prym22odd");
  auto so = odd.surface("golden-irrational");
  CHECK(check_involution(so, *odd.involution).ok());
  CHECK(cycle_notation(cylinder_permutation(so, *odd.involution)) == "(3 4)");

  auto h = load_preset("prym211");
  auto sh = h.surface("golden-irrational");
  CHECK(check_involution(sh, *h.involution).ok());
  CHECK(cycle_notation(cylinder_permutation(sh, *h.involution)) == "(1 5)(2 4)");
  CHECK(fixed_point_count(sh, *h.involution).total() == 4);
}

TEST_CASE("fixed-point formula and parity over every involution found") {
  for (const auto& id : preset_ids()) {
    auto p = load_preset(id);
    if (!p.has_matching()) continue;
    CAPTURE(id);
    auto s = p.surface("golden-irrational");
    auto sig = stratum_signature(s.diagram.pre);
    int g = sig.genus;
    auto all = find_prym_involutions(s);
    CHECK_FALSE(all.empty());
    for (const auto& inv : all) {
      CHECK(is_structural_involution(s.diagram.pre, inv.rho));
      CHECK(inv.fixed.total() == 10 - 2 * g);
      if (sig.kappa == std::vector<int>{1, 1, 1, 1}) CHECK((inv.fixed.rho_m == 0 || inv.fixed.rho_m == 2));
      // pi is an involution on cylinders
      for (int i = 0; i < s.m(); ++i) CHECK(inv.pi[inv.pi[i]] == i);
    }
  }
}

TEST_CASE("a non-involution is rejected") {
  auto p = load_preset("prym1111-s1");
  auto s = p.surface("golden-irrational");
  Perm id(s.diagram.pre.n_ends);
  std::iota(id.begin(), id.end(), 0);
  CHECK_FALSE(is_structural_involution(s.diagram.pre, id));
  CHECK_FALSE(check_involution(s, id).ok());
}

TEST_CASE("an asymmetric metric breaks the involution") {
  auto p = load_preset("prym1111-s2");
  auto s = p.surface("unit-rational");
  auto rho = *p.involution;
  // scale every length by a different amount on one orbit pair; the matching
  // still transports but the lengths do not
  auto dg = s.diagram;
  int sc = dg.lengths.begin()->first;
  int img = std::min(rho[sc], dg.pre.tau[rho[sc]]);
  if (img != sc) {
    dg.lengths[sc] = dg.lengths[sc] + QuadraticNumber::one(dg.d);
    auto t = Surface::with_defaults(dg, s.cylinders);
    auto chk = check_involution(t, rho);
    CHECK(chk.structural);
    CHECK_FALSE(chk.preserves_metric);
  }
}

TEST_CASE("conjugacy tags point backwards") {
  auto s = load_preset("prym1111-s3").surface("golden-irrational");
  auto all = find_prym_involutions(s);
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].conjugate_of < int(i));
  CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.rho < b.rho; }));
}
