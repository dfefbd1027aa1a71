#include <cstdint>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "rho/factored_int.hpp"
#include "rho/group.hpp"
#include "rho/permutation.hpp"

using rho::FiniteGroup;
using rho::OrderSpectrum;
using rho::Permutation;
using u64 = std::uint64_t;
using u32 = std::uint32_t;

namespace {

Permutation cycle(u32 degree) {
  std::vector<u32> images(degree);
  for (u32 i = 0; i < degree; ++i) images[i] = (i + 1) % degree;
  return Permutation(std::move(images));
}

FiniteGroup cyclic_group(u32 n) {
  return FiniteGroup::enumerate(n, {cycle(n)}, "cyclic");
}

// PSL(2,q) acting on the projective line {0..q-1, infinity=q}, generated by
// the translation z -> z+1 and the inversion z -> -1/z.
FiniteGroup psl2(u32 q) {
  auto powmod = [](u64 b, u64 e, u64 m) {
    u64 r = 1;
    b %= m;
    while (e) {
      if (e & 1) r = r * b % m;
      b = b * b % m;
      e >>= 1;
    }
    return r;
  };
  std::vector<u32> t(q + 1), s(q + 1);
  for (u32 z = 0; z < q; ++z) t[z] = (z + 1) % q;
  t[q] = q;
  s[0] = q;
  s[q] = 0;
  for (u32 z = 1; z < q; ++z) {
    const u64 inv = powmod(z, q - 2, q);
    s[z] = static_cast<u32>((q - inv) % q);
  }
  return FiniteGroup::enumerate(
      q + 1, {Permutation(std::move(t)), Permutation(std::move(s))}, "psl2");
}

// Z_13 semidirect Z_3 with the complement acting by i -> 3i on the kernel:
// block {0..12} carries the translation x and the twist, block {13,14,15}
// carries the 3-cycle of the complement y.
FiniteGroup z13_by_z3() {
  std::vector<u32> x(16), y(16);
  std::iota(x.begin(), x.end(), 0u);
  std::iota(y.begin(), y.end(), 0u);
  for (u32 i = 0; i < 13; ++i) {
    x[i] = (i + 1) % 13;
    y[i] = (3 * i) % 13;
  }
  for (u32 i = 13; i < 16; ++i) y[i] = 13 + (i - 13 + 1) % 3;
  return FiniteGroup::enumerate(
      16, {Permutation(std::move(x)), Permutation(std::move(y))}, "13:3");
}

OrderSpectrum spec_of(std::vector<std::pair<u64, u64>> counts, u64 order) {
  OrderSpectrum s;
  s.group_order = order;
  for (auto [t, c] : counts) s.counts[t] = c;
  return s;
}

}  // namespace

TEST_CASE("permutation validation and composition convention") {
  CHECK_THROWS_AS(Permutation({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({2, 0}), std::invalid_argument);
  CHECK_NOTHROW(Permutation({1, 0}));

  // a = 3-cycle (0 1 2), b = transposition (0 1); (a.compose(b)) applies b
  // first: 0 -> 1 -> 2.
  const Permutation a({1, 2, 0});
  const Permutation b({1, 0, 2});
  const Permutation ab = a.compose(b);
  CHECK(ab(0) == 2);
  CHECK(ab(1) == 1);
  CHECK(ab(2) == 0);
  CHECK(a.compose(a.inverse()).is_identity());
  CHECK(a.inverse().compose(a).is_identity());
  CHECK_THROWS_AS(a.compose(Permutation({1, 0})), std::invalid_argument);
}

TEST_CASE("element orders via cycle structure") {
  CHECK(Permutation::identity(7).order() == 1);
  CHECK(rho::element_order(cycle(5)) == 5);
  // Disjoint 2-cycle and 3-cycle: order lcm(2,3) = 6.
  CHECK(rho::element_order(Permutation({1, 0, 3, 4, 2})) == 6);
  CHECK(Permutation::identity(3).is_identity());
}

TEST_CASE("breadth-first enumeration closes the group") {
  CHECK(cyclic_group(30).order() == 30);
  CHECK(FiniteGroup::enumerate(1, {}, "trivial").order() == 1);
  // |PSL(2,q)| = q(q^2-1)/2 for odd q.
  CHECK(psl2(5).order() == 60);
  CHECK(psl2(13).order() == 1092);
  CHECK(z13_by_z3().order() == 39);
}

TEST_CASE("enumeration is deterministic") {
  const FiniteGroup g1 = psl2(5);
  const FiniteGroup g2 = psl2(5);
  CHECK(g1.elements() == g2.elements());
  CHECK(g1.spectrum() == g2.spectrum());
  CHECK(g1.elements()[0].is_identity());
}

TEST_CASE("the enumeration cap is a loud, named error") {
  CHECK_THROWS_AS(FiniteGroup::enumerate(30, {cycle(30)}, "too big", 10),
                  rho::GroupTooLargeError);
  try {
    FiniteGroup::enumerate(30, {cycle(30)}, "too big", 10);
    FAIL("expected GroupTooLargeError");
  } catch (const rho::GroupTooLargeError& e) {
    CHECK(std::string(e.what()).find("group too large") != std::string::npos);
    CHECK(std::string(e.what()).find("10") != std::string::npos);
    CHECK(e.cap() == 10);
  }
}

TEST_CASE("deferred groups enumerate lazily") {
  const FiniteGroup g = FiniteGroup::deferred(100, {cycle(100)}, "lazy", 50);
  CHECK(g.label() == "lazy");  // no enumeration needed so far
  CHECK(g.degree() == 100);
  CHECK_THROWS_AS(g.elements(), rho::GroupTooLargeError);
  CHECK_THROWS_AS(g.order(), rho::GroupTooLargeError);  // error is sticky
}

TEST_CASE("order spectra of known groups") {
  CHECK(cyclic_group(6).spectrum() ==
        spec_of({{1, 1}, {2, 1}, {3, 2}, {6, 2}}, 6));
  CHECK(psl2(5).spectrum() ==
        spec_of({{1, 1}, {2, 15}, {3, 20}, {5, 24}}, 60));
  // Klein four-group: two commuting transpositions.
  const FiniteGroup v4 = FiniteGroup::enumerate(
      4, {Permutation({1, 0, 2, 3}), Permutation({0, 1, 3, 2})}, "v4");
  CHECK(v4.spectrum() == spec_of({{1, 1}, {2, 3}}, 4));
}

TEST_CASE("spectrum validation rejects malformed data") {
  CHECK_THROWS_AS(spec_of({{2, 3}}, 4).validate(), std::logic_error);  // no id
  CHECK_THROWS_AS(spec_of({{1, 1}, {2, 1}}, 4).validate(),
                  std::logic_error);  // wrong sum
  CHECK_THROWS_AS(spec_of({{1, 1}, {3, 3}}, 4).validate(),
                  std::logic_error);  // 3 does not divide 4
  CHECK_NOTHROW(spec_of({{1, 1}, {2, 3}}, 4).validate());
}

TEST_CASE("k-th root counts come from the spectrum") {
  const FiniteGroup z6 = cyclic_group(6);
  CHECK(rho::count_kth_roots(z6, 2) == 2);
  CHECK(rho::count_kth_roots(z6, 3) == 3);
  CHECK(rho::count_kth_roots(z6, 6) == 6);
  CHECK(rho::count_kth_roots(z6, 1) == 1);
  CHECK(rho::count_kth_roots(z6, 4) == 2);  // k need not divide |G|
  CHECK(rho::count_kth_roots(psl2(5), 5) == 25);
  CHECK(rho::count_kth_roots(psl2(5), 1) == 1);
  CHECK_THROWS_AS(rho::count_kth_roots(z6, 0), std::domain_error);
}

TEST_CASE("centralizer orders by commutation scan") {
  const FiniteGroup z6 = cyclic_group(6);
  CHECK(rho::centralizer_order(z6, {Permutation::identity(6)}) == 6);
  CHECK(rho::centralizer_order(z6, {cycle(6)}) == 6);  // abelian

  // In Z_13 : Z_3 the centralizer of the kernel is the kernel itself.
  const FiniteGroup g = z13_by_z3();
  std::vector<Permutation> kernel;
  Permutation x = Permutation::identity(16);
  std::vector<u32> ximg(16);
  std::iota(ximg.begin(), ximg.end(), 0u);
  for (u32 i = 0; i < 13; ++i) ximg[i] = (i + 1) % 13;
  const Permutation xgen(std::move(ximg));
  for (int i = 0; i < 13; ++i) {
    kernel.push_back(x);
    x = x.compose(xgen);
  }
  CHECK(rho::centralizer_order(g, kernel) == 13);

  // Members outside the group are rejected.
  CHECK_THROWS_AS(
      rho::centralizer_order(z6, {Permutation({1, 0, 2, 3, 4, 5})}),
      std::invalid_argument);
}

TEST_CASE("k-th root counts satisfy the divisor-count identity on a zoo") {
  const std::vector<FiniteGroup> zoo = {
      cyclic_group(6),  cyclic_group(30), psl2(5), z13_by_z3(),
      FiniteGroup::enumerate(
          4, {Permutation({1, 0, 2, 3}), Permutation({0, 1, 3, 2})}, "v4"),
  };
  for (const FiniteGroup& g : zoo) {
    const u64 n = g.order();
    for (u64 m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      const u64 roots = rho::count_kth_roots(g, m);
      CAPTURE(g.label());
      CAPTURE(m);
      // Direct recount: the spectrum-derived value matches a raw scan.
      u64 raw = 0;
      for (const Permutation& e : g.elements()) {
        if (m % e.order() == 0) ++raw;
      }
      REQUIRE(roots == raw);
      // Frobenius divisibility: m | |L_m(G)|.
      REQUIRE(roots % m == 0);
    }
  }
}

TEST_CASE("spectra satisfy the totient and partial-sum divisibilities") {
  const std::vector<FiniteGroup> zoo = {
      cyclic_group(6), cyclic_group(30), psl2(5), psl2(7), z13_by_z3(),
  };
  for (const FiniteGroup& g : zoo) {
    const OrderSpectrum& s = g.spectrum();
    const u64 n = g.order();
    u64 total = 0;
    for (const auto& [t, st] : s.counts) {
      CAPTURE(g.label());
      CAPTURE(t);
      REQUIRE(n % t == 0);                       // Lagrange
      REQUIRE(st % rho::euler_phi(t) == 0);      // phi(m) | s_m
      total += st;
    }
    REQUIRE(total == n);
    for (u64 m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      u64 partial = 0;
      for (const auto& [d, sd] : s.counts) {
        if (m % d == 0) partial += sd;
      }
      CAPTURE(g.label());
      CAPTURE(m);
      REQUIRE(partial % m == 0);  // m | sum of s_d over d | m
    }
  }
}

TEST_CASE("generator words reconstruct every element") {
  for (const FiniteGroup& g : {psl2(5), z13_by_z3()}) {
    const auto& gens = g.generators();
    for (std::size_t i = 0; i < g.order(); ++i) {
      Permutation built = Permutation::identity(g.degree());
      for (u32 w : g.word_for(i)) built = built.compose(gens[w]);
      CAPTURE(g.label());
      CAPTURE(i);
      REQUIRE(built == g.elements()[i]);
    }
  }
  CHECK(psl2(5).word_for(0).empty());
  CHECK_THROWS_AS(psl2(5).word_for(60), std::out_of_range);
}

TEST_CASE("membership testing") {
  const FiniteGroup g = psl2(5);
  for (const Permutation& gen : g.generators()) CHECK(g.contains(gen));
  CHECK(g.contains(Permutation::identity(6)));
  // A transposition is odd and cannot lie in PSL(2,5) ≅ A_5.
  CHECK(!g.contains(Permutation({1, 0, 2, 3, 4, 5})));
  CHECK(!g.contains(Permutation::identity(7)));  // wrong degree
}
