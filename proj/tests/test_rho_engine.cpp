#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rho/constructors.hpp"
#include "rho/factored_int.hpp"
#include "rho/group.hpp"
#include "rho/group_spec.hpp"
#include "rho/rho_engine.hpp"
#include "rho/spectra.hpp"

namespace {

using rho::FactoredInt;
using rho::GroupSpec;
using rho::OrderSpectrum;
using rho::RhoPart;
using u64 = std::uint64_t;

GroupSpec C(u64 n) { return rho::CyclicSpec{n}; }
GroupSpec PSL(u64 q) { return rho::Psl2Spec{q}; }
GroupSpec Sd(u64 n, u64 m, u64 k) { return rho::SemidirectSpec{n, m, k}; }
GroupSpec X(std::vector<GroupSpec> fs) { return rho::DirectSpec{std::move(fs)}; }

u64 multiplicative_order(u64 k, u64 n) {
  if (n == 1) return 1;
  u64 ord = 1;
  u64 power = k % n;
  while (power != 1) {
    power = power * k % n;
    ++ord;
  }
  return ord;
}

}  // namespace

TEST_CASE("element-order product from a spectrum") {
  CHECK(rho::rho_enumerative(rho::spectrum_cyclic(1)).is_one());
  CHECK(rho::to_string(rho::rho_enumerative(rho::spectrum_psl2(5))) ==
        "2^15*3^20*5^24");
  CHECK(rho::to_string(rho::rho_enumerative(rho::spectrum_cyclic(30))) ==
        "2^15*3^20*5^24");
  // The same value from an actually enumerated group.
  CHECK(rho::to_string(rho::rho_enumerative(rho::psl2(5).spectrum())) ==
        "2^15*3^20*5^24");
}

TEST_CASE("cyclic closed form") {
  CHECK(rho::to_string(rho::rho_cyclic(1)) == "1");
  CHECK(rho::to_string(rho::rho_cyclic(2)) == "2^1");
  CHECK(rho::to_string(rho::rho_cyclic(6)) == "2^3*3^4");
  CHECK(rho::to_string(rho::rho_cyclic(30)) == "2^15*3^20*5^24");
  CHECK_THROWS_AS(rho::rho_cyclic(0), std::domain_error);

  for (u64 n = 1; n <= 300; ++n) {
    const FactoredInt closed = rho::rho_cyclic(n);
    const FactoredInt counted = rho::rho_enumerative(rho::spectrum_cyclic(n));
    if (!(closed == counted)) {
      CAPTURE(n);
      REQUIRE(closed == counted);
    }
  }
}

TEST_CASE("coprime direct-product formula") {
  const FactoredInt z6 = rho::rho_direct_product(
      {{rho::rho_cyclic(2), 2}, {rho::rho_cyclic(3), 3}});
  CHECK(z6 == rho::rho_cyclic(6));
  CHECK(rho::to_string(z6) == "2^3*3^4");

  // One factor passes through untouched; the empty product is 1.
  const FactoredInt solo = rho::rho_direct_product({{rho::rho_cyclic(30), 30}});
  CHECK(solo == rho::rho_cyclic(30));
  CHECK(rho::rho_direct_product({}).is_one());

  const FactoredInt big = rho::rho_direct_product(
      {{rho::rho_psl2(5), 60}, {rho::rho_cyclic(7), 7}});
  CHECK(rho::to_string(big) == "2^105*3^140*5^168*7^360");
  CHECK(big == rho::rho_enumerative(rho::spectrum_product(
                   rho::spectrum_psl2(5), rho::spectrum_cyclic(7))));

  CHECK_THROWS_AS(rho::rho_direct_product(
                      {{rho::rho_cyclic(6), 6}, {rho::rho_cyclic(10), 10}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(rho::rho_direct_product({{rho::rho_cyclic(2), 0}}),
                  std::domain_error);
}

TEST_CASE("direct-product formula works with enumerated factor values") {
  // A factor with no closed form of its own still composes.
  const FactoredInt a4 = rho::rho_enumerative(rho::psl2(3).spectrum());
  const FactoredInt product = rho::rho_direct_product(
      {{a4, 12}, {rho::rho_cyclic(5), 5}});
  CHECK(product ==
        rho::rho_enumerative(rho::spectrum_product(
            rho::spectrum_psl2(3), rho::spectrum_cyclic(5))));
}

TEST_CASE("cyclic closed form is multiplicative across coprime orders") {
  for (u64 a = 1; a < 100; ++a) {
    for (u64 b = a + 1; b < 100; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const FactoredInt via_product = rho::rho_direct_product(
          {{rho::rho_cyclic(a), a}, {rho::rho_cyclic(b), b}});
      const FactoredInt direct = rho::rho_cyclic(a * b);
      if (!(via_product == direct)) {
        CAPTURE(a);
        CAPTURE(b);
        REQUIRE(via_product == direct);
      }
    }
  }
}

TEST_CASE("split-extension closed form") {
  // Faithful action of the complement: centralizer 1.
  const FactoredInt g39 = rho::rho_semidirect(rho::rho_cyclic(13), 13,
                                              rho::rho_cyclic(3), 1);
  CHECK(rho::to_string(g39) == "3^26*13^12");
  CHECK(g39 ==
        rho::rho_enumerative(rho::semidirect_cyclic(13, 3, 3).spectrum()));

  // Trivial action degenerates to the coprime direct-product value.
  CHECK(rho::rho_semidirect(rho::rho_cyclic(5), 5, rho::rho_cyclic(3), 3) ==
        rho::rho_direct_product(
            {{rho::rho_cyclic(5), 5}, {rho::rho_cyclic(3), 3}}));

  CHECK_THROWS_AS(
      rho::rho_semidirect(rho::rho_cyclic(5), 0, rho::rho_cyclic(3), 1),
      std::domain_error);
}

TEST_CASE("split-extension closed form matches enumeration case by case") {
  struct Case {
    u64 n, m, k;
  };
  // Cyclic prime-power kernel, coprime complement: the formula's domain.
  const std::vector<Case> cases = {
      {13, 3, 3}, {5, 12, 2}, {7, 12, 3}, {13, 6, 4},
      {7, 6, 6},  {11, 10, 2}, {7, 2, 6},  {5, 2, 4},
      {9, 2, 8},  {25, 4, 7},
  };
  for (const Case& c : cases) {
    CAPTURE(c.n);
    CAPTURE(c.m);
    CAPTURE(c.k);
    const u64 centralizer = c.m / multiplicative_order(c.k, c.n);
    const FactoredInt closed = rho::rho_semidirect(
        rho::rho_cyclic(c.n), c.n, rho::rho_cyclic(c.m), centralizer);
    const FactoredInt counted =
        rho::rho_enumerative(rho::spectrum_metacyclic(c.n, c.m, c.k));
    CHECK(closed == counted);
  }
}

TEST_CASE("projective closed form") {
  CHECK(rho::to_string(rho::rho_psl2(5)) == "2^15*3^20*5^24");
  CHECK(rho::to_string(rho::rho_psl2(7)) == "2^105*3^56*7^48");
  CHECK(rho::to_string(rho::rho_psl2(11)) == "2^165*3^220*5^264*11^120");
  CHECK(rho::to_string(rho::rho_psl2(13)) == "2^273*3^364*7^468*13^168");

  for (u64 q : {5ull, 7ull, 11ull, 13ull}) {
    CAPTURE(q);
    CHECK(rho::rho_psl2(q) ==
          rho::rho_enumerative(rho::spectrum_psl2(q)));
  }
  // Against true enumeration where the group is small enough to be quick.
  CHECK(rho::rho_psl2(5) == rho::rho_enumerative(rho::psl2(5).spectrum()));
  CHECK(rho::rho_psl2(7) == rho::rho_enumerative(rho::psl2(7).spectrum()));

  CHECK_THROWS_AS(rho::rho_psl2(3), std::invalid_argument);
  CHECK_THROWS_AS(rho::rho_psl2(4), std::invalid_argument);
  CHECK_THROWS_AS(rho::rho_psl2(9), std::invalid_argument);
  CHECK_THROWS_AS(rho::rho_psl2(15), std::invalid_argument);
}

TEST_CASE("the order-546 pipeline lands on the projective value") {
  const FactoredInt semidirect_part = rho::rho_semidirect(
      rho::rho_cyclic(13), 13, rho::rho_cyclic(3), 1);
  const FactoredInt full = rho::rho_direct_product(
      {{rho::rho_cyclic(14), 14}, {semidirect_part, 39}});
  CHECK(rho::to_string(full) == "2^273*3^364*7^468*13^168");
  CHECK(full == rho::rho_psl2(13));
  CHECK(full ==
        rho::rho_enumerative(rho::build(X({C(14), Sd(13, 3, 3)})).spectrum()));
}

TEST_CASE("exponent sets") {
  CHECK(rho::exp_rho(C(1)).empty());
  CHECK(rho::exp_rho(C(30)) == std::vector<u64>{15, 20, 24});
  CHECK(rho::exp_rho(PSL(7)) == std::vector<u64>{48, 56, 105});
  CHECK(rho::exp_rho(rho::psl2(5)) == std::vector<u64>{15, 20, 24});
  CHECK(rho::exp_rho(rho::cyclic(42)) == std::vector<u64>{21, 28, 36});
}

TEST_CASE("exponent sets of order-2qr cyclic groups follow the closed form") {
  const std::vector<std::pair<u64, u64>> qr = {
      {3, 5}, {3, 7}, {5, 7}, {3, 11}, {5, 11}, {7, 11}};
  for (const auto& [q, r] : qr) {
    CAPTURE(q);
    CAPTURE(r);
    std::vector<u64> expected = {q * r, 2 * r * (q - 1), 2 * q * (r - 1)};
    std::sort(expected.begin(), expected.end());
    CHECK(rho::exp_rho(C(2 * q * r)) == expected);
  }
}

TEST_CASE("equal exponent sets across nonisomorphic pairs") {
  CHECK(rho::exp_rho(C(60)) == rho::exp_rho(X({PSL(5), C(2)})));
  CHECK(rho::exp_rho(C(90)) == rho::exp_rho(X({PSL(5), C(3)})));
  CHECK(rho::exp_rho(C(150)) == rho::exp_rho(X({PSL(5), C(5)})));
  // For these pairs even the full factored values coincide, despite the
  // groups on each side being nonisomorphic (and, for 90 and 150, of
  // different orders altogether).
  const FactoredInt common = rho::rho_enumerative(rho::spectrum_cyclic(60));
  CHECK(rho::to_string(common) == "2^75*3^40*5^48");
  CHECK(common ==
        rho::rho_enumerative(rho::spectrum_of_spec(X({PSL(5), C(2)}))));
  CHECK(rho::rho_enumerative(rho::spectrum_cyclic(90)) ==
        rho::rho_enumerative(rho::spectrum_of_spec(X({PSL(5), C(3)}))));
}

TEST_CASE("closed forms agree with enumeration across built groups") {
  // Cyclic groups, truly enumerated.
  for (u64 n : {1ull, 2ull, 12ull, 30ull, 210ull, 1024ull}) {
    CAPTURE(n);
    CHECK(rho::rho_cyclic(n) ==
          rho::rho_enumerative(rho::cyclic(n).spectrum()));
  }
  // Larger cyclic orders through the validated arithmetic spectrum.
  for (u64 n : {2310ull, 4999ull}) {
    CAPTURE(n);
    CHECK(rho::rho_cyclic(n) ==
          rho::rho_enumerative(rho::spectrum_cyclic(n)));
  }
}

TEST_CASE("overflow in the product formula is detected") {
  const std::vector<RhoPart> parts = {
      {rho::factor(2), u64{1} << 40},
      {rho::factor(3), 847288609443ull /* 3^25 */},
      {rho::factor(5), 95367431640625ull /* 5^20 */},
  };
  CHECK_THROWS_AS(rho::rho_direct_product(parts), std::overflow_error);
}
