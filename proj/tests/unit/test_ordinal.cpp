#include <doctest.h>

#include <algorithm>
#include <random>

#include "thetawpo/errors.hpp"
#include "thetawpo/ordinal.hpp"
#include "thetawpo/ordinal_ops.hpp"
#include "thetawpo/ordinal_text.hpp"

using namespace thetawpo;

namespace {

const Ordinal Z;
Ordinal th(Ordinal a) { return Ordinal::theta(a); }
Ordinal full(const char* s) { return parse_ordinal(s, System::Full); }
Ordinal restr(const char* s) { return parse_ordinal(s, System::Restricted); }

}  // namespace

TEST_CASE("validate examples") {
  CHECK(validate(Z, System::Full));
  auto single = Ordinal::raw_sum({Ordinal::omega_pow(Z)});
  auto r = validate(single, System::Full);
  CHECK_FALSE(r);
  CHECK(r.clause == "sum-length");

  Ordinal one = th(Z);
  Ordinal theta_omega = th(big_omega());
  CHECK(validate(Ordinal::raw_cnf({Monomial{one, theta_omega}}), System::Restricted));
  auto bad = validate(Ordinal::raw_cnf({Monomial{th(one), theta_omega}}), System::Restricted);
  CHECK_FALSE(bad);
  CHECK(bad.clause == "cnf-exponent");
  CHECK(validate(Ordinal::raw_cnf({Monomial{th(one), theta_omega}}), System::Full));

  CHECK_FALSE(validate(Ordinal::omega_pow(Z), System::Full));
  CHECK(validate(Ordinal::raw_cnf({Monomial{Z, one}}), System::Full).clause == "cnf-degenerate");
  CHECK(validate(Ordinal::raw_cnf({Monomial{one, Z}}), System::Full).clause == "cnf-coefficient");
  auto up = Ordinal::raw_sum({Ordinal::omega_pow(Z), Ordinal::omega_pow(one)});
  CHECK(validate(up, System::Full).clause == "sum-order");
  auto mixed = Ordinal::raw_sum({Ordinal::theta_part(one), Ordinal::theta_part(Z)});
  CHECK(validate(mixed, System::Full).clause == "sum-part");
  CHECK(validate(mixed, System::Restricted));
}

TEST_CASE("compare examples") {
  CHECK(compare(Z, th(Z)) == Ordering3::LT);
  CHECK(compare(th(Z), th(th(Z))) == Ordering3::LT);
  CHECK(compare_principal(Ordinal::omega_pow(Z), th(Z)) == Ordering3::EQ);

  // eps_0 + 1 < v(Omega (+) 1) = eps_1
  Ordinal omega_big = big_omega();
  Ordinal eps0 = th(omega_big);
  Ordinal eps0_plus_1 = Ordinal::raw_sum({Ordinal::omega_pow(eps0), Ordinal::omega_pow(Z)});
  REQUIRE(validate(eps0_plus_1, System::Full));
  Ordinal eps1 = th(natural_sum(omega_big, th(Z)));
  CHECK(compare(eps0_plus_1, eps1) == Ordering3::LT);
  CHECK(compare(eps1, eps0_plus_1) == Ordering3::GT);
  CHECK(compare(eps0, eps1) == Ordering3::LT);

  // every countable term is below Omega
  CHECK(compare(eps1, omega_big) == Ordering3::LT);
  // v(w) = w^w
  Ordinal w = th(th(Z));
  CHECK(compare(th(w), Ordinal::raw_sum({Ordinal::omega_pow(w), Ordinal::omega_pow(Z)})) == Ordering3::LT);
  CHECK(compare(th(w), w) == Ordering3::GT);
}

TEST_CASE("coefficients") {
  CHECK(coefficient_set(Z) == std::vector<Ordinal>{Z});
  Ordinal one = th(Z), w = th(one);
  Ordinal t = Ordinal::raw_cnf({Monomial{w, one}});
  CHECK(coefficient_set(t) == std::vector<Ordinal>{one, w});
  CHECK(coefficient_set(one) == std::vector<Ordinal>{one});
  CHECK(max_coefficient(Z) == Z);
  CHECK(max_coefficient(t) == w);
  Ordinal a = th(big_omega());
  CHECK(max_coefficient(a) == a);
}

TEST_CASE("natural sum and product") {
  Ordinal one = th(Z), w = th(one);
  Ordinal two = natural(2, System::Full);
  auto expected = Ordinal::raw_sum({Ordinal::omega_pow(one), Ordinal::omega_pow(Z), Ordinal::omega_pow(Z)});
  CHECK(natural_sum(w, two) == expected);
  CHECK(to_string(natural_sum(w, two)) == "w^v(0) + w^0 + w^0");
  CHECK(natural_sum(w, Z) == w);
  CHECK(natural_sum(Z, w) == w);

  Ordinal omega_two = natural_product(big_omega(), two);
  CHECK(omega_two == Ordinal::raw_cnf({Monomial{one, two}}));
  CHECK(to_string(omega_two) == "O^v(0)*(w^0 + w^0)");

  // w (x) w = w^2
  Ordinal ww = natural_product(w, w);
  CHECK(ww == th(two));
  // (w + 1) (x) (w + 1) = w^2 + w + w + 1
  Ordinal wp1 = natural_sum(w, one);
  CHECK(to_string(natural_product(wp1, wp1)) == "w^(w^0 + w^0) + w^v(0) + w^v(0) + w^0");

  // restricted: 1 + 1 = v(0) + v(0), w (+) 1
  CHECK(to_string(natural_sum(one, one, System::Restricted)) == "v(0) + v(0)");
  CHECK(to_string(natural_sum(w, one, System::Restricted)) == "v(v(0)) + v(0)");
  CHECK(to_string(natural_product(w, w, System::Restricted)) == "v(v(0) + v(0))");
}

TEST_CASE("exponent of principal") {
  Ordinal one = th(Z);
  CHECK(exponent_of_principal(Ordinal::theta_part(Z)) == Z);
  CHECK(exponent_of_principal(Ordinal::theta_part(one)) == one);
  Ordinal omega_big = big_omega();
  CHECK(exponent_of_principal(Ordinal::theta_part(omega_big)) == th(omega_big));
  // v(eps_0) = w^(eps_0 + 1)
  Ordinal eps0 = th(omega_big);
  Ordinal e = exponent_of_principal(Ordinal::theta_part(eps0));
  CHECK(e == Ordinal::raw_sum({Ordinal::omega_pow(eps0), Ordinal::omega_pow(Z)}));
  CHECK(theta_of_exponent(e) == th(eps0));
  CHECK(theta_of_exponent(eps0) == eps0);
  CHECK(theta_of_exponent(Z) == one);
}

TEST_CASE("predicates") {
  Ordinal one = th(Z);
  CHECK(is_countable(th(big_omega())));
  CHECK_FALSE(is_additively_closed(Z));
  CHECK(is_additively_closed(big_omega()));
  CHECK_FALSE(is_additively_closed(natural_product(big_omega(), natural(2, System::Full))));
  CHECK(is_epsilon(th(big_omega())));
  CHECK_FALSE(is_epsilon(th(one)));
}

TEST_CASE("complexity") {
  Ordinal one = th(Z);
  CHECK(complexity(Z, System::Full) == 0);
  CHECK(complexity(one, System::Full) == 1);
  CHECK(complexity(big_omega(), System::Full) == 2);
  CHECK(complexity(big_omega(), System::Restricted) == 2);
  CHECK(complexity(natural(2, System::Full), System::Full) == 1);
  CHECK(complexity(natural(2, System::Restricted), System::Restricted) == 2);
}

TEST_CASE("omega tower") {
  Ordinal one = th(Z);
  CHECK(omega_tower(0, one) == one);
  CHECK(omega_tower(1, one) == big_omega());
  CHECK(omega_tower(2, one) == Ordinal::raw_cnf({Monomial{big_omega(), one}}));
  CHECK_THROWS_AS(omega_tower(2, one, System::Restricted), RangeError);
  CHECK(omega_tower(1, natural(2, System::Restricted), System::Restricted) ==
        Ordinal::raw_cnf({Monomial{natural(2, System::Restricted), one}}));
}

TEST_CASE("text") {
  CHECK(full("1") == th(Z));
  CHECK(full("O") == big_omega());
  CHECK(full("2") == natural(2, System::Full));
  CHECK(full("w^0 + v(v(0))") == natural_sum(th(th(Z)), th(Z)));
  CHECK(full(" v ( 0 ) ") == th(Z));
  CHECK_THROWS_AS(full("w^v(0)"), ParseError);
  CHECK_THROWS_AS(full("v(0"), ParseError);
  CHECK_THROWS_AS(full("O^0*1"), ParseError);
  CHECK_THROWS_AS(restr("O^v(v(0))*1"), ParseError);
  try {
    full("v(0) + x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
  }
  CHECK(restr("2") == natural(2, System::Restricted));
  CHECK(restr("O + 1") == natural_sum(big_omega(), th(Z), System::Restricted));
}

TEST_CASE("coding") {
  CHECK(encode(Z) == 0);
  CHECK(encode(th(Z)) == 1);
  CHECK(decode(encode(th(Z)), System::Full) == th(Z));
  CHECK_THROWS_AS(decode(4, System::Full), DomainError);
  CHECK_THROWS_AS(decode(2, System::Full), DomainError);
  for (unsigned n = 0; n < 400; ++n) {
    try {
      Ordinal t = decode(n, System::Full);
      CHECK(encode(t) == n);
    } catch (const DomainError&) {
    }
  }
}

TEST_CASE("enumeration") {
  auto zero_level = enumerate_terms(System::Full, {0, false});
  CHECK(zero_level == std::vector<Ordinal>{Z});
  auto one_level = enumerate_terms(System::Full, {1, true});
  CHECK(std::find(one_level.begin(), one_level.end(), th(Z)) != one_level.end());
  for (Ordinal t : one_level) CHECK(complexity(t, System::Full) <= 1);

  for (System sys : {System::Full, System::Restricted}) {
    EnumBounds b;
    b.max_complexity = 3;
    auto all = enumerate_terms(sys, b);
    std::vector<std::uint32_t> ids;
    for (Ordinal t : all) {
      INFO(to_string(t));
      REQUIRE(validate(t, sys));
      CHECK(complexity(t, sys) <= 3);
      CHECK(parse_ordinal(to_string(t), sys) == t);
      ids.push_back(t.id());
    }
    std::sort(ids.begin(), ids.end());
    CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
    MESSAGE(to_string(sys) << " G<=3 universe: " << all.size());
  }
}

TEST_CASE("random terms are valid and bounded") {
  std::mt19937_64 rng(7);
  for (System sys : {System::Full, System::Restricted}) {
    EnumBounds b;
    b.max_complexity = 5;
    std::size_t uncountable = 0;
    for (int i = 0; i < 2000; ++i) {
      Ordinal t = random_term(sys, b, rng);
      INFO(to_string(t));
      REQUIRE(validate(t, sys));
      CHECK(complexity(t, sys) <= 5);
      uncountable += !is_countable(t);
    }
    CHECK(uncountable > 200);
  }
}
