#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "artin/normal_form.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace artin;
using testutil::rand_int;

namespace {

ArtinWord random_word(CoxType t, int len, std::mt19937_64& rng) {
  ArtinWord w = empty_word(t);
  for (int i = 0; i < len; ++i) {
    w.letters.push_back(
        Letter{rand_int(rng, 1, t.rank), rng() % 2 ? 1 : -1});
  }
  return w;
}

bool is_canonical(const NormalForm& u) {
  CoxElement ws = longest_element(u.typ());
  for (const auto& f : u.factors()) {
    if (f.is_identity() || f == ws) return false;
  }
  for (size_t i = 0; i + 1 < u.factors().size(); ++i) {
    for (int s : left_descents(u.factors()[i + 1])) {
      if (!u.factors()[i].has_right_descent(s)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("normalize on trivial inputs") {
  CoxType a2 = CoxType::A(2);
  NormalForm e = normalize(empty_word(a2));
  CHECK(e.delta() == 0);
  CHECK(e.factors().empty());
  CHECK(e.is_identity());

  NormalForm g = normalize(generator_word(a2, 1));
  CHECK(g.delta() == 0);
  CHECK(g.factors().size() == 1);

  CHECK(normalize(concat(generator_word(CoxType::D(4), 1),
                         generator_word(CoxType::D(4), 1, -1)))
            .is_identity());
}

TEST_CASE("braid words normalize to the garside element") {
  CoxType a2 = CoxType::A(2);
  NormalForm d = normalize(parse_word(a2, "s1 s2 s1"));
  CHECK(d == garside_element(a2));
  CHECK(d == normalize(parse_word(a2, "s2 s1 s2")));
  CHECK(render(d) == "D^1 | ");
}

TEST_CASE("the standard delta spelling normalizes to the garside element") {
  for (int r = 1; r <= 8; ++r) {
    CoxType t = CoxType::A(r);
    CHECK(normalize(delta_word(t)) == garside_element(t));
    CHECK(static_cast<int>(delta_word(t).letters.size()) ==
          r * (r + 1) / 2);
    CHECK(normalize(word_from_indices(
              t, reduced_word(longest_element(t)))) == garside_element(t));
  }
  for (int n = 4; n <= 8; ++n) {
    CoxType t = CoxType::D(n);
    CHECK(normalize(delta_word(t)) == garside_element(t));
    CHECK(static_cast<int>(delta_word(t).letters.size()) == n * (n - 1));
    CHECK(normalize(word_from_indices(
              t, reduced_word(longest_element(t)))) == garside_element(t));
  }
}

TEST_CASE("normal forms produced by normalize are canonical") {
  std::mt19937_64 rng(31337);
  for (CoxType t : {CoxType::A(4), CoxType::D(4), CoxType::D(5)}) {
    for (int i = 0; i < 300; ++i) {
      NormalForm u = normalize(random_word(t, rand_int(rng, 0, 40), rng));
      CHECK(is_canonical(u));
    }
  }
}

TEST_CASE("tau embeds coxeter elements") {
  CoxType d4 = CoxType::D(4);
  CHECK(tau(CoxElement::identity(d4)).is_identity());
  CHECK(tau(longest_element(d4)) == garside_element(d4));
  NormalForm f = tau(CoxElement::generator(d4, 2));
  CHECK(f.delta() == 0);
  CHECK(f.factors().size() == 1);
  // Lifting a reduced word letter by letter agrees with tau.
  CoxElement w = CoxElement::generator(d4, 1) * CoxElement::generator(d4, 3);
  CHECK(normalize(word_from_indices(d4, reduced_word(w))) == tau(w));
}

TEST_CASE("delta powers are pure delta normal forms") {
  CoxType d5 = CoxType::D(5);
  ArtinWord two_deltas = repeat_word(delta_word(d5), 2);
  NormalForm u = normalize(two_deltas);
  CHECK(u.delta() == 2);
  CHECK(u.factors().empty());
  CHECK(u == power(garside_element(d5), 2));
  CHECK(normalize(repeat_word(delta_word(d5), -3)) ==
        power(garside_element(d5), -3));
}

TEST_CASE("multiply, inverse and power satisfy the group laws") {
  std::mt19937_64 rng(777);
  for (CoxType t : {CoxType::A(3), CoxType::D(5)}) {
    for (int i = 0; i < 150; ++i) {
      ArtinWord wu = random_word(t, rand_int(rng, 0, 25), rng);
      ArtinWord wv = random_word(t, rand_int(rng, 0, 25), rng);
      ArtinWord ww = random_word(t, rand_int(rng, 0, 25), rng);
      NormalForm u = normalize(wu), v = normalize(wv), w = normalize(ww);
      CHECK(multiply(u, v) == normalize(concat(wu, wv)));
      CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
      CHECK(multiply(u, inverse(u)).is_identity());
      CHECK(multiply(inverse(u), u).is_identity());
      CHECK(power(u, 3) == multiply(u, multiply(u, u)));
      CHECK(power(u, -2) == inverse(multiply(u, u)));
      CHECK(is_canonical(multiply(u, v)));
      CHECK(is_canonical(inverse(u)));
    }
  }
}

TEST_CASE("equal decides the word problem") {
  CoxType d6 = CoxType::D(6);
  for (int a = 1; a <= 6; ++a) {
    for (int b = a + 1; b <= 6; ++b) {
      int m = coxeter_m(d6, a, b);
      CHECK(equal(relation_word(d6, a, b, m), relation_word(d6, b, a, m)));
    }
  }
  CHECK_FALSE(equal(generator_word(d6, 5), generator_word(d6, 6)));
  CHECK_THROWS_AS(
      equal(generator_word(d6, 1), generator_word(CoxType::A(5), 1)),
      std::invalid_argument);
}

TEST_CASE("delta square spelling equals the squared garside element") {
  for (int r = 1; r <= 4; ++r) {
    CoxType t = CoxType::A(r);
    ArtinWord lhs = repeat_word(delta_word(t), 2);
    ArtinWord rhs = delta_square_word(t);
    CHECK(static_cast<int>(rhs.letters.size()) == r * (r + 1));
    CHECK(equal(lhs, rhs));
  }
}

TEST_CASE("exponent sums") {
  CHECK(exponent_sum(delta_word(CoxType::D(5))) == 20);
  CHECK(exponent_sum(delta_word(CoxType::D(8))) == 56);
  CHECK(exponent_sum(delta_word(CoxType::A(5))) == 15);
  CHECK(exponent_sum(parse_word(CoxType::D(4), "t1 t2^-1")) == 0);

  std::mt19937_64 rng(5150);
  for (CoxType t : {CoxType::A(4), CoxType::D(6)}) {
    for (int i = 0; i < 200; ++i) {
      ArtinWord u = random_word(t, rand_int(rng, 0, 30), rng);
      ArtinWord v = random_word(t, rand_int(rng, 0, 30), rng);
      // The sum survives normalization and adds under concatenation.
      CHECK(exponent_sum(normalize(u)) == exponent_sum(u));
      CHECK(exponent_sum(concat(u, v)) == exponent_sum(u) + exponent_sum(v));
    }
  }
}

TEST_CASE("conjugation by delta acts as the diagram automorphism") {
  for (CoxType t : {CoxType::A(4), CoxType::A(5), CoxType::D(4), CoxType::D(5),
                    CoxType::D(6), CoxType::D(7), CoxType::D(8), CoxType::D(9)}) {
    NormalForm d = garside_element(t);
    NormalForm dinv = inverse(d);
    for (int s = 1; s <= t.rank; ++s) {
      NormalForm lhs = multiply(multiply(d, normalize(generator_word(t, s))), dinv);
      NormalForm rhs =
          normalize(generator_word(t, diagram_automorphism(t, s)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("kappa and the central generator") {
  CHECK(kappa(CoxType::A(5)) == 2);
  CHECK(kappa(CoxType::D(6)) == 1);
  CHECK(kappa(CoxType::D(5)) == 2);
  CentralData c = central_data(CoxType::D(7));
  CHECK(c.kappa == 2);
  CHECK(c.generator == power(garside_element(CoxType::D(7)), 2));

  // Delta^kappa commutes with every generator.
  for (CoxType t : {CoxType::A(4), CoxType::D(5), CoxType::D(6), CoxType::D(7)}) {
    NormalForm z = central_data(t).generator;
    for (int s = 1; s <= t.rank; ++s) {
      NormalForm g = normalize(generator_word(t, s));
      CHECK(multiply(z, g) == multiply(g, z));
    }
  }
}

TEST_CASE("center membership") {
  CoxType d5 = CoxType::D(5);
  CoxType d6 = CoxType::D(6);
  CHECK(center_membership(NormalForm(d5)) == 0);
  CHECK(center_membership(garside_element(d5)) == std::nullopt);
  CHECK(center_membership(power(garside_element(d5), 2)) == 1);
  CHECK(center_membership(power(garside_element(d5), -6)) == -3);
  CHECK(center_membership(garside_element(d6)) == 1);
  CHECK(center_membership(normalize(generator_word(d5, 1))) == std::nullopt);
  CHECK(center_membership(power(garside_element(CoxType::A(3)), 3)) ==
        std::nullopt);
}

TEST_CASE("equality mod center") {
  CoxType d5 = CoxType::D(5);
  ArtinWord t1 = generator_word(d5, 1);
  ArtinWord t1z = concat(t1, repeat_word(delta_word(d5), 2));
  ArtinWord t1d = concat(t1, delta_word(d5));
  CHECK(equal_mod_center(t1, t1z));
  CHECK_FALSE(equal_mod_center(t1, t1d));  // kappa(D5) = 2
  CHECK_FALSE(equal_mod_center(generator_word(d5, 4), generator_word(d5, 5)));

  CoxType d6 = CoxType::D(6);
  CHECK(equal_mod_center(generator_word(d6, 1),
                         concat(generator_word(d6, 1), delta_word(d6))));

  CHECK_THROWS_AS(equal_mod_center(generator_word(CoxType::A(3), 1),
                                   generator_word(CoxType::A(3), 1)),
                  std::invalid_argument);
}

TEST_CASE("parabolic delta words and their commutation") {
  // The chain parabolic inside type D: its square and Delta^kappa both
  // commute with every chain generator.
  for (int n = 4; n <= 8; ++n) {
    CoxType t = CoxType::D(n);
    std::vector<int> Y;
    for (int s = 1; s < n; ++s) Y.push_back(s);
    ArtinWord dy = parabolic_delta_word(t, Y);
    CHECK(static_cast<int>(dy.letters.size()) == n * (n - 1) / 2);
    NormalForm dy2 = normalize(repeat_word(dy, 2));
    CHECK(dy2.delta() == 0);
    CHECK(dy2.factors().size() == 2);
    NormalForm z = central_data(t).generator;
    for (int s : Y) {
      NormalForm g = normalize(generator_word(t, s));
      CHECK(multiply(dy2, g) == multiply(g, dy2));
      CHECK(multiply(z, g) == multiply(g, z));
    }
  }
}

TEST_CASE("word_of round-trips normal forms") {
  std::mt19937_64 rng(2024);
  for (CoxType t : {CoxType::A(4), CoxType::D(5)}) {
    for (int i = 0; i < 200; ++i) {
      NormalForm u = normalize(random_word(t, rand_int(rng, 0, 35), rng));
      CHECK(normalize(word_of(u)) == u);
    }
  }
}

TEST_CASE("rendering format") {
  CoxType a2 = CoxType::A(2);
  CHECK(render(normalize(empty_word(a2))) == "D^0 | ");
  CHECK(render(normalize(parse_word(a2, "s1 s2 s1"))) == "D^1 | ");
  CHECK(render(normalize(parse_word(a2, "s1"))) == "D^0 | s1");
  CHECK(render(normalize(parse_word(a2, "s1 s1"))) == "D^0 | s1.s1");
  CHECK(render(normalize(parse_word(a2, "s1^-1"))) == "D^-1 | s1 s2");
  CHECK(render(normalize(parse_word(CoxType::D(4), "t1 t3 t4 t1"))) ==
        "D^0 | t1 t3 t4.t1");
}

TEST_CASE("word text format") {
  CoxType d4 = CoxType::D(4);
  ArtinWord w = parse_word(d4, "t1 t2^-1 t3^2");
  CHECK(w.letters == std::vector<Letter>{{1, 1}, {2, -1}, {3, 1}, {3, 1}});
  CHECK(word_to_string(w) == "t1 t2^-1 t3 t3");
  CHECK(parse_word(d4, "  ").letters.empty());
  CHECK(parse_word(d4, "t2^0").letters.empty());
  CHECK(parse_word(d4, "t2^-3").letters ==
        std::vector<Letter>{{2, -1}, {2, -1}, {2, -1}});

  CHECK_THROWS_WITH_AS(parse_word(d4, "s1"),
                       doctest::Contains("bad word token 's1'"),
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_word(d4, "t9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(d4, "t"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(d4, "t1^x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(d4, "t1x"), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    ArtinWord u = random_word(d4, rand_int(rng, 0, 20), rng);
    CHECK(parse_word(d4, word_to_string(u)) == u);
  }
}

TEST_CASE("relation words") {
  CoxType d4 = CoxType::D(4);
  CHECK(word_to_string(relation_word(d4, 2, 4, 3)) == "t2 t4 t2");
  CHECK(word_to_string(relation_word(d4, 1, 3, 2)) == "t1 t3");
  CHECK_THROWS_AS(relation_word(d4, 1, 2, 1), std::invalid_argument);
}

TEST_CASE("normalization is stable under defining rewrites, small sample") {
  // A quick in-module soundness check; the full sweep grid runs in the
  // acceptance suite.
  std::mt19937_64 rng(606);
  for (CoxType t : {CoxType::A(4), CoxType::D(4)}) {
    for (int i = 0; i < 100; ++i) {
      ArtinWord w = random_word(t, rand_int(rng, 0, 30), rng);
      // Insert a defining relator at a random position.
      int a = rand_int(rng, 1, t.rank);
      int b = rand_int(rng, 1, t.rank);
      while (b == a) b = rand_int(rng, 1, t.rank);
      int m = coxeter_m(t, a, b);
      ArtinWord relator = concat(relation_word(t, a, b, m),
                                 inverse_word(relation_word(t, b, a, m)));
      size_t pos = static_cast<size_t>(rand_int(
          rng, 0, static_cast<int>(w.letters.size())));
      ArtinWord w2 = w;
      w2.letters.insert(w2.letters.begin() + static_cast<long long>(pos),
                        relator.letters.begin(), relator.letters.end());
      CHECK(normalize(w) == normalize(w2));
    }
  }
}
