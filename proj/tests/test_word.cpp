#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "wagner/endomorphism.hpp"
#include "wagner/word.hpp"

using testsupport::endo;
using testsupport::random_reduced_word;
using testsupport::word;
using namespace wagner;

TEST_SUITE_BEGIN("word");

TEST_CASE("letters validate and order canonically") {
  CHECK_THROWS_AS(Letter(0, 1), DomainError);
  CHECK_THROWS_AS(Letter(1, 2), DomainError);
  CHECK_THROWS_AS(Letter::from_code(0), DomainError);

  const Letter a(1, 1), ainv(1, -1), b(2, 1);
  CHECK(a.canonical_index() == 0);
  CHECK(ainv.canonical_index() == 1);
  CHECK(b.canonical_index() == 2);
  CHECK(a < ainv);
  CHECK(ainv < b);
  CHECK(a.inverse() == ainv);
  CHECK(a.cancels(ainv));
  CHECK(!a.cancels(b));
  for (int idx = 0; idx < 8; ++idx) {
    CHECK(Letter::from_canonical_index(idx).canonical_index() == idx);
  }
}

TEST_CASE("reduce cancels inverse pairs") {
  CHECK(word("aA") == Word());
  CHECK(word("abBa") == word("aa"));
  CHECK(word("abbaB").length() == 5);  // already reduced

  // Idempotence and the no-adjacent-pair invariant on random raw sequences.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Letter> raw;
    for (int k = 0; k < 40; ++k) {
      raw.push_back(Letter::from_canonical_index(static_cast<int>(rng() % 6)));
    }
    Word w = Word::reduce(std::span<const Letter>(raw.data(), raw.size()));
    for (std::size_t k = 1; k < w.length(); ++k) {
      CHECK(!w.at(k - 1).cancels(w.at(k)));
    }
    CHECK(Word::reduce(w.letters()) == w);
  }
}

TEST_CASE("concat examples and properties") {
  CHECK(concat(word("ab"), word("Bc")) == word("ac"));
  CHECK(concat(word("abbaB"), word("baBab")) == word("abbaaBab"));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Word u = random_reduced_word(rng, 3, static_cast<int>(rng() % 12));
    Word v = random_reduced_word(rng, 3, static_cast<int>(rng() % 12));
    Word w = random_reduced_word(rng, 3, static_cast<int>(rng() % 12));
    CHECK(concat(u, u.inverse()) == Word());
    CHECK(concat(concat(u, v), w) == concat(u, concat(v, w)));
    Word uv = concat(u, v);
    CHECK(uv.length() <= u.length() + v.length());
    CHECK((uv.length() % 2) == ((u.length() + v.length()) % 2));
  }
}

TEST_CASE("invert examples and involution") {
  CHECK(Word().inverse() == Word());
  CHECK(word("a").inverse() == word("A"));
  CHECK(word("baBab").inverse() == word("BAbAB"));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    Word u = random_reduced_word(rng, 3, static_cast<int>(rng() % 15));
    CHECK(u.inverse().inverse() == u);
  }
}

TEST_CASE("letter counts") {
  CHECK(letter_count(word("abbaB"), 1) == 2);
  CHECK(letter_count(word("abbaB"), 2) == 3);
  CHECK(letter_count(Word(), 3) == 0);
  CHECK(signed_letter_count(word("abbaB"), 2) == 1);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    Word u = random_reduced_word(rng, 3, static_cast<int>(rng() % 20));
    std::size_t total = 0;
    for (int i = 1; i <= 3; ++i) total += letter_count(u, i);
    CHECK(total == u.length());
  }
}

TEST_CASE("endomorphism construction validates rank") {
  CHECK_THROWS_AS(Endomorphism(2, {word("a")}), RankMismatchError);
  CHECK_THROWS_AS(Endomorphism(2, {word("ac"), word("b")}), RankMismatchError);
  CHECK_THROWS_AS(Endomorphism(0, {}), DomainError);
  const Endomorphism id = Endomorphism::identity(3);
  CHECK(id.image(3) == word("c"));
  CHECK_THROWS_AS(id.image(4), RankMismatchError);
}

TEST_CASE("apply examples and homomorphism property") {
  const Endomorphism phi = endo("a->abc; b->cAba; c->ACab");
  CHECK(phi.apply(word("a")) == word("abc"));
  CHECK(phi.apply(Word()) == Word());
  CHECK(phi.apply(word("ab")) == word("abccAba"));
  CHECK_THROWS_AS(phi.apply(word("d")), RankMismatchError);

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    Word u = random_reduced_word(rng, 3, static_cast<int>(rng() % 10));
    Word v = random_reduced_word(rng, 3, static_cast<int>(rng() % 10));
    CHECK(phi.apply(concat(u, v)) == concat(phi.apply(u), phi.apply(v)));
  }
}

TEST_CASE("compose examples and functoriality") {
  const Endomorphism phi = endo("a->abc; b->cAba; c->ACab");
  const Endomorphism id = Endomorphism::identity(3);
  CHECK(compose(phi, id) == phi);
  CHECK(compose(id, phi) == phi);

  const Endomorphism phi2 = endo("a->aa");
  const Endomorphism phi3 = endo("a->aaa");
  CHECK(compose(phi2, phi3) == endo("a->aaaaaa"));

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    Endomorphism f = testsupport::random_endomorphism(rng, 2, 5);
    Endomorphism g = testsupport::random_endomorphism(rng, 2, 5);
    Word w = random_reduced_word(rng, 2, static_cast<int>(rng() % 8));
    CHECK(compose(f, g).apply(w) == f.apply(g.apply(w)));
  }
  CHECK_THROWS_AS(compose(phi, phi2), RankMismatchError);
}

TEST_CASE("iterate powers and cap") {
  CHECK(iterate(Endomorphism::identity(2), 5) == Endomorphism::identity(2));
  CHECK(iterate(endo("a->aa"), 3) == endo("a->aaaaaaaa"));
  CHECK(iterate(endo("a->aa"), 0) == Endomorphism::identity(1));

  const Endomorphism phi = endo("a->abbaB; b->baBab");
  CHECK(iterate(phi, 5) == compose(iterate(phi, 2), iterate(phi, 3)));

  try {
    iterate(endo("a->aa"), 30, 1000);
    FAIL("expected CapExceededError");
  } catch (const CapExceededError& e) {
    // 2^n letters first exceeds 1000 at n = 10.
    CHECK(e.reached_power() == 10);
    CHECK(e.length_cap() == 1000);
  }
  CHECK_THROWS_AS(iterate(endo("a->aa"), -1), DomainError);
}

TEST_SUITE_END();
