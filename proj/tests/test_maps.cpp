#include <doctest.h>

#include <stdexcept>

#include "goldman/enumerate.hpp"
#include "goldman/maps.hpp"

using namespace goldman;

namespace {

RibbonSurface torus() {
  return RibbonSurface::validate(2, {Letter::make(0, false), Letter::make(1, false),
                                     Letter::make(0, true), Letter::make(1, true)});
}

RibbonSurface pants() {
  return RibbonSurface::validate(2, {Letter::make(0, false), Letter::make(0, true),
                                     Letter::make(1, false), Letter::make(1, true)});
}

Homomorphism hom(const char* text, int sr = 2, int tr = 2) {
  return Homomorphism::parse(text, sr, tr);
}

// Elementary Nielsen moves at the given rank, as generator-image tables.
std::vector<Homomorphism> nielsen_moves(int rank) {
  std::vector<Homomorphism> moves;
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      if (i == j) continue;
      auto id = Homomorphism::identity(rank).images();
      id[static_cast<std::size_t>(i)] =
          concat(id[static_cast<std::size_t>(i)], Word::from_letters({Letter::make(j, false)}));
      moves.push_back(Homomorphism::make(rank, rank, std::move(id)));
    }
    auto id = Homomorphism::identity(rank).images();
    id[static_cast<std::size_t>(i)] = invert(id[static_cast<std::size_t>(i)]);
    moves.push_back(Homomorphism::make(rank, rank, std::move(id)));
  }
  for (int i = 0; i + 1 < rank; ++i) {
    auto id = Homomorphism::identity(rank).images();
    std::swap(id[static_cast<std::size_t>(i)], id[static_cast<std::size_t>(i + 1)]);
    moves.push_back(Homomorphism::make(rank, rank, std::move(id)));
  }
  return moves;
}

}  // namespace

TEST_CASE("map parsing") {
  const Homomorphism f = hom("a->ab,b->b");
  CHECK(f.images()[0].str() == "ab");
  CHECK(f.images()[1].str() == "b");
  CHECK_THROWS_AS((hom("a->ab")), std::invalid_argument);        // b missing
  CHECK_THROWS_AS((hom("a->a,a->b")), std::invalid_argument);    // a twice
  CHECK_THROWS_AS((hom("a->a,b->c")), std::invalid_argument);    // beyond target rank
  CHECK_THROWS_AS((hom("ab->a,b->b")), std::invalid_argument);   // bad left side
}

TEST_CASE("apply_word") {
  CHECK(apply_word(hom("a->ab,b->b"), Word::parse("aB", 2)).str() == "a");
  const Homomorphism id = Homomorphism::identity(2);
  CHECK(apply_word(id, Word::parse("abAB", 2)).str() == "abAB");
  // Dehn twist fixes the boundary commutator
  CHECK(apply_word(hom("a->a,b->ba"), Word::parse("abAB", 2)).str() == "abAB");
  CHECK_THROWS_AS((apply_word(hom("a->a", 1, 1), Word::parse("b", 2))), std::invalid_argument);
}

TEST_CASE("apply_class") {
  CHECK(apply_class(hom("a->b,b->a"), parse_class("ab", 2)).str() == "ab");
  CHECK(apply_class(hom("a->a,b->ba"), parse_class("abAB", 2)).str() == "abAB");
  CHECK(apply_class(hom("a->ab,b->b"), CyclicWord{}).empty());
}

TEST_CASE("compose") {
  const Homomorphism twist = hom("a->a,b->ba");
  const Homomorphism id = Homomorphism::identity(2);
  const Homomorphism swap = hom("a->b,b->a");

  const Homomorphism idt = compose(id, twist);
  CHECK(idt.images()[0] == twist.images()[0]);
  CHECK(idt.images()[1] == twist.images()[1]);

  const Homomorphism twice = compose(twist, twist);
  CHECK(twice.images()[0].str() == "a");
  CHECK(twice.images()[1].str() == "baa");

  const Homomorphism ss = compose(swap, swap);
  CHECK(ss.images()[0].str() == "a");
  CHECK(ss.images()[1].str() == "b");

  CHECK_THROWS_AS((compose(hom("a->a", 1, 1), hom("a->a,b->b"))), std::invalid_argument);
}

TEST_CASE("is_isomorphism by folding") {
  CHECK(is_isomorphism(hom("a->ab,b->b")));
  CHECK_FALSE(is_isomorphism(hom("a->aa,b->b")));
  CHECK_FALSE(is_isomorphism(hom("a->a,b->a")));
  CHECK_FALSE(is_isomorphism(hom("a->a", 1, 2)));  // rank mismatch
  CHECK(is_isomorphism(Homomorphism::identity(3)));
}

TEST_CASE("products of Nielsen moves are isomorphisms") {
  WordSampler rng(47);
  for (int rank = 2; rank <= 3; ++rank) {
    const auto moves = nielsen_moves(rank);
    for (int t = 0; t < 15; ++t) {
      Homomorphism f = Homomorphism::identity(rank);
      const int steps = rng.uniform(1, 10);
      for (int s = 0; s < steps; ++s)
        f = compose(moves[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(moves.size()) - 1))], f);
      CHECK(is_isomorphism(f));
      // composing with a non-surjective map must stay rejected
      Homomorphism bad = compose(f, hom(rank == 2 ? "a->aa,b->b" : "a->aa,b->b,c->c", rank, rank));
      CHECK_FALSE(is_isomorphism(bad));
    }
  }
}

TEST_CASE("isomorphisms preserve primitivity on short classes") {
  const Homomorphism twist = hom("a->a,b->ba");
  for (const CyclicWord& x : classes_up_to(2, 5)) {
    if (primitive_root(x).exponent != 1) continue;
    const CyclicWord img = apply_class(twist, x);
    CHECK(primitive_root(img).exponent == 1);
  }
}

TEST_CASE("commutes_on") {
  const RibbonSurface t = torus();
  const RibbonSurface p = pants();
  const CyclicWord a = parse_class("a", 2);
  const CyclicWord b = parse_class("b", 2);

  CHECK(commutes_on(t, t, Homomorphism::identity(2), a, b) == CommuteVerdict::commutes);
  CHECK(commutes_on(t, t, hom("a->b,b->a"), a, b) == CommuteVerdict::anticommutes);
  CHECK(commutes_on(p, t, Homomorphism::identity(2), a, b) == CommuteVerdict::neither);
  CHECK(commutes_on(p, p, Homomorphism::identity(2), a, b) == CommuteVerdict::degenerate);
  CHECK_THROWS_AS((commutes_on(t, t, hom("a->a", 1, 1), a, b)), std::invalid_argument);
}

TEST_CASE("the Dehn twist commutes with the bracket on short pairs") {
  const RibbonSurface t = torus();
  const Homomorphism twist = hom("a->a,b->ba");
  const auto classes = classes_up_to(2, 4);
  for (const CyclicWord& x : classes)
    for (const CyclicWord& y : classes) {
      const CommuteVerdict v = commutes_on(t, t, twist, x, y);
      CHECK((v == CommuteVerdict::commutes || v == CommuteVerdict::degenerate));
    }
}
