#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <sstream>

#include <braidtk/braid.hpp>
#include <braidtk/free_group.hpp>

#include "support/oracles.hpp"

using namespace braidtk;

TEST_CASE("braid word validation") {
    CHECK_NOTHROW(BraidWord(1, {}));
    CHECK_THROWS_AS(BraidWord(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord(2, {{2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord(2, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord(2, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord::from_signed(3, {1, 0}), std::invalid_argument);

    auto w = BraidWord::from_signed(3, {1, -2});
    CHECK(w.strands() == 3);
    CHECK(w.length() == 2);
    CHECK(w.letters()[1].index == 2);
    CHECK(w.letters()[1].sign == -1);
}

TEST_CASE("compose inverse exponent sum") {
    auto u = BraidWord::from_signed(3, {1, 2});
    auto v = BraidWord::from_signed(3, {-1});
    auto uv = compose(u, v);
    CHECK(uv.length() == 3);
    CHECK(exponent_sum(uv) == 1);
    CHECK_THROWS_AS(compose(u, BraidWord(2, {})), std::invalid_argument);

    auto inv = inverse(u);
    CHECK(inv.letters()[0].index == 2);
    CHECK(inv.letters()[0].sign == -1);
    CHECK(free_reduce(compose(u, inv)).empty());
}

TEST_CASE("free and cyclic reduction") {
    auto w = BraidWord::from_signed(3, {1, 2, -2, -1, 1});
    CHECK(free_reduce(w).length() == 1);

    // cyclic reduction cancels across the ends
    auto c = BraidWord::from_signed(3, {1, 2, 2, -1});
    auto r = cyclic_reduce(c);
    CHECK(r.length() == 2);
    CHECK(r.letters()[0].index == 2);

    // a word that free reduction leaves alone but cyclic reduction kills
    auto ann = BraidWord::from_signed(2, {1, -1});
    CHECK(cyclic_reduce(ann).empty());
}

TEST_CASE("rotation and canonical form") {
    auto w = BraidWord::from_signed(3, {2, 1, 1});
    auto r = rotated(w, 1);
    CHECK(r.letters()[0].index == 1);
    CHECK(r.letters()[2].index == 2);
    CHECK(cyclically_equal_words(w, r));
    CHECK(canonical_rotation(w) == canonical_rotation(r));
    // canonical picks the lexicographically least rotation by letter code
    auto canon = canonical_rotation(w);
    CHECK(canon.letters()[0].index == 1);
    CHECK_FALSE(cyclically_equal_words(w, BraidWord::from_signed(3, {2, 1, -1})));
}

TEST_CASE("strand permutation and components") {
    // sigma_1 in B2 swaps the strands
    auto s1 = BraidWord::from_signed(2, {1});
    auto p = strand_permutation(s1);
    REQUIRE(p.size() == 2);
    CHECK(p[0] == 1);
    CHECK(p[1] == 0);
    CHECK(component_count(s1) == 1);

    // identity braid: n components
    CHECK(component_count(BraidWord(3, {})) == 3);

    // trefoil word closes to a knot, sigma_1^2 closes to a 1-component link too
    CHECK(component_count(BraidWord::from_signed(2, {1, 1, 1})) == 1);
    CHECK(component_count(BraidWord::from_signed(2, {1, 1})) == 2);
    CHECK(component_count(BraidWord::from_signed(3, {1, -2, 1, -2})) == 1);

    // letters act left to right: under sigma_1 sigma_2 the strand entering
    // at position 0 crosses to 1, then on to 2
    auto w = BraidWord::from_signed(3, {1, 2});
    auto q = strand_permutation(w);
    CHECK(q[0] == 2);
    CHECK(q[1] == 0);
    CHECK(q[2] == 1);
}

TEST_CASE("markov stabilization") {
    auto w = BraidWord::from_signed(2, {1, 1, 1});
    auto up = markov_stabilize(w, -1);
    CHECK(up.strands() == 3);
    CHECK(up.length() == 4);
    CHECK(up.letters().back().index == 2);
    CHECK(up.letters().back().sign == -1);

    auto down = markov_destabilize(up);
    REQUIRE(down.has_value());
    CHECK(down->strands() == 2);
    CHECK(down->length() == 3);

    // not destabilizable: top generator absent, or present twice
    CHECK_FALSE(markov_destabilize(w).has_value());
    CHECK_FALSE(markov_destabilize(BraidWord::from_signed(3, {2, 1, 2})).has_value());
    // occurrence may sit anywhere, not only at the end
    auto mid = BraidWord::from_signed(3, {1, 2, 1});
    auto d = markov_destabilize(mid);
    REQUIRE(d.has_value());
    CHECK(d->strands() == 2);
    CHECK(d->length() == 2);
}

TEST_CASE("exchange moves") {
    // pinned example: sigma1 sigma3 sigma1 sigma3^-1 in B4 admits exactly one
    // exchange result up to rotation, sigma1 sigma3^-1 sigma1 sigma3
    auto w = BraidWord::from_signed(4, {1, 3, 1, -3});
    auto moves = exchange_moves(w);
    REQUIRE(moves.size() == 1);
    auto expect = BraidWord::from_signed(4, {1, -3, 1, 3});
    CHECK(cyclically_equal_words(moves[0], expect));

    // words without the exact two-occurrence pattern admit none
    CHECK(exchange_moves(BraidWord::from_signed(4, {3, 3})).empty());
    CHECK(exchange_moves(BraidWord::from_signed(4, {1, 3, 2, -3})).empty());
    CHECK(exchange_moves(BraidWord::from_signed(4, {3, 1, 3, 1, -3})).empty());

    // degenerate B2 case: both blocks empty, the one move is a rotation
    auto triv = exchange_moves(BraidWord::from_signed(2, {1, -1}));
    REQUIRE(triv.size() == 1);
    CHECK(cyclically_equal_words(triv[0], BraidWord::from_signed(2, {-1, 1})));

    // exchange preserves closure permutation type
    for (auto& m : moves) {
        CHECK(component_count(m) == component_count(w));
        CHECK(exponent_sum(m) == exponent_sum(w));
    }
}

TEST_CASE("band generators") {
    // sigma_{i,i+1} is just sigma_i
    auto b12 = band_generator(1, 2, 1, 3);
    CHECK(b12.length() == 1);
    CHECK(b12.letters()[0].index == 1);

    // sigma_{1,3} in B3: sigma_1 sigma_2 sigma_1^-1
    auto b13 = band_generator(1, 3, 1, 3);
    REQUIRE(b13.length() == 3);
    CHECK(b13.letters()[0].index == 1);
    CHECK(b13.letters()[1].index == 2);
    CHECK(b13.letters()[2].index == 1);
    CHECK(b13.letters()[2].sign == -1);

    // negative band flips only the core letter
    auto neg = band_generator(1, 3, -1, 3);
    CHECK(neg.letters()[1].sign == -1);
    CHECK(neg.letters()[0].sign == 1);

    CHECK_THROWS_AS(band_generator(2, 2, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(band_generator(1, 4, 1, 3), std::invalid_argument);
}

TEST_CASE("ab tile words") {
    // pinned: (i,j) = (2,4), descending, negative sign in B5 gives
    // sigma_3^-1 sigma_2^-1, length j - i
    auto w = ab_tile_word(2, 4, -1, TileDirection::descending, 5);
    REQUIRE(w.length() == 2);
    CHECK(w.letters()[0].index == 3);
    CHECK(w.letters()[0].sign == -1);
    CHECK(w.letters()[1].index == 2);
    CHECK(w.letters()[1].sign == -1);

    auto up = ab_tile_word(2, 4, 1, TileDirection::ascending, 5);
    REQUIRE(up.length() == 2);
    CHECK(up.letters()[0].index == 2);
    CHECK(up.letters()[1].index == 3);
    CHECK(up.letters()[0].sign == 1);
}

TEST_CASE("format and parse round trip") {
    auto w = BraidWord::from_signed(3, {1, -2, 1, -2});
    auto text = format_braid_word(w);
    CHECK(text == "B3: 1 -2 1 -2");
    auto back = parse_braid_word(text);
    CHECK(back.strands() == 3);
    CHECK(back.letters() == w.letters());

    CHECK(format_braid_word(BraidWord(2, {})) == "B2:");
    CHECK(parse_braid_word("B2:").empty());
    CHECK(parse_braid_word(" B4 : 3 -3 ").strands() == 4);

    CHECK_THROWS_AS(parse_braid_word("3: 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid_word("B0: 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid_word("B3: 5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid_word("B3: x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid_word("B3 1 2"), std::invalid_argument);

    // random round trips
    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
        auto r = oracles::random_word(rng, 4, 9);
        CHECK(parse_braid_word(format_braid_word(r)).letters() == r.letters());
    }
}

TEST_CASE("free group words and artin action") {
    using braidtk::FreeGroupWord;
    auto x = FreeGroupWord::generator(1);
    auto w = x;
    w.push(2, 1);
    w.push(2, -1);
    CHECK(w == x);  // reduction happens on push
    CHECK(x.inverse().inverse() == x);
    CHECK(FreeGroupWord().is_identity());

    // sigma_i acts as x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
    auto img = artin_action(BraidWord::from_signed(2, {1}));
    REQUIRE(img.size() == 2);
    FreeGroupWord expect0;
    expect0.push(1, 1);
    expect0.push(2, 1);
    expect0.push(1, -1);
    CHECK(img[0] == expect0);
    CHECK(img[1] == x);

    // inverse generator acts inversely: composite is the identity map
    auto id = artin_action(BraidWord::from_signed(3, {1, -1, 2, -2}));
    CHECK(id[0] == FreeGroupWord::generator(1));
    CHECK(id[1] == FreeGroupWord::generator(2));
    CHECK(id[2] == FreeGroupWord::generator(3));
}

TEST_CASE("braid equality oracle") {
    // braid relation sigma_1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2
    CHECK(braid_eq(BraidWord::from_signed(3, {1, 2, 1}),
                   BraidWord::from_signed(3, {2, 1, 2})));
    // far commutation
    CHECK(braid_eq(BraidWord::from_signed(4, {1, 3}),
                   BraidWord::from_signed(4, {3, 1})));
    CHECK_FALSE(braid_eq(BraidWord::from_signed(3, {1}),
                         BraidWord::from_signed(3, {2})));
    CHECK_FALSE(braid_eq(BraidWord::from_signed(2, {1, 1}),
                         BraidWord::from_signed(2, {1})));
    CHECK_THROWS_AS(braid_eq(BraidWord::from_signed(2, {1}),
                             BraidWord::from_signed(3, {1})),
                    std::invalid_argument);

    // band generators conjugate up under delta = sigma_1 ... sigma_{n-1}
    const int n = 4;
    std::vector<int> delta_sig;
    for (int i = 1; i <= n - 1; ++i) delta_sig.push_back(i);
    auto delta = BraidWord::from_signed(n, delta_sig);
    for (int i = 1; i < n - 1; ++i)
        for (int j = i + 1; j <= n - 1; ++j) {
            auto lhs = compose(compose(delta, band_generator(i, j, 1, n)), inverse(delta));
            auto rhs = band_generator(i + 1, j + 1, 1, n);
            CHECK(braid_eq(lhs, rhs));
        }
}
