#include "treeideal/combgen.hpp"
#include "treeideal/errors.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace treeideal;
using namespace treeideal::test;

TEST_SUITE("combgen") {

TEST_CASE("fs enumerates nonempty subset sums") {
    CHECK(fs(nats({5})) == nats({5}));
    CHECK(fs(nats({1, 2})) == nats({1, 2, 3}));
    CHECK(fs(nats({1, 2, 4})) == nats({1, 2, 3, 4, 5, 6, 7}));
}

TEST_CASE("fs agrees with the bitmask oracle") {
    Lcg rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<BigNat> e;
        for (std::size_t i = 0, n = rng.below(7); i < n; ++i) e.push_back(BigNat(rng.below(50)));
        NatSet b(std::move(e));
        if (b.empty()) continue;
        CHECK(fs(b) == brute_fs(b));
    }
}

TEST_CASE("fs guards against exponential blowup") {
    std::vector<BigNat> e;
    for (std::uint64_t i = 0; i < 21; ++i) e.push_back(BigNat(i + 1));
    CHECK_THROWS_AS(fs(NatSet(std::move(e))), CapacityError);
}

TEST_CASE("fs_k sums exactly k elements") {
    CHECK(fs_k(nats({7}), 2).empty());
    CHECK(fs_k(nats({1, 2, 4}), 2) == nats({3, 5, 6}));
    CHECK(fs_k(nats({1, 2, 4, 8}), 3) == nats({7, 11, 13, 14}));
    CHECK_THROWS_AS(fs_k(nats({1, 2}), 1), ArgumentError);
}

TEST_CASE("fs_k agrees with the bitmask oracle") {
    Lcg rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<BigNat> e;
        for (std::size_t i = 0, n = rng.below(8); i < n; ++i) e.push_back(BigNat(rng.below(40)));
        NatSet b(std::move(e));
        for (unsigned k = 2; k <= 4; ++k) CHECK(fs_k(b, k) == brute_fs_k(b, k));
    }
}

TEST_CASE("delta lists positive differences") {
    CHECK(delta(nats({4})).empty());
    CHECK(delta(nats({1, 3, 7})) == nats({2, 4, 6}));
    CHECK(delta(nats({0, 1, 2})) == nats({1, 2}));
}

TEST_CASE("pairs lists 2-subsets") {
    PairSet p = pairs(nats({1, 2, 3}));
    CHECK(p.size() == 3);
    CHECK(p.contains(BigNat(1), BigNat(2)));
    CHECK(p.contains(BigNat(1), BigNat(3)));
    CHECK(p.contains(BigNat(2), BigNat(3)));
    CHECK(pairs(nats({9})).empty());
    CHECK(pairs(nats({0, 5})).size() == 1);
}

TEST_CASE("pair count is n choose 2") {
    for (std::uint64_t n = 0; n <= 8; ++n) {
        std::vector<BigNat> e;
        for (std::uint64_t i = 0; i < n; ++i) e.push_back(BigNat(3 * i + 1));
        CHECK(pairs(NatSet(std::move(e))).size() == n * (n - 1) / 2);
    }
}

TEST_CASE("mathias_bush lists increasing sequences up to the depth") {
    SeqSet bush = mathias_bush(nats({1, 2, 3}), 2);
    CHECK(bush == SeqSet{seq({1}), seq({2}), seq({3}), seq({1, 2}), seq({1, 3}), seq({2, 3})});
    CHECK(mathias_bush(nats({}), 3).empty());
    CHECK(mathias_bush(nats({4}), 2) == SeqSet{seq({4})});
}

TEST_CASE("rho_extended dispatches to the matching generator") {
    CHECK(std::get<NatSet>(rho_extended(GeneratorKind::fs(), nats({1, 2}))) == nats({1, 2, 3}));
    CHECK(std::get<NatSet>(rho_extended(GeneratorKind::delta(), nats({4}))).empty());
    CHECK(std::get<PairSet>(rho_extended(GeneratorKind::pairs(), nats({1, 2, 3}))) ==
          pairs(nats({1, 2, 3})));
    CHECK(std::get<NatSet>(rho_extended(GeneratorKind::fsk(2), nats({1, 2, 4}))) == nats({3, 5, 6}));
    CHECK(std::get<SeqSet>(rho_extended(GeneratorKind::mathias(), nats({1, 2}))) ==
          mathias_bush(nats({1, 2}), 2));
}

TEST_CASE("generators are monotone in the ground set") {
    // Exhaustive over E subset of F subset of {1..5}; the acceptance suite
    // widens this to {1..8}.
    std::vector<GeneratorKind> kinds{GeneratorKind::fs(), GeneratorKind::fsk(2),
                                     GeneratorKind::delta(), GeneratorKind::pairs(),
                                     GeneratorKind::mathias()};
    for (std::uint32_t f = 0; f < 32; ++f)
        for (std::uint32_t e = f;; e = (e - 1) & f) {
            std::vector<BigNat> fe, ee;
            for (std::uint32_t i = 0; i < 5; ++i) {
                if ((f >> i) & 1) fe.push_back(BigNat(i + 1));
                if ((e >> i) & 1) ee.push_back(BigNat(i + 1));
            }
            NatSet fset(std::move(fe)), eset(std::move(ee));
            for (const GeneratorKind& k : kinds)
                CHECK(gen_image_subset(rho_extended(k, eset), rho_extended(k, fset)));
            if (e == 0) break;
        }
}

TEST_CASE("structural facts about fs") {
    NatSet b = nats({3, 5, 9});
    NatSet image = fs(b);
    CHECK(b.subset_of(image));
    CHECK(fs_k(b, 2).subset_of(image));
    BigNat total;
    for (const BigNat& v : b.elements()) total += v;
    CHECK(image.max() == total);
}

TEST_CASE("duplicate sums collapse silently when 0 is present") {
    CHECK(fs(nats({0, 1})) == nats({0, 1}));
}

TEST_CASE("kind names parse and print") {
    CHECK(GeneratorKind::parse("fs")->tag == GeneratorKind::Tag::FS);
    CHECK(GeneratorKind::parse("fs2")->k == 2);
    CHECK(GeneratorKind::parse("fs13")->k == 13);
    CHECK(GeneratorKind::parse("delta")->tag == GeneratorKind::Tag::Delta);
    CHECK_FALSE(GeneratorKind::parse("fs1").has_value());
    CHECK_FALSE(GeneratorKind::parse("nope").has_value());
    CHECK(GeneratorKind::fsk(3).name() == "fs3");
}

} // TEST_SUITE
