#include <doctest.h>

#include <sstream>

#include "momenta/atomic_measure.hpp"
#include "momenta/errors.hpp"
#include "momenta/hankel.hpp"
#include "momenta/moment_sequence.hpp"
#include "momenta/real.hpp"
#include "oracles.hpp"

using namespace momenta;

namespace {

MomentSequence seq(std::vector<long> values, Kind kind = Kind::Hamburger) {
    std::vector<Rat> entries(values.begin(), values.end());
    return MomentSequence(std::move(entries), kind);
}

} // namespace

TEST_CASE("rational parsing is canonical") {
    CHECK(rat_from_string("-4/6") == Rat(-2) / Rat(3));
    CHECK(rat_to_string(rat_from_string("-4/6")) == "-2/3");
    CHECK(rat_from_string("7") == Rat(7));
    CHECK(rat_from_string("4/-6") == Rat(-2) / Rat(3));
    CHECK_THROWS_AS(rat_from_string("1/0"), DomainError);
    CHECK_THROWS_AS(rat_from_string("1.5"), DomainError);
    CHECK_THROWS_AS(rat_from_string(""), DomainError);
    CHECK_THROWS_AS(rat_from_string("x"), DomainError);
}

TEST_CASE("rat to real is correctly rounded at the configured precision") {
    Real third = to_real(Rat(1) / Rat(3), 256);
    Real err = abs(third * 3 - 1);
    CHECK(err < to_real(rat_pow2(-250), 64));
}

TEST_CASE("trim") {
    MomentSequence h = seq({1, 0, 1, 0, 3});
    MomentSequence t = trim(h, 2);
    CHECK(t.entries == std::vector<Rat>{Rat(1), Rat(0), Rat(3)});
    CHECK(t.kind == Kind::Hamburger);
    CHECK(trim(seq({1, 1, 2, 5}), 0).entries ==
          std::vector<Rat>{Rat(1), Rat(1), Rat(2), Rat(5)});
    CHECK_THROWS_AS(trim(seq({1, 1}), 2), DomainError);
}

TEST_CASE("symmetrize and desymmetrize") {
    MomentSequence s = seq({1, 1, 2}, Kind::Stieltjes);
    MomentSequence h = symmetrize(s);
    CHECK(h.entries == std::vector<Rat>{Rat(1), Rat(0), Rat(1), Rat(0), Rat(2)});
    CHECK(h.kind == Kind::Hamburger);
    CHECK(symmetrize(seq({1}, Kind::Stieltjes)).entries == std::vector<Rat>{Rat(1)});
    CHECK_THROWS_AS(symmetrize(seq({1, 1, 2}, Kind::Hamburger)), KindError);

    CHECK(desymmetrize(seq({1, 0, 1, 0, 3})).entries ==
          std::vector<Rat>{Rat(1), Rat(1), Rat(3)});
    CHECK(desymmetrize(seq({1, 0, 2})).entries == std::vector<Rat>{Rat(1), Rat(2)});
    CHECK_THROWS_AS(desymmetrize(seq({1, 1, 2})), NotSymmetricError);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rat> entries = oracles::random_rat_vector(rng, 6);
        MomentSequence rs(entries, Kind::Stieltjes);
        CHECK(desymmetrize(symmetrize(rs)).entries == rs.entries);
    }
}

TEST_CASE("convex_combine") {
    MomentSequence a = seq({1, 0, 0});
    MomentSequence b = seq({2, 0, 2});
    MomentSequence c = convex_combine(a, b, Rat(1) / 2);
    CHECK(c.entries == std::vector<Rat>{Rat(3) / 2, Rat(0), Rat(1)});
    CHECK(convex_combine(a, a, Rat(1) / 3).entries == a.entries);
    CHECK_THROWS_AS(convex_combine(a, b, Rat(1)), DomainError);
    CHECK_THROWS_AS(convex_combine(a, b, Rat(0)), DomainError);
    CHECK_THROWS_AS(convex_combine(a, seq({1, 2}), Rat(1) / 2), ShapeError);
    CHECK_THROWS_AS(convex_combine(a, seq({1, 2, 3}, Kind::Stieltjes), Rat(1) / 2),
                    ShapeError);

    // Commutes with atom synthesis: moments of the weighted union measure.
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        AtomicMeasure m1 = oracles::random_atoms(rng, 2);
        AtomicMeasure m2 = oracles::random_atoms(rng, 3);
        Rat eta = Rat(2) / 5;
        std::vector<AtomicMeasure::Atom> merged;
        for (const auto& a1 : m1.atoms)
            merged.push_back({a1.position, eta * a1.weight});
        for (const auto& a2 : m2.atoms) {
            bool found = false;
            for (auto& am : merged)
                if (am.position == a2.position) {
                    am.weight += (Rat(1) - eta) * a2.weight;
                    found = true;
                }
            if (!found) merged.push_back({a2.position, (Rat(1) - eta) * a2.weight});
        }
        MomentSequence lhs = convex_combine(moments_from_atoms(m1, 6),
                                            moments_from_atoms(m2, 6), eta);
        MomentSequence rhs = moments_from_atoms(AtomicMeasure(merged), 6);
        CHECK(lhs.entries == rhs.entries);
    }
}

TEST_CASE("perturb_entry") {
    MomentSequence h = seq({1, 0, 1});
    MomentSequence t = perturb_entry(h, 2, Rat(1) / 2);
    CHECK(t.entries == std::vector<Rat>{Rat(1), Rat(0), Rat(3) / 2});
    CHECK(perturb_entry(h, 1, Rat(0)).entries == h.entries);
    CHECK(perturb_entry(perturb_entry(h, 2, Rat(5)), 2, Rat(-5)).entries ==
          h.entries);
    CHECK_THROWS_AS(perturb_entry(h, 3, Rat(1)), DomainError);

    for (std::size_t i = 0; i < 2; ++i) CHECK(t[i] == h[i]);
}

TEST_CASE("moments_from_atoms") {
    AtomicMeasure pm1({{Rat(1), Rat(1)}, {Rat(-1), Rat(1)}});
    CHECK(moments_from_atoms(pm1, 5).entries ==
          std::vector<Rat>{Rat(2), Rat(0), Rat(2), Rat(0), Rat(2)});
    CHECK(moments_from_atoms(pm1, 5).kind == Kind::Hamburger);

    AtomicMeasure dirac({{Rat(0), Rat(1)}});
    CHECK(moments_from_atoms(dirac, 4).entries ==
          std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0)});

    AtomicMeasure three({{Rat(1), Rat(1)}, {Rat(2), Rat(1)}, {Rat(3), Rat(1)}});
    MomentSequence m3 = moments_from_atoms(three, 4);
    CHECK(m3.entries == std::vector<Rat>{Rat(3), Rat(6), Rat(14), Rat(36)});
    CHECK(m3.kind == Kind::Stieltjes);

    CHECK_THROWS_AS(moments_from_atoms(AtomicMeasure({}), 3), DomainError);
    CHECK_THROWS_AS(AtomicMeasure({{Rat(1), Rat(0)}}), DomainError);
    CHECK_THROWS_AS(AtomicMeasure({{Rat(1), Rat(1)}, {Rat(1), Rat(2)}}),
                    DomainError);
}

TEST_CASE("Kronecker degeneration: minors vanish exactly past the rank") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 8; ++trial) {
        std::size_t r = 1 + trial % 4;
        AtomicMeasure mu = oracles::random_atoms(rng, r);
        MomentSequence m = moments_from_atoms(mu, 2 * (r + 1));
        for (std::size_t n = 1; n <= r; ++n)
            CHECK(hankel::minor(m, n, 0) > 0);
        CHECK(hankel::minor(m, r + 1, 0) == 0);
    }
}

TEST_CASE("sequence JSON round trip is exact") {
    std::mt19937 rng(31);
    std::vector<Rat> entries = oracles::random_rat_vector(rng, 9);
    entries.push_back(rat_from_string("123456789123456789123456789/1000000007"));
    entries.push_back(rat_from_string("-1/3"));
    MomentSequence original(entries, Kind::Stieltjes, "roundtrip");
    MomentSequence back = MomentSequence::from_json(original.to_json());
    CHECK(back.entries == original.entries);
    CHECK(back.kind == original.kind);
    CHECK(back.name == original.name);

    // Integer moments are also accepted.
    auto j = nlohmann::ordered_json::parse(
        R"({"kind":"hamburger","moments":[1,"2/3"]})");
    MomentSequence mixed = MomentSequence::from_json(j);
    CHECK(mixed.entries == std::vector<Rat>{Rat(1), Rat(2) / 3});
    CHECK_THROWS_AS(MomentSequence::from_json(
                        nlohmann::ordered_json::parse(R"({"moments":["1"]})")),
                    DomainError);
}
