#include <doctest.h>

#include "momenta/corpus.hpp"
#include "momenta/errors.hpp"
#include "momenta/orthopoly.hpp"
#include "momenta/rigidity.hpp"
#include "oracles.hpp"

using namespace momenta;
using orthopoly::Recurrence;

TEST_CASE("recurrence closed forms") {
    Recurrence g = orthopoly::recurrence_from_moments(corpus::get("gaussian", 25), 12);
    for (std::size_t k = 0; k < 12; ++k) CHECK(g.alpha[k] == 0);
    for (std::size_t k = 1; k < 12; ++k)
        CHECK(g.beta[k - 1] == Rat(static_cast<long>(k)));

    Recurrence f = orthopoly::recurrence_from_moments(corpus::get("factorial", 25), 12);
    for (std::size_t k = 0; k < 12; ++k)
        CHECK(f.alpha[k] == Rat(static_cast<long>(2 * k + 1)));
    for (std::size_t k = 1; k < 12; ++k)
        CHECK(f.beta[k - 1] == Rat(static_cast<long>(k * k)));

    Recurrence c = orthopoly::recurrence_from_moments(corpus::get("catalan", 25), 12);
    CHECK(c.alpha[0] == 1);
    for (std::size_t k = 1; k < 12; ++k) CHECK(c.alpha[k] == 2);
    for (std::size_t k = 1; k < 12; ++k) CHECK(c.beta[k - 1] == 1);
}

TEST_CASE("recurrence round trip through the truncated Jacobi operator") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 6; ++trial) {
        MomentSequence m = moments_from_atoms(oracles::random_atoms(rng, 6), 17);
        Recurrence rec = orthopoly::recurrence_from_moments(m, 5);
        std::vector<Rat> back = oracles::moments_from_recurrence(rec, 11);
        for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i] == m[i]);
    }
    // Corpus round trip to depth 8.
    for (const char* name : {"gaussian", "catalan", "factorial"}) {
        MomentSequence m = corpus::get(name, 17);
        Recurrence rec = orthopoly::recurrence_from_moments(m, 8);
        std::vector<Rat> back = oracles::moments_from_recurrence(rec, 17);
        for (std::size_t i = 0; i < 17; ++i) CHECK(back[i] == m[i]);
    }
}

TEST_CASE("recurrence degenerates cleanly on finite support") {
    MomentSequence two = corpus::get("two_atom", 13);
    CHECK_THROWS_AS(orthopoly::recurrence_from_moments(two, 6), DegenerateError);
    try {
        orthopoly::recurrence_from_moments(two, 6);
    } catch (const DegenerateError& e) {
        CHECK(e.rank() == 2);
    }
    CHECK_THROWS_AS(orthopoly::recurrence_from_moments(corpus::get("gaussian", 9), 6),
                    TruncationError);
}

TEST_CASE("eval_monic values at the origin") {
    Recurrence g = orthopoly::recurrence_from_moments(corpus::get("gaussian", 13), 6);
    orthopoly::PolyValues v = orthopoly::eval_monic(g, Rat(0), 4);
    CHECK(v.p == std::vector<Rat>{Rat(1), Rat(0), Rat(-1), Rat(0), Rat(3)});
    CHECK(v.q == std::vector<Rat>{Rat(0), Rat(1), Rat(0), Rat(-2), Rat(0)});
    CHECK_THROWS_AS(orthopoly::eval_monic(g, Rat(0), 7), TruncationError);
}

TEST_CASE("Wronskian identity at sampled rational points") {
    std::mt19937 rng(47);
    for (const char* name : {"gaussian", "catalan", "factorial"}) {
        MomentSequence m = corpus::get(name, 17);
        Recurrence rec = orthopoly::recurrence_from_moments(m, 8);
        for (int s = 0; s < 4; ++s) {
            Rat x = oracles::random_rat(rng);
            orthopoly::PolyValues v = orthopoly::eval_monic(rec, x, 8);
            Rat prod = -rec.c0;
            for (std::size_t k = 0; k + 1 <= 7; ++k) {
                CHECK(v.p[k + 1] * v.q[k] - v.p[k] * v.q[k + 1] == prod);
                if (k < rec.beta.size()) prod *= rec.beta[k];
            }
        }
    }
}

TEST_CASE("zero_data values") {
    MomentSequence g = corpus::get("gaussian", 13);
    orthopoly::ZeroData zd = orthopoly::zero_data(g, 5);
    CHECK(zd.P2 == std::vector<Rat>{Rat(1), Rat(0), Rat(1) / 2, Rat(0), Rat(3) / 8});
    CHECK(zd.Q2[1] == 1);
    CHECK(zd.PQ[0] == 0);
    for (std::size_t k = 0; k < 5; ++k) {
        CHECK(zd.PQ[k] * zd.PQ[k] == zd.P2[k] * zd.Q2[k]);
        CHECK(zd.P2[k] >= 0);
        CHECK(zd.Q2[k] >= 0);
    }
    CHECK(zd.P2[0] == Rat(1) / g[0]);

    // Partial sums are monotone nondecreasing in K.
    Rat prevA(0), prevC(0);
    for (std::size_t K = 1; K <= 6; ++K) {
        orthopoly::ZeroData z = orthopoly::zero_data(g, K);
        CHECK(z.sum_P2() >= prevA);
        CHECK(z.sum_Q2() >= prevC);
        prevA = z.sum_P2();
        prevC = z.sum_Q2();
    }

    CHECK_THROWS_AS(orthopoly::zero_data(g, 7), TruncationError);
    CHECK_THROWS_AS(orthopoly::zero_data(corpus::get("two_atom", 13), 5),
                    DegenerateError);
}

TEST_CASE("abcd derivatives") {
    MomentSequence g = corpus::get("gaussian", 13);
    orthopoly::AbcdDerivatives d = orthopoly::abcd_derivatives(g, 3);
    CHECK(d.d1 == Rat(3) / 2); // 1 + 0 + 1/2
    CHECK(d.b1 == d.c1);

    // The quadratic t^2 d1 + a1 - t(b1 + c1) equals the prepend-region
    // quadratic at c_-1 = -t, exactly, at every truncation.
    MomentSequence heavy = symmetrize(corpus::get("heavy_tail", 9));
    std::mt19937 rng(53);
    for (std::size_t K = 1; K <= 8; ++K) {
        orthopoly::AbcdDerivatives a = orthopoly::abcd_derivatives(heavy, K);
        rigidity::PrependRegion r = rigidity::prepend_region(heavy, K);
        CHECK(a.d1 == r.A);
        CHECK(a.b1 == r.B);
        CHECK(a.a1 == r.C);
        for (int s = 0; s < 3; ++s) {
            Rat t = oracles::random_rat(rng);
            Rat via_abcd = a.d1 * t * t + a.a1 - t * (a.b1 + a.c1);
            CHECK(via_abcd == r.boundary_at(-t));
        }
    }
}

TEST_CASE("parseval partial sums") {
    MomentSequence heavy = symmetrize(corpus::get("heavy_tail", 13));
    Complex i_unit{to_real(Rat(0)), to_real(Rat(1))};
    Real t = to_real(Rat(0));

    // K = 1: rhs = |m P_0|^2 with P_0 = 1/sqrt(c_0) and Q_0 = 0; with t = 1
    // the single-atom identity is already nontrivial.
    Real eps1 = to_real(rat_pow2(-200));
    orthopoly::ParsevalPair p1 =
        orthopoly::parseval_partial(heavy, i_unit, to_real(Rat(1)), 1);
    CHECK(p1.rhs > 0);
    CHECK(abs(p1.lhs - p1.rhs) < eps1);

    // Both sides agree at every truncation (quadrature-measure identity) and
    // increase toward the full-series value.
    Real eps = to_real(rat_pow2(-180));
    Real prev_rhs(0);
    for (std::size_t K = 4; K <= 12; K += 2) {
        orthopoly::ParsevalPair p =
            orthopoly::parseval_partial(heavy, i_unit, t, K);
        CHECK(abs(p.lhs - p.rhs) < eps * (abs(p.lhs) + 1));
        CHECK(p.rhs > prev_rhs);
        prev_rhs = p.rhs;
    }

    // Conjugation symmetry: z and conj(z) give the same pair.
    Complex z{to_real(Rat(1) / 3), to_real(Rat(2))};
    Complex zbar = z.conj();
    orthopoly::ParsevalPair a = orthopoly::parseval_partial(heavy, z, t, 6);
    orthopoly::ParsevalPair b = orthopoly::parseval_partial(heavy, zbar, t, 6);
    CHECK(abs(a.lhs - b.lhs) < eps);
    CHECK(abs(a.rhs - b.rhs) < eps);

    Complex real_z{to_real(Rat(1)), to_real(Rat(0))};
    CHECK_THROWS_AS(orthopoly::parseval_partial(heavy, real_z, t, 4), DomainError);
}
