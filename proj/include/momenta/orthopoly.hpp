#ifndef MOMENTA_ORTHOPOLY_HPP
#define MOMENTA_ORTHOPOLY_HPP

#include <cstddef>
#include <vector>

#include "momenta/moment_sequence.hpp"
#include "momenta/real.hpp"

namespace momenta::orthopoly {

/// Monic three-term recurrence p_{k+1}(x) = (x - alpha_k) p_k(x) - beta_k
/// p_{k-1}(x), p_0 = 1, p_{-1} = 0, extracted from Hankel minor ratios.
/// The second-kind family shares the recurrence with q_0 = 0, q_1 = c_0.
struct Recurrence {
    Rat c0;
    std::vector<Rat> alpha; // alpha_0 .. alpha_{K-1}
    std::vector<Rat> beta;  // beta_1 .. beta_{K-1}, all > 0

    std::size_t degree_limit() const noexcept { return alpha.size(); }
};

/// beta_k = D_{k+1} D_{k-1} / D_k^2; alpha_k from the column-shifted minors.
/// Needs length >= 2K+1 and a positive definite prefix to order K+1; throws
/// DegenerateError carrying the rank when a minor vanishes first.
Recurrence recurrence_from_moments(const MomentSequence& h, std::size_t K);

struct PolyValues {
    std::vector<Rat> p; // p_0(x) .. p_K(x)
    std::vector<Rat> q; // q_0(x) .. q_K(x)
};

/// Exact values of both families at a rational point.
PolyValues eval_monic(const Recurrence& rec, const Rat& x, std::size_t K);

/// Squares and cross products of the orthonormal values at the origin:
/// P_k(0)^2, P_k(0)Q_k(0), Q_k(0)^2 for k < K.  The orthonormal values
/// themselves are irrational in general; only these rational combinations
/// are exposed.
struct ZeroData {
    std::vector<Rat> P2, PQ, Q2;
    std::size_t K = 0;

    Rat sum_P2() const;
    Rat sum_PQ() const;
    Rat sum_Q2() const;
};

ZeroData zero_data(const MomentSequence& h, std::size_t K);

/// Truncated derivatives at the origin of the four Nevanlinna functions:
/// d1 = sum P_k(0)^2, a1 = sum Q_k(0)^2, b1 = c1 = sum P_k(0)Q_k(0).
struct AbcdDerivatives {
    Rat a1, b1, c1, d1;
    std::size_t K = 0;
};

AbcdDerivatives abcd_derivatives(const MomentSequence& h, std::size_t K);

struct ParsevalPair {
    Real lhs; // (m_K(z;t) - m_K(conj z;t)) / (z - conj z)
    Real rhs; // sum_{k<K} |m_K(z;t) P_k(z) + Q_k(z)|^2
};

/// Both sides of Parseval's equality for (x-z)^{-1} at truncation K, built
/// from the K-truncated Nevanlinna functions.  Needs Im z != 0.
ParsevalPair parseval_partial(const MomentSequence& h, const Complex& z,
                              const Real& t, std::size_t K);

} // namespace momenta::orthopoly

#endif
