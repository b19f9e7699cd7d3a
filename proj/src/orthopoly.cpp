#include "momenta/orthopoly.hpp"

#include <numeric>

#include "momenta/errors.hpp"
#include "momenta/hankel.hpp"
#include "momenta/matrix.hpp"

namespace momenta::orthopoly {

namespace {

/// Check D_1..D_{order} > 0 and report the rank of the PD prefix otherwise.
void require_pd_prefix(const hankel::MinorTable& table, std::size_t order) {
    for (std::size_t n = 1; n <= order; ++n) {
        Rat d = table.minor(n, 0);
        if (d == 0)
            throw DegenerateError("Hankel minor D_" + std::to_string(n) +
                                      " vanishes: finite-support signature",
                                  n - 1);
        if (d < 0)
            throw DegenerateError("Hankel minor D_" + std::to_string(n) +
                                      " is negative: not a moment prefix",
                                  n - 1);
    }
}

/// Column-shifted Hankel determinant S_k: last column skips one index, so
/// the monic polynomial has x^{k-1} coefficient -S_k/D_k.  S_0 = 0.
Rat shifted_det(const MomentSequence& h, std::size_t k) {
    if (k == 0) return Rat(0);
    RatMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j + 1 < k; ++j) m(i, j) = h[i + j];
        m(i, k - 1) = h[i + k];
    }
    return det_bareiss(m);
}

Recurrence build_recurrence(const hankel::MinorTable& table, std::size_t K) {
    const MomentSequence& h = table.source();
    Recurrence rec;
    rec.c0 = h[0];
    rec.alpha.reserve(K);
    if (K == 0) return rec;
    std::vector<Rat> s(K + 1);
    for (std::size_t k = 0; k <= K; ++k) s[k] = shifted_det(h, k);
    Rat prev_ratio(0); // S_0 / D_0
    for (std::size_t k = 1; k <= K; ++k) {
        Rat ratio = s[k] / table.minor(k, 0);
        rec.alpha.push_back(ratio - prev_ratio);
        prev_ratio = ratio;
    }
    rec.beta.reserve(K > 0 ? K - 1 : 0);
    for (std::size_t k = 1; k < K; ++k) {
        Rat beta = table.minor(k + 1, 0) * table.minor(k - 1, 0) /
                   (table.minor(k, 0) * table.minor(k, 0));
        if (beta <= 0)
            throw DegenerateError("nonpositive recurrence coefficient beta_" +
                                      std::to_string(k),
                                  k);
        rec.beta.push_back(beta);
    }
    return rec;
}

} // namespace

Recurrence recurrence_from_moments(const MomentSequence& h, std::size_t K) {
    if (h.size() < 2 * K + 1)
        throw TruncationError("recurrence to depth " + std::to_string(K) +
                              " needs " + std::to_string(2 * K + 1) +
                              " moments, have " + std::to_string(h.size()));
    hankel::MinorTable table(h);
    require_pd_prefix(table, K + 1);
    return build_recurrence(table, K);
}

PolyValues eval_monic(const Recurrence& rec, const Rat& x, std::size_t K) {
    if (K > rec.degree_limit())
        throw TruncationError("recurrence holds degrees up to " +
                              std::to_string(rec.degree_limit()));
    PolyValues v;
    v.p.reserve(K + 1);
    v.q.reserve(K + 1);
    v.p.push_back(Rat(1));
    v.q.push_back(Rat(0));
    if (K == 0) return v;
    v.p.push_back(x - rec.alpha[0]);
    v.q.push_back(rec.c0);
    for (std::size_t k = 1; k < K; ++k) {
        Rat xa = x - rec.alpha[k];
        v.p.push_back(xa * v.p[k] - rec.beta[k - 1] * v.p[k - 1]);
        v.q.push_back(xa * v.q[k] - rec.beta[k - 1] * v.q[k - 1]);
    }
    return v;
}

Rat ZeroData::sum_P2() const {
    return std::accumulate(P2.begin(), P2.end(), Rat(0));
}
Rat ZeroData::sum_PQ() const {
    return std::accumulate(PQ.begin(), PQ.end(), Rat(0));
}
Rat ZeroData::sum_Q2() const {
    return std::accumulate(Q2.begin(), Q2.end(), Rat(0));
}

namespace {

struct ZeroInternals {
    Recurrence rec;
    std::vector<Rat> norms; // nu_k = D_{k+1}/D_k, k < K
};

ZeroInternals zero_internals(const MomentSequence& h, std::size_t K) {
    if (K == 0) throw DomainError("zero data needs K >= 1");
    if (h.size() < 2 * K + 1)
        throw TruncationError("zero data to K = " + std::to_string(K) +
                              " needs " + std::to_string(2 * K + 1) +
                              " moments, have " + std::to_string(h.size()));
    hankel::MinorTable table(h);
    require_pd_prefix(table, K + 1);
    ZeroInternals zi;
    zi.rec = build_recurrence(table, K - 1);
    zi.norms.reserve(K);
    for (std::size_t k = 0; k < K; ++k)
        zi.norms.push_back(table.minor(k + 1, 0) / table.minor(k, 0));
    return zi;
}

} // namespace

ZeroData zero_data(const MomentSequence& h, std::size_t K) {
    ZeroInternals zi = zero_internals(h, K);
    PolyValues at0 = eval_monic(zi.rec, Rat(0), K - 1);
    ZeroData zd;
    zd.K = K;
    zd.P2.reserve(K);
    zd.PQ.reserve(K);
    zd.Q2.reserve(K);
    for (std::size_t k = 0; k < K; ++k) {
        zd.P2.push_back(at0.p[k] * at0.p[k] / zi.norms[k]);
        zd.PQ.push_back(at0.p[k] * at0.q[k] / zi.norms[k]);
        zd.Q2.push_back(at0.q[k] * at0.q[k] / zi.norms[k]);
    }
    return zd;
}

AbcdDerivatives abcd_derivatives(const MomentSequence& h, std::size_t K) {
    ZeroData zd = zero_data(h, K);
    AbcdDerivatives d;
    d.K = K;
    d.a1 = zd.sum_Q2();
    d.b1 = zd.sum_PQ();
    d.c1 = d.b1;
    d.d1 = zd.sum_P2();
    return d;
}

ParsevalPair parseval_partial(const MomentSequence& h, const Complex& z,
                              const Real& t, std::size_t K) {
    if (z.im == 0) throw DomainError("parseval needs a non-real z");
    ZeroInternals zi = zero_internals(h, K);
    PolyValues at0 = eval_monic(zi.rec, Rat(0), K - 1);

    // Complex recurrence evaluation of p_k(z), q_k(z).
    std::vector<Complex> pz, qz;
    pz.reserve(K);
    qz.reserve(K);
    Real zero(0);
    pz.push_back({Real(1), zero});
    qz.push_back({zero, zero});
    if (K >= 2) {
        Real a0 = to_real(zi.rec.alpha[0]);
        pz.push_back({z.re - a0, z.im});
        qz.push_back({to_real(zi.rec.c0), zero});
        for (std::size_t k = 1; k + 1 < K; ++k) {
            Complex xa{z.re - to_real(zi.rec.alpha[k]), z.im};
            Real bk = to_real(zi.rec.beta[k - 1]);
            pz.push_back(xa * pz[k] - pz[k - 1] * bk);
            qz.push_back(xa * qz[k] - qz[k - 1] * bk);
        }
    }

    std::vector<Real> inv_norm(K);
    std::vector<Real> P0(K), Q0(K);
    std::vector<Complex> Pz(K), Qz(K);
    for (std::size_t k = 0; k < K; ++k) {
        inv_norm[k] = Real(1) / sqrt(to_real(zi.norms[k]));
        P0[k] = to_real(at0.p[k]) * inv_norm[k];
        Q0[k] = to_real(at0.q[k]) * inv_norm[k];
        Pz[k] = pz[k] * inv_norm[k];
        Qz[k] = qz[k] * inv_norm[k];
    }

    Complex sum_QQ{zero, zero}, sum_QP{zero, zero}, sum_PQ{zero, zero},
        sum_PP{zero, zero};
    for (std::size_t k = 0; k < K; ++k) {
        sum_QQ = sum_QQ + Qz[k] * Q0[k];
        sum_QP = sum_QP + Pz[k] * Q0[k];
        sum_PQ = sum_PQ + Qz[k] * P0[k];
        sum_PP = sum_PP + Pz[k] * P0[k];
    }
    Complex aK = z * sum_QQ;
    Complex bK = z * sum_QP;
    bK.re -= 1;
    Complex cK = z * sum_PQ;
    cK.re += 1;
    Complex dK = z * sum_PP;

    Complex denom = bK - dK * t;
    if (denom.abs2() == 0)
        throw PrecisionError("truncated Nevanlinna denominator vanishes");
    Complex m = -((aK - cK * t) / denom);

    // m_K(conj z; t) = conj(m_K(z; t)); the difference quotient reduces to
    // Im m / Im z.
    ParsevalPair pair{m.im / z.im, Real(0)};
    for (std::size_t k = 0; k < K; ++k)
        pair.rhs += (m * Pz[k] + Qz[k]).abs2();
    return pair;
}

} // namespace momenta::orthopoly
