// Test-only oracles, independent of the implementation paths they check.
#ifndef MOMENTA_TESTS_ORACLES_HPP
#define MOMENTA_TESTS_ORACLES_HPP

#include <random>
#include <vector>

#include "momenta/atomic_measure.hpp"
#include "momenta/matrix.hpp"
#include "momenta/moment_sequence.hpp"
#include "momenta/orthopoly.hpp"

namespace oracles {

using momenta::Rat;
using momenta::RatMatrix;

/// Recursive cofactor expansion along the first row.  Exponential; for the
/// n <= 6 cross-checks only.
inline Rat det_cofactor(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Rat(1);
    if (n == 1) return m(0, 0);
    Rat det(0);
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0) continue;
        RatMatrix sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                sub(i - 1, jj++) = m(i, j);
            }
        }
        Rat term = m(0, c) * det_cofactor(sub);
        det += (c % 2 == 0) ? term : -term;
    }
    return det;
}

inline Rat random_rat(std::mt19937& rng, int num_range = 9, int den_range = 9) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rat(num(rng)) / Rat(den(rng));
}

inline std::vector<Rat> random_rat_vector(std::mt19937& rng, std::size_t n) {
    std::vector<Rat> v(n);
    for (auto& x : v) x = random_rat(rng);
    return v;
}

/// Random atomic measure with r distinct positions and positive weights.
inline momenta::AtomicMeasure random_atoms(std::mt19937& rng, std::size_t r,
                                           bool nonnegative = false) {
    std::vector<momenta::AtomicMeasure::Atom> atoms;
    std::uniform_int_distribution<int> pos(nonnegative ? 0 : -8, 8);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> wnum(1, 9);
    while (atoms.size() < r) {
        Rat p = Rat(pos(rng)) / Rat(den(rng));
        bool dup = false;
        for (const auto& a : atoms) dup = dup || a.position == p;
        if (dup) continue;
        atoms.push_back({p, Rat(wnum(rng)) / Rat(den(rng))});
    }
    return momenta::AtomicMeasure(std::move(atoms));
}

/// Reconstruct moments c_0..c_{L-1} from a monic recurrence through the
/// truncated Jacobi operator: c_i = c_0 * (T^i)_{00}.  Independent of the
/// Hankel-ratio extraction it validates.
inline std::vector<Rat> moments_from_recurrence(const momenta::orthopoly::Recurrence& rec,
                                                std::size_t L) {
    const std::size_t dim = L / 2 + 2;
    std::vector<Rat> state(dim, Rat(0)); // coordinates in the monic p_k basis
    state[0] = Rat(1);
    std::vector<Rat> moments;
    moments.reserve(L);
    moments.push_back(rec.c0);
    std::vector<Rat> next(dim);
    for (std::size_t i = 1; i < L; ++i) {
        for (auto& x : next) x = Rat(0);
        for (std::size_t k = 0; k < dim; ++k) {
            if (state[k] == 0) continue;
            // x p_k = p_{k+1} + alpha_k p_k + beta_k p_{k-1}
            if (k + 1 < dim) next[k + 1] += state[k];
            if (k < rec.alpha.size()) next[k] += rec.alpha[k] * state[k];
            if (k >= 1 && k - 1 < rec.beta.size() + 1 && k <= rec.beta.size())
                next[k - 1] += rec.beta[k - 1] * state[k];
        }
        state = next;
        moments.push_back(rec.c0 * state[0]);
    }
    return moments;
}

} // namespace oracles

#endif
