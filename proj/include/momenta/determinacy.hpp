#ifndef MOMENTA_DETERMINACY_HPP
#define MOMENTA_DETERMINACY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "momenta/moment_sequence.hpp"
#include "momenta/real.hpp"

namespace momenta::determinacy {

/// Thresholds for the finite-truncation series diagnostics.  All values are
/// exact rationals so verdicts are byte-stable and precision-independent;
/// they were frozen against a K=24 exact sweep of the heavy-tail corpus
/// entry (see tests).
struct DiagParams {
    std::size_t window = 4;
    Rat ratio_threshold = Rat(9) / Rat(10);
    Rat tol = rat_pow2(-30);          // near-1 ratio cut and absolute tail floor
    Rat tail_rel_tol = rat_pow2(-4);  // geometric tail bound vs partial sum
    Rat pattern_exponent_max = Rat(1); // (1-r_i)*i <= 1 flags a divergent tail
    Rat divergence_factor = Rat(1000000);
};

enum class SeriesVerdict { Converging, Diverging, Unknown };
std::string series_verdict_to_string(SeriesVerdict v);

/// Finite-truncation convergence evidence for a nonnegative series.  The
/// verdict never claims more than the window shows; Unknown is a common,
/// legal outcome.
struct SeriesDiag {
    std::vector<Rat> partial_sums;
    std::vector<Real> tail_ratios; // display copies of the exact ratios
    SeriesVerdict verdict = SeriesVerdict::Unknown;
    std::size_t window = 0;
    Rat ratio_threshold;
    std::vector<std::string> flags;
    Rat last_tail_ratio; // exact value of the final ratio, 0 if none
};

SeriesDiag series_diag(const std::vector<Rat>& terms, const DiagParams& params);

enum class Evidence { IndeterminateEvidence, DeterminateEvidence, Unknown };
std::string evidence_to_string(Evidence e);

/// Honesty-preserving determinacy verdict: IndeterminateEvidence only when
/// both zero-data series diagnose Converging, DeterminateEvidence when at
/// least one diagnoses Diverging (or the sequence degenerates to finite
/// support), Unknown otherwise.
struct Verdict {
    Evidence status = Evidence::Unknown;
    std::size_t K = 0;
    SeriesDiag p2, q2;
    std::vector<std::string> flags; // e.g. "finite_support"

    bool finite_support() const;
    nlohmann::ordered_json to_json() const;
};

Verdict indeterminacy_diag(const MomentSequence& h, std::size_t K,
                           const DiagParams& params = {});

/// Exact Hamburger-criterion ratio prefixes r_n = D_n^(0)/D_{n-1}^(1) and
/// the shifted analogues D_{n-k}^(k)/D_{n-k-1}^(k+1) for k = 1..kmax.
struct RatioData {
    std::vector<Rat> r0;                       // n = 1..N
    std::map<std::size_t, std::vector<Rat>> rk; // k -> ratios for n = k+1..N
};

RatioData ratio_criterion(const MomentSequence& h, std::size_t N,
                          std::size_t kmax);

/// Estimated window for the index of determinacy at the origin.  lower is
/// the largest n with DeterminateEvidence at every m <= n (-1 when none);
/// upper is the smallest n with IndeterminateEvidence minus one, or
/// unbounded when no trim fires.  Unknown verdicts widen the window.
struct IndexWindow {
    long lower = -1;
    std::optional<long> upper;
    std::vector<Verdict> verdicts; // verdicts[n] for trim level n

    nlohmann::ordered_json to_json() const;
};

/// Diagnoses trim(h, 2n) for n = 0..nmax.  Trim levels are independent and
/// evaluated in parallel; serial::index_estimate is the reference.
IndexWindow index_estimate(const MomentSequence& h, std::size_t nmax,
                           std::size_t K, const DiagParams& params = {});

/// Stieltjes route: diagnoses symmetrize(trim(s, n)) for n = 0..nmax.
IndexWindow stieltjes_index_estimate(const MomentSequence& s, std::size_t nmax,
                                     std::size_t K,
                                     const DiagParams& params = {});

namespace serial {
IndexWindow index_estimate(const MomentSequence& h, std::size_t nmax,
                           std::size_t K, const DiagParams& params = {});
IndexWindow stieltjes_index_estimate(const MomentSequence& s, std::size_t nmax,
                                     std::size_t K,
                                     const DiagParams& params = {});
} // namespace serial

/// Diagnostic form of ind_0(eta*h + (1-eta)*t) <= min(ind_0 h, ind_0 t):
/// the combination must fire IndeterminateEvidence at every trim level where
/// either input does, and its upper window edge must not exceed theirs.
bool index_convexity_check(const MomentSequence& h, const MomentSequence& t,
                           const Rat& eta, std::size_t nmax, std::size_t K,
                           const DiagParams& params = {});

} // namespace momenta::determinacy

#endif
