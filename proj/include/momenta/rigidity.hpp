#ifndef MOMENTA_RIGIDITY_HPP
#define MOMENTA_RIGIDITY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "momenta/determinacy.hpp"
#include "momenta/moment_sequence.hpp"

namespace momenta::rigidity {

/// Truncated coefficients of the prepend-feasibility parabola
/// c_-2 >= A c_-1^2 + 2 B c_-1 + C, with A = sum P_k(0)^2,
/// B = sum P_k(0)Q_k(0), C = sum Q_k(0)^2 over k < K.  The K-term sums
/// underestimate A and C termwise; the reported boundary is the exact
/// finite-section boundary at order K+1, the full-series boundary needs
/// K -> infinity.
struct PrependRegion {
    Rat A, B, C;
    std::size_t K = 0;
    Rat vertex_c1; // -B/A
    Rat vertex_c2; // C - B^2/A
    Rat rho0;      // 1/A: truncated maximal mass at the origin

    Rat boundary_at(const Rat& c1) const { return A * c1 * c1 + 2 * B * c1 + C; }
    nlohmann::ordered_json to_json() const;
};

PrependRegion prepend_region(const MomentSequence& h, std::size_t K);

enum class PrependClass { Interior, BoundaryAtTruncation };
std::string prepend_class_to_string(PrependClass c);

struct PrependResult {
    MomentSequence sequence; // (c_-2, c_-1, c_0, ...)
    PrependClass classification = PrependClass::Interior;
    Rat slack;           // c_-2 minus the truncated boundary value
    Rat margin_required; // Interior needs slack > this
};

/// Default Interior margin: 2^-20 relative to the boundary magnitude.
Rat default_prepend_margin(const Rat& boundary_value);

/// Prepend (c_-1, c_-2).  Outside the truncated region raises
/// NotAMomentPrefixError; exact boundary hits and points within the margin
/// are flagged BoundaryAtTruncation (the true boundary needs the full
/// series).
PrependResult prepend(const MomentSequence& h, const Rat& c_m1, const Rat& c_m2,
                      std::size_t K, std::optional<Rat> margin = std::nullopt);

/// Truncated rho(0) = 1 / sum_{k<K} P_k(0)^2, nonincreasing in K.
Rat zeroth_moment_slack(const MomentSequence& h, std::size_t K);

/// Iterated prepend: step i uses c_-1 = odd_values[i] and c_-2 =
/// (truncated boundary at odd_values[i]) + margins[i], recomputing the
/// region for the extended sequence each step.  Requires
/// IndeterminateEvidence for h at truncation K.
MomentSequence extend_indeterminate(const MomentSequence& h, std::size_t n,
                                    const std::vector<Rat>& odd_values,
                                    const std::vector<Rat>& margins,
                                    std::size_t K,
                                    const determinacy::DiagParams& params = {});

/// Stieltjes prefix extension via the symmetric correspondence: extends
/// symmetrize(s) with zero odd values, then desymmetrizes.
MomentSequence stieltjes_extend(const MomentSequence& s, std::size_t n,
                                const std::vector<Rat>& margins, std::size_t K,
                                const determinacy::DiagParams& params = {});

/// Feasible interval for perturbing entry m at Hankel order N.  Endpoints
/// are enclosed by rational brackets within 2^-40; lo/hi are the certified
/// feasible (inner) endpoints, lo_outer/hi_outer the infeasible witnesses.
struct PerturbInterval {
    std::size_t m = 0;
    std::size_t order = 0;
    bool lo_unbounded = false, hi_unbounded = false;
    Rat lo, lo_outer;
    Rat hi, hi_outer;
    Rat certified_width_bound;

    bool contains(const Rat& gamma) const;
    nlohmann::ordered_json to_json() const;
};

PerturbInterval perturb_interval(const MomentSequence& h, std::size_t m,
                                 std::size_t N);

enum class Classification {
    RigidAllButZeroth,
    NonrigidUpTo,
    IndeterminateFreeVariation,
    Inconclusive
};
std::string classification_to_string(Classification c);

struct ReportParams {
    std::size_t K = 12;          // zero-data truncation for diagnostics
    std::size_t order = 3;       // Hankel order for perturb sweeps
    std::size_t m_sweep = 4;     // perturb entries m = 0..m_sweep
    determinacy::DiagParams diag;
};

struct RigidityReport {
    Classification classification = Classification::Inconclusive;
    std::optional<std::size_t> nonrigid_up_to; // largest variable entry index
    determinacy::IndexWindow index_window;
    std::optional<std::size_t> frozen_prefix_bound;
    std::vector<PerturbInterval> intervals;
    std::vector<std::string> flags;

    nlohmann::ordered_json to_json() const;
};

/// Combines the index-window sweep with perturb-interval sweeps into a
/// rigidity classification for the first entries of h.
RigidityReport rigidity_report(const MomentSequence& h, std::size_t nmax,
                               const ReportParams& params = {});

} // namespace momenta::rigidity

#endif
