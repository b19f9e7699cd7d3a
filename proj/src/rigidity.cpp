#include "momenta/rigidity.hpp"

#include <algorithm>

#include "momenta/errors.hpp"
#include "momenta/hankel.hpp"
#include "momenta/orthopoly.hpp"

namespace momenta::rigidity {

nlohmann::ordered_json PrependRegion::to_json() const {
    nlohmann::ordered_json j;
    j["K"] = K;
    j["A"] = rat_to_string(A);
    j["B"] = rat_to_string(B);
    j["C"] = rat_to_string(C);
    j["vertex_c1"] = rat_to_string(vertex_c1);
    j["vertex_c2"] = rat_to_string(vertex_c2);
    j["rho0"] = rat_to_string(rho0);
    j["truncated"] = true;
    return j;
}

PrependRegion prepend_region(const MomentSequence& h, std::size_t K) {
    orthopoly::ZeroData zd = orthopoly::zero_data(h, K);
    PrependRegion region;
    region.K = K;
    region.A = zd.sum_P2();
    region.B = zd.sum_PQ();
    region.C = zd.sum_Q2();
    region.vertex_c1 = -region.B / region.A;
    region.vertex_c2 = region.C - region.B * region.B / region.A;
    region.rho0 = Rat(1) / region.A;
    return region;
}

std::string prepend_class_to_string(PrependClass c) {
    return c == PrependClass::Interior ? "interior" : "boundary_at_truncation";
}

Rat default_prepend_margin(const Rat& boundary_value) {
    Rat scale = abs(boundary_value);
    if (scale < 1) scale = Rat(1);
    return rat_pow2(-20) * scale;
}

PrependResult prepend(const MomentSequence& h, const Rat& c_m1, const Rat& c_m2,
                      std::size_t K, std::optional<Rat> margin) {
    if (h.kind != Kind::Hamburger)
        throw KindError("prepend needs a Hamburger sequence (symmetrize first)");
    PrependRegion region = prepend_region(h, K);
    Rat boundary = region.boundary_at(c_m1);
    Rat slack = c_m2 - boundary;
    if (slack < 0)
        throw NotAMomentPrefixError(
            "(c_-1, c_-2) lies below the truncated boundary by " +
            rat_to_string(-slack));
    Rat required = margin ? *margin : default_prepend_margin(boundary);
    if (required < 0) throw DomainError("prepend margin must be nonnegative");

    std::vector<Rat> entries;
    entries.reserve(h.size() + 2);
    entries.push_back(c_m2);
    entries.push_back(c_m1);
    entries.insert(entries.end(), h.entries.begin(), h.entries.end());
    std::string name = h.name.empty() ? "" : h.name + "[pre]";
    PrependResult result{MomentSequence(std::move(entries), Kind::Hamburger,
                                        std::move(name)),
                         slack > required ? PrependClass::Interior
                                          : PrependClass::BoundaryAtTruncation,
                         slack, required};
    return result;
}

Rat zeroth_moment_slack(const MomentSequence& h, std::size_t K) {
    return prepend_region(h, K).rho0;
}

MomentSequence extend_indeterminate(const MomentSequence& h, std::size_t n,
                                    const std::vector<Rat>& odd_values,
                                    const std::vector<Rat>& margins,
                                    std::size_t K,
                                    const determinacy::DiagParams& params) {
    if (odd_values.size() != n || margins.size() != n)
        throw DomainError("extend needs n odd values and n margins");
    for (const Rat& m : margins)
        if (m <= 0) throw DomainError("extension margins must be positive");
    if (n == 0) return h;
    determinacy::Verdict verdict = determinacy::indeterminacy_diag(h, K, params);
    if (verdict.status != determinacy::Evidence::IndeterminateEvidence)
        throw DomainError(
            "extension needs IndeterminateEvidence for the input at K = " +
            std::to_string(K) + " (got " +
            determinacy::evidence_to_string(verdict.status) + ")");

    MomentSequence current = h;
    for (std::size_t step = 0; step < n; ++step) {
        PrependRegion region = prepend_region(current, K);
        const Rat& c1 = odd_values[step];
        Rat c2 = region.boundary_at(c1) + margins[step];
        PrependResult result = prepend(current, c1, c2, K);
        if (result.classification != PrependClass::Interior)
            throw ConstructionError("extension step " + std::to_string(step) +
                                        " did not land strictly inside the "
                                        "truncated region",
                                    step);
        current = std::move(result.sequence);
    }
    current.name = h.name.empty() ? "" : h.name + "[ext" + std::to_string(n) + "]";
    return current;
}

MomentSequence stieltjes_extend(const MomentSequence& s, std::size_t n,
                                const std::vector<Rat>& margins, std::size_t K,
                                const determinacy::DiagParams& params) {
    if (s.kind != Kind::Stieltjes)
        throw KindError("stieltjes_extend needs a Stieltjes sequence");
    if (n == 0) return s;
    MomentSequence sym = symmetrize(s);
    std::vector<Rat> odd(n, Rat(0));
    MomentSequence extended = extend_indeterminate(sym, n, odd, margins, K,
                                                   params);
    MomentSequence out = desymmetrize(extended);
    out.name = s.name.empty() ? "" : s.name + "[ext" + std::to_string(n) + "]";
    return out;
}

bool PerturbInterval::contains(const Rat& gamma) const {
    if (!lo_unbounded && gamma < lo) return false;
    if (!hi_unbounded && gamma > hi) return false;
    return true;
}

nlohmann::ordered_json PerturbInterval::to_json() const {
    nlohmann::ordered_json j;
    j["m"] = m;
    j["order"] = order;
    j["lo"] = lo_unbounded ? std::string("-inf") : rat_to_string(lo);
    j["hi"] = hi_unbounded ? std::string("+inf") : rat_to_string(hi);
    if (!lo_unbounded) j["lo_outer"] = rat_to_string(lo_outer);
    if (!hi_unbounded) j["hi_outer"] = rat_to_string(hi_outer);
    j["width_bound"] = rat_to_string(certified_width_bound);
    return j;
}

namespace {

/// Hankel order usable for the once-shifted matrix of a Stieltjes sequence.
std::size_t shifted_order(const MomentSequence& h, std::size_t N) {
    std::size_t order = N;
    while (order > 0 && 2 * order - 1 >= h.size()) --order;
    return order;
}

bool perturbed_feasible(const MomentSequence& h, std::size_t m, std::size_t N,
                        std::size_t n_shifted, const Rat& gamma) {
    MomentSequence t = perturb_entry(h, m, gamma);
    if (hankel::psd_prefix(t, N).not_psd()) return false;
    if (h.kind == Kind::Stieltjes && n_shifted > 0) {
        RatMatrix shifted(n_shifted, n_shifted);
        for (std::size_t i = 0; i < n_shifted; ++i)
            for (std::size_t j = 0; j < n_shifted; ++j)
                shifted(i, j) = t[i + j + 1];
        if (hankel::psd_matrix(shifted).not_psd()) return false;
    }
    return true;
}

/// Direction matrix of the perturbation restricted to the tested orders:
/// the feasible set is unbounded on a side iff the (signed) direction is PSD
/// for every tested matrix.
bool direction_psd(std::size_t m, std::size_t N, std::size_t n_shifted,
                   bool stieltjes, int sign) {
    auto block_psd = [&](std::size_t order, std::size_t shift) {
        RatMatrix e(order, order);
        for (std::size_t i = 0; i < order; ++i)
            for (std::size_t j = 0; j < order; ++j)
                if (i + j + shift == m) e(i, j) = Rat(sign);
        return !hankel::psd_matrix(e).not_psd();
    };
    if (!block_psd(N, 0)) return false;
    if (stieltjes && n_shifted > 0 && !block_psd(n_shifted, 1)) return false;
    return true;
}

} // namespace

PerturbInterval perturb_interval(const MomentSequence& h, std::size_t m,
                                 std::size_t N) {
    if (N == 0) throw DomainError("perturb interval needs order >= 1");
    if (m >= 2 * N - 1)
        throw DomainError("perturb index must satisfy m < 2N - 1");
    if (2 * N - 2 >= h.size())
        throw TruncationError("perturb interval at order " + std::to_string(N) +
                              " needs " + std::to_string(2 * N - 1) +
                              " entries");
    const bool stieltjes = h.kind == Kind::Stieltjes;
    const std::size_t n_shifted = stieltjes ? shifted_order(h, N) : 0;
    if (!perturbed_feasible(h, m, N, n_shifted, Rat(0)))
        throw DomainError("input prefix is not PSD at the requested order");

    PerturbInterval interval;
    interval.m = m;
    interval.order = N;
    const Rat tol = rat_pow2(-40);
    interval.certified_width_bound = tol;

    auto bisect = [&](int sign) -> std::pair<Rat, Rat> {
        // Returns (inner feasible, outer infeasible) endpoints on one side.
        Rat feasible(0);
        Rat probe = Rat(sign);
        int guard = 0;
        while (perturbed_feasible(h, m, N, n_shifted, probe)) {
            feasible = probe;
            probe *= 2;
            if (++guard > 512)
                throw Error("perturbation bracket failed to close");
        }
        Rat infeasible = probe;
        while (abs(infeasible - feasible) > tol) {
            Rat mid = (feasible + infeasible) / 2;
            if (perturbed_feasible(h, m, N, n_shifted, mid))
                feasible = mid;
            else
                infeasible = mid;
        }
        return {feasible, infeasible};
    };

    if (direction_psd(m, N, n_shifted, stieltjes, +1)) {
        interval.hi_unbounded = true;
    } else {
        auto [inner, outer] = bisect(+1);
        interval.hi = inner;
        interval.hi_outer = outer;
    }
    if (direction_psd(m, N, n_shifted, stieltjes, -1)) {
        interval.lo_unbounded = true;
    } else {
        auto [inner, outer] = bisect(-1);
        interval.lo = inner;
        interval.lo_outer = outer;
    }
    return interval;
}

std::string classification_to_string(Classification c) {
    switch (c) {
    case Classification::RigidAllButZeroth: return "rigid_all_but_zeroth";
    case Classification::NonrigidUpTo: return "nonrigid_up_to";
    case Classification::IndeterminateFreeVariation:
        return "indeterminate_free_variation";
    case Classification::Inconclusive: return "inconclusive";
    }
    return {};
}

nlohmann::ordered_json RigidityReport::to_json() const {
    nlohmann::ordered_json j;
    j["classification"] = classification_to_string(classification);
    if (nonrigid_up_to) j["nonrigid_up_to"] = *nonrigid_up_to;
    auto win = nlohmann::ordered_json::array();
    win.push_back(index_window.lower);
    if (index_window.upper)
        win.push_back(*index_window.upper);
    else
        win.push_back(nullptr);
    j["index_window"] = std::move(win);
    if (frozen_prefix_bound)
        j["frozen_prefix_bound"] = *frozen_prefix_bound;
    else
        j["frozen_prefix_bound"] = nullptr;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& iv : intervals) arr.push_back(iv.to_json());
    j["intervals"] = std::move(arr);
    j["flags"] = flags;
    return j;
}

RigidityReport rigidity_report(const MomentSequence& h, std::size_t nmax,
                               const ReportParams& params) {
    RigidityReport report;
    const bool stieltjes = h.kind == Kind::Stieltjes;
    report.index_window =
        stieltjes
            ? determinacy::stieltjes_index_estimate(h, nmax, params.K,
                                                    params.diag)
            : determinacy::index_estimate(h, nmax, params.K, params.diag);

    bool finite_support = false;
    for (const auto& v : report.index_window.verdicts)
        if (v.finite_support()) finite_support = true;
    if (finite_support) report.flags.push_back("finite_support");

    const auto& verdicts = report.index_window.verdicts;
    const long lower = report.index_window.lower;
    const auto& upper = report.index_window.upper;

    if (finite_support) {
        // Remark: finite-support sequences are rigid in every entry except
        // the removable mass at the origin.
        report.classification = Classification::RigidAllButZeroth;
    } else if (!verdicts.empty() &&
               verdicts.front().status ==
                   determinacy::Evidence::IndeterminateEvidence) {
        report.classification = Classification::IndeterminateFreeVariation;
    } else if (upper && *upper >= 0) {
        report.classification = Classification::NonrigidUpTo;
        std::size_t u = static_cast<std::size_t>(*upper);
        report.nonrigid_up_to = stieltjes ? u : 2 * u + 1;
    } else if (lower >= 1 && lower == static_cast<long>(nmax)) {
        report.classification = Classification::RigidAllButZeroth;
    } else {
        report.classification = Classification::Inconclusive;
    }
    if (lower >= 1) {
        std::size_t l = static_cast<std::size_t>(lower);
        report.frozen_prefix_bound = stieltjes ? l - 1 : 2 * l - 1;
    }

    if (2 * params.order - 2 < h.size()) {
        std::size_t m_max = std::min(params.m_sweep, 2 * params.order - 2);
        report.intervals.resize(m_max + 1);
        const long total = static_cast<long>(m_max) + 1;
        std::vector<std::string> failures(m_max + 1);
#pragma omp parallel for schedule(dynamic)
        for (long m = 0; m < total; ++m) {
            try {
                report.intervals[static_cast<std::size_t>(m)] =
                    perturb_interval(h, static_cast<std::size_t>(m),
                                     params.order);
            } catch (const Error& e) {
                failures[static_cast<std::size_t>(m)] = e.what();
            }
        }
        for (const auto& f : failures)
            if (!f.empty()) throw DomainError(f);
    }
    return report;
}

} // namespace momenta::rigidity
