#include "momenta/determinacy.hpp"

#include <algorithm>

#include "momenta/errors.hpp"
#include "momenta/hankel.hpp"
#include "momenta/orthopoly.hpp"

namespace momenta::determinacy {

std::string series_verdict_to_string(SeriesVerdict v) {
    switch (v) {
    case SeriesVerdict::Converging: return "converging";
    case SeriesVerdict::Diverging: return "diverging";
    case SeriesVerdict::Unknown: return "unknown";
    }
    return {};
}

std::string evidence_to_string(Evidence e) {
    switch (e) {
    case Evidence::IndeterminateEvidence: return "indeterminate_evidence";
    case Evidence::DeterminateEvidence: return "determinate_evidence";
    case Evidence::Unknown: return "unknown";
    }
    return {};
}

SeriesDiag series_diag(const std::vector<Rat>& terms, const DiagParams& params) {
    if (params.window < 2) throw DomainError("diagnostic window must be >= 2");
    for (const Rat& t : terms)
        if (t < 0) throw DomainError("series terms must be nonnegative");

    SeriesDiag diag;
    diag.window = params.window;
    diag.ratio_threshold = params.ratio_threshold;
    diag.last_tail_ratio = Rat(0);

    // Zero terms contribute nothing to the sum; ratios are taken over the
    // nonzero subsequence (symmetric sequences interleave exact zeros).
    std::vector<Rat> nz;
    Rat sum(0);
    diag.partial_sums.reserve(terms.size());
    for (const Rat& t : terms) {
        sum += t;
        diag.partial_sums.push_back(sum);
        if (t != 0) nz.push_back(t);
    }

    std::vector<Rat> ratios;
    for (std::size_t i = 0; i + 1 < nz.size(); ++i)
        ratios.push_back(nz[i + 1] / nz[i]);
    for (const Rat& r : ratios) diag.tail_ratios.push_back(to_real(r));
    if (!ratios.empty()) diag.last_tail_ratio = ratios.back();

    if (ratios.size() < params.window) {
        diag.verdict = SeriesVerdict::Unknown;
        diag.flags.push_back("insufficient_terms");
        return diag;
    }

    const std::size_t w0 = ratios.size() - params.window;
    const Rat one(1);
    bool all_near_one = true, all_below_one = true, all_summable_pattern = true,
         all_below_threshold = true;
    Rat window_max(0);
    for (std::size_t i = w0; i < ratios.size(); ++i) {
        const Rat& r = ratios[i];
        if (r < one - params.tol) all_near_one = false;
        if (r >= one) all_below_one = false;
        if (r >= params.ratio_threshold) all_below_threshold = false;
        if (r > window_max) window_max = r;
        // Exponent estimate: terms ~ i^-c give r_i ~ 1 - c/i.
        Rat c_hat = (one - r) * Rat(static_cast<long>(i + 1));
        if (c_hat > params.pattern_exponent_max) all_summable_pattern = false;
    }

    if (all_near_one) {
        diag.verdict = SeriesVerdict::Diverging;
        diag.flags.push_back("nondecreasing_terms");
        return diag;
    }
    if (sum > params.divergence_factor * nz.front()) {
        diag.verdict = SeriesVerdict::Diverging;
        diag.flags.push_back("partial_sum_bound");
        return diag;
    }
    if (all_below_one && all_summable_pattern) {
        diag.verdict = SeriesVerdict::Diverging;
        diag.flags.push_back("non_summable_pattern");
        return diag;
    }
    if (all_below_threshold) {
        Rat bound = nz.back() * window_max / (one - window_max);
        if (bound <= params.tol || bound <= params.tail_rel_tol * sum) {
            diag.verdict = SeriesVerdict::Converging;
            return diag;
        }
        diag.flags.push_back("tail_bound_too_large");
    }
    diag.verdict = SeriesVerdict::Unknown;
    return diag;
}

bool Verdict::finite_support() const {
    return std::find(flags.begin(), flags.end(), "finite_support") != flags.end();
}

nlohmann::ordered_json Verdict::to_json() const {
    nlohmann::ordered_json j;
    j["status"] = evidence_to_string(status);
    j["K"] = K;
    j["p2_tail_ratio"] = rat_to_string(p2.last_tail_ratio);
    j["q2_tail_ratio"] = rat_to_string(q2.last_tail_ratio);
    j["flags"] = flags;
    return j;
}

Verdict indeterminacy_diag(const MomentSequence& h, std::size_t K,
                           const DiagParams& params) {
    Verdict verdict;
    verdict.K = K;
    orthopoly::ZeroData zd;
    try {
        zd = orthopoly::zero_data(h, K);
    } catch (const DegenerateError& e) {
        // Vanishing minor: finite support, hence determinate and rigid.
        verdict.status = Evidence::DeterminateEvidence;
        verdict.flags.push_back("finite_support");
        verdict.flags.push_back("rank:" + std::to_string(e.rank()));
        return verdict;
    }
    verdict.p2 = series_diag(zd.P2, params);
    verdict.q2 = series_diag(zd.Q2, params);
    const bool p_conv = verdict.p2.verdict == SeriesVerdict::Converging;
    const bool q_conv = verdict.q2.verdict == SeriesVerdict::Converging;
    const bool p_div = verdict.p2.verdict == SeriesVerdict::Diverging;
    const bool q_div = verdict.q2.verdict == SeriesVerdict::Diverging;
    if (p_conv && q_conv)
        verdict.status = Evidence::IndeterminateEvidence;
    else if (p_div || q_div)
        verdict.status = Evidence::DeterminateEvidence;
    else
        verdict.status = Evidence::Unknown;
    return verdict;
}

RatioData ratio_criterion(const MomentSequence& h, std::size_t N,
                          std::size_t kmax) {
    RatioData data;
    hankel::MinorTable table(h);
    table.warm(N, kmax + 1);
    auto push_ratios = [&](std::size_t k, std::vector<Rat>& out) {
        for (std::size_t n = k + 1; n <= N; ++n) {
            if (2 * n - 2 >= h.size()) break;
            Rat denom = table.minor(n - k - 1, k + 1);
            if (denom <= 0)
                throw DegenerateError("ratio denominator D_" +
                                          std::to_string(n - k - 1) + "^(" +
                                          std::to_string(k + 1) +
                                          ") is not positive",
                                      n - k - 1);
            out.push_back(table.minor(n - k, k) / denom);
        }
    };
    push_ratios(0, data.r0);
    for (std::size_t k = 1; k <= kmax; ++k) push_ratios(k, data.rk[k]);
    return data;
}

namespace {

IndexWindow assemble_window(std::vector<Verdict> verdicts) {
    IndexWindow window;
    window.verdicts = std::move(verdicts);
    bool det_unbroken = true;
    for (std::size_t n = 0; n < window.verdicts.size(); ++n) {
        const Verdict& v = window.verdicts[n];
        if (v.status == Evidence::IndeterminateEvidence) {
            window.upper = static_cast<long>(n) - 1;
            break;
        }
        if (det_unbroken && v.status == Evidence::DeterminateEvidence)
            window.lower = static_cast<long>(n);
        else
            det_unbroken = false;
    }
    return window;
}

template <typename Trimmer>
IndexWindow sweep(std::size_t nmax, std::size_t K, const DiagParams& params,
                  Trimmer&& trimmed, bool parallel) {
    std::vector<Verdict> verdicts(nmax + 1);
    std::vector<std::string> failures(nmax + 1);
    const long total = static_cast<long>(nmax) + 1;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long n = 0; n < total; ++n) {
        try {
            verdicts[static_cast<std::size_t>(n)] =
                indeterminacy_diag(trimmed(static_cast<std::size_t>(n)), K,
                                   params);
        } catch (const Error& e) {
            failures[static_cast<std::size_t>(n)] = e.what();
        }
    }
    for (const auto& f : failures)
        if (!f.empty()) throw TruncationError(f);
    return assemble_window(std::move(verdicts));
}

void check_index_lengths(const MomentSequence& h, std::size_t nmax,
                         std::size_t K) {
    if (h.size() < 2 * nmax + 2 * K + 1)
        throw TruncationError("index estimate needs length >= " +
                              std::to_string(2 * nmax + 2 * K + 1) +
                              ", have " + std::to_string(h.size()));
}

IndexWindow index_estimate_impl(const MomentSequence& h, std::size_t nmax,
                                std::size_t K, const DiagParams& params,
                                bool parallel) {
    check_index_lengths(h, nmax, K);
    return sweep(nmax, K, params,
                 [&](std::size_t n) { return trim(h, 2 * n); }, parallel);
}

IndexWindow stieltjes_index_estimate_impl(const MomentSequence& s,
                                          std::size_t nmax, std::size_t K,
                                          const DiagParams& params,
                                          bool parallel) {
    if (s.kind != Kind::Stieltjes)
        throw KindError("stieltjes index estimate needs a Stieltjes sequence");
    if (s.size() < nmax + K + 1)
        throw TruncationError("stieltjes index estimate needs length >= " +
                              std::to_string(nmax + K + 1) + ", have " +
                              std::to_string(s.size()));
    return sweep(nmax, K, params,
                 [&](std::size_t n) { return symmetrize(trim(s, n)); },
                 parallel);
}

} // namespace

nlohmann::ordered_json IndexWindow::to_json() const {
    nlohmann::ordered_json j;
    j["lower"] = lower;
    if (upper)
        j["upper"] = *upper;
    else
        j["upper"] = nullptr;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& v : verdicts) arr.push_back(v.to_json());
    j["verdicts"] = std::move(arr);
    return j;
}

IndexWindow index_estimate(const MomentSequence& h, std::size_t nmax,
                           std::size_t K, const DiagParams& params) {
    return index_estimate_impl(h, nmax, K, params, true);
}

IndexWindow stieltjes_index_estimate(const MomentSequence& s, std::size_t nmax,
                                     std::size_t K, const DiagParams& params) {
    return stieltjes_index_estimate_impl(s, nmax, K, params, true);
}

namespace serial {
IndexWindow index_estimate(const MomentSequence& h, std::size_t nmax,
                           std::size_t K, const DiagParams& params) {
    return index_estimate_impl(h, nmax, K, params, false);
}
IndexWindow stieltjes_index_estimate(const MomentSequence& s, std::size_t nmax,
                                     std::size_t K, const DiagParams& params) {
    return stieltjes_index_estimate_impl(s, nmax, K, params, false);
}
} // namespace serial

bool index_convexity_check(const MomentSequence& h, const MomentSequence& t,
                           const Rat& eta, std::size_t nmax, std::size_t K,
                           const DiagParams& params) {
    MomentSequence combined = convex_combine(h, t, eta);
    IndexWindow wh = index_estimate(h, nmax, K, params);
    IndexWindow wt = index_estimate(t, nmax, K, params);
    IndexWindow wc = index_estimate(combined, nmax, K, params);
    for (std::size_t n = 0; n <= nmax; ++n) {
        bool either = wh.verdicts[n].status == Evidence::IndeterminateEvidence ||
                      wt.verdicts[n].status == Evidence::IndeterminateEvidence;
        if (either &&
            wc.verdicts[n].status != Evidence::IndeterminateEvidence)
            return false;
    }
    auto min_upper = [](const IndexWindow& a, const IndexWindow& b) {
        if (!a.upper) return b.upper;
        if (!b.upper) return a.upper;
        return std::optional<long>(std::min(*a.upper, *b.upper));
    };
    std::optional<long> cap = min_upper(wh, wt);
    if (cap && (!wc.upper || *wc.upper > *cap)) return false;
    return true;
}

} // namespace momenta::determinacy
