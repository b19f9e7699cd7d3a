#include "momenta/hankel.hpp"

#include <algorithm>

#include "momenta/errors.hpp"

namespace momenta::hankel {

namespace {

void need_entries(const MomentSequence& e, std::size_t max_index,
                  const char* what) {
    if (max_index >= e.size())
        throw TruncationError(std::string(what) + " needs entry index " +
                              std::to_string(max_index) + " but length is " +
                              std::to_string(e.size()));
}

RatMatrix bordered_matrix(const MomentSequence& e, std::size_t i, std::size_t j,
                          std::size_t k, std::size_t n) {
    RatMatrix m(n + 1, n + 1);
    m(0, 0) = e[i + j];
    for (std::size_t c = 1; c <= n; ++c) m(0, c) = e[i + k + c - 1];
    for (std::size_t r = 1; r <= n; ++r) {
        m(r, 0) = e[j + k + r - 1];
        for (std::size_t c = 1; c <= n; ++c) m(r, c) = e[2 * k + r + c - 2];
    }
    return m;
}

} // namespace

RatMatrix hankel_matrix(const MomentSequence& e, std::size_t n, std::size_t k) {
    if (n > 0) need_entries(e, 2 * k + 2 * n - 2, "Hankel matrix");
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = e[2 * k + i + j];
    return m;
}

Rat minor(const MomentSequence& e, std::size_t n, std::size_t k) {
    if (n == 0) return Rat(1);
    return det_bareiss(hankel_matrix(e, n, k));
}

Rat bordered_minor(const MomentSequence& e, std::size_t i, std::size_t j,
                   std::size_t k, std::size_t n) {
    if (i >= k || j >= k)
        throw DomainError("bordered minor needs i < k and j < k");
    std::size_t max_index = std::max(i + j, 2 * k + 2 * n - 2);
    if (n > 0) {
        max_index = std::max(max_index, i + k + n - 1);
        max_index = std::max(max_index, j + k + n - 1);
    }
    need_entries(e, max_index, "bordered minor");
    if (n == 0) return e[i + j];
    return det_bareiss(bordered_matrix(e, i, j, k, n));
}

namespace {

FMatrix f_matrix_impl(const MomentSequence& e, std::size_t k, std::size_t n,
                      bool parallel) {
    if (k == 0) throw DomainError("F matrix needs k >= 1");
    // Validate truncation once up front so worker threads cannot throw.
    bordered_minor(e, k - 1, k - 1, k, n);

    FMatrix out;
    out.k = k;
    out.n = n;
    out.entries = RatMatrix(k, k);
    // Upper triangle only; f_{i,j} = f_{j,i} by transposition invariance.
    const long total = static_cast<long>(k * (k + 1) / 2);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long idx = 0; idx < total; ++idx) {
        // idx -> (i, j) with i <= j < k
        std::size_t i = 0, rem = static_cast<std::size_t>(idx);
        while (rem >= k - i) {
            rem -= k - i;
            ++i;
        }
        std::size_t j = i + rem;
        Rat value = bordered_minor(e, i, j, k, n);
        out.entries(i, j) = value;
        if (i != j) out.entries(j, i) = value;
    }
    out.det = det_bareiss(out.entries);
    return out;
}

} // namespace

FMatrix f_matrix(const MomentSequence& e, std::size_t k, std::size_t n) {
    return f_matrix_impl(e, k, n, true);
}

namespace serial {
FMatrix f_matrix(const MomentSequence& e, std::size_t k, std::size_t n) {
    return f_matrix_impl(e, k, n, false);
}
} // namespace serial

bool sylvester_identity_check(const MomentSequence& e, std::size_t n,
                              std::size_t m) {
    if (m + 1 > n) throw DomainError("sylvester check needs m + 1 <= n");
    const std::size_t inner = n - m - 1;
    Rat pivot = minor(e, inner, m + 1);
    if (pivot == 0)
        throw SingularPivotError("pivot minor vanishes at (n=" +
                                 std::to_string(inner) + ", k=" +
                                 std::to_string(m + 1) + ")");
    Rat lhs = minor(e, n, 0) * rat_pow(pivot, static_cast<unsigned>(m));
    Rat rhs = f_matrix(e, m + 1, inner).det;
    return lhs == rhs;
}

HadamardCheck hadamard_check(const MomentSequence& e, std::size_t m,
                             std::size_t n) {
    if (m + 1 > n) throw DomainError("hadamard check needs m + 1 <= n");
    const std::size_t inner = n - m - 1;
    Rat pivot = minor(e, inner, m + 1);
    if (pivot <= 0)
        throw SingularPivotError("nonpositive pivot minor in Hadamard check");
    HadamardCheck result{true, true};
    for (std::size_t i = 0; i <= m; ++i) {
        Rat lhs = bordered_minor(e, i, i, m + 1, inner);
        Rat rhs = e[2 * i] * pivot;
        if (lhs > rhs) result.holds = false;
        if (lhs >= rhs) result.strict = false;
    }
    return result;
}

std::string PsdVerdict::str() const {
    switch (status) {
    case Status::PositiveDefinite:
        return "positive_definite";
    case Status::PositiveSemidefiniteSingular:
        return "positive_semidefinite_singular(rank " + std::to_string(rank) +
               ")";
    case Status::NotPsd:
        return "not_psd(witness_order " + std::to_string(witness_order) + ")";
    }
    return {};
}

PsdVerdict psd_matrix(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("PSD test needs a square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    PsdVerdict verdict;
    verdict.order = n;
    bool singular = false;
    for (std::size_t r = 0; r < n; ++r) {
        const Rat& pivot = a(r, r);
        if (pivot < 0) {
            verdict.status = PsdVerdict::Status::NotPsd;
            verdict.witness_order = r + 1;
            return verdict;
        }
        if (pivot == 0) {
            // PSD forces the whole residual row/column to vanish.
            for (std::size_t i = r + 1; i < n; ++i) {
                if (a(i, r) != 0) {
                    verdict.status = PsdVerdict::Status::NotPsd;
                    verdict.witness_order = i + 1;
                    return verdict;
                }
            }
            singular = true;
            continue;
        }
        ++verdict.rank;
        for (std::size_t i = r + 1; i < n; ++i) {
            if (a(i, r) == 0) continue;
            Rat factor = a(i, r) / pivot;
            for (std::size_t j = r; j < n; ++j) a(i, j) -= factor * a(r, j);
        }
    }
    verdict.status = singular ? PsdVerdict::Status::PositiveSemidefiniteSingular
                              : PsdVerdict::Status::PositiveDefinite;
    return verdict;
}

PsdVerdict psd_prefix(const MomentSequence& e, std::size_t n) {
    if (n == 0) throw DomainError("PSD prefix needs order >= 1");
    need_entries(e, 2 * n - 2, "PSD prefix");
    return psd_matrix(hankel_matrix(e, n, 0));
}

std::pair<PsdVerdict, PsdVerdict> stieltjes_prefix_check(const MomentSequence& s,
                                                         std::size_t n) {
    if (n == 0) throw DomainError("Stieltjes prefix check needs order >= 1");
    need_entries(s, 2 * n - 1, "Stieltjes prefix check");
    RatMatrix shifted(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) shifted(i, j) = s[i + j + 1];
    return {psd_prefix(s, n), psd_matrix(shifted)};
}

Rat GammaPolynomial::eval(const Rat& gamma) const {
    Rat value(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        value = value * gamma + *it;
    return value;
}

GammaPolynomial gamma_polynomial(const MomentSequence& h, std::size_t m,
                                 std::size_t n) {
    if (m + 1 > n) throw DomainError("gamma polynomial needs m + 1 <= n");
    const std::size_t inner = n - m - 1;
    Rat pivot = minor(h, inner, m + 1);
    if (pivot <= 0)
        throw SingularPivotError(
            "gamma polynomial needs a positive pivot minor D_" +
            std::to_string(inner) + "^(" + std::to_string(m + 1) + ")");

    FMatrix f = f_matrix(h, m + 1, inner);
    RatMatrix base = f.entries;
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = 0; j <= m; ++j) base(i, j) /= pivot;

    // det(base + gamma * antidiagonal) has degree m+1; interpolate at the
    // integer nodes 0..m+1 (Newton divided differences, exact).
    const std::size_t deg = m + 1;
    std::vector<Rat> nodes(deg + 1), values(deg + 1);
    for (std::size_t s = 0; s <= deg; ++s) {
        nodes[s] = Rat(static_cast<long>(s));
        RatMatrix ms = base;
        for (std::size_t i = 0; i <= m; ++i) ms(i, m - i) += nodes[s];
        values[s] = det_bareiss(ms);
    }
    std::vector<Rat> divided = values;
    for (std::size_t level = 1; level <= deg; ++level)
        for (std::size_t s = deg; s >= level; --s)
            divided[s] = (divided[s] - divided[s - 1]) /
                         (nodes[s] - nodes[s - level]);
    // Expand the Newton form into monomial coefficients.
    std::vector<Rat> coeffs(deg + 1, Rat(0));
    for (std::size_t s = deg + 1; s-- > 0;) {
        for (std::size_t d = deg; d > 0; --d)
            coeffs[d] = coeffs[d - 1] - nodes[s] * coeffs[d];
        coeffs[0] = divided[s] - nodes[s] * coeffs[0];
    }

    GammaPolynomial poly{m, n, std::move(coeffs)};
    Rat expected_leading = (m * (m + 1) / 2) % 2 == 0 ? Rat(1) : Rat(-1);
    if (poly.coeffs.back() != expected_leading)
        throw Error("gamma polynomial leading coefficient mismatch");
    return poly;
}

std::optional<Rat> MinorTable::lookup(std::size_t n, std::size_t k) const {
    std::shared_lock lock(mutex_);
    auto it = cache_.find({n, k});
    if (it == cache_.end()) return std::nullopt;
    return it->second;
}

void MinorTable::store(std::size_t n, std::size_t k, const Rat& value) const {
    std::unique_lock lock(mutex_);
    cache_.emplace(std::make_pair(n, k), value);
}

Rat MinorTable::minor(std::size_t n, std::size_t k) const {
    if (auto hit = lookup(n, k)) return *hit;
    Rat value = hankel::minor(source_, n, k);
    store(n, k, value);
    return value;
}

void MinorTable::warm(std::size_t nmax, std::size_t kmax) {
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t k = 0; k <= kmax; ++k)
        for (std::size_t n = 1; n <= nmax; ++n)
            if (2 * k + 2 * n - 2 < source_.size()) jobs.emplace_back(n, k);
    const long total = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < total; ++i)
        (void)minor(jobs[static_cast<std::size_t>(i)].first,
                    jobs[static_cast<std::size_t>(i)].second);
}

void MinorTable::warm_serial(std::size_t nmax, std::size_t kmax) {
    for (std::size_t k = 0; k <= kmax; ++k)
        for (std::size_t n = 1; n <= nmax; ++n)
            if (2 * k + 2 * n - 2 < source_.size()) (void)minor(n, k);
}

std::size_t MinorTable::cached() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

} // namespace momenta::hankel
