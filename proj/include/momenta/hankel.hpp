#ifndef MOMENTA_HANKEL_HPP
#define MOMENTA_HANKEL_HPP

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "momenta/matrix.hpp"
#include "momenta/moment_sequence.hpp"

namespace momenta::hankel {

/// n x n Hankel matrix with top-left entry e_{2k}: (i,j) -> e_{2k+i+j}.
RatMatrix hankel_matrix(const MomentSequence& e, std::size_t n, std::size_t k);

/// Shifted Hankel minor D_n^(k).  n = 0 returns 1 by convention.
Rat minor(const MomentSequence& e, std::size_t n, std::size_t k);

/// Bordered minor f_{i,j}^(k)[e; n]: the (n+1) x (n+1) determinant whose
/// Hankel block is D_n^(k) and whose border row/column carry e_{i+k+*} and
/// e_{j+k+*}, corner e_{i+j}.  Requires 0 <= i < k and 0 <= j < k; n = 0
/// degenerates to e_{i+j}.  Symmetric in (i, j).
Rat bordered_minor(const MomentSequence& e, std::size_t i, std::size_t j,
                   std::size_t k, std::size_t n);

struct FMatrix {
    RatMatrix entries; // k x k, symmetric
    Rat det;
    std::size_t k = 0, n = 0;
};

/// The k x k matrix F_n^(k)[e] of bordered minors and its determinant.
/// Entries are independent determinants; this kernel fills them with OpenMP.
FMatrix f_matrix(const MomentSequence& e, std::size_t k, std::size_t n);

namespace serial {
/// Reference implementation without the parallel fill; must agree exactly.
FMatrix f_matrix(const MomentSequence& e, std::size_t k, std::size_t n);
} // namespace serial

/// Checks D_n^(0) * (D_{n-m-1}^(m+1))^m == det F_{n-m-1}^(m+1) exactly.
/// Throws SingularPivotError when the pivot minor vanishes.
bool sylvester_identity_check(const MomentSequence& e, std::size_t n,
                              std::size_t m);

struct HadamardCheck {
    bool holds = false;  // f_{i,i} <= e_{2i} * pivot for all i <= m
    bool strict = false; // strict inequality at every i
    explicit operator bool() const { return holds; }
};

/// Hadamard inequality f_{i,i}^(m+1)[e; n-m-1] <= e_{2i} * D_{n-m-1}^(m+1).
HadamardCheck hadamard_check(const MomentSequence& e, std::size_t m,
                             std::size_t n);

struct PsdVerdict {
    enum class Status { PositiveDefinite, PositiveSemidefiniteSingular, NotPsd };
    Status status = Status::PositiveDefinite;
    std::size_t rank = 0;          // positive pivots seen
    std::size_t witness_order = 0; // order of the first non-PSD leading block
    std::size_t order = 0;         // tested order

    bool not_psd() const { return status == Status::NotPsd; }
    bool positive_definite() const { return status == Status::PositiveDefinite; }
    std::string str() const;
};

/// Exact PSD test of a symmetric rational matrix by symmetric elimination:
/// positive pivots eliminate, a zero pivot demands a zero residual row.
PsdVerdict psd_matrix(const RatMatrix& m);

/// PSD test of the order-n Hankel prefix of e.
PsdVerdict psd_prefix(const MomentSequence& e, std::size_t n);

/// Verdicts for the plain and the once-shifted Hankel prefixes of a
/// Stieltjes sequence; feasible at order n iff neither is NotPsd.
std::pair<PsdVerdict, PsdVerdict> stieltjes_prefix_check(const MomentSequence& s,
                                                         std::size_t n);

struct GammaPolynomial {
    std::size_t m = 0; // perturbed index
    std::size_t n = 0; // truncation order
    std::vector<Rat> coeffs; // degree m+1, coeffs[d] multiplies gamma^d

    Rat eval(const Rat& gamma) const;
    std::size_t degree() const { return coeffs.size() - 1; }
};

/// p_n(gamma) = det(f_{i,j}^(m+1)[h; n-m-1]/D + gamma*delta_{i+j,m}),
/// exact coefficients by interpolation at m+2 integer nodes.  The leading
/// coefficient equals (-1)^{m(m+1)/2}.
GammaPolynomial gamma_polynomial(const MomentSequence& h, std::size_t m,
                                 std::size_t n);

/// Cache of shifted minors for one sequence.  Concurrent read/insert safe;
/// a racing recomputation returns the identical exact value.
class MinorTable {
public:
    explicit MinorTable(MomentSequence source) : source_(std::move(source)) {}

    const MomentSequence& source() const { return source_; }
    Rat minor(std::size_t n, std::size_t k) const;

    /// Batch-fill all (n, k) with n <= nmax, k <= kmax that the sequence
    /// length allows.  OpenMP-parallel; serial::warm is the reference.
    void warm(std::size_t nmax, std::size_t kmax);
    void warm_serial(std::size_t nmax, std::size_t kmax);

    std::size_t cached() const;

private:
    std::optional<Rat> lookup(std::size_t n, std::size_t k) const;
    void store(std::size_t n, std::size_t k, const Rat& value) const;

    MomentSequence source_;
    mutable std::map<std::pair<std::size_t, std::size_t>, Rat> cache_;
    mutable std::shared_mutex mutex_;
};

} // namespace momenta::hankel

#endif
