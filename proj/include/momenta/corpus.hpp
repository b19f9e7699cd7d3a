#ifndef MOMENTA_CORPUS_HPP
#define MOMENTA_CORPUS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "momenta/moment_sequence.hpp"

namespace momenta::corpus {

/// Reference sequence with a classically known analytic status.  The status
/// is literature documentation; tests only assert it where the library's
/// finite-truncation procedures confirm it at desk scale.
struct Entry {
    std::string name;
    Kind kind;
    std::string analytic_status; // determinate | indeterminate | finite_support
    std::string note;
};

const std::vector<Entry>& list();

/// Exact closed-form generators:
///   gaussian          c_{2k} = (2k-1)!!, odd entries 0        (Hamburger)
///   factorial         s_k = k!                                 (Stieltjes)
///   catalan           Catalan numbers                          (Stieltjes)
///   heavy_tail        s_k = 4 (4k+3)!                          (Stieltjes)
///   two_atom          2, 0, 2, 0, ...  (atoms at +-1)          (Hamburger)
///   dirac0            1, 0, 0, ...                             (Hamburger)
///   boundary_prepend  heavy_tail symmetrized, prepended at the
///                     K = 12 truncated vertex                  (Hamburger)
MomentSequence get(std::string_view name, std::size_t length);

} // namespace momenta::corpus

#endif
