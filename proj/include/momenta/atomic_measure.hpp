#ifndef MOMENTA_ATOMIC_MEASURE_HPP
#define MOMENTA_ATOMIC_MEASURE_HPP

#include <vector>

#include "momenta/moment_sequence.hpp"
#include "momenta/rational.hpp"

namespace momenta {

/// Finite atomic measure: the one class of measures this library represents
/// exactly.  Serves as the exact oracle for degenerate (finite-support)
/// moment sequences.
struct AtomicMeasure {
    struct Atom {
        Rat position;
        Rat weight; // > 0
    };
    std::vector<Atom> atoms;

    AtomicMeasure() = default;
    explicit AtomicMeasure(std::vector<Atom> a);
};

/// entry i = sum_j weight_j * position_j^i.  Kind is Stieltjes when all
/// positions are >= 0, Hamburger otherwise.
MomentSequence moments_from_atoms(const AtomicMeasure& mu, std::size_t length);

} // namespace momenta

#endif
