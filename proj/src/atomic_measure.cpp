#include "momenta/atomic_measure.hpp"

#include <algorithm>

#include "momenta/errors.hpp"

namespace momenta {

AtomicMeasure::AtomicMeasure(std::vector<Atom> a) : atoms(std::move(a)) {
    for (const auto& atom : atoms)
        if (atom.weight <= 0)
            throw DomainError("atom weights must be strictly positive");
    for (std::size_t i = 0; i < atoms.size(); ++i)
        for (std::size_t j = i + 1; j < atoms.size(); ++j)
            if (atoms[i].position == atoms[j].position)
                throw DomainError("atom positions must be pairwise distinct");
}

MomentSequence moments_from_atoms(const AtomicMeasure& mu, std::size_t length) {
    if (mu.atoms.empty()) throw DomainError("empty atom list");
    if (length < 1) throw DomainError("length must be at least 1");
    bool nonnegative = std::all_of(mu.atoms.begin(), mu.atoms.end(),
                                   [](const auto& a) { return a.position >= 0; });
    std::vector<Rat> entries(length, Rat(0));
    for (const auto& atom : mu.atoms) {
        Rat power(1);
        for (std::size_t i = 0; i < length; ++i) {
            entries[i] += atom.weight * power;
            power *= atom.position;
        }
    }
    return MomentSequence(std::move(entries),
                          nonnegative ? Kind::Stieltjes : Kind::Hamburger);
}

} // namespace momenta
