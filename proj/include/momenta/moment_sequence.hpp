#ifndef MOMENTA_MOMENT_SEQUENCE_HPP
#define MOMENTA_MOMENT_SEQUENCE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "momenta/rational.hpp"

namespace momenta {

enum class Kind { Hamburger, Stieltjes };

std::string kind_to_string(Kind kind);
Kind kind_from_string(std::string_view text);

/// Finite prefix of a moment sequence.  The kind is a declaration, not a
/// verified property; verification is hankel::psd_prefix /
/// hankel::stieltjes_prefix_check.  Immutable by convention: every operation
/// returns a new value.
struct MomentSequence {
    std::vector<Rat> entries;
    Kind kind = Kind::Hamburger;
    std::string name;

    MomentSequence() = default;
    MomentSequence(std::vector<Rat> e, Kind k, std::string n = {});

    std::size_t size() const noexcept { return entries.size(); }
    const Rat& operator[](std::size_t i) const { return entries[i]; }

    /// {"name": str?, "kind": "hamburger"|"stieltjes", "moments": ["p/q",...]}
    static MomentSequence from_json(const nlohmann::ordered_json& j);
    nlohmann::ordered_json to_json() const;

    static MomentSequence load(const std::string& path);
};

/// Drop the first j entries, keeping the kind.
MomentSequence trim(const MomentSequence& h, std::size_t j);

/// (s0, s1, ...) -> (s0, 0, s1, 0, ..., s_{L-1}), Stieltjes -> Hamburger.
MomentSequence symmetrize(const MomentSequence& s);

/// Inverse of symmetrize; every odd entry must be exactly zero.
MomentSequence desymmetrize(const MomentSequence& h);

/// Entrywise eta*h + (1-eta)*t for 0 < eta < 1; shapes and kinds must match.
MomentSequence convex_combine(const MomentSequence& h, const MomentSequence& t,
                              const Rat& eta);

/// Copy with entry m replaced by entries[m] + gamma.
MomentSequence perturb_entry(const MomentSequence& h, std::size_t m,
                             const Rat& gamma);

} // namespace momenta

#endif
