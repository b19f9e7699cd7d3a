#ifndef MOMENTA_RATIONAL_HPP
#define MOMENTA_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "momenta/errors.hpp"

namespace momenta {

// Exact arithmetic substrate.  All moment data and all Hankel minors live in
// Rat; nothing in the minor pipeline ever rounds.
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

/// Parse "p", "-p" or "p/q" exactly.  The result is canonical
/// (gcd(p,q) = 1, q > 0); a zero denominator raises DomainError.
Rat rat_from_string(std::string_view text);

/// Canonical decimal string, "p" or "p/q".
std::string rat_to_string(const Rat& value);

/// Exact base^exp for a nonnegative integer exponent.
Rat rat_pow(const Rat& base, unsigned exp);

/// 2^-bits as an exact rational (tolerances are specified this way).
Rat rat_pow2(int exp);

} // namespace momenta

#endif
