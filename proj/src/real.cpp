#include "momenta/real.hpp"

#include <atomic>
#include <cmath>

namespace momenta {

namespace {
std::atomic<unsigned> g_bits{256};

unsigned bits_to_digits10(unsigned bits) {
    // Round up so the mpfr mantissa ends up with >= `bits` bits.
    return static_cast<unsigned>(bits * 0.30103) + 2;
}
} // namespace

void set_real_precision_bits(unsigned bits) {
    if (bits == 0) bits = 2;
    g_bits.store(bits);
    Real::default_precision(bits_to_digits10(bits));
}

unsigned real_precision_bits() { return g_bits.load(); }

Real to_real(const Rat& value, unsigned bits) {
    Real out(0, bits_to_digits10(bits));
    mpfr_set_q(out.backend().data(), value.backend().data(), MPFR_RNDN);
    return out;
}

Real to_real(const Rat& value) { return to_real(value, real_precision_bits()); }

std::string real_to_string(const Real& value, unsigned digits10) {
    return value.str(digits10, std::ios_base::scientific);
}

} // namespace momenta
