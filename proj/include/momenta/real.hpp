#ifndef MOMENTA_REAL_HPP
#define MOMENTA_REAL_HPP

#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "momenta/rational.hpp"

namespace momenta {

// Radix-2 float with runtime precision.  Used only for square-root-bearing
// quantities and convergence displays; minors and verdict decisions stay in
// Rat.  Conversion Rat -> Real is a single correctly rounded mpfr_set_q.
using Real =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

/// Set the process-wide default precision to at least `bits` bits.
void set_real_precision_bits(unsigned bits);
unsigned real_precision_bits();

/// Correctly rounded conversion at an explicit precision, independent of the
/// thread default (safe inside parallel regions).
Real to_real(const Rat& value, unsigned bits);
Real to_real(const Rat& value);

/// Deterministic decimal rendering (scientific, fixed digit count).
std::string real_to_string(const Real& value, unsigned digits10 = 20);

/// Complex value over Real; std::complex is not specified for user types.
struct Complex {
    Real re, im;

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex operator*(const Real& s) const { return {re * s, im * s}; }
    Complex operator-() const { return {-re, -im}; }
    Real abs2() const { return re * re + im * im; }
    Complex conj() const { return {re, -im}; }
    Complex operator/(const Complex& o) const {
        Real d = o.abs2();
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
};

} // namespace momenta

#endif
