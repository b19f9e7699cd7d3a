#ifndef MOMENTA_ERRORS_HPP
#define MOMENTA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace momenta {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the operation's domain (bad index, bad parameter value).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Operation applied to a sequence of the wrong kind.
class KindError : public Error {
public:
    using Error::Error;
};

/// Mismatched lengths or kinds between two sequences.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Not enough moments available for the requested order.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// Sequence has a nonzero odd entry where a symmetric one is required.
class NotSymmetricError : public Error {
public:
    using Error::Error;
};

/// A pivot minor required to be nonzero (or positive) vanished.
class SingularPivotError : public Error {
public:
    using Error::Error;
};

/// A Hankel minor vanished or went nonpositive: the positive-definite
/// prefix ends at the reported rank (finite-support signature).
class DegenerateError : public Error {
public:
    DegenerateError(const std::string& msg, std::size_t rank)
        : Error(msg), rank_(rank) {}
    std::size_t rank() const noexcept { return rank_; }

private:
    std::size_t rank_;
};

/// Prepend target lies outside the feasible parabolic region.
class NotAMomentPrefixError : public Error {
public:
    using Error::Error;
};

/// An iterated construction failed; carries the failing step index.
class ConstructionError : public Error {
public:
    ConstructionError(const std::string& msg, std::size_t step)
        : Error(msg), step_(step) {}
    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// Unknown corpus or lookup name.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Floating computation lost all significance (zero denominator etc.).
class PrecisionError : public Error {
public:
    using Error::Error;
};

} // namespace momenta

#endif
