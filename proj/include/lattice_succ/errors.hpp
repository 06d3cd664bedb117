#pragma once

#include <stdexcept>
#include <string>

namespace lattice_succ {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Generators violate 1 < p1 < p2.
class OrderViolation : public Error {
public:
    using Error::Error;
};

/// p1 and p2 are multiplicatively dependent, so log(p1)/log(p2) is rational.
class RationalLogRatio : public Error {
public:
    using Error::Error;
};

/// An exact power comparison would need integers larger than the bit budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class IndexBeyondTable : public Error {
public:
    using Error::Error;
};

/// The origin (the element 1) has no predecessor.
class NoPredecessor : public Error {
public:
    using Error::Error;
};

/// A mathematically impossible state was observed (e.g. an exact tie between
/// distinct affine forms). Always indicates a bug.
class InternalConsistency : public Error {
public:
    using Error::Error;
};

} // namespace lattice_succ
