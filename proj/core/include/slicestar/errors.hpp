#pragma once

#include <stdexcept>
#include <string>

namespace slicestar {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Inversion of a quaternion whose modulus is below the configured epsilon.
class ZeroDivisor : public Error {
public:
    using Error::Error;
};

// |I - J| below delta_min: the 2x2 stem inverse would amplify noise by more
// than 2 / delta_min.
class IllConditionedPair : public Error {
public:
    using Error::Error;
};

// A unit passed to extract_stem whose lift leaves the admissibility domain.
class UnitsNotAdmissible : public Error {
public:
    using Error::Error;
};

// Fewer than two admissible units for a path: the stem-preserving hypothesis
// fails at the working resolution.
class InsufficientUnits : public Error {
public:
    using Error::Error;
};

// No path from the real locus to the requested point was found by the
// configured pathfinders.
class NoPathFound : public Error {
public:
    using Error::Error;
};

// Real-locus sampling found no real point although non-real probes exist.
class EmptyRealTrace : public Error {
public:
    using Error::Error;
};

class UnknownDomain : public Error {
public:
    using Error::Error;
};

// Star-product construction without a passing check report or an explicit
// caller override for the domain-pair hypotheses.
class HypothesisNotAttested : public Error {
public:
    using Error::Error;
};

// Raised by the optional well-definedness check when two admissible unit
// pairs disagree beyond tolerance.
class StemPairMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace slicestar
