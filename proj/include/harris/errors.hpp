#pragma once

#include <stdexcept>
#include <string>

namespace harris {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape or index mismatch between a kernel, weight, measure or test function.
struct DimensionError : Error {
    using Error::Error;
};

// A scalar argument violates its stated range (gamma outside (0,1), tol <= 0, ...).
struct ParamError : Error {
    using Error::Error;
};

// R fails the strict level-set inequality R > 2K/(1-gamma), equivalently
// gamma + 2K/R >= 1.
struct RTooSmall : ParamError {
    using ParamError::ParamError;
};

// The componentwise row minimum over the candidate small set vanishes.
struct NoMinorization : Error {
    using Error::Error;
};

// The level set {V <= R} contains no state.
struct EmptyLevelSet : Error {
    using Error::Error;
};

// No cell of the (gamma, R, alpha0) search grid yields a valid certificate.
struct NoFeasiblePoint : Error {
    using Error::Error;
};

// A certificate required by an operation is missing, invalid or unverified.
struct CertError : Error {
    using Error::Error;
};

// Observed step distances stopped contracting at the certified rate.
struct ContractViolation : Error {
    using Error::Error;
};

// The stationarity system is rank-deficient: more than one fixed measure.
struct NonUniqueStationary : Error {
    using Error::Error;
};

// No power of the kernel moves mass from nu_tilde into S within the search cap.
struct Unreachable : Error {
    using Error::Error;
};

// P^ell nu_tilde does not dominate nu_tilde on its support.
struct SupportMismatch : Error {
    using Error::Error;
};

// Malformed input file; message carries a line/column diagnostic.
struct ParseError : Error {
    using Error::Error;
};

} // namespace harris
