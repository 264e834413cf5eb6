#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace mayer {

using Complex = std::complex<double>;

// Error codes shared with the C API.
enum class ErrorCode : int {
    Ok = 0,
    Domain = 1,
    Pole = 2,
    Overflow = 3,
    NonConvergence = 4,
    Resource = 5,
    Parity = 6,
    Quadrature = 7,
    Eigensolver = 8,
    InvalidArgument = 9,
    Internal = 10,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

#define MAYER_DEFINE_ERROR(Name, Code)                                              \
    class Name : public Error {                                                     \
    public:                                                                         \
        explicit Name(const std::string& what) : Error(ErrorCode::Code, what) {}    \
    };

MAYER_DEFINE_ERROR(DomainError, Domain)
MAYER_DEFINE_ERROR(PoleError, Pole)
MAYER_DEFINE_ERROR(OverflowError, Overflow)
MAYER_DEFINE_ERROR(NonConvergence, NonConvergence)
MAYER_DEFINE_ERROR(ResourceError, Resource)
MAYER_DEFINE_ERROR(ParityError, Parity)
MAYER_DEFINE_ERROR(QuadratureError, Quadrature)
MAYER_DEFINE_ERROR(EigensolverError, Eigensolver)

#undef MAYER_DEFINE_ERROR

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Throws OverflowError when a value escapes to NaN/inf.
inline Complex checked(Complex z, const char* where) {
    if (!is_finite(z)) throw OverflowError(std::string(where) + ": non-finite result");
    return z;
}

const char* error_name(ErrorCode c);

}  // namespace mayer
