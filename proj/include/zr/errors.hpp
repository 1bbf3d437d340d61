#pragma once

#include <stdexcept>
#include <string>

namespace zr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One exception type per failure mode so callers can catch selectively.
#define ZR_ERROR(Name)                                   \
    struct Name : Error {                                \
        explicit Name(const std::string& what)           \
            : Error(std::string(#Name ": ") + what) {}   \
    }

ZR_ERROR(SubdivisionLimit);
ZR_ERROR(TailDivergence);
ZR_ERROR(NoSignChange);
ZR_ERROR(InvalidArgument);
ZR_ERROR(OrderUnsupported);
ZR_ERROR(NonpositiveRealPart);
ZR_ERROR(DomainBelowT1);
ZR_ERROR(DomainTooSmall);
ZR_ERROR(WindowViolation);
ZR_ERROR(CertificateFailure);
ZR_ERROR(OmegaOutOfRange);
ZR_ERROR(NonContraction);

#undef ZR_ERROR

}  // namespace zr
