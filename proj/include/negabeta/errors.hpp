#pragma once

#include <stdexcept>
#include <string>

namespace negabeta {

// Every domain error carries a stable exit code so the CLI can map failures
// one-to-one onto process statuses (documented in --help).
class Error : public std::runtime_error {
public:
    Error(int exit_code, const std::string& what) : std::runtime_error(what), code_(exit_code) {}
    int exit_code() const noexcept { return code_; }

private:
    int code_;
};

struct NotIrreducibleError : Error {
    explicit NotIrreducibleError(const std::string& m) : Error(2, m) {}
};
struct NoRootIsolatedError : Error {
    explicit NoRootIsolatedError(const std::string& m) : Error(3, m) {}
};
struct BetaNotGreaterThanOneError : Error {
    explicit BetaNotGreaterThanOneError(const std::string& m) : Error(4, m) {}
};
struct EndpointOutOfRangeError : Error {
    explicit EndpointOutOfRangeError(const std::string& m) : Error(5, m) {}
};
struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& m) : Error(6, m) {}
};
struct OutOfDomainError : Error {
    explicit OutOfDomainError(const std::string& m) : Error(7, m) {}
};
struct RefsNotPeriodicError : Error {
    explicit RefsNotPeriodicError(const std::string& m) : Error(8, m) {}
};
struct EndpointOutsideRestrictionError : Error {
    explicit EndpointOutsideRestrictionError(const std::string& m) : Error(9, m) {}
};
struct NoRepresentationFoundError : Error {
    explicit NoRepresentationFoundError(const std::string& m) : Error(10, m) {}
};
struct UnlabeledGapError : Error {
    explicit UnlabeledGapError(const std::string& m) : Error(11, m) {}
};
struct GapNotRealizedError : Error {
    explicit GapNotRealizedError(const std::string& m) : Error(12, m) {}
};
struct HorizonTooShortError : Error {
    explicit HorizonTooShortError(const std::string& m) : Error(13, m) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error(64, m) {}
};

}  // namespace negabeta
