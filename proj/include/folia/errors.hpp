#pragma once

#include <stdexcept>
#include <string>

namespace folia {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroPolynomialError : Error {
    explicit ZeroPolynomialError(const std::string& msg = "zero polynomial has no degree") : Error(msg) {}
};
struct InhomogeneousError : Error {
    explicit InhomogeneousError(const std::string& msg = "polynomial is not homogeneous") : Error(msg) {}
};
struct ArityError : Error {
    explicit ArityError(const std::string& msg = "arity mismatch") : Error(msg) {}
};
struct DegreeMismatchError : Error {
    explicit DegreeMismatchError(const std::string& msg = "degree mismatch") : Error(msg) {}
};
struct RingMismatchError : Error {
    explicit RingMismatchError(const std::string& msg = "operands live in different rings") : Error(msg) {}
};
struct IndexError : Error {
    explicit IndexError(const std::string& msg = "index out of range") : Error(msg) {}
};
struct NotDescendingError : Error {
    explicit NotDescendingError(const std::string& msg = "form does not descend (i_R != 0)") : Error(msg) {}
};
struct NotIntegrableError : Error {
    explicit NotIntegrableError(const std::string& msg = "form is not integrable (w^dw != 0)") : Error(msg) {}
};
struct ZeroFormError : Error {
    explicit ZeroFormError(const std::string& msg = "zero form") : Error(msg) {}
};
struct ResonanceError : Error {
    explicit ResonanceError(const std::string& msg = "sum lambda_i*e_i != 0") : Error(msg) {}
};
struct DegenerateFamilyError : Error {
    explicit DegenerateFamilyError(const std::string& msg = "contracted form vanishes identically") : Error(msg) {}
};
struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& msg = "computation budget exhausted") : Error(msg) {}
};
struct AmbientError : Error {
    explicit AmbientError(const std::string& msg = "ambient dimension constraint violated") : Error(msg) {}
};
struct AmbientMismatchError : Error {
    explicit AmbientMismatchError(const std::string& msg = "subspaces live in different ambient spaces") : Error(msg) {}
};
struct BracketMismatchError : Error {
    explicit BracketMismatchError(const std::string& msg = "computed bracket disagrees with expected structure constants") : Error(msg) {}
};
struct GenericityError : Error {
    explicit GenericityError(const std::string& msg = "failed to certify a generic instance within retry budget") : Error(msg) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& msg = "malformed input") : Error(msg) {}
};

} // namespace folia
