#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rank2 {

// Domain errors carry a stable machine-readable name. The CLI prints the
// name on the first output line and exits with status 1.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define RANK2_ERROR_CLASS(NAME)                                               \
    class NAME : public Error {                                               \
    public:                                                                   \
        explicit NAME(const std::string& what) : Error(#NAME, what) {}        \
    };

RANK2_ERROR_CLASS(NotDivisible)
RANK2_ERROR_CLASS(ZeroNumerator)
RANK2_ERROR_CLASS(DivisionByZero)
RANK2_ERROR_CLASS(DenominatorVanishes)
RANK2_ERROR_CLASS(ConstantInput)
RANK2_ERROR_CLASS(InfiniteType)
RANK2_ERROR_CLASS(NotSymmetric)
RANK2_ERROR_CLASS(NotInvariant)
RANK2_ERROR_CLASS(NotLaurent)
RANK2_ERROR_CLASS(NotPolynomial)
RANK2_ERROR_CLASS(MissingLaurentForm)
RANK2_ERROR_CLASS(UnsupportedRegime)
RANK2_ERROR_CLASS(NonIntegral)
RANK2_ERROR_CLASS(PreconditionViolated)
RANK2_ERROR_CLASS(IndexOutOfRange)
RANK2_ERROR_CLASS(ResourceExhausted)

#undef RANK2_ERROR_CLASS

// Parse failure with byte offset and the token set that was legal there.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, std::vector<std::string> expected,
                const std::string& what)
        : Error("SyntaxError", what), offset_(offset),
          expected_(std::move(expected)) {}
    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

}  // namespace rank2
