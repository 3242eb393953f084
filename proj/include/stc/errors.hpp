#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stc {

struct NonFiniteCoefficient : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionOrderError : std::domain_error {
    using std::domain_error::domain_error;
};

struct BranchPrecondition : std::domain_error {
    using std::domain_error::domain_error;
};

struct OutsideDisk : std::domain_error {
    using std::domain_error::domain_error;
};

struct ZeroDenominator : std::domain_error {
    using std::domain_error::domain_error;
};

struct DegenerateMax : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularPoint : std::domain_error {
    using std::domain_error::domain_error;
};

struct EvaluationUnreliable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridEmpty : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SpecInvalid : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parse failure in the function-spec mini-language. Carries the byte
/// position and the token set that would have been accepted there.
struct ParseError : std::runtime_error {
    ParseError(std::size_t position, std::string expected_tokens, const std::string& what_arg)
        : std::runtime_error(what_arg), pos(position), expected(std::move(expected_tokens)) {}
    std::size_t pos;
    std::string expected;
};

}  // namespace stc
