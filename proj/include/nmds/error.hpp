#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nmds {

enum class ErrorKind {
    NotPrime,
    NotIrreducible,
    FieldMismatch,
    DivisionByZero,
    ParseError,
    DimensionMismatch,
    NotSquare,
    Singular,
    IndexOutOfRange,
    OrderTooLarge,
    TooLarge,
    RankOutOfRange,
    NotStandardForm,
    DegreeOutOfRange,
    SingularFactor,
    ConditionViolated,
    SelfCheckFailed,
    OddOrder,
    NotCharTwo,
    RootMismatch,
    RepeatedRoot,
    ExponentTooSmall,
    ExponentCollision,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `witness` carries the index set that
/// triggered the failure when one exists (0-based).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::vector<std::size_t> witness = {});

    ErrorKind kind() const noexcept { return kind_; }
    const std::vector<std::size_t>& witness() const noexcept { return witness_; }

private:
    ErrorKind kind_;
    std::vector<std::size_t> witness_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message, std::vector<std::size_t> witness = {});

}  // namespace nmds
