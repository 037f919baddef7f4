#include "nmds/error.hpp"

#include <algorithm>
#include <cstdint>

#include "nmds/subsets.hpp"

namespace nmds {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::OrderTooLarge: return "OrderTooLarge";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::RankOutOfRange: return "RankOutOfRange";
        case ErrorKind::NotStandardForm: return "NotStandardForm";
        case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorKind::SingularFactor: return "SingularFactor";
        case ErrorKind::ConditionViolated: return "ConditionViolated";
        case ErrorKind::SelfCheckFailed: return "SelfCheckFailed";
        case ErrorKind::OddOrder: return "OddOrder";
        case ErrorKind::NotCharTwo: return "NotCharTwo";
        case ErrorKind::RootMismatch: return "RootMismatch";
        case ErrorKind::RepeatedRoot: return "RepeatedRoot";
        case ErrorKind::ExponentTooSmall: return "ExponentTooSmall";
        case ErrorKind::ExponentCollision: return "ExponentCollision";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::vector<std::size_t> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), witness_(std::move(witness)) {}

void raise(ErrorKind kind, const std::string& message, std::vector<std::size_t> witness) {
    throw Error(kind, message, std::move(witness));
}

std::uint64_t binomial(std::size_t n, std::size_t k) noexcept {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace nmds
