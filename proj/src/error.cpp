#include "nsg/checked.hpp"
#include "nsg/error.hpp"

#include <algorithm>
#include <limits>

namespace nsg {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::DuplicateGenerator: return "DuplicateGenerator";
        case ErrorKind::GcdNotOne: return "GcdNotOne";
        case ErrorKind::GeneratorBelowTwo: return "GeneratorBelowTwo";
        case ErrorKind::ArithmeticOverflow: return "ArithmeticOverflow";
        case ErrorKind::NotThreeGenerators: return "NotThreeGenerators";
        case ErrorKind::NotFourGenerators: return "NotFourGenerators";
        case ErrorKind::NotMinimal: return "NotMinimal";
        case ErrorKind::ConfigInvalid: return "ConfigInvalid";
        case ErrorKind::TruncationInconsistency: return "TruncationInconsistency";
        case ErrorKind::ClassificationContradiction: return "ClassificationContradiction";
        case ErrorKind::DefectReport: return "DefectReport";
    }
    return "Unknown";
}

std::string to_string(i128 value) {
    if (value == 0) return "0";
    const bool negative = value < 0;
    std::string digits;
    // Work with non-positive values so the minimum is representable.
    i128 v = negative ? value : -value;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
        v /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::int64_t narrow_i64(i128 value) {
    if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min())
        throw Error(ErrorKind::ArithmeticOverflow, "value " + to_string(value) + " exceeds 64-bit range");
    return static_cast<std::int64_t>(value);
}

}  // namespace nsg
