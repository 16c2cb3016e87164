#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsg {

enum class ErrorKind {
    EmptyInput,
    DuplicateGenerator,
    GcdNotOne,
    GeneratorBelowTwo,
    ArithmeticOverflow,
    NotThreeGenerators,
    NotFourGenerators,
    NotMinimal,
    ConfigInvalid,
    // Defects: a computed result contradicts a law that must hold.
    TruncationInconsistency,
    ClassificationContradiction,
    DefectReport,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for kinds that signal an internal defect rather than bad input.
constexpr bool is_defect(ErrorKind kind) noexcept {
    return kind == ErrorKind::TruncationInconsistency ||
           kind == ErrorKind::ClassificationContradiction || kind == ErrorKind::DefectReport;
}

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace nsg
