#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <variant>

#include "nsg/semigroup.hpp"

namespace nsg {

/// Sparse integer polynomial in z, stored exponent -> nonzero coefficient.
/// Used for the Hilbert-series numerator H(S;z) * prod(1 - z^{d_i}).
class NumeratorPoly {
   public:
    NumeratorPoly() = default;
    explicit NumeratorPoly(std::map<std::int64_t, std::int64_t> coeffs);
    NumeratorPoly(std::initializer_list<std::pair<const std::int64_t, std::int64_t>> terms)
        : NumeratorPoly(std::map<std::int64_t, std::int64_t>(terms)) {}

    const std::map<std::int64_t, std::int64_t>& terms() const noexcept { return coeffs_; }
    std::size_t term_count() const noexcept { return coeffs_.size(); }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Largest exponent; -1 for the zero polynomial.
    std::int64_t degree() const noexcept { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    std::int64_t coeff(std::int64_t exponent) const;
    std::int64_t coefficient_sum() const;

    /// coeff(e) == sign * coeff(degree - e) for every e.
    bool is_reciprocal(int sign) const;
    /// The symmetric-semigroup shape for an even number of generators.
    bool is_antipalindromic() const { return is_reciprocal(-1); }

    NumeratorPoly operator*(const NumeratorPoly& rhs) const;
    bool operator==(const NumeratorPoly&) const = default;

   private:
    std::map<std::int64_t, std::int64_t> coeffs_;
};

/// 1 - z^e
NumeratorPoly binomial(std::int64_t e);
NumeratorPoly binomial_product(std::span<const std::int64_t> degrees);

/// Exact numerator of the Hilbert series. The dense membership indicator is
/// truncated past F + sigma + max(d_i) and every coefficient above F + sigma
/// must vanish (TruncationInconsistency otherwise).
NumeratorPoly numerator(const GeneratorSet& g);
NumeratorPoly numerator(const GeneratorSet& g, const AperyTable& apery);

/// Twelve-term form 1 - sum z^{a_j} + sum z^{c - a_j} - z^c.
struct BresinskyForm {
    std::array<std::int64_t, 5> a{};  // sorted, repeats allowed
    std::int64_t c = 0;
    bool operator==(const BresinskyForm&) const = default;
};

std::optional<BresinskyForm> parse_bresinsky(const NumeratorPoly& n);
NumeratorPoly expand_bresinsky(const BresinskyForm& form);

/// Degrees (e1 <= e2 <= e3) with n == prod (1 - z^{e_i}), if n factors that way.
std::optional<std::array<std::int64_t, 3>> peel_ci_product(const NumeratorPoly& n);

struct NonSymmetric {
    bool operator==(const NonSymmetric&) const = default;
};
struct SymmetricCI {
    std::array<std::int64_t, 3> degrees{};
    bool operator==(const SymmetricCI&) const = default;
};
struct SymmetricNotCI {
    BresinskyForm form;
    bool operator==(const SymmetricNotCI&) const = default;
};
using SemigroupClass = std::variant<NonSymmetric, SymmetricCI, SymmetricNotCI>;

/// "non_symmetric", "symmetric_ci" or "symmetric_not_ci".
std::string_view class_tag(const SemigroupClass& cls) noexcept;

/// Classification of a minimally generated 4-generator semigroup. For
/// symmetric input exactly one of the Bresinsky parse and the CI peel must
/// succeed, otherwise ClassificationContradiction is raised.
SemigroupClass classify(const GeneratorSet& g);

}  // namespace nsg
