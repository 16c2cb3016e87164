#include "nsg/hilbert.hpp"

#include <algorithm>
#include <vector>

namespace nsg {

NumeratorPoly::NumeratorPoly(std::map<std::int64_t, std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    std::erase_if(coeffs_, [](const auto& t) { return t.second == 0; });
}

std::int64_t NumeratorPoly::coeff(std::int64_t exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
}

std::int64_t NumeratorPoly::coefficient_sum() const {
    std::int64_t sum = 0;
    for (const auto& [e, c] : coeffs_) sum = checked_add(sum, c);
    return sum;
}

bool NumeratorPoly::is_reciprocal(int sign) const {
    const auto top = degree();
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [&](const auto& t) { return coeff(top - t.first) == sign * t.second; });
}

NumeratorPoly NumeratorPoly::operator*(const NumeratorPoly& rhs) const {
    std::map<std::int64_t, std::int64_t> out;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : rhs.coeffs_) {
            auto& slot = out[checked_add(e1, e2)];
            slot = checked_add(slot, checked_mul(c1, c2));
        }
    return NumeratorPoly(std::move(out));
}

NumeratorPoly binomial(std::int64_t e) { return NumeratorPoly({{0, 1}, {e, -1}}); }

NumeratorPoly binomial_product(std::span<const std::int64_t> degrees) {
    NumeratorPoly out({{0, 1}});
    for (auto e : degrees) out = out * binomial(e);
    return out;
}

NumeratorPoly numerator(const GeneratorSet& g) { return numerator(g, apery_set(g)); }

NumeratorPoly numerator(const GeneratorSet& g, const AperyTable& apery) {
    const std::int64_t degree = checked_add(frobenius(apery), g.sigma());
    const std::int64_t length = checked_add(degree, g.largest());

    std::vector<std::int64_t> dense(static_cast<std::size_t>(length) + 1);
    for (std::int64_t n = 0; n <= length; ++n) dense[static_cast<std::size_t>(n)] = is_member(apery, n) ? 1 : 0;
    for (auto d : g.elements())
        for (std::int64_t n = length; n >= d; --n)
            dense[static_cast<std::size_t>(n)] -= dense[static_cast<std::size_t>(n - d)];

    for (std::int64_t n = degree + 1; n <= length; ++n) {
        if (dense[static_cast<std::size_t>(n)] != 0)
            throw Error(ErrorKind::TruncationInconsistency,
                        "numerator of " + g.to_string() + " has nonzero coefficient at z^" + std::to_string(n) +
                            " above F + sigma = " + std::to_string(degree));
    }
    if (dense[static_cast<std::size_t>(degree)] == 0)
        throw Error(ErrorKind::TruncationInconsistency,
                    "numerator of " + g.to_string() + " vanishes at z^(F + sigma) = z^" + std::to_string(degree));

    std::map<std::int64_t, std::int64_t> coeffs;
    for (std::int64_t n = 0; n <= degree; ++n)
        if (auto c = dense[static_cast<std::size_t>(n)]; c != 0) coeffs.emplace_hint(coeffs.end(), n, c);
    return NumeratorPoly(std::move(coeffs));
}

std::optional<BresinskyForm> parse_bresinsky(const NumeratorPoly& n) {
    const std::int64_t c = n.degree();
    if (c <= 0 || n.coeff(0) != 1 || n.coeff(c) != -1) return std::nullopt;

    std::vector<std::int64_t> negatives;
    std::vector<std::int64_t> positives;
    for (const auto& [e, coef] : n.terms()) {
        if (e == 0 || e == c) continue;
        auto& bucket = coef < 0 ? negatives : positives;
        const std::int64_t mult = coef < 0 ? -coef : coef;
        if (mult > 5) return std::nullopt;
        bucket.insert(bucket.end(), static_cast<std::size_t>(mult), e);
    }
    if (negatives.size() != 5 || positives.size() != 5) return std::nullopt;

    // Both lists come out sorted; c - a reverses the order.
    for (std::size_t i = 0; i < 5; ++i)
        if (c - negatives[i] != positives[4 - i]) return std::nullopt;

    BresinskyForm form;
    std::copy(negatives.begin(), negatives.end(), form.a.begin());
    form.c = c;
    return form;
}

NumeratorPoly expand_bresinsky(const BresinskyForm& form) {
    std::map<std::int64_t, std::int64_t> coeffs{{0, 1}};
    coeffs[form.c] -= 1;
    for (auto a : form.a) {
        coeffs[a] -= 1;
        coeffs[form.c - a] += 1;
    }
    return NumeratorPoly(std::move(coeffs));
}

namespace {

// Exact division by (1 - z^e); nullopt when a remainder is left.
std::optional<NumeratorPoly> divide_by_binomial(const NumeratorPoly& n, std::int64_t e) {
    std::map<std::int64_t, std::int64_t> rest = n.terms();
    std::map<std::int64_t, std::int64_t> quotient;
    const std::int64_t limit = n.degree() - e;
    while (!rest.empty()) {
        auto [lead, coef] = *rest.begin();
        if (lead > limit) return std::nullopt;
        quotient.emplace_hint(quotient.end(), lead, coef);
        rest.erase(rest.begin());
        auto& shifted = rest[lead + e];
        shifted = checked_add(shifted, coef);
        if (shifted == 0) rest.erase(lead + e);
    }
    return NumeratorPoly(std::move(quotient));
}

}  // namespace

std::optional<std::array<std::int64_t, 3>> peel_ci_product(const NumeratorPoly& n) {
    if (n.coeff(0) != 1) return std::nullopt;
    std::array<std::int64_t, 3> degrees{};
    std::size_t peeled = 0;
    NumeratorPoly rest = n;
    while (rest.term_count() > 1) {
        auto it = std::next(rest.terms().begin());
        const auto [e, coef] = *it;
        if (coef >= 0) return std::nullopt;
        for (std::int64_t t = 0; t < -coef; ++t) {
            if (peeled == 3) return std::nullopt;
            auto q = divide_by_binomial(rest, e);
            if (!q) return std::nullopt;
            rest = std::move(*q);
            degrees[peeled++] = e;
        }
    }
    if (peeled != 3 || rest != NumeratorPoly({{0, 1}})) return std::nullopt;
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

std::string_view class_tag(const SemigroupClass& cls) noexcept {
    struct Visitor {
        std::string_view operator()(const NonSymmetric&) const { return "non_symmetric"; }
        std::string_view operator()(const SymmetricCI&) const { return "symmetric_ci"; }
        std::string_view operator()(const SymmetricNotCI&) const { return "symmetric_not_ci"; }
    };
    return std::visit(Visitor{}, cls);
}

SemigroupClass classify(const GeneratorSet& g) {
    if (g.size() != 4)
        throw Error(ErrorKind::NotFourGenerators,
                    "classification needs exactly 4 generators, got " + std::to_string(g.size()));
    if (auto extra = redundant_generator(g))
        throw Error(ErrorKind::NotMinimal, "generator " + std::to_string(*extra) + " of " + g.to_string() +
                                               " is a sum of smaller generators");

    const auto apery = apery_set(g);
    if (!is_symmetric(apery)) return NonSymmetric{};

    const auto poly = numerator(g, apery);
    auto bresinsky = parse_bresinsky(poly);
    auto product = peel_ci_product(poly);
    if (bresinsky.has_value() == product.has_value())
        throw Error(ErrorKind::ClassificationContradiction,
                    "symmetric semigroup " + g.to_string() +
                        (bresinsky ? " matches both the Bresinsky form and a binomial product"
                                   : " matches neither the Bresinsky form nor a binomial product"));
    if (product) return SymmetricCI{*product};
    return SymmetricNotCI{*bresinsky};
}

}  // namespace nsg
