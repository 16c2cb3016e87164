#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsg/checked.hpp"

namespace nsg {

/// Sorted, validated generators d_1 < ... < d_k of a numerical semigroup,
/// together with their sum (sigma) and product (pi).
///
/// Construction rejects empty input, generators below 2, duplicates and a
/// gcd other than 1. Redundant (non-minimal) generators are accepted.
class GeneratorSet {
   public:
    static GeneratorSet make(std::span<const std::int64_t> raw);
    static GeneratorSet make(std::initializer_list<std::int64_t> raw) {
        return make(std::span<const std::int64_t>(raw.begin(), raw.size()));
    }

    std::span<const std::int64_t> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    std::int64_t operator[](std::size_t i) const { return elements_[i]; }
    std::int64_t smallest() const noexcept { return elements_.front(); }
    std::int64_t largest() const noexcept { return elements_.back(); }
    std::int64_t sigma() const noexcept { return sigma_; }
    i128 pi() const noexcept { return pi_; }

    std::string to_string() const;  // "<5,6,7,8>"

    bool operator==(const GeneratorSet&) const = default;

   private:
    GeneratorSet() = default;
    std::vector<std::int64_t> elements_;
    std::int64_t sigma_ = 0;
    i128 pi_ = 1;
};

/// Least semigroup element in each residue class modulo the smallest generator.
class AperyTable {
   public:
    AperyTable(std::int64_t modulus, std::vector<std::int64_t> entries);

    std::int64_t modulus() const noexcept { return modulus_; }
    std::span<const std::int64_t> entries() const noexcept { return entries_; }
    std::int64_t operator[](std::int64_t residue) const { return entries_[static_cast<std::size_t>(residue)]; }
    std::int64_t max_entry() const noexcept { return max_entry_; }

   private:
    std::int64_t modulus_;
    std::vector<std::int64_t> entries_;
    std::int64_t max_entry_ = 0;
};

/// Shortest paths from residue 0 on the graph r -> (r + d_i) mod d_1 with weight d_i.
AperyTable apery_set(const GeneratorSet& g);

std::int64_t frobenius(const AperyTable& apery);
std::int64_t frobenius(const GeneratorSet& g);

std::int64_t genus(const AperyTable& apery);
std::int64_t genus(const GeneratorSet& g);

bool is_member(const AperyTable& apery, std::int64_t n) noexcept;
bool is_member(const GeneratorSet& g, std::int64_t n);

/// Symmetry via genus == (F+1)/2, cross-checked against the pairing
/// x in S <=> F-x not in S. Disagreement throws a DefectReport.
bool is_symmetric(const AperyTable& apery);
bool is_symmetric(const GeneratorSet& g);

/// The first generator expressible by the smaller ones, if any.
std::optional<std::int64_t> redundant_generator(const GeneratorSet& g);
bool is_minimal_generating_set(const GeneratorSet& g);

}  // namespace nsg
