#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "nsg/checked.hpp"
#include "nsg/hilbert.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

using AList = std::array<std::int64_t, 5>;

struct PowerSums {
    i128 i1 = 0, i2 = 0, i3 = 0;
    bool operator==(const PowerSums&) const = default;
};

/// Elementary symmetric values; j[0] == 1, j[r] == J_r.
using Elementary = std::array<i128, 6>;

/// Exact symmetric-function data of a five-element a-list.
struct SymmetricFunctionData {
    AList a{};
    PowerSums power;
    Elementary elementary{};
};

PowerSums power_sums(const AList& a);
Elementary elementary_symmetric(const AList& a);
SymmetricFunctionData symmetric_data(const AList& a);

/// I1 = J1, I2 = J1^2 - 2 J2, I3 = J1^3 - 3 J2 J1 + 3 J3, all exact.
bool newton_consistency(const SymmetricFunctionData& d);

/// J1/5 >= (J2/10)^(1/2) >= (J3/10)^(1/3) >= (J4/5)^(1/4) >= J5^(1/5),
/// compared as integer powers without radicals. Requires positive a_j.
bool maclaurin_chain(const SymmetricFunctionData& d);

/// 8 I3 - 6 I2 I1 + I1^3 == 24 pi4 and I1 == 2c. The equivalent
/// J1^3 - 4 J2 J1 + 8 J3 == 8 pi4 form is evaluated too; a disagreement
/// between the two forms is a DefectReport.
bool verify_key_identity(const AList& a, std::int64_t c, i128 pi4);

/// c J2 + pi4 == c^3 + J3, 25 J3 <= 16 c^3, 5 J2 <= 8 c^2 and
/// 25 c J2 <= 41 c^3 - 25 pi4.
bool verify_intermediate_inequalities(const AList& a, std::int64_t c, i128 pi4);

/// c^3 >= 25 pi4 in exact integers.
bool exact_threshold_check(std::int64_t c, i128 pi4);

/// Cube root refined by one Newton step.
double cube_root(double x);

/// cbrt(25 pi4) - sigma4, for symmetric semigroups that are not complete intersections.
double bound_symmetric_not_ci(const GeneratorSet& g);
/// 3 cbrt(pi4) - sigma4, for symmetric complete intersections.
double bound_ci(const GeneratorSet& g);
/// cbrt(6 pi4) - sigma4, for nonsymmetric 4-generated semigroups.
double bound_ns4(const GeneratorSet& g);
/// sqrt(3) sqrt(d1 d2 d3 + 1) - sigma3, for nonsymmetric 3-generated semigroups.
double bound_ns3(const GeneratorSet& g);

struct BoundReport {
    GeneratorSet generators;
    std::int64_t sigma = 0;
    i128 pi = 0;
    double bound_not_ci = 0;
    double bound_ci = 0;
    double bound_ns = 0;
    std::optional<std::int64_t> exact_f;
    std::optional<SemigroupClass> cls;
    /// exact F over the bound matching the class (absent when that bound is <= 0).
    std::optional<double> tightness;
};

/// The bound matching a class: not_ci for symmetric_not_ci, ci for
/// symmetric_ci, ns for non_symmetric.
double applicable_bound(const SemigroupClass& cls, double not_ci, double ci, double ns);

BoundReport bound_report(const GeneratorSet& g, bool compute_exact);

}  // namespace nsg
