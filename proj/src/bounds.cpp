#include "nsg/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

namespace nsg {

namespace {

using boost::multiprecision::cpp_int;

void require_four(const GeneratorSet& g) {
    if (g.size() != 4)
        throw Error(ErrorKind::NotFourGenerators, "bound needs exactly 4 generators, got " + std::to_string(g.size()));
}

cpp_int big(i128 v) {
    // cpp_int has no __int128 constructor on every boost version.
    const bool negative = v < 0;
    unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    cpp_int out = static_cast<std::uint64_t>(mag >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(mag);
    return negative ? cpp_int(-out) : out;
}

}  // namespace

PowerSums power_sums(const AList& a) {
    PowerSums s;
    for (auto v : a) {
        const i128 x = v;
        s.i1 = checked_add(s.i1, x);
        s.i2 = checked_add(s.i2, checked_mul(x, x));
        s.i3 = checked_add(s.i3, checked_pow(x, 3));
    }
    return s;
}

Elementary elementary_symmetric(const AList& a) {
    // Coefficients of prod (x + a_j), built one factor at a time.
    Elementary e{};
    e[0] = 1;
    std::size_t used = 0;
    for (auto v : a) {
        ++used;
        for (std::size_t r = used; r >= 1; --r) e[r] = checked_add(e[r], checked_mul(e[r - 1], static_cast<i128>(v)));
    }
    return e;
}

SymmetricFunctionData symmetric_data(const AList& a) { return {a, power_sums(a), elementary_symmetric(a)}; }

bool newton_consistency(const SymmetricFunctionData& d) {
    const auto& j = d.elementary;
    const auto& p = d.power;
    const i128 j1sq = checked_mul(j[1], j[1]);
    const bool first = p.i1 == j[1];
    const bool second = p.i2 == checked_sub(j1sq, checked_mul(i128{2}, j[2]));
    const i128 third_rhs = checked_add(checked_sub(checked_mul(j1sq, j[1]), checked_mul(i128{3}, checked_mul(j[2], j[1]))),
                                       checked_mul(i128{3}, j[3]));
    return first && second && p.i3 == third_rhs;
}

bool maclaurin_chain(const SymmetricFunctionData& d) {
    // (J_r / C_r)^(1/r) >= (J_{r+1} / C_{r+1})^(1/(r+1))
    //   <=> J_r^(r+1) * C_{r+1}^r >= J_{r+1}^r * C_r^(r+1)
    static constexpr std::array<int, 6> binom5{1, 5, 10, 10, 5, 1};
    for (unsigned r = 1; r <= 4; ++r) {
        const cpp_int lhs = pow(big(d.elementary[r]), r + 1) * pow(cpp_int(binom5[r + 1]), r);
        const cpp_int rhs = pow(big(d.elementary[r + 1]), r) * pow(cpp_int(binom5[r]), r + 1);
        if (lhs < rhs) return false;
    }
    return true;
}

bool verify_key_identity(const AList& a, std::int64_t c, i128 pi4) {
    const auto d = symmetric_data(a);
    const auto& p = d.power;
    const auto& j = d.elementary;

    const i128 power_form = checked_add(checked_sub(checked_mul(i128{8}, p.i3), checked_mul(i128{6}, checked_mul(p.i2, p.i1))),
                                        checked_pow(p.i1, 3));
    const i128 target24 = checked_mul(i128{24}, pi4);
    const bool power_ok = power_form == target24;

    const i128 elementary_form = checked_add(checked_sub(checked_pow(j[1], 3), checked_mul(i128{4}, checked_mul(j[2], j[1]))),
                                             checked_mul(i128{8}, j[3]));
    const bool elementary_ok = elementary_form == checked_mul(i128{8}, pi4);
    if (power_ok != elementary_ok)
        throw Error(ErrorKind::DefectReport, "power-sum and elementary forms of the key identity disagree");

    return power_ok && p.i1 == checked_mul(i128{2}, static_cast<i128>(c));
}

bool verify_intermediate_inequalities(const AList& a, std::int64_t c, i128 pi4) {
    const auto j = elementary_symmetric(a);
    const i128 cc = c;
    const i128 c2 = checked_mul(cc, cc);
    const i128 c3 = checked_mul(c2, cc);
    const i128 c_j2 = checked_mul(cc, j[2]);

    const bool equality = checked_add(c_j2, pi4) == checked_add(c3, j[3]);
    const bool third_mean = checked_mul(i128{25}, j[3]) <= checked_mul(i128{16}, c3);
    const bool second_mean = checked_mul(i128{5}, j[2]) <= checked_mul(i128{8}, c2);
    const bool consistency = checked_mul(i128{25}, c_j2) <= checked_sub(checked_mul(i128{41}, c3), checked_mul(i128{25}, pi4));
    return equality && third_mean && second_mean && consistency;
}

bool exact_threshold_check(std::int64_t c, i128 pi4) {
    return checked_pow(static_cast<i128>(c), 3) >= checked_mul(i128{25}, pi4);
}

double cube_root(double x) {
    if (x == 0.0) return 0.0;
    double y = std::cbrt(x);
    y -= (y * y * y - x) / (3.0 * y * y);
    return y;
}

double bound_symmetric_not_ci(const GeneratorSet& g) {
    require_four(g);
    return cube_root(25.0 * static_cast<double>(g.pi())) - static_cast<double>(g.sigma());
}

double bound_ci(const GeneratorSet& g) {
    require_four(g);
    return 3.0 * cube_root(static_cast<double>(g.pi())) - static_cast<double>(g.sigma());
}

double bound_ns4(const GeneratorSet& g) {
    require_four(g);
    return cube_root(6.0 * static_cast<double>(g.pi())) - static_cast<double>(g.sigma());
}

double bound_ns3(const GeneratorSet& g) {
    if (g.size() != 3)
        throw Error(ErrorKind::NotThreeGenerators, "bound needs exactly 3 generators, got " + std::to_string(g.size()));
    return std::sqrt(3.0) * std::sqrt(static_cast<double>(g.pi() + 1)) - static_cast<double>(g.sigma());
}

double applicable_bound(const SemigroupClass& cls, double not_ci, double ci, double ns) {
    if (std::holds_alternative<SymmetricNotCI>(cls)) return not_ci;
    if (std::holds_alternative<SymmetricCI>(cls)) return ci;
    return ns;
}

BoundReport bound_report(const GeneratorSet& g, bool compute_exact) {
    require_four(g);
    BoundReport r{.generators = g,
                  .sigma = g.sigma(),
                  .pi = g.pi(),
                  .bound_not_ci = bound_symmetric_not_ci(g),
                  .bound_ci = bound_ci(g),
                  .bound_ns = bound_ns4(g)};
    if (compute_exact) {
        r.exact_f = frobenius(g);
        r.cls = classify(g);
        if (const double b = applicable_bound(*r.cls, r.bound_not_ci, r.bound_ci, r.bound_ns); b > 0.0) r.tightness = static_cast<double>(*r.exact_f) / b;
    }
    return r;
}

}  // namespace nsg
