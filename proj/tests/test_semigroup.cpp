#include "doctest.h"
#include "nsg/semigroup.hpp"
#include "oracles.hpp"

#include <vector>

using namespace nsg;

namespace {

ErrorKind kind_of(std::initializer_list<std::int64_t> raw) {
    try {
        GeneratorSet::make(raw);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("construction unexpectedly succeeded");
    return ErrorKind::DefectReport;
}

std::vector<std::int64_t> as_vector(const AperyTable& t) { return {t.entries().begin(), t.entries().end()}; }

}  // namespace

TEST_CASE("generator set construction") {
    auto g = GeneratorSet::make({8, 5, 7, 6});
    CHECK(std::vector<std::int64_t>(g.elements().begin(), g.elements().end()) == std::vector<std::int64_t>{5, 6, 7, 8});
    CHECK(g.sigma() == 26);
    CHECK(g.pi() == 1680);

    auto big = GeneratorSet::make({151, 154, 157, 158});
    CHECK(big.sigma() == 620);
    CHECK(big.pi() == 576838724);
    CHECK(big.to_string() == "<151,154,157,158>");
}

TEST_CASE("generator set rejects bad input") {
    CHECK(kind_of({}) == ErrorKind::EmptyInput);
    CHECK(kind_of({6, 8, 10}) == ErrorKind::GcdNotOne);
    CHECK(kind_of({1, 2}) == ErrorKind::GeneratorBelowTwo);
    CHECK(kind_of({0, 3}) == ErrorKind::GeneratorBelowTwo);
    CHECK(kind_of({-5, 3}) == ErrorKind::GeneratorBelowTwo);
    CHECK(kind_of({5, 6, 6, 7}) == ErrorKind::DuplicateGenerator);
    try {
        GeneratorSet::make({6, 8, 10});
    } catch (const Error& e) {
        CHECK(std::string(e.what()) == "gcd is 2, must be 1");
    }
}

TEST_CASE("product overflow is detected") {
    const std::int64_t huge = std::int64_t{1} << 40;
    CHECK_THROWS_AS(GeneratorSet::make({huge + 1, huge + 2, huge + 3, huge + 5}), Error);
    try {
        GeneratorSet::make({huge + 1, huge + 2, huge + 3, huge + 5});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ArithmeticOverflow);
    }
}

TEST_CASE("apery sets") {
    CHECK(as_vector(apery_set(GeneratorSet::make({5, 6, 7, 8}))) == std::vector<std::int64_t>{0, 6, 7, 8, 14});
    CHECK(as_vector(apery_set(GeneratorSet::make({2, 3}))) == std::vector<std::int64_t>{0, 3});
    CHECK(as_vector(apery_set(GeneratorSet::make({7, 8, 9, 13}))) ==
          std::vector<std::int64_t>{0, 8, 9, 17, 18, 26, 13});
}

TEST_CASE("frobenius and genus") {
    CHECK(frobenius(GeneratorSet::make({5, 6, 7, 8})) == 9);
    CHECK(frobenius(GeneratorSet::make({151, 154, 157, 158})) == 3635);
    CHECK(frobenius(GeneratorSet::make({2, 3})) == 1);
    CHECK(genus(GeneratorSet::make({5, 6, 7, 8})) == 5);
    CHECK(genus(GeneratorSet::make({2, 3})) == 1);
    CHECK(genus(GeneratorSet::make({7, 8, 9, 13})) == 10);
}

TEST_CASE("membership") {
    const auto t = apery_set(GeneratorSet::make({5, 6, 7, 8}));
    CHECK_FALSE(is_member(t, 9));
    CHECK(is_member(t, 0));
    CHECK(is_member(t, 10));
    CHECK_FALSE(is_member(t, -1));
    CHECK_FALSE(is_member(t, 4));
}

TEST_CASE("symmetry") {
    CHECK(is_symmetric(GeneratorSet::make({5, 6, 7, 8})));
    CHECK_FALSE(is_symmetric(GeneratorSet::make({5, 6, 7})));
    CHECK(is_symmetric(GeneratorSet::make({2, 3})));
    CHECK(is_symmetric(GeneratorSet::make({151, 154, 157, 158})));
}

TEST_CASE("minimality") {
    CHECK(is_minimal_generating_set(GeneratorSet::make({5, 6, 7, 8})));
    CHECK_FALSE(is_minimal_generating_set(GeneratorSet::make({2, 3, 5})));
    CHECK(redundant_generator(GeneratorSet::make({2, 3, 5})) == 5);
    CHECK(is_minimal_generating_set(GeneratorSet::make({151, 154, 157, 158})));
    CHECK(redundant_generator(GeneratorSet::make({5, 7, 10, 12})) == 10);
}

TEST_CASE("large modulus stays fast and exact") {
    // F(a, b) = ab - a - b for two coprime generators.
    const std::int64_t a = 999983, b = 1000003;
    CHECK(frobenius(GeneratorSet::make({a, b})) == a * b - a - b);
}

TEST_CASE("property: apery-based results match the coin-DP oracle") {
    std::mt19937_64 rng(20261016);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t k = 2 + static_cast<std::size_t>(trial % 4);
        const auto gens = oracle::random_generators(rng, k, 50, 120);
        const auto g = GeneratorSet::make(gens);
        CAPTURE(g.to_string());
        const auto t = apery_set(g);
        const auto f = frobenius(t);

        REQUIRE(f == oracle::frobenius(gens));
        CHECK(genus(t) == oracle::genus(gens));
        CHECK(as_vector(t) == oracle::apery(gens));
        CHECK(is_minimal_generating_set(g) == oracle::minimal(gens));

        // Relaxation stability.
        const auto m = t.modulus();
        for (std::int64_t r = 0; r < m; ++r) {
            CHECK(t[r] % m == r);
            for (auto d : g.elements()) CHECK(t[r] <= t[(((r - d) % m) + m) % m] + d);
        }

        // Membership over 0..F+d_k.
        const auto rep = oracle::coin_dp(gens, f + g.largest());
        for (std::int64_t n = 0; n <= f + g.largest(); ++n)
            REQUIRE(is_member(t, n) == static_cast<bool>(rep[static_cast<std::size_t>(n)]));

        // Genus bound, equality exactly for symmetric semigroups, F odd then.
        const bool sym = is_symmetric(t);
        CHECK(2 * genus(t) >= f + 1);
        CHECK((2 * genus(t) == f + 1) == sym);
        if (sym) CHECK(f % 2 == 1);
    }
}
