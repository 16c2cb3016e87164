#include "nsg/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

namespace nsg {

namespace {

// Beyond this Frobenius number the element-wise pairing scan is replaced by
// its residue-class form: w_r + w_{(t - r) mod m} == t for t the largest entry.
constexpr std::int64_t kPairingScanLimit = std::int64_t{1} << 24;

}  // namespace

GeneratorSet GeneratorSet::make(std::span<const std::int64_t> raw) {
    if (raw.empty()) throw Error(ErrorKind::EmptyInput, "generator list is empty");
    GeneratorSet g;
    g.elements_.assign(raw.begin(), raw.end());
    for (auto d : g.elements_) {
        if (d < 2)
            throw Error(ErrorKind::GeneratorBelowTwo, "generator " + std::to_string(d) + " is below 2");
    }
    std::sort(g.elements_.begin(), g.elements_.end());
    if (auto dup = std::adjacent_find(g.elements_.begin(), g.elements_.end()); dup != g.elements_.end())
        throw Error(ErrorKind::DuplicateGenerator, "generator " + std::to_string(*dup) + " appears more than once");

    std::int64_t gcd = 0;
    for (auto d : g.elements_) gcd = std::gcd(gcd, d);
    if (gcd != 1) throw Error(ErrorKind::GcdNotOne, "gcd is " + std::to_string(gcd) + ", must be 1");

    for (auto d : g.elements_) {
        g.sigma_ = checked_add(g.sigma_, d);
        g.pi_ = checked_mul(g.pi_, static_cast<i128>(d));
    }
    return g;
}

std::string GeneratorSet::to_string() const {
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < elements_.size(); ++i) os << (i ? "," : "") << elements_[i];
    os << '>';
    return os.str();
}

AperyTable::AperyTable(std::int64_t modulus, std::vector<std::int64_t> entries)
    : modulus_(modulus), entries_(std::move(entries)) {
    max_entry_ = *std::max_element(entries_.begin(), entries_.end());
}

AperyTable apery_set(const GeneratorSet& g) {
    const std::int64_t m = g.smallest();
    constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> dist(static_cast<std::size_t>(m), kUnreached);
    dist[0] = 0;

    using Node = std::pair<std::int64_t, std::int64_t>;  // (distance, residue)
    std::priority_queue<Node, std::vector<Node>, std::greater<>> queue;
    queue.emplace(0, 0);
    const auto others = g.elements().subspan(1);
    while (!queue.empty()) {
        auto [d, r] = queue.top();
        queue.pop();
        if (d > dist[static_cast<std::size_t>(r)]) continue;
        for (auto step : others) {
            const std::int64_t next = (r + step) % m;
            const std::int64_t nd = checked_add(d, step);
            if (nd < dist[static_cast<std::size_t>(next)]) {
                dist[static_cast<std::size_t>(next)] = nd;
                queue.emplace(nd, next);
            }
        }
    }
    // gcd 1 guarantees every residue is reached.
    return AperyTable(m, std::move(dist));
}

std::int64_t frobenius(const AperyTable& apery) { return apery.max_entry() - apery.modulus(); }
std::int64_t frobenius(const GeneratorSet& g) { return frobenius(apery_set(g)); }

std::int64_t genus(const AperyTable& apery) {
    std::int64_t total = 0;
    const auto m = apery.modulus();
    for (std::int64_t r = 0; r < m; ++r) total = checked_add(total, (apery[r] - r) / m);
    return total;
}
std::int64_t genus(const GeneratorSet& g) { return genus(apery_set(g)); }

bool is_member(const AperyTable& apery, std::int64_t n) noexcept {
    return n >= 0 && n >= apery[n % apery.modulus()];
}
bool is_member(const GeneratorSet& g, std::int64_t n) { return is_member(apery_set(g), n); }

bool is_symmetric(const AperyTable& apery) {
    const std::int64_t f = frobenius(apery);
    const bool by_genus = (f % 2 != 0) && 2 * genus(apery) == f + 1;

    bool by_pairing = true;
    if (f <= kPairingScanLimit) {
        for (std::int64_t x = 0; x <= f && by_pairing; ++x)
            by_pairing = is_member(apery, x) != is_member(apery, f - x);
    } else {
        const auto m = apery.modulus();
        const auto top = apery.max_entry();
        for (std::int64_t r = 0; r < m && by_pairing; ++r) {
            const std::int64_t partner = (((top - r) % m) + m) % m;
            by_pairing = apery[r] + apery[partner] == top;
        }
    }
    if (by_genus != by_pairing)
        throw Error(ErrorKind::DefectReport, "symmetry tests disagree (genus test " + std::to_string(by_genus) +
                                                 ", pairing test " + std::to_string(by_pairing) + ")");
    return by_genus;
}
bool is_symmetric(const GeneratorSet& g) { return is_symmetric(apery_set(g)); }

std::optional<std::int64_t> redundant_generator(const GeneratorSet& g) {
    const auto elems = g.elements();
    // member[n]: n is a sum of generators. A generator is redundant when it is
    // already reachable through strictly smaller generators.
    std::vector<char> member(static_cast<std::size_t>(g.largest()) + 1, 0);
    member[0] = 1;
    std::size_t next_gen = 0;
    for (std::int64_t n = 1; n <= g.largest(); ++n) {
        bool reachable = false;
        for (auto d : elems) {
            if (d >= n) break;
            if (member[static_cast<std::size_t>(n - d)]) {
                reachable = true;
                break;
            }
        }
        const bool is_generator = next_gen < elems.size() && elems[next_gen] == n;
        if (is_generator) {
            if (reachable) return n;
            ++next_gen;
        }
        member[static_cast<std::size_t>(n)] = reachable || is_generator;
    }
    return std::nullopt;
}

bool is_minimal_generating_set(const GeneratorSet& g) { return !redundant_generator(g).has_value(); }

}  // namespace nsg
