#include "dessin/virasoro/correlators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dessin::virasoro {

using algebra::Rational;

namespace {

const Poly& s_poly() {
    static const Poly p = Poly::variable(suv_alphabet(), "s");
    return p;
}
const Poly& u_plus_v() {
    static const Poly p = Poly::variable(suv_alphabet(), "u") + Poly::variable(suv_alphabet(), "v");
    return p;
}
const Poly& suv() {
    static const Poly p =
        Poly::variable(suv_alphabet(), "s") * Poly::variable(suv_alphabet(), "u") * Poly::variable(suv_alphabet(), "v");
    return p;
}

std::vector<int> sorted_with(std::vector<int> base, std::initializer_list<int> extra) {
    base.insert(base.end(), extra.begin(), extra.end());
    std::sort(base.begin(), base.end());
    return base;
}

/// Distinct values of a sorted multiset with their multiplicities.
std::vector<std::pair<int, int>> runs(const std::vector<int>& sorted) {
    std::vector<std::pair<int, int>> out;
    for (int a : sorted) {
        if (!out.empty() && out.back().first == a)
            ++out.back().second;
        else
            out.emplace_back(a, 1);
    }
    return out;
}

}  // namespace

PartitionKey::PartitionKey(int g, std::vector<int> a) : genus(g), parts(std::move(a)) {
    std::sort(parts.begin(), parts.end());
}

CorrelatorTable::CorrelatorTable(Strategy strategy) : strategy_(strategy), lock_(std::make_unique<std::mutex>()) {}

CorrelatorTable::CorrelatorTable(const CorrelatorTable& other)
    : strategy_(other.strategy_), lock_(std::make_unique<std::mutex>()) {
    std::lock_guard guard(*other.lock_);
    memo_ = other.memo_;
    hits_ = other.hits_;
    misses_ = other.misses_;
}

CorrelatorTable& CorrelatorTable::operator=(const CorrelatorTable& other) {
    if (this != &other) {
        CorrelatorTable copy(other);
        std::lock_guard guard(*lock_);
        strategy_ = copy.strategy_;
        memo_ = std::move(copy.memo_);
        hits_ = copy.hits_;
        misses_ = copy.misses_;
    }
    return *this;
}

Poly CorrelatorTable::raw(int g, std::vector<int> parts) {
    if (parts.empty())
        throw std::invalid_argument("raw_correlator: empty index set");
    if (g < 0)
        throw std::invalid_argument("raw_correlator: negative genus");
    for (int a : parts)
        if (a < 1)
            throw std::invalid_argument("raw_correlator: indices must be positive");
    std::sort(parts.begin(), parts.end());
    std::lock_guard guard(*lock_);
    return compute(g, parts);
}

Poly CorrelatorTable::weighted(int g, std::vector<int> parts) {
    Poly d = raw(g, parts);
    const long weight = std::accumulate(parts.begin(), parts.end(), 1L, std::multiplies<>());
    return d * Rational(weight);
}

std::size_t CorrelatorTable::size() const {
    std::lock_guard guard(*lock_);
    return memo_.size();
}

std::uint64_t CorrelatorTable::hits() const {
    std::lock_guard guard(*lock_);
    return hits_;
}

std::uint64_t CorrelatorTable::misses() const {
    std::lock_guard guard(*lock_);
    return misses_;
}

std::map<PartitionKey, Poly> CorrelatorTable::entries() const {
    std::lock_guard guard(*lock_);
    return memo_;
}

void CorrelatorTable::merge(const std::map<PartitionKey, Poly>& entries) {
    std::lock_guard guard(*lock_);
    for (const auto& [key, value] : entries) {
        auto [it, inserted] = memo_.emplace(key, value.embed(suv_alphabet()));
        if (!inserted && !(it->second == value))
            throw std::runtime_error("correlator table merge: conflicting value for genus " +
                                     std::to_string(key.genus) + " parts " + tuple_string(key.parts));
    }
}

const Poly& CorrelatorTable::compute(int g, const std::vector<int>& sorted) {
    PartitionKey key(g, sorted);
    if (auto it = memo_.find(key); it != memo_.end()) {
        ++hits_;
        return it->second;
    }
    ++misses_;
    Poly value = eliminate(g, sorted);
    return memo_.emplace(std::move(key), std::move(value)).first->second;
}

Poly CorrelatorTable::eliminate(int g, const std::vector<int>& sorted) {
    Poly zero(suv_alphabet());
    if (g < 0 || sorted.empty() || sorted.front() < 1)
        return zero;
    std::vector<int> rest(sorted);
    int L;
    if (strategy_ == Strategy::largest) {
        L = rest.back();
        rest.pop_back();
    } else {
        L = rest.front();
        rest.erase(rest.begin());
    }
    const int m = L - 1;
    if (rest.empty() && L == 1)
        return g == 0 ? suv() : zero;

    Poly rhs(suv_alphabet());
    const auto groups = runs(rest);

    // Σ_j (a_j+m)·D_g(A′ with a_j → a_j+m)
    for (std::size_t r = 0; r < groups.size(); ++r) {
        const auto [value, count] = groups[r];
        std::vector<int> shifted(rest);
        *std::find(shifted.begin(), shifted.end(), value) += m;
        std::sort(shifted.begin(), shifted.end());
        const Poly& d = compute(g, shifted);
        if (!d.is_zero())
            rhs += d * Rational(static_cast<long>(count) * (value + m));
    }
    if (m >= 1) {
        const Poly& d = compute(g, sorted_with(rest, {m}));
        if (!d.is_zero())
            rhs += u_plus_v() * d * Rational(m);
    }
    for (int k = 1; k <= m - 1; ++k) {
        const Rational weight(static_cast<long>(k) * (m - k));
        if (g >= 1) {
            const Poly& d = compute(g - 1, sorted_with(rest, {k, m - k}));
            if (!d.is_zero())
                rhs += d * weight;
        }
        // ordered splits A′ = I1 ⊔ I2, enumerated by multiplicity choices
        std::vector<int> choose(groups.size(), 0);
        while (true) {
            std::vector<int> left, right;
            long multiplicity = 1;
            for (std::size_t r = 0; r < groups.size(); ++r) {
                const auto [value, count] = groups[r];
                left.insert(left.end(), static_cast<std::size_t>(choose[r]), value);
                right.insert(right.end(), static_cast<std::size_t>(count - choose[r]), value);
                multiplicity *= algebra::binomial(count, choose[r]).numerator().get_si();
            }
            const auto I1 = sorted_with(left, {k});
            const auto I2 = sorted_with(right, {m - k});
            for (int g1 = 0; g1 <= g; ++g1) {
                const Poly& d1 = compute(g1, I1);
                if (d1.is_zero())
                    continue;
                const Poly& d2 = compute(g - g1, I2);
                if (d2.is_zero())
                    continue;
                rhs += d1 * d2 * (weight * Rational(multiplicity));
            }
            std::size_t r = 0;
            while (r < groups.size() && choose[r] == groups[r].second) {
                choose[r] = 0;
                ++r;
            }
            if (r == groups.size())
                break;
            ++choose[r];
        }
    }
    return rhs * s_poly() * Rational(1, m + 1);
}

NPointSeries npoint_series(CorrelatorTable& table, int g, int n, int order) {
    if (n < 1 || g < 0)
        throw std::invalid_argument("npoint_series: need g ≥ 0 and n ≥ 1");
    NPointSeries out{g, n, order, {}};
    for (const auto& a : index_tuples(n, order)) {
        Poly c = table.weighted(g, a);
        if (!c.is_zero())
            out.coefficients.emplace(a, std::move(c));
    }
    return out;
}

Poly one_point_all_genus(CorrelatorTable& table, int n) {
    if (n < 1)
        throw std::invalid_argument("one_point_all_genus: n must be positive");
    Poly total(suv_alphabet());
    for (int g = 0; 2 * g <= n - 1; ++g)
        total += table.weighted(g, {n});
    return total;
}

Poly kp_one_point(int n) {
    if (n < 1)
        throw std::invalid_argument("kp_one_point: n must be positive");
    const auto& alpha = suv_alphabet();
    const Poly u = Poly::variable(alpha, "u"), v = Poly::variable(alpha, "v");
    const Poly one = Poly::constant(alpha, Rational(1));
    Poly sum(alpha);
    for (int i = 0; i <= n - 1; ++i) {
        const int j = n - 1 - i;
        Poly term = one * ((j % 2 ? Rational(-1) : Rational(1)) / (algebra::factorial(i) * algebra::factorial(j)));
        for (int a = 1; a <= i; ++a)
            term = term * (u + one * Rational(a)) * (v + one * Rational(a));
        for (int b = 1; b <= j; ++b)
            term = term * (u - one * Rational(b)) * (v - one * Rational(b));
        sum += term;
    }
    return sum * Poly::variable(alpha, "s", n) * u * v * Rational(1, n);
}

}  // namespace dessin::virasoro
