#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "dessin/algebra/laurent.hpp"
#include "dessin/npoint.hpp"

namespace dessin::virasoro {

using algebra::Poly;

/// (genus, sorted parts) memo key.
struct PartitionKey {
    int genus = 0;
    std::vector<int> parts;

    PartitionKey(int g, std::vector<int> a);
    friend auto operator<=>(const PartitionKey&, const PartitionKey&) = default;
};

/// Which part of A the recursion eliminates.
enum class Strategy { largest, smallest };

/// Memoized bare correlators D_g(A) = ∂^n F_g/∂p_{a_1}⋯∂p_{a_n} at p = 0,
/// computed from the Virasoro constraints. Public methods are safe to call
/// from several threads (one lock serializes writers and readers).
class CorrelatorTable {
public:
    explicit CorrelatorTable(Strategy strategy = Strategy::largest);
    CorrelatorTable(const CorrelatorTable& other);
    CorrelatorTable& operator=(const CorrelatorTable& other);

    /// D_g(A); A is any nonempty multiset of positive integers.
    Poly raw(int g, std::vector<int> parts);
    /// (∏ a_i)·D_g(A): the coefficient of ∏ x_i^(−a_i−1) in G_{g,n}.
    Poly weighted(int g, std::vector<int> parts);

    Strategy strategy() const { return strategy_; }
    std::size_t size() const;
    std::uint64_t hits() const;
    std::uint64_t misses() const;
    std::map<PartitionKey, Poly> entries() const;

    /// Inserts entries (e.g. from a cache); existing keys must agree.
    void merge(const std::map<PartitionKey, Poly>& entries);

private:
    const Poly& compute(int g, const std::vector<int>& sorted);
    Poly eliminate(int g, const std::vector<int>& sorted);

    Strategy strategy_;
    std::map<PartitionKey, Poly> memo_;
    std::uint64_t hits_ = 0;
    std::uint64_t misses_ = 0;
    std::unique_ptr<std::mutex> lock_;
};

/// All weighted correlators of G_{g,n} through total inverse-x degree `order`.
NPointSeries npoint_series(CorrelatorTable& table, int g, int n, int order);

/// Σ_g n·D_g({n}) over 0 ≤ g ≤ ⌊(n−1)/2⌋.
Poly one_point_all_genus(CorrelatorTable& table, int n);

/// Closed-form all-genus one-point coefficient from the KP tau-function,
/// evaluated directly (no recursion).
Poly kp_one_point(int n);

/// G_{g,n+1} rebuilt from the operator form of the constraints, using the
/// closed forms of G_{0,1} and G_{0,2} as seeds and recursing on lower
/// (g, n). Independent of CorrelatorTable.
NPointSeries assemble_operator_form(int g, int n, int order);

/// Versioned JSON cache of a correlator table.
inline constexpr int kCacheVersion = 1;
void cache_save(const CorrelatorTable& table, const std::filesystem::path& path);
/// Throws std::runtime_error on a missing, corrupt or mismatched file; never
/// returns a partially loaded table.
std::map<PartitionKey, Poly> cache_load(const std::filesystem::path& path);

}  // namespace dessin::virasoro
