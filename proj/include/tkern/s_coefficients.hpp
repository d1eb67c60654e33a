#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "tkern/common.hpp"

namespace tkern {

using big_int = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;

/// Index of one coefficient in the derivative-expansion table: level n,
/// nesting depth ell, plain-derivative order d, and a nondecreasing list of
/// ell inner derivative orders.  Valid lists satisfy
/// n = 2*ell + d + sum(parts) with all entries nonnegative.
struct ParameterList {
    int n = 0;
    int ell = 0;
    int d = 0;
    std::vector<int> parts;

    [[nodiscard]] bool valid() const {
        if (n < 0 || ell < 0 || d < 0) return false;
        if (static_cast<int>(parts.size()) != ell) return false;
        long sum = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 0) return false;
            if (i > 0 && parts[i] < parts[i - 1]) return false;
            sum += parts[i];
        }
        return sum + 2L * ell + d == n;
    }
};

/// Lists for level n ordered by ell, then d, then the parts lexicographically.
inline std::vector<ParameterList> enumerate_parameter_lists(int n) {
    if (n < 0) throw std::invalid_argument("s_table: negative level");
    std::vector<ParameterList> out;
    std::vector<int> parts;
    // Emits nondecreasing part lists of the given length and sum, smallest
    // entry bounded below by lo, in lexicographic order.
    auto emit = [&](auto&& self, int remaining, int slots, int lo, int ell, int d) -> void {
        if (slots == 0) {
            if (remaining == 0) out.push_back({n, ell, d, parts});
            return;
        }
        for (int v = lo; v * slots <= remaining; ++v) {
            parts.push_back(v);
            self(self, remaining - v, slots - 1, v, ell, d);
            parts.pop_back();
        }
    };
    for (int ell = 0; 2 * ell <= n; ++ell) {
        for (int d = 0; d <= n - 2 * ell; ++d) {
            parts.clear();
            emit(emit, n - 2 * ell - d, ell, 0, ell, d);
        }
    }
    return out;
}

namespace detail {

inline big_int binom_big(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    big_int acc = 1;
    for (long j = 1; j <= k; ++j) {
        acc *= n - k + j;
        acc /= j;
    }
    return acc;
}

} // namespace detail

/// Table of the integer coefficients appearing in the expansion of repeated
/// directional derivatives of the kernel along the characteristic directions.
/// Level 0 holds the single exceptional value 1/2; all higher levels are
/// integers built by the two-term recurrence.
class SCoefficientTable {
public:
    explicit SCoefficientTable(int n_max) : n_max_(n_max) {
        if (n_max < 0) throw std::invalid_argument("s_table: negative maximum level");
        levels_.resize(static_cast<std::size_t>(n_max) + 1);
        if (n_max >= 1) levels_[1][Key{0, 1, {}}] = 1;
        for (int lv = 1; lv < n_max; ++lv) fill_level(lv + 1);
    }

    [[nodiscard]] int n_max() const { return n_max_; }

    /// Integer value for a level >= 1 list; unknown or invalid lists are 0.
    [[nodiscard]] big_int integer_value(const ParameterList& p) const {
        if (p.n < 1 || p.n > n_max_) throw std::invalid_argument("s_table: level out of range");
        if (!p.valid()) return 0;
        return lookup(p.n, p.ell, p.d, p.parts);
    }

    /// Value as a rational so the level-0 entry 1/2 is representable.
    [[nodiscard]] big_rational value(const ParameterList& p) const {
        if (p.n == 0) {
            if (p.ell == 0 && p.d == 0 && p.parts.empty()) return big_rational(1, 2);
            return 0;
        }
        return big_rational(integer_value(p));
    }

    /// Number of stored lists at a level (level 0 counts its single entry).
    [[nodiscard]] std::size_t level_count(int n) const {
        if (n < 0 || n > n_max_) throw std::invalid_argument("s_table: level out of range");
        if (n == 0) return 1;
        return levels_[static_cast<std::size_t>(n)].size();
    }

    /// Dumps every entry as {"n","ell","d","parts","value"} with the value in
    /// decimal digits (the level-0 entry is written as "1/2").
    [[nodiscard]] nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        arr.push_back({{"n", 0}, {"ell", 0}, {"d", 0}, {"parts", nlohmann::json::array()}, {"value", "1/2"}});
        for (int n = 1; n <= n_max_; ++n) {
            for (const auto& list : enumerate_parameter_lists(n)) {
                nlohmann::ordered_json e;
                e["n"] = n;
                e["ell"] = list.ell;
                e["d"] = list.d;
                e["parts"] = list.parts;
                e["value"] = lookup(n, list.ell, list.d, list.parts).str();
                arr.push_back(std::move(e));
            }
        }
        return arr;
    }

private:
    using Key = std::tuple<int, int, std::vector<int>>;

    [[nodiscard]] big_int lookup(int n, int ell, int d, const std::vector<int>& parts) const {
        if (n < 1 || n > n_max_ || ell < 0 || d < 0) return 0;
        const auto& lv = levels_[static_cast<std::size_t>(n)];
        const auto it = lv.find(Key{ell, d, parts});
        return it == lv.end() ? big_int(0) : it->second;
    }

    void fill_level(int n) {
        // Builds level n from level n-1.  The doubling factor on the first
        // term applies exactly when the target d equals 1, with the parity
        // taken from the source level.
        auto& lv = levels_[static_cast<std::size_t>(n)];
        const int src = n - 1;
        const big_int factor = (src % 2 == 0) ? 2 : 0;
        for (const auto& list : enumerate_parameter_lists(n)) {
            big_int acc = 0;
            if (list.d >= 1) {
                const big_int base = lookup(src, list.ell, list.d - 1, list.parts);
                acc += (list.d == 1) ? factor * base : base;
            }
            int prev = -1;
            for (std::size_t k = 0; k < list.parts.size(); ++k) {
                const int v = list.parts[k];
                if (v == prev) continue; // each distinct value enters once
                prev = v;
                std::vector<int> rest;
                rest.reserve(list.parts.size() - 1);
                for (std::size_t j = 0; j < list.parts.size(); ++j)
                    if (j != k) rest.push_back(list.parts[j]);
                acc += detail::binom_big(list.d + v, v) * lookup(src, list.ell - 1, list.d + v + 1, rest);
            }
            if (acc != 0) lv[Key{list.ell, list.d, list.parts}] = std::move(acc);
        }
    }

    int n_max_ = 0;
    std::vector<std::map<Key, big_int>> levels_;
};

/// Closed-form evaluation of a single coefficient by summing over distinct
/// permutations of the parts with nested bounded sums; defined for ell >= 1.
/// Exponentially slower than the table but entirely independent of it.
inline big_int s_direct(const ParameterList& p) {
    if (p.ell < 1) throw std::invalid_argument("s_table: direct formula needs ell >= 1");
    if (!p.valid()) throw std::invalid_argument("s_table: invalid parameter list");
    std::vector<int> sigma = p.parts;
    std::sort(sigma.begin(), sigma.end());
    const int ell = p.ell;
    big_int total = 0;
    do {
        // suffix_par[i] = (-1)^(sigma_i + ... + sigma_ell), 0-based.
        std::vector<int> suffix_par(static_cast<std::size_t>(ell) + 1, 1);
        for (int i = ell - 1; i >= 0; --i)
            suffix_par[static_cast<std::size_t>(i)] =
                (sigma[static_cast<std::size_t>(i)] % 2 == 0 ? 1 : -1) * suffix_par[static_cast<std::size_t>(i) + 1];
        // Depth-first walk over d_1..d_ell with d_1 <= d and
        // d_(i+1) <= d_i + sigma_i + 1.
        auto walk = [&](auto&& self, int i, int upper, big_int prefix) -> void {
            if (i == ell) {
                total += prefix;
                return;
            }
            const int s = sigma[static_cast<std::size_t>(i)];
            for (int di = 0; di <= upper; ++di) {
                big_int fac = detail::binom_big(di + s, s);
                if (di == 0 && !(p.d == 0 && i == 0)) {
                    // the parity doubling factor 1 + (-1)^suffix, suppressed
                    // for the first step when d = 0
                    fac *= 1 + suffix_par[static_cast<std::size_t>(i)];
                    if (fac == 0) continue;
                }
                self(self, i + 1, di + s + 1, prefix * fac);
            }
        };
        walk(walk, 0, p.d, big_int(1));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

} // namespace tkern
