#pragma once

#include <complex>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace tkern {

using cplx = std::complex<double>;

/// Thrown when a computation fails for numerical reasons (as opposed to a
/// malformed request, which throws std::invalid_argument).  The message is
/// prefixed with the name of the subsystem that detected the failure.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

/// Binomial coefficients C(n,k) for n <= 62 computed once in 64-bit integers
/// (C(62,31) still fits) and returned as double.
inline double binom(int n, int k) {
    static const std::vector<std::vector<std::uint64_t>> table = [] {
        std::vector<std::vector<std::uint64_t>> t(63);
        for (int i = 0; i <= 62; ++i) {
            t[i].resize(static_cast<std::size_t>(i) + 1);
            t[i][0] = t[i][static_cast<std::size_t>(i)] = 1;
            for (int j = 1; j < i; ++j)
                t[i][static_cast<std::size_t>(j)] =
                    t[i - 1][static_cast<std::size_t>(j) - 1] + t[i - 1][static_cast<std::size_t>(j)];
        }
        return t;
    }();
    if (k < 0 || n < 0 || k > n) return 0.0;
    if (n > 62) throw std::invalid_argument("binom: order above cached range");
    return static_cast<double>(table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
}

} // namespace detail

/// Number of worker threads for mesh sweeps, taken from the TKERN_THREADS
/// environment variable.  Defaults to 1; results do not depend on the value.
inline unsigned thread_count() {
    if (const char* s = std::getenv("TKERN_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 256) return static_cast<unsigned>(v);
    }
    return 1;
}

/// Runs fn(i) for i in [0, count) split statically over thread_count() threads.
/// Each index is processed exactly once, so writes to disjoint slots are safe.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const unsigned nt = thread_count();
    if (nt <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (unsigned t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += nt) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace tkern
