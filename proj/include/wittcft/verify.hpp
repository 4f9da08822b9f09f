#pragma once

// The eight acceptance suites, shared by `verify-all` and the acceptance test.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "wittcft/arithmetic.hpp"

namespace wittcft {

struct VerifyConfig {
    std::uint64_t seed = 20240611;
    unsigned jobs = 1;
    i64 cyclotomic_bound = 40;   // n_max for the splitting and bridge grids
    i64 max_prime = 50;          // primes p < max_prime in those grids
    i64 reciprocity_bound = 100; // odd primes p, q < bound
    int witt_samples = 200;
    int ghost_precision = 12;
    int descent_samples = 100;
    int equivariance_samples = 500;
    int roundtrip_samples = 50;
};

struct SuiteResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::size_t cases = 0;
    std::size_t failures = 0;
    double seconds = 0;
    double limit_seconds = 0;  // 0 when the suite has no time limit
    std::vector<std::string> failure_samples;

    bool within_limit() const { return limit_seconds <= 0 || seconds < limit_seconds; }
    /// "criterion 4 [splitting double oracle]: PASS (1230 cases, 0 failures, 0.41 s < 20 s)".
    std::string summary_line() const;
};

/// Generator for case `index` of suite `suite`; independent of the worker count.
std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t suite, std::uint64_t index);

/// Runs fn(i) for i < count on up to `jobs` threads; results come back in index order.
template <class T>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(count);
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    out[i] = fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

int suite_count();
SuiteResult run_suite(int id, const VerifyConfig& config);
std::vector<SuiteResult> run_all_suites(const VerifyConfig& config);

} // namespace wittcft
