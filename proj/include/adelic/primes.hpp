#ifndef ADELIC_PRIMES_HPP
#define ADELIC_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace adelic::global {

struct PrimePower {
    long long p;
    int e;
    double ln_p;
    long long value; // p^e
};

struct PrimeTable {
    long long x_max = 0;
    std::vector<long long> primes;       // ascending
    std::vector<PrimePower> prime_powers; // ascending by value
    std::size_t count() const { return primes.size(); }
};

// Segmented sieve of Eratosthenes up to X inclusive.
PrimeTable sieve_primes(long long X);

// Independent slow check: trial-division primes in [lo, hi].
std::vector<long long> trial_division_window(long long lo, long long hi);

} // namespace adelic::global

#endif
