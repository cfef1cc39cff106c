#include "adelic/primes.hpp"

#include <algorithm>
#include <cmath>

#include "adelic/errors.hpp"

namespace adelic::global {

PrimeTable sieve_primes(long long X) {
    if (X < 2) throw config_error("sieve bound must be >= 2");
    PrimeTable t;
    t.x_max = X;
    const long long root = (long long)std::sqrt(double(X)) + 1;
    std::vector<bool> small(root + 1, true);
    std::vector<long long> base;
    for (long long i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (long long j = i * i; j <= root; j += i) small[j] = false;
    }
    const long long seg = 1 << 16;
    std::vector<bool> block;
    for (long long lo = 2; lo <= X; lo += seg) {
        const long long hi = std::min(X, lo + seg - 1);
        block.assign(hi - lo + 1, true);
        for (const long long p : base) {
            if (p * p > hi) break;
            long long start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (long long j = start; j <= hi; j += p) block[j - lo] = false;
        }
        for (long long v = lo; v <= hi; ++v)
            if (block[v - lo] && v >= 2) t.primes.push_back(v);
    }
    for (const long long p : t.primes) {
        const double lp = std::log(double(p));
        long long v = p;
        int e = 1;
        while (v <= X) {
            t.prime_powers.push_back({p, e, lp, v});
            if (v > X / p) break;
            v *= p;
            ++e;
        }
    }
    std::sort(t.prime_powers.begin(), t.prime_powers.end(),
              [](const PrimePower& a, const PrimePower& b) {
                  return a.value < b.value;
              });
    return t;
}

std::vector<long long> trial_division_window(long long lo, long long hi) {
    std::vector<long long> out;
    for (long long n = std::max<long long>(2, lo); n <= hi; ++n) {
        bool prime = n >= 2;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                prime = false;
                break;
            }
        if (prime) out.push_back(n);
    }
    return out;
}

} // namespace adelic::global
