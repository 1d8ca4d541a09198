#include "galdef/factor.hpp"

#include <algorithm>

namespace galdef {

std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    uint128 u = neg ? uint128(-v) : uint128(v);
    std::string s;
    while (u > 0) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw input_error("integer overflow in multiplication");
    return r;
}

int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw input_error("integer overflow in addition");
    return r;
}

int128 checked_pow(int128 base, int exp) {
    GALDEF_CHECK(exp >= 0, "checked_pow needs exp >= 0");
    int128 r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

namespace {

// (a*b) mod m for m up to 2^126, via binary decomposition
uint128 mulmod_u128(uint128 a, uint128 b, uint128 m) {
    a %= m;
    b %= m;
    if (a == 0 || b == 0) return 0;
    if (m <= (uint128(1) << 63)) return (a * b) % m; // fits directly
    uint128 r = 0;
    while (b > 0) {
        if (b & 1) {
            r += a;
            if (r >= m) r -= m;
        }
        a <<= 1;
        if (a >= m) a -= m;
        b >>= 1;
    }
    return r;
}

uint128 powmod_u128(uint128 a, uint128 e, uint128 m) {
    uint128 r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u128(r, a, m);
        a = mulmod_u128(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(uint128 n, uint64_t a) {
    if (n % a == 0) return n == a;
    uint128 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    uint128 x = powmod_u128(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u128(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

bool is_prime_u128(uint128 n) {
    if (n < 2) return false;
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // deterministic for n < 3.3e24; strong probable-prime beyond
    for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41})
        if (!miller_rabin(n, a)) return false;
    return true;
}

uint128 gcd_u128(uint128 a, uint128 b) {
    while (b) {
        uint128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

uint128 pollard_rho(uint128 n) {
    if ((n & 1) == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        uint128 x = 2, y = 2, d = 1;
        auto f = [&](uint128 v) {
            uint128 r = mulmod_u128(v, v, n) + c;
            return r >= n ? r - n : r;
        };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            uint128 diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = gcd_u128(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(uint128 n, std::vector<int128>& out) {
    if (n == 1) return;
    if (is_prime_u128(n)) {
        out.push_back(int128(n));
        return;
    }
    uint128 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

bool is_prime_u64(uint64_t n) { return is_prime_u128(n); }
bool is_prime_i128(int128 n) { return n >= 2 && is_prime_u128(uint128(n)); }

std::vector<int128> prime_factors(int128 n) {
    GALDEF_CHECK(n != 0, "prime_factors needs a nonzero argument");
    uint128 u = n < 0 ? uint128(-n) : uint128(n);
    std::vector<int128> out;
    for (uint64_t p = 2; p < 100000 && uint128(p) * p <= u; ++p) {
        if (u % p == 0) {
            out.push_back(int128(p));
            while (u % p == 0) u /= p;
        }
    }
    if (u > 1) {
        std::vector<int128> big;
        factor_rec(u, big);
        std::sort(big.begin(), big.end());
        big.erase(std::unique(big.begin(), big.end()), big.end());
        out.insert(out.end(), big.begin(), big.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int64_t> primes_up_to(int64_t bound) {
    std::vector<int64_t> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(size_t(bound) + 1, true);
    for (int64_t p = 2; p <= bound; ++p) {
        if (!sieve[size_t(p)]) continue;
        out.push_back(p);
        for (int64_t q = p * p; q <= bound; q += p) sieve[size_t(q)] = false;
    }
    return out;
}

int kronecker_prime(int64_t d, int64_t p) {
    GALDEF_CHECK(is_prime_u64(uint64_t(p)), "kronecker_prime needs a prime");
    if (p == 2) {
        if (d % 2 == 0) return 0;
        int64_t m = ((d % 8) + 8) % 8;
        return (m == 1 || m == 7) ? 1 : -1;
    }
    int64_t a = ((d % p) + p) % p;
    if (a == 0) return 0;
    // Euler criterion
    int64_t r = 1, b = a, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) r = (r * b) % p;
        b = (b * b) % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

bool is_fundamental_discriminant(int64_t d) {
    if (d >= 0) return false;
    auto squarefree = [](int64_t n) {
        n = n < 0 ? -n : n;
        for (int64_t p = 2; p * p <= n; ++p) {
            if (n % (p * p) == 0) return false;
        }
        return true;
    };
    int64_t mod4 = ((d % 4) + 4) % 4;
    if (mod4 == 1) return squarefree(d);
    if (mod4 == 0) {
        int64_t m = d / 4;
        int64_t mmod4 = ((m % 4) + 4) % 4;
        return (mmod4 == 2 || mmod4 == 3) && squarefree(m);
    }
    return false;
}

int64_t gcd_i64(int64_t a, int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace galdef
