#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cgt {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using i128 = __int128;
using u128 = unsigned __int128;

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// n = prod p_i^{e_i}, p ascending.
inline std::vector<std::pair<u64, u32>> factorize(u64 n) {
    std::vector<std::pair<u64, u32>> out;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        u32 e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

inline u64 checked_mul(u64 a, u64 b, const char* what = "integer overflow") {
    u128 r = u128(a) * b;
    if (r > u128(~u64(0))) throw std::overflow_error(what);
    return u64(r);
}

inline u64 ipow(u64 base, u32 e) {
    u64 r = 1;
    while (e--) r = checked_mul(r, base, "ipow overflow");
    return r;
}

inline u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

inline u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// floor(sqrt(n)) for 128-bit n, exact.
inline u128 isqrt128(u128 n) {
    if (n == 0) return 0;
    u128 x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

inline std::string i128_to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 x = neg ? u128(-v) : u128(v);
    std::string s;
    while (x) { s.insert(s.begin(), char('0' + int(x % 10))); x /= 10; }
    if (neg) s.insert(s.begin(), '-');
    return s;
}

}  // namespace cgt
