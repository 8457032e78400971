#include "cubic/arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

namespace cubic {

i64 gcd64(i64 x, i64 y) { return std::gcd(x, y); }

u64 isqrt(u64 n) {
    auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

u64 icbrt(u64 n) {
    auto r = static_cast<u64>(std::cbrt(static_cast<long double>(n)));
    auto cube = [](u64 v) { return static_cast<unsigned __int128>(v) * v * v; };
    while (r > 0 && cube(r) > n) --r;
    while (cube(r + 1) <= n) ++r;
    return r;
}

bool is_perfect_square(i128 n) {
    if (n < 0) return false;
    if (n > static_cast<i128>(UINT64_MAX)) {
        // only reachable for huge discriminants; long double sqrt then refine
        auto r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
        while (r * r > n) --r;
        while ((r + 1) * (r + 1) <= n) ++r;
        return r * r == n;
    }
    auto u = static_cast<u64>(n);
    u64 r = isqrt(u);
    return r * r == u;
}

int valuation(i128 n, i64 p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

namespace {

struct PrimeTable {
    std::mutex mu;
    std::vector<i64> primes;
    i64 limit = 1;
};

PrimeTable& table() {
    static PrimeTable t;
    return t;
}

}  // namespace

std::span<const i64> primes_up_to(i64 limit) {
    auto& t = table();
    std::lock_guard lock(t.mu);
    if (limit > t.limit) {
        i64 n = std::max<i64>(limit, 2 * t.limit);
        std::vector<char> composite(static_cast<std::size_t>(n + 1), 0);
        std::vector<i64> ps;
        for (i64 i = 2; i <= n; ++i) {
            if (composite[i]) continue;
            ps.push_back(i);
            for (i64 j = i * i; j <= n; j += i) composite[j] = 1;
        }
        // spans handed out earlier must stay valid
        static std::vector<std::vector<i64>> retired;
        retired.push_back(std::move(t.primes));
        t.primes = std::move(ps);
        t.limit = n;
    }
    auto end = std::upper_bound(t.primes.begin(), t.primes.end(), limit);
    return {t.primes.data(), static_cast<std::size_t>(end - t.primes.begin())};
}

SquareDivisorFinder::SquareDivisorFinder(i128 max_abs)
    : max_abs_(max_abs),
      primes_(primes_up_to(std::max<i64>(static_cast<i64>(icbrt(static_cast<u64>(max_abs))), 2))) {}

void SquareDivisorFinder::find(i128 n, std::vector<i64>& out) const {
    if (n < 0) n = -n;
    if (n == 0) throw std::domain_error("square_divisor_primes of zero");
    if (n > max_abs_) throw std::domain_error("factorization bound exceeded");
    const std::size_t first = out.size();
    auto m = static_cast<u64>(n);
    const auto bound = static_cast<i64>(icbrt(m));
    for (i64 p : primes_) {
        if (p > bound) break;
        const auto up = static_cast<u64>(p);
        if (m % up != 0) continue;
        m /= up;
        if (m % up == 0) {
            out.push_back(p);
            while (m % up == 0) m /= up;
        }
    }
    // cofactor has at most two prime factors, all above the cube root
    if (m > 1) {
        u64 r = isqrt(m);
        if (r * r == m) out.push_back(static_cast<i64>(r));
    }
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
}

std::vector<i64> square_divisor_primes(i128 n, i128 max_abs) {
    std::vector<i64> out;
    SquareDivisorFinder(max_abs).find(n, out);
    return out;
}

}  // namespace cubic
