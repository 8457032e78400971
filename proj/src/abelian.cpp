#include "cubic/abelian.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace cubic {

bool RefinedClass::admits(const FieldRecord& r) const {
    if (infinity && (r.disc > 0) != (*infinity == Sign::Positive)) return false;
    for (const auto& [p, s] : local)
        if (r.symbol_at(p) != s) return false;
    return true;
}

std::string RefinedClass::describe() const {
    std::string out;
    if (infinity) out += std::string("inf:") + sign_char(*infinity);
    for (const auto& [p, s] : local) {
        if (!out.empty()) out += ' ';
        out += std::to_string(p) + ":" + std::string(to_label(s));
    }
    return out.empty() ? "{}" : out;
}

std::optional<std::vector<i64>> conductor_factors(i64 f) {
    if (f < 2) return std::nullopt;
    std::vector<i64> out;
    if (f % 3 == 0) {
        if (f % 9 != 0 || f % 27 == 0) return std::nullopt;
        out.push_back(9);
        f /= 9;
    }
    for (i64 q = 2; q * q <= f; ++q) {
        if (f % q != 0) continue;
        f /= q;
        if (f % q == 0 || q % 3 != 1) return std::nullopt;
        out.push_back(q);
    }
    if (f > 1) {
        if (f % 3 != 1) return std::nullopt;
        out.push_back(f);
    }
    return out;
}

std::vector<i64> conductors_up_to(i64 fmax) {
    std::vector<i64> out;
    if (fmax < 7) return out;
    // smallest prime factor sieve
    std::vector<std::int32_t> spf(static_cast<std::size_t>(fmax + 1), 0);
    for (i64 i = 2; i <= fmax; ++i) {
        if (spf[i] != 0) continue;
        for (i64 j = i; j <= fmax; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::int32_t>(i);
    }
    for (i64 f = 7; f <= fmax; ++f) {
        i64 m = f;
        if (m % 3 == 0) {
            if (m % 9 != 0 || m % 27 == 0) continue;
            m /= 9;
        }
        bool ok = true;
        while (m > 1 && ok) {
            const i64 q = spf[m];
            m /= q;
            ok = q % 3 == 1 && m % q != 0;
        }
        if (ok) out.push_back(f);
    }
    return out;
}

std::vector<CyclicFieldLabel> labels_with_conductor(i64 f) {
    std::vector<CyclicFieldLabel> out;
    const auto factors = conductor_factors(f);
    if (!factors) return out;
    const std::uint32_t n = std::uint32_t{1} << (factors->size() - 1);
    for (std::uint32_t k = 0; k < n; ++k) out.push_back({f, *factors, k << 1});
    return out;
}

i64 count_f(i64 x) {
    if (x < 1) throw std::invalid_argument("count_f: x must be positive");
    i64 total = 0;
    for (i64 f : conductors_up_to(static_cast<i64>(isqrt(static_cast<u64>(x)))))
        total += i64{1} << (conductor_factors(f)->size() - 1);
    return total;
}

i64 a_coefficient(i64 n) {
    if (n < 1) throw std::invalid_argument("a_coefficient: n must be positive");
    if (!is_perfect_square(n)) return 0;
    const auto factors = conductor_factors(static_cast<i64>(isqrt(static_cast<u64>(n))));
    return factors ? i64{1} << (factors->size() - 1) : 0;
}

namespace {

i64 pow_mod(i64 base, i64 e, i64 m) {
    i128 result = 1, b = mod_floor(base, m);
    for (; e > 0; e >>= 1) {
        if (e & 1) result = result * b % m;
        b = b * b % m;
    }
    return static_cast<i64>(result);
}

// Index in Z/3 of the unit p under a fixed cubic character of (Z/q)^*.
int cubic_index(i64 q, i64 p) {
    if (q == 9) {
        // (Z/9)^* is cyclic of order 6 generated by 2: 1 2 4 8 7 5
        constexpr int kLog[9] = {-1, 0, 1, -1, 2, 5, -1, 4, 3};
        return kLog[mod_floor(p, 9)] % 3;
    }
    const i64 e = (q - 1) / 3;
    i64 omega = 1;
    for (i64 h = 2; omega == 1; ++h) omega = pow_mod(h, e, q);
    // pin the smaller primitive cube root of unity
    omega = std::min(omega, static_cast<i64>(i128{omega} * omega % q));
    const i64 r = pow_mod(p, e, q);
    if (r == 1) return 0;
    return r == omega ? 1 : 2;
}

}  // namespace

SplittingSymbol splitting_in_cyclic(const CyclicFieldLabel& label, i64 p) {
    if (label.conductor % p == 0) return SplittingSymbol::TotallyRamified;
    int sum = 0;
    for (std::size_t i = 0; i < label.factors.size(); ++i) {
        const int exponent = ((label.choice >> i) & 1U) ? 2 : 1;
        sum += exponent * cubic_index(label.factors[i], p);
    }
    return sum % 3 == 0 ? SplittingSymbol::Split : SplittingSymbol::Inert;
}

i64 count_f_alpha(i64 x, const RefinedClass& alpha) {
    if (alpha.infinity == Sign::Negative) return 0;
    for (const auto& [p, s] : alpha.local)
        if (s == SplittingSymbol::PartiallySplit || s == SplittingSymbol::PartiallyRamified) return 0;
    i64 total = 0;
    for (i64 f : conductors_up_to(static_cast<i64>(isqrt(static_cast<u64>(x))))) {
        for (const auto& label : labels_with_conductor(f)) {
            bool ok = true;
            for (const auto& [p, s] : alpha.local) {
                if (splitting_in_cyclic(label, p) != s) {
                    ok = false;
                    break;
                }
            }
            total += ok ? 1 : 0;
        }
    }
    return total;
}

double abelian_growth_constant(i64 prime_bound) {
    long double product = 1;
    for (i64 p : primes_up_to(prime_bound)) {
        if (p % 6 != 1) continue;
        const long double lp = p;
        product *= (lp + 2) * (lp - 1) / (lp * (lp + 1));
    }
    const double b = static_cast<double>(prime_bound);
    const double tail = std::exp(-1.0 / (b * std::log(b)));
    return static_cast<double>(11.0L * std::numbers::sqrt3_v<long double> / (36.0L * std::numbers::pi_v<long double>) *
                               product) * tail;
}

void write_conductor_csv(std::ostream& os, i64 fmax) {
    os << "conductor,t,n_fields,disc\n";
    for (i64 f : conductors_up_to(fmax)) {
        const auto t = conductor_factors(f)->size();
        os << f << ',' << t << ',' << (i64{1} << (t - 1)) << ',' << f * f << '\n';
    }
}

}  // namespace cubic
