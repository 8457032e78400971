// Census enumeration.
//
// Loops run over forms with a > 0 and b <= 0; the canonical representative
// always satisfies both, because (a, b, c, d) -> (a, -b, c, -d) preserves
// reducedness. Bounds (X = xmax):
//
// disc > 0, Hessian (P, Q, R) reduced. With G the cubic covariant,
//   G(1, 0)^2 = (2bP - 3aQ)^2 = 4P^3 - 27 D a^2  and  P <= sqrt(D), so
//   a^2 <= 4 sqrt(X) / 27,  |b| <= sqrt(P) + 3a/2,  1 <= P = b^2 - 3ac <= sqrt(X),
//   |Q| = |bc - 9ad| <= P and R = c^2 - 3bd >= P bound d.
//
// disc < 0, with |D| = 4 a^4 v^2 |theta - phi|^4 and v^2 >= 3/4:
//   a <= (16X/27)^(1/4),  |theta - u| <= (X / 3a^4)^(1/4),  v <= (X / 4a^4)^(1/6),
//   b = -a(theta + 2u),  c = a(2u theta + |phi|^2),
//   and the two translation predicates bound d linearly.
//
// Every bound above is only a necessary condition; each candidate is
// re-checked exactly (reduced, primitive, maximal, irreducible, canonical).

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "cubic/census.hpp"
#include "cubic/kernels/disc_scan.hpp"

namespace cubic {

int cached_prime_index(i64 p) {
    for (std::size_t i = 0; i < kCachedPrimes.size(); ++i)
        if (kCachedPrimes[i] == p) return static_cast<int>(i);
    return -1;
}

void CensusConfig::validate() const {
    if (xmax < 1) throw std::invalid_argument("xmax must be at least 1");
    if (shard_count < 1) throw std::invalid_argument("shard_count must be positive");
    if (!(slack > 0) || !std::isfinite(slack)) throw std::invalid_argument("slack must be positive");
    if (xmax > i64{1'000'000'000'000}) throw std::invalid_argument("xmax beyond supported range");
    for (i64 x : checkpoints) {
        if (x < 1) throw std::invalid_argument("checkpoint must be positive");
        if (x > xmax) throw std::invalid_argument("checkpoint exceeds xmax");
    }
}

std::vector<i64> CensusConfig::resolved_checkpoints() const {
    std::vector<i64> out = checkpoints;
    if (out.empty()) {
        for (i64 x = 10; x <= xmax; x *= 10) out.push_back(x);
        if (out.empty() || out.back() != xmax) out.push_back(xmax);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SplittingSymbol FieldRecord::symbol_at(i64 p) const {
    const int i = cached_prime_index(p);
    if (i >= 0) return splitting[static_cast<std::size_t>(i)];
    return splitting_type(form, p);
}

bool record_less(const FieldRecord& x, const FieldRecord& y) {
    const i64 ax = abs64(x.disc), ay = abs64(y.disc);
    if (ax != ay) return ax < ay;
    return x.form < y.form;
}

FieldRecord make_record(const BinaryCubicForm& f) {
    FieldRecord r;
    r.form = f;
    r.disc = narrow_i64(discriminant(f));
    r.cyclic = is_perfect_square(r.disc);
    for (std::size_t i = 0; i < kCachedPrimes.size(); ++i) r.splitting[i] = splitting_type(f, kCachedPrimes[i]);
    return r;
}

namespace {

constexpr double kEps = 1e-9;

// [lo, hi] widened about its centre by `slack`.
struct Range {
    double lo, hi;
    Range scaled(double slack) const {
        const double mid = (lo + hi) / 2, half = (hi - lo) / 2 * slack;
        return {mid - half, mid + half};
    }
    i64 first() const { return static_cast<i64>(std::floor(lo - kEps)); }
    i64 last() const { return static_cast<i64>(std::ceil(hi + kEps)); }
};

class ShardWorker {
public:
    ShardWorker(const CensusConfig& cfg, int shard)
        : cfg_(cfg),
          shard_(shard),
          x_(static_cast<double>(cfg.xmax)),
          finder_(i128{cfg.xmax}),
          scan_(kernels::scan_window()) {}

    std::vector<FieldRecord> run() {
        if (cfg_.sign == Sign::Positive) run_positive(); else run_negative();
        return std::move(out_);
    }

private:
    // (a, b) pairs are dealt round-robin in loop order
    bool owns() {
        return (pair_index_++ % static_cast<std::size_t>(cfg_.shard_count)) == static_cast<std::size_t>(shard_);
    }

    void run_positive() {
        const double s = cfg_.slack;
        const double root4 = std::pow(x_, 0.25);
        const double sqrt_x = std::sqrt(x_);
        const i64 amax = static_cast<i64>(std::floor(s * std::pow(16.0 * x_ / 729.0, 0.25) + kEps));
        for (i64 a = 1; a <= amax; ++a) {
            const i64 bmax = static_cast<i64>(std::floor(s * (root4 + 1.5 * a) + kEps));
            for (i64 b = -bmax; b <= 0; ++b) {
                if (!owns()) continue;
                double pmin = std::max(1.0, std::cbrt(27.0 * a * a / 4.0));
                if (const double excess = -b - 1.5 * a; excess > 0) pmin = std::max(pmin, excess * excess);
                if (pmin > sqrt_x * s + kEps) continue;
                const double b2 = static_cast<double>(b) * b;
                const Range cr = Range{(b2 - sqrt_x) / (3.0 * a), (b2 - pmin) / (3.0 * a)}.scaled(s);
                for (i64 c = cr.first(); c <= cr.last(); ++c) positive_column(a, b, c);
            }
        }
    }

    void positive_column(i64 a, i64 b, i64 c) {
        const double s = cfg_.slack;
        const i64 p = b * b - 3 * a * c;
        if (p < 1) return;
        i64 lo = ceil_div(b * c - p, 9 * a);
        i64 hi = floor_div(b * c + p, 9 * a);
        if (s != 1.0) {
            const Range r = Range{static_cast<double>(lo), static_cast<double>(hi)}.scaled(s);
            lo = r.first();
            hi = r.last();
        }
        if (b < 0) {
            i64 r_lo = ceil_div(p - c * c, -3 * b);
            if (s != 1.0) r_lo -= static_cast<i64>(std::ceil((s - 1.0) * static_cast<double>(hi - lo + 1)));
            lo = std::max(lo, r_lo);
        } else if (c * c < p) {
            return;
        }
        // disc(d) = -27a^2 d^2 + b1 d + c0 > 0 between its roots
        const double b1 = 18.0 * a * b * c - 4.0 * b * b * b;
        const double c0 = static_cast<double>(b) * b * c * c - 4.0 * a * static_cast<double>(c) * c * c;
        const double disc_q = b1 * b1 + 108.0 * a * a * c0;
        if (disc_q <= 0 && s == 1.0) return;
        const double root = std::sqrt(std::max(disc_q, 0.0));
        const Range dr = Range{(b1 - root) / (54.0 * a * a) - 1, (b1 + root) / (54.0 * a * a) + 1}.scaled(s);
        lo = std::max(lo, dr.first());
        hi = std::min(hi, dr.last());
        scan_column(a, b, c, lo, hi, 1, cfg_.xmax);
    }

    void run_negative() {
        const double s = cfg_.slack;
        const i64 amax = static_cast<i64>(std::floor(s * std::pow(16.0 * x_ / 27.0, 0.25) + kEps));
        const double b_root = std::pow(x_ / 3.0, 0.25);
        for (i64 a = 1; a <= amax; ++a) {
            const double a4 = std::pow(static_cast<double>(a), 4);
            const double t = std::pow(x_ / (3.0 * a4), 0.25);
            const double v2 = std::cbrt(x_ / (4.0 * a4));
            const i64 bmax = static_cast<i64>(std::floor(s * (b_root + 1.5 * a) + kEps));
            for (i64 b = -bmax; b <= 0; ++b) {
                if (!owns()) continue;
                const double beta = -static_cast<double>(b) / a;
                Range theta{std::max(beta - 1, (beta - 2 * t) / 3), std::min(beta + 1, (beta + 2 * t) / 3)};
                if (theta.lo > theta.hi + kEps && s <= 1.0) continue;
                if (theta.lo > theta.hi) theta = {theta.hi, theta.lo};
                theta = theta.scaled(s);
                const double tmax = std::max(std::fabs(theta.lo), std::fabs(theta.hi));
                const Range cr = Range{a * (1 - tmax), a * (tmax + 0.25 + v2)}.scaled(s);
                for (i64 c = cr.first(); c <= cr.last(); ++c) negative_column(a, b, c);
            }
        }
    }

    void negative_column(i64 a, i64 b, i64 c) {
        const double s = cfg_.slack;
        // F(p, a) = a p^3 + b a p^2 + c a^2 p + d a^3
        auto d_free = [&](i64 p) { return a * p * p * p + b * a * p * p + c * a * a * p; };
        const i64 a3 = a * a * a;
        i64 hi = floor_div(-d_free(-b - a), a3);
        i64 lo = ceil_div(-d_free(a - b), a3);
        if (s != 1.0) {
            const Range r = Range{static_cast<double>(lo), static_cast<double>(hi)}.scaled(s);
            lo = r.first();
            hi = r.last();
        }
        if (lo > hi) return;
        // disc(d) >= -X between the roots of -27a^2 d^2 + b1 d + c0 + X
        const double b1 = 18.0 * a * b * c - 4.0 * b * b * b;
        const double c0 = static_cast<double>(b) * b * c * c - 4.0 * a * static_cast<double>(c) * c * c;
        const double disc_q = b1 * b1 + 108.0 * a * a * (c0 + x_);
        if (disc_q < 0 && s == 1.0) return;
        const double root = std::sqrt(std::max(disc_q, 0.0));
        const Range dr = Range{(b1 - root) / (54.0 * a * a) - 1, (b1 + root) / (54.0 * a * a) + 1}.scaled(s);
        lo = std::max(lo, dr.first());
        hi = std::min(hi, dr.last());
        scan_column(a, b, c, lo, hi, -cfg_.xmax, -1);
    }

    // Candidates (a, b, c, d), lo <= d <= hi, with window_lo <= disc <= window_hi.
    void scan_column(i64 a, i64 b, i64 c, i64 lo, i64 hi, i64 window_lo, i64 window_hi) {
        if (lo > hi) return;
        const i128 qa = i128{-27} * a * a;
        const i128 qb = i128{18} * a * b * c - i128{4} * b * b * b;
        const i128 qc = i128{b} * b * c * c - i128{4} * a * c * c * c;
        auto value = [&](i128 d) { return (qa * d + qb) * d + qc; };
        constexpr i128 kLimit = i128{1} << 61;
        const i128 vertex = qb / (-2 * qa);
        auto fits = [&](i128 d) {
            const i128 v = value(d);
            return v < kLimit && v > -kLimit;
        };
        const bool small = hi - lo < (i64{1} << 30) && fits(lo) && fits(hi) &&
                           (vertex < lo || vertex > hi || (fits(vertex) && fits(vertex + 1)));
        if (!small) {
            for (i64 d = lo; d <= hi; ++d) {
                const i128 v = value(d);
                if (v >= window_lo && v <= window_hi) candidate({a, b, c, d});
            }
            return;
        }
        kernels::QuadraticWindow w;
        w.value = static_cast<i64>(value(lo));
        w.delta = static_cast<i64>(value(lo + 1) - value(lo));
        w.second = static_cast<i64>(2 * qa);
        w.count = hi - lo + 1;
        w.lo = window_lo;
        w.hi = window_hi;
        hits_.resize(static_cast<std::size_t>(w.count));
        const std::size_t n = scan_(w, hits_.data());
        for (std::size_t i = 0; i < n; ++i) candidate({a, b, c, lo + hits_[i]});
    }

    void candidate(const BinaryCubicForm& f) {
        if (!is_primitive(f)) return;
        if (!has_reduced_covariant(f)) return;
        const i128 disc = discriminant(f);
        primes_.clear();
        finder_.find(disc, primes_);
        for (i64 p : primes_)
            if (!is_maximal_at(f, p)) return;
        if (!is_irreducible(f)) return;
        if (!is_canonical_reduced(f)) return;
        out_.push_back(make_record(f));
    }

    const CensusConfig& cfg_;
    const int shard_;
    const double x_;
    const SquareDivisorFinder finder_;
    const kernels::ScanFn scan_;
    std::size_t pair_index_ = 0;
    std::vector<i64> hits_;
    std::vector<i64> primes_;
    std::vector<FieldRecord> out_;
};

}  // namespace

std::vector<FieldRecord> enumerate(const CensusConfig& config) {
    config.validate();
    const int shards = config.shard_count;
    std::vector<std::vector<FieldRecord>> parts(static_cast<std::size_t>(shards));
    if (shards == 1) {
        parts[0] = ShardWorker(config, 0).run();
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(parts.size());
        std::vector<std::exception_ptr> errors(parts.size());
        for (int k = 0; k < shards; ++k) {
            threads.emplace_back([&, k] {
                try {
                    parts[static_cast<std::size_t>(k)] = ShardWorker(config, k).run();
                } catch (...) {
                    errors[static_cast<std::size_t>(k)] = std::current_exception();
                }
            });
        }
        threads.clear();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    std::vector<FieldRecord> out;
    out.reserve(total);
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end(), record_less);
    return out;
}

std::size_t CensusSummary::checkpoint_index(i64 x) const {
    const auto it = std::find(checkpoints.begin(), checkpoints.end(), x);
    if (it == checkpoints.end()) throw std::out_of_range("no such checkpoint");
    return static_cast<std::size_t>(it - checkpoints.begin());
}

CensusSummary tally(const std::vector<FieldRecord>& records, const CensusConfig& config) {
    config.validate();
    CensusSummary sum;
    sum.sign = config.sign;
    sum.xmax = config.xmax;
    sum.checkpoints = config.resolved_checkpoints();
    const std::size_t nc = sum.checkpoints.size();
    sum.total.assign(nc, 0);
    sum.cyclic.assign(nc, 0);
    sum.noncyclic_symbols.assign(nc, {});
    sum.cyclic_symbols.assign(nc, {});

    // per-record increments land in the first checkpoint >= |disc|, then a
    // prefix sum makes them cumulative
    i64 prev = 0;
    i64 run_disc = 0;
    int run_len = 0;
    auto close_run = [&] {
        if (run_len > 0) ++sum.multiplicity_histogram[run_len];
        run_len = 0;
    };
    std::size_t slot = 0;
    for (const auto& r : records) {
        const i64 n = abs64(r.disc);
        if (n < prev) throw std::invalid_argument("tally: records are not sorted by |disc|");
        if (n == 0 || n > config.xmax) throw std::invalid_argument("tally: record outside census range");
        if ((r.disc < 0) != (config.sign == Sign::Negative)) throw std::invalid_argument("tally: record of wrong sign");
        prev = n;
        while (slot < nc && sum.checkpoints[slot] < n) ++slot;
        if (!r.cyclic) {
            if (n != run_disc) {
                close_run();
                run_disc = n;
            }
            ++run_len;
        }
        if (slot == nc) continue;
        ++sum.total[slot];
        auto& grid = r.cyclic ? sum.cyclic_symbols[slot] : sum.noncyclic_symbols[slot];
        if (r.cyclic) ++sum.cyclic[slot];
        for (std::size_t i = 0; i < kCachedPrimes.size(); ++i) ++grid[i][static_cast<std::size_t>(r.splitting[i])];
    }
    close_run();
    for (std::size_t k = 1; k < nc; ++k) {
        sum.total[k] += sum.total[k - 1];
        sum.cyclic[k] += sum.cyclic[k - 1];
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 5; ++j) {
                sum.noncyclic_symbols[k][i][j] += sum.noncyclic_symbols[k - 1][i][j];
                sum.cyclic_symbols[k][i][j] += sum.cyclic_symbols[k - 1][i][j];
            }
    }
    return sum;
}

bool verify_slack(const CensusConfig& config) {
    CensusConfig base = config;
    base.slack = 1.0;
    return enumerate(base) == enumerate(config);
}

}  // namespace cubic
