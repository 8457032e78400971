#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "cubic/asymptotics.hpp"
#include "cubic/census.hpp"
#include "cubic/special.hpp"

using namespace cubic;

// Reference values below were evaluated independently at 30 digits.

TEST_CASE("zeta") {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    CHECK(zeta(2.0) == doctest::Approx(pi2 / 6).epsilon(1e-12));
    CHECK(zeta(3.0) == doctest::Approx(1.20205690315959428540).epsilon(1e-12));
    CHECK(zeta(1.0 / 3) == doctest::Approx(-0.97336024835078271547).epsilon(1e-12));
    CHECK(zeta(5.0 / 3) == doctest::Approx(2.12352296885758349159).epsilon(1e-12));
    for (double s : {1.0 / 3, 0.5, 5.0 / 3, 2.0, 3.0, 7.5})
        CHECK(zeta_eta_series(s) == doctest::Approx(zeta_euler_maclaurin(s)).epsilon(1e-10));
    for (double s : {0.0, -1.0, 1.0, std::nan("")}) {
        CHECK_THROWS_AS(zeta(s), std::domain_error);
        CHECK_THROWS_AS(zeta_euler_maclaurin(s), std::domain_error);
    }
}

TEST_CASE("gamma") {
    const double g = gamma_third();
    CHECK(g == doctest::Approx(2.67893853470774763366).epsilon(1e-12));
    CHECK(g * gamma_lanczos(2.0 / 3) * std::numbers::sqrt3 / (2 * std::numbers::pi) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g * g * g == doctest::Approx(19.2259).epsilon(1e-5));
    CHECK(gamma_lanczos(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    CHECK_THROWS_AS(gamma_lanczos(0.25), std::domain_error);
}

TEST_CASE("local constants") {
    CHECK(local_constants(2, SplittingSymbol::Split).c == doctest::Approx(2.0 / 21).epsilon(1e-14));
    CHECK(k_normalizer(2) == doctest::Approx(4.98076697088537928).epsilon(1e-12));
    CHECK(local_constants(2, SplittingSymbol::Split).k == doctest::Approx(0.19310891898538138670).epsilon(1e-12));
    for (i64 p : primes_up_to(100)) {
        double c = 0, k = 0;
        for (auto s : kAllSymbols) {
            const auto lc = local_constants(p, s);
            CHECK(lc.c > 0);
            CHECK(lc.k > 0);
            c += lc.c;
            k += lc.k;
        }
        CHECK(std::abs(c - 1) <= 1e-12);
        CHECK(std::abs(k - 1) <= 1e-12);
    }
}

TEST_CASE("partially ramified ratio") {
    for (i64 p : {2, 3, 5, 7, 11}) {
        const auto lc = local_constants(p, SplittingSymbol::PartiallyRamified);
        const double ratio = lc.k * k_normalizer(p) / (lc.c * c_normalizer(p));
        const double t = 1 + std::pow(static_cast<double>(p), -1.0 / 3);
        CHECK(ratio == doctest::Approx(t * t).epsilon(1e-13));
    }
}

TEST_CASE("global constants") {
    const double r3 = std::numbers::sqrt3;
    const auto neg = global_constants(RefinedClass::sign_only(Sign::Negative));
    CHECK(neg.c == doctest::Approx(0.75));
    CHECK(neg.k == doctest::Approx(3 / (3 + r3)));
    const auto empty = global_constants(RefinedClass{});
    CHECK(empty.c == 1.0);
    CHECK(empty.k == 1.0);
    const auto pos2 = global_constants(RefinedClass::sign_only(Sign::Positive).with(2, SplittingSymbol::Split));
    CHECK(pos2.c == doctest::Approx(1.0 / 42).epsilon(1e-14));
    const auto pos = infinity_constants(Sign::Positive);
    CHECK(pos.c + neg.c == doctest::Approx(1.0));
    CHECK(pos.k + neg.k == doctest::Approx(1.0));

    const auto left = RefinedClass::sign_only(Sign::Positive).with(3, SplittingSymbol::Inert);
    const auto right = RefinedClass{}.with(5, SplittingSymbol::TotallyRamified).with(7, SplittingSymbol::PartiallySplit);
    auto both = left;
    for (const auto& [p, s] : right.local) both.with(p, s);
    const auto l = global_constants(left), r = global_constants(right), b = global_constants(both);
    CHECK(b.c == doctest::Approx(l.c * r.c).epsilon(1e-14));
    CHECK(b.k == doctest::Approx(l.k * r.k).epsilon(1e-14));
}

TEST_CASE("secondary coefficient") {
    const double b = secondary_coefficient();
    CHECK(b == doctest::Approx(-0.40348363666394679863).epsilon(1e-11));
    CHECK(b < 0);
    CHECK(secondary_coefficient(true) == doctest::Approx(-0.40348363666394679863 / 1.64493406684822643647).epsilon(1e-11));
    const auto m = AsymptoticModel::for_class(RefinedClass::sign_only(Sign::Negative));
    CHECK(m.k() * m.b() == doctest::Approx(-0.25581).epsilon(4e-4));
}

TEST_CASE("model terms") {
    const auto m = AsymptoticModel::for_class(RefinedClass::sign_only(Sign::Negative));
    CHECK(std::abs(m.H(1e6) - 207976.843145) < 1e-4);
    CHECK(182417 / m.Hstar(1e6) == doctest::Approx(1.0001096).epsilon(3e-5));
    CHECK(std::round(182417 / m.H(1e6) * 1000) / 1000 == doctest::Approx(0.877));
    const AsymptoticModel flat(m.c(), m.k(), 0.0);
    for (double x : {1.0, 1e3, 1e9}) CHECK(flat.Hstar(x) == flat.H(x));
}

TEST_CASE("partial Dirichlet sums") {
    const FieldRecord f23{{1, -1, 2, -1}, -23, false, {}};
    const std::vector<FieldRecord> one{f23};
    CHECK(xi_partial(one, 1.0, 30, 30) == doctest::Approx(1.0 / 23));

    const std::vector<FieldRecord> pos{{{1, -2, -1, 1}, 49, true, {}}, {{1, -3, 0, 1}, 81, true, {}}};
    CHECK(xi_partial(pos, 1.0, 100, 100) == doctest::Approx(1.0 / (3 * 49) + 1.0 / (3 * 81)));
    CHECK(xi_partial(pos, 1.0, 60, 100) == doctest::Approx(1.0 / (3 * 49)));
    CHECK_THROWS_AS(xi_partial(pos, 1.0, 200, 100), std::invalid_argument);

    CensusConfig cfg;
    cfg.xmax = 10'000;
    const auto recs = enumerate(cfg);
    double prev = 0;
    for (i64 cut : {10, 100, 1000, 5000, 10'000}) {
        const double v = xi_partial(recs, 0.5, cut, cfg.xmax);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("least-squares u") {
    const auto model = AsymptoticModel::for_class(RefinedClass::sign_only(Sign::Positive));
    std::vector<double> x, f, g;
    for (int j = 2; j <= 11; ++j) {
        x.push_back(std::pow(10.0, j));
        f.push_back(std::pow(10.0, j / 2.0) * 0.15);
    }
    for (std::size_t i = 0; i < x.size(); ++i) g.push_back(model.Hstar(x[i]) - f[i] / 3);
    CHECK(fit_u(g, f, x, model).u == doctest::Approx(1.0 / 3).epsilon(1e-9));
    CHECK(fit_u(g, f, x, model).residual == doctest::Approx(0.0).epsilon(1e-9));

    const std::vector<double> zero(x.size(), 0.0);
    const auto degenerate = fit_u(g, zero, x, model);
    double misfit = 0;
    for (std::size_t i = 0; i < x.size(); ++i) misfit += std::pow((g[i] - model.Hstar(x[i])) / std::sqrt(x[i]), 2);
    CHECK(degenerate.residual == doctest::Approx(misfit));

    CHECK_THROWS_AS(fit_u({}, {}, {}, model), std::invalid_argument);
}
