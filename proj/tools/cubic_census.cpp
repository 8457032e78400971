// cubic-census: censuses of cubic fields and comparison tables.
//
// Exit codes: 0 success, 1 a check outside tolerance, 2 bad configuration.

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cubic/abelian.hpp"
#include "cubic/census.hpp"
#include "cubic/report.hpp"

namespace {

using cubic::i64;

constexpr int kConfigError = 2;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// accepts 1000000, 1e6, 2.5e3
i64 parse_count(const std::string& text, const char* flag) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ConfigError(std::string(flag) + ": not a number: " + text);
    }
    if (used != text.size() || !std::isfinite(v) || v < 1 || v > 9e18 || v != std::floor(v))
        throw ConfigError(std::string(flag) + ": need a positive integer, got " + text);
    return static_cast<i64>(v);
}

cubic::Sign parse_sign(const std::string& s) {
    if (s == "-" || s == "neg" || s == "negative") return cubic::Sign::Negative;
    if (s == "+" || s == "pos" || s == "positive") return cubic::Sign::Positive;
    throw ConfigError("--sign: expected + or -, got " + s);
}

cubic::Format parse_format(const std::string& s) {
    auto f = cubic::parse_format(s);
    if (!f) throw ConfigError("--format: expected text, csv or json");
    return *f;
}

int exponent_of(i64 x) {
    int j = 0;
    while (x >= 10 && x % 10 == 0) {
        x /= 10;
        ++j;
    }
    if (x != 1) throw ConfigError("--xmax must be a power of ten here");
    return j;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot write " + path);
    os << text;
}

cubic::CensusSummary census_summary(cubic::Sign sign, i64 xmax, int shards, double slack) {
    cubic::CensusConfig cfg;
    cfg.sign = sign;
    cfg.xmax = xmax;
    cfg.shard_count = shards;
    cfg.slack = slack;
    return cubic::tally(cubic::enumerate(cfg), cfg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cubic field censuses and density comparisons"};
    app.require_subcommand(1);

    std::string sign = "-", xmax = "1e6", format = "text", out, profile = "quick";
    int shards = 1, which = 1;
    double slack = 1.0;
    bool zeta2 = false;

    auto* census = app.add_subcommand("census", "enumerate cubic fields up to |disc| <= xmax");
    census->add_option("--sign", sign, "+ or -")->capture_default_str();
    census->add_option("--xmax", xmax, "discriminant bound")->capture_default_str();
    census->add_option("--shards", shards, "worker threads")->capture_default_str();
    census->add_option("--slack", slack, "loop bound multiplier")->capture_default_str();
    census->add_option("--out", out, "write the census file here");
    census->add_option("--format", format, "summary format: text, csv, json")->capture_default_str();

    auto* abelian = app.add_subcommand("abelian", "count cyclic cubic fields at powers of ten");
    abelian->add_option("--xmax", xmax, "discriminant bound")->capture_default_str();
    abelian->add_option("--out", out, "write per-conductor CSV here");
    abelian->add_option("--format", format, "text, csv, json")->capture_default_str();

    auto* constants = app.add_subcommand("constants", "print all density constants as JSON");
    constants->add_flag("--zeta2", zeta2, "divide B by zeta(2) (diagnostic)");
    constants->add_option("--out", out, "output file");

    auto* table = app.add_subcommand("table", "regenerate a comparison table");
    table->add_option("--which", which, "1, 2 or 3")->required()->check(CLI::IsMember({1, 2, 3}));
    table->add_option("--xmax", xmax, "census bound (power of ten)")->capture_default_str();
    table->add_option("--shards", shards, "worker threads")->capture_default_str();
    table->add_option("--slack", slack, "loop bound multiplier")->capture_default_str();
    table->add_option("--format", format, "text, csv, json")->capture_default_str();
    table->add_option("--out", out, "output file");
    table->add_flag("--zeta2", zeta2, "divide B by zeta(2) (diagnostic)");

    auto* verify = app.add_subcommand("verify", "run the verification checks");
    verify->add_option("--profile", profile, "quick or full")->capture_default_str();
    verify->add_option("--shards", shards, "worker threads")->capture_default_str();
    verify->add_option("--slack", slack, "loop bound multiplier")->capture_default_str();
    verify->add_flag("--zeta2", zeta2, "divide B by zeta(2) (diagnostic)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kConfigError;
    }

    try {
        if (shards < 1) throw ConfigError("--shards must be positive");
        if (!(slack > 0)) throw ConfigError("--slack must be positive");

        if (census->parsed()) {
            const auto s = parse_sign(sign);
            const i64 x = parse_count(xmax, "--xmax");
            const auto fmt = parse_format(format);
            cubic::CensusConfig cfg;
            cfg.sign = s;
            cfg.xmax = x;
            cfg.shard_count = shards;
            cfg.slack = slack;
            const auto records = cubic::enumerate(cfg);
            const auto sum = cubic::tally(records, cfg);
            if (!out.empty()) cubic::save({s, x, records}, out);
            cubic::Table t{std::string("census ") + cubic::sign_char(s) + " up to " + std::to_string(x),
                           {"x", "fields", "cyclic", "noncyclic"},
                           {}};
            for (std::size_t i = 0; i < sum.checkpoints.size(); ++i)
                t.rows.push_back({cubic::Cell::integer(sum.checkpoints[i]), cubic::Cell::integer(sum.total[i]),
                                  cubic::Cell::integer(sum.cyclic[i]), cubic::Cell::integer(sum.noncyclic(i))});
            std::cout << cubic::render(t, fmt);
            return 0;
        }
        if (abelian->parsed()) {
            const i64 x = parse_count(xmax, "--xmax");
            const auto fmt = parse_format(format);
            cubic::Table t{"cyclic cubic fields", {"x", "f"}, {}};
            for (i64 p = 10; p <= x; p *= 10) {
                t.rows.push_back({cubic::Cell::integer(p), cubic::Cell::integer(cubic::count_f(p))});
                if (p > x / 10) break;
            }
            std::cout << cubic::render(t, fmt);
            if (!out.empty()) {
                std::ofstream os(out);
                if (!os) throw ConfigError("cannot write " + out);
                cubic::write_conductor_csv(os, static_cast<i64>(std::sqrt(static_cast<double>(x))));
            }
            return 0;
        }
        if (constants->parsed()) {
            write_output(cubic::constants_json(zeta2), out);
            return 0;
        }
        if (table->parsed()) {
            const auto fmt = parse_format(format);
            const bool given = table->count("--xmax") > 0;
            if (which == 3) {
                const i64 x = given ? parse_count(xmax, "--xmax") : 10'000'000;
                const auto sum = census_summary(cubic::Sign::Positive, x, shards, slack);
                write_output(cubic::render(cubic::to_table(cubic::make_table3(x, sum, zeta2), x), fmt), out);
                return 0;
            }
            const int jmax = given ? exponent_of(parse_count(xmax, "--xmax")) : 6;
            if (jmax > cubic::kMaxCensusJ) throw ConfigError("--xmax above 10^" + std::to_string(cubic::kMaxCensusJ));
            const auto s = which == 1 ? cubic::Sign::Negative : cubic::Sign::Positive;
            std::optional<cubic::CensusSummary> sum;
            if (jmax >= 2) sum = census_summary(s, cubic::i64{1} * static_cast<i64>(std::pow(10, jmax)), shards, slack);
            const auto* p = sum ? &*sum : nullptr;
            const auto text = which == 1 ? cubic::render(cubic::to_table(cubic::make_table1(jmax, p, zeta2)), fmt)
                                         : cubic::render(cubic::to_table(cubic::make_table2(jmax, p, zeta2)), fmt);
            write_output(text, out);
            return 0;
        }
        if (verify->parsed()) {
            const auto prof = cubic::parse_profile(profile);
            if (!prof) throw ConfigError("--profile: expected quick or full");
            cubic::VerifyOptions opt{*prof, shards, slack, zeta2};
            return cubic::exit_status(cubic::verify(opt, std::cout));
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
