#include "cubic/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "cubic/abelian.hpp"
#include "cubic/asymptotics.hpp"
#include "cubic/published.hpp"
#include "cubic/special.hpp"

namespace cubic {

namespace {

i64 pow10(int j) {
    i64 x = 1;
    while (j-- > 0) x *= 10;
    return x;
}

std::string format_cell(const Cell& c) {
    if (const auto* i = std::get_if<i64>(&c.value)) return std::to_string(*i);
    if (const auto* s = std::get_if<std::string>(&c.value)) return *s;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", c.digits, std::get<double>(c.value));
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

const CensusSummary& require_census(const CensusSummary* census, Sign sign, int jmax) {
    if (census == nullptr) throw MissingCensus("table needs a census up to 10^" + std::to_string(jmax));
    if (census->sign != sign) throw MissingCensus("census has the wrong sign");
    if (census->xmax < pow10(jmax)) throw MissingCensus("census does not reach 10^" + std::to_string(jmax));
    return *census;
}

void check_jmax(int jmax) {
    if (jmax > kMaxCensusJ) throw std::invalid_argument("jmax above " + std::to_string(kMaxCensusJ));
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
    if (name == "text") return Format::Text;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    return std::nullopt;
}

std::optional<Profile> parse_profile(std::string_view name) {
    if (name == "quick") return Profile::Quick;
    if (name == "full") return Profile::Full;
    return std::nullopt;
}

std::string render(const Table& table, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::Text: {
            std::vector<std::size_t> width(table.columns.size());
            for (std::size_t k = 0; k < width.size(); ++k) width[k] = table.columns[k].size();
            std::vector<std::vector<std::string>> cells;
            for (const auto& row : table.rows) {
                auto& line = cells.emplace_back();
                for (std::size_t k = 0; k < row.size(); ++k) {
                    line.push_back(format_cell(row[k]));
                    width[k] = std::max(width[k], line.back().size());
                }
            }
            auto emit = [&](const std::vector<std::string>& line) {
                for (std::size_t k = 0; k < line.size(); ++k) {
                    if (k) os << "  ";
                    os << std::string(width[k] - line[k].size(), ' ') << line[k];
                }
                os << '\n';
            };
            os << table.title << '\n';
            emit(table.columns);
            for (const auto& line : cells) emit(line);
            break;
        }
        case Format::Csv: {
            for (std::size_t k = 0; k < table.columns.size(); ++k) os << (k ? "," : "") << csv_escape(table.columns[k]);
            os << '\n';
            for (const auto& row : table.rows) {
                for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << csv_escape(format_cell(row[k]));
                os << '\n';
            }
            break;
        }
        case Format::Json: {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& row : table.rows) {
                nlohmann::ordered_json obj;
                for (std::size_t k = 0; k < row.size(); ++k) {
                    const auto& key = table.columns[k];
                    std::visit([&](const auto& v) { obj[key] = v; }, row[k].value);
                }
                arr.push_back(std::move(obj));
            }
            os << arr.dump(2) << '\n';
            break;
        }
    }
    return os.str();
}

std::vector<Table1Row> make_table1(int jmax, const CensusSummary* census, bool divide_by_zeta2) {
    check_jmax(jmax);
    const CensusSummary* sum = jmax >= 2 ? &require_census(census, Sign::Negative, jmax) : nullptr;
    const auto model = AsymptoticModel::for_class(RefinedClass::sign_only(Sign::Negative), divide_by_zeta2);
    std::vector<Table1Row> rows;
    for (const auto& pub : published::kNegative) {
        Table1Row r;
        r.j = pub.j;
        const i64 x = pow10(pub.j);
        r.from_census = pub.j <= jmax;
        r.h = r.from_census ? sum->total[sum->checkpoint_index(x)] : pub.h;
        const double xd = static_cast<double>(x);
        const double h = static_cast<double>(r.h);
        r.ratio_main = h / model.H(xd);
        r.ratio_two_term = h / model.Hstar(xd);
        r.residual = (h - model.Hstar(xd)) / std::sqrt(xd);
        rows.push_back(r);
    }
    return rows;
}

std::vector<Table2Row> make_table2(int jmax, const CensusSummary* census, bool divide_by_zeta2) {
    check_jmax(jmax);
    const CensusSummary* sum = jmax >= 2 ? &require_census(census, Sign::Positive, jmax) : nullptr;
    const auto model = AsymptoticModel::for_class(RefinedClass::sign_only(Sign::Positive), divide_by_zeta2);
    std::vector<Table2Row> rows;
    for (const auto& pub : published::kPositive) {
        Table2Row r;
        r.j = pub.j;
        const i64 x = pow10(pub.j);
        r.from_census = pub.j <= jmax;
        r.g = r.from_census ? sum->noncyclic(sum->checkpoint_index(x)) : pub.g;
        r.f = count_f(x);
        const double xd = static_cast<double>(x);
        const double g = static_cast<double>(r.g);
        const double h = g + static_cast<double>(r.f) / 3;
        r.ratio_main = h / model.H(xd);
        r.ratio_two_term = h / model.Hstar(xd);
        r.residual_h = (h - model.Hstar(xd)) / std::sqrt(xd);
        r.residual_g = (g - model.Hstar(xd)) / std::sqrt(xd);
        rows.push_back(r);
    }
    return rows;
}

std::vector<Table3Row> make_table3(i64 x, const CensusSummary& census, bool divide_by_zeta2) {
    if (census.sign != Sign::Positive) throw MissingCensus("table 3 needs a positive census");
    std::size_t idx = 0;
    try {
        idx = census.checkpoint_index(x);
    } catch (const std::out_of_range&) {
        throw MissingCensus("census has no tallies at x = " + std::to_string(x));
    }
    const double xd = static_cast<double>(x);
    std::vector<Table3Row> rows;
    for (std::size_t pi = 0; pi < kCachedPrimes.size(); ++pi) {
        const i64 p = kCachedPrimes[pi];
        for (std::size_t si = 0; si < kAllSymbols.size(); ++si) {
            Table3Row r;
            r.p = p;
            r.symbol = kAllSymbols[si];
            const auto alpha = RefinedClass::sign_only(Sign::Positive).with(p, r.symbol);
            r.g = census.noncyclic_symbols[idx][pi][si];
            r.f = count_f_alpha(x, alpha);
            const auto model = AsymptoticModel::for_class(alpha, divide_by_zeta2);
            const double h = static_cast<double>(r.g) + static_cast<double>(r.f) / 3;
            r.ratio_main = h / model.H(xd);
            r.ratio_two_term = h / model.Hstar(xd);
            rows.push_back(r);
        }
    }
    return rows;
}

Table to_table(const std::vector<Table1Row>& rows) {
    Table t{"negative discriminants",
            {"j", "h", "source", "h/H", "h/H*", "(h-H*)/sqrt(x)"},
            {}};
    for (const auto& r : rows)
        t.rows.push_back({Cell::integer(r.j), Cell::integer(r.h), Cell::text(r.from_census ? "census" : "published"),
                          Cell::real(r.ratio_main, 3), Cell::real(r.ratio_two_term, 7), Cell::real(r.residual, 4)});
    return t;
}

Table to_table(const std::vector<Table2Row>& rows) {
    Table t{"positive discriminants",
            {"j", "g", "f", "source", "h/H", "h/H*", "(h-H*)/sqrt(x)", "(g-H*)/sqrt(x)"},
            {}};
    for (const auto& r : rows)
        t.rows.push_back({Cell::integer(r.j), Cell::integer(r.g), Cell::integer(r.f),
                          Cell::text(r.from_census ? "census" : "published"), Cell::real(r.ratio_main, 3),
                          Cell::real(r.ratio_two_term, 7), Cell::real(r.residual_h, 4), Cell::real(r.residual_g, 4)});
    return t;
}

Table to_table(const std::vector<Table3Row>& rows, i64 x) {
    Table t{"positive discriminants by splitting at p, x = " + std::to_string(x),
            {"p", "type", "g", "f", "h/H", "h/H*"},
            {}};
    for (const auto& r : rows)
        t.rows.push_back({Cell::integer(r.p), Cell::text(std::string(to_label(r.symbol))), Cell::integer(r.g),
                          Cell::integer(r.f), Cell::real(r.ratio_main, 3), Cell::real(r.ratio_two_term, 4)});
    return t;
}

std::string constants_json(bool divide_by_zeta2) {
    nlohmann::ordered_json j;
    auto num = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.15g", v);
        return nlohmann::ordered_json::parse(buf);
    };
    j["zeta(1/3)"] = num(zeta(1.0 / 3));
    j["zeta(5/3)"] = num(zeta(5.0 / 3));
    j["zeta(2)"] = num(zeta(2.0));
    j["zeta(3)"] = num(zeta(3.0));
    j["gamma(1/3)"] = num(gamma_third());
    j["B"] = num(secondary_coefficient(divide_by_zeta2));
    j["B_divided_by_zeta2"] = divide_by_zeta2;
    for (Sign s : {Sign::Negative, Sign::Positive}) {
        const auto inf = infinity_constants(s);
        const std::string key = std::string("inf") + sign_char(s);
        j["infinity"][key] = {{"C", num(inf.c)}, {"K", num(inf.k)}};
    }
    for (i64 p : kCachedPrimes) {
        auto& entry = j["local"][std::to_string(p)];
        entry["C_p"] = num(c_normalizer(p));
        entry["K_p"] = num(k_normalizer(p));
        for (auto s : kAllSymbols) {
            const auto lc = local_constants(p, s);
            entry[std::string(to_label(s))] = {{"C", num(lc.c)}, {"K", num(lc.k)}};
        }
    }
    return j.dump(2) + '\n';
}

namespace {

class Suite {
public:
    explicit Suite(std::ostream& log) : log_(log) {}

    void add(std::string name, bool pass, std::string detail) {
        log_ << (pass ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : ": ") << detail << '\n';
        checks_.push_back({std::move(name), pass, std::move(detail)});
    }

    // failures inside a check count as a failed check, not a crash
    template <class Fn>
    void run(const std::string& name, Fn&& fn) {
        try {
            std::string detail;
            const bool ok = fn(detail);
            add(name, ok, detail);
        } catch (const std::exception& e) {
            add(name, false, std::string("exception: ") + e.what());
        }
    }

    std::vector<Check> take() { return std::move(checks_); }

private:
    std::ostream& log_;
    std::vector<Check> checks_;
};

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

CensusSummary run_census(Sign sign, int jmax, const VerifyOptions& opt) {
    CensusConfig cfg;
    cfg.sign = sign;
    cfg.xmax = pow10(jmax);
    cfg.shard_count = opt.shards;
    cfg.slack = opt.slack;
    return tally(enumerate(cfg), cfg);
}

bool census_counts(const CensusSummary& sum, int jmax, std::string& detail) {
    bool ok = true;
    for (int j = 2; j <= jmax; ++j) {
        const auto idx = sum.checkpoint_index(pow10(j));
        const auto k = static_cast<std::size_t>(j - 2);
        if (sum.sign == Sign::Negative) {
            const i64 want = published::kNegative[k].h;
            if (sum.total[idx] != want) {
                ok = false;
                detail += "j=" + std::to_string(j) + " got " + std::to_string(sum.total[idx]) + " want " +
                          std::to_string(want) + "; ";
            }
        } else {
            const auto& pub = published::kPositive[k];
            if (sum.noncyclic(idx) != pub.g || sum.cyclic[idx] != pub.f) {
                ok = false;
                detail += "j=" + std::to_string(j) + " got " + std::to_string(sum.noncyclic(idx)) + "+" +
                          std::to_string(sum.cyclic[idx]) + "; ";
            }
        }
    }
    if (ok) detail = "j=2.." + std::to_string(jmax) + " exact";
    return ok;
}

}  // namespace

std::vector<Check> verify(const VerifyOptions& opt, std::ostream& log) {
    Suite suite(log);
    const int jmax = opt.profile == Profile::Quick ? 4 : 6;
    const bool z2 = opt.divide_by_zeta2;

    suite.run("zeta: eta series vs Euler-Maclaurin", [](std::string& d) {
        double worst = 0;
        for (double s : {1.0 / 3, 5.0 / 3, 2.0, 3.0})
            worst = std::max(worst, std::abs(zeta_eta_series(s) / zeta_euler_maclaurin(s) - 1));
        d = "max rel diff " + fmt("%.2e", worst);
        return worst <= 1e-10;
    });
    suite.run("gamma: reflection at 1/3", [](std::string& d) {
        const double r = gamma_third() * gamma_lanczos(2.0 / 3) * std::numbers::sqrt3 / (2 * std::numbers::pi);
        d = "deviation " + fmt("%.2e", r - 1);
        return std::abs(r - 1) <= 1e-12;
    });
    suite.run("local constants: column sums, p <= 100", [](std::string& d) {
        double worst = 0;
        for (i64 p : primes_up_to(100)) {
            double c = 0, k = 0;
            for (auto s : kAllSymbols) {
                const auto lc = local_constants(p, s);
                c += lc.c;
                k += lc.k;
            }
            worst = std::max({worst, std::abs(c - 1), std::abs(k - 1)});
        }
        d = "max deviation " + fmt("%.2e", worst);
        return worst <= 1e-12;
    });
    suite.run("secondary coefficient K_-B", [z2](std::string& d) {
        const auto m = AsymptoticModel::for_class(RefinedClass::sign_only(Sign::Negative), z2);
        const double kb = m.k() * m.b();
        d = fmt("%.6f", kb);
        return std::abs(kb + 0.25581) <= 1e-4;
    });
    suite.run("negative ratios vs published, j=2..11", [z2](std::string& d) {
        double worst = 0, worst_main = 0;
        for (const auto& r : make_table1(0, nullptr, z2)) {
            const auto& pub = published::kNegative[static_cast<std::size_t>(r.j - 2)];
            worst = std::max(worst, std::abs(r.ratio_two_term - pub.ratio_two_term));
            worst_main = std::max(worst_main, std::abs(r.ratio_main - pub.ratio_main));
        }
        d = "h/H* max diff " + fmt("%.2e", worst) + ", h/H max diff " + fmt("%.2e", worst_main);
        return worst <= 1e-4 && worst_main <= 6e-4;
    });
    suite.run("positive ratios vs published, j=2..11", [z2](std::string& d) {
        double worst = 0, worst_main = 0;
        for (const auto& pub : published::kPositive) {
            // published g with our own f; both sides must agree on f first
            if (count_f(pow10(pub.j)) != pub.f) {
                d = "f mismatch at j=" + std::to_string(pub.j);
                return false;
            }
        }
        for (const auto& r : make_table2(0, nullptr, z2)) {
            const auto& pub = published::kPositive[static_cast<std::size_t>(r.j - 2)];
            worst = std::max(worst, std::abs(r.ratio_two_term - pub.ratio_two_term));
            worst_main = std::max(worst_main, std::abs(r.ratio_main - pub.ratio_main));
        }
        d = "h/H* max diff " + fmt("%.2e", worst) + ", h/H max diff " + fmt("%.2e", worst_main);
        return worst <= 1e-4 && worst_main <= 6e-4;
    });
    suite.run("cyclic counts f(10^j), j=2..11", [](std::string& d) {
        for (const auto& pub : published::kPositive) {
            const i64 f = count_f(pow10(pub.j));
            if (f != pub.f) {
                d = "j=" + std::to_string(pub.j) + " got " + std::to_string(f);
                return false;
            }
        }
        d = "exact";
        return true;
    });
    suite.run("least-squares u", [z2](std::string& d) {
        std::vector<double> g, f, x;
        for (const auto& pub : published::kPositive) {
            g.push_back(static_cast<double>(pub.g));
            f.push_back(static_cast<double>(pub.f));
            x.push_back(static_cast<double>(pow10(pub.j)));
        }
        const auto fit = fit_u(g, f, x, AsymptoticModel::for_class(RefinedClass::sign_only(Sign::Positive), z2));
        d = "u = " + fmt("%.4f", fit.u);
        return std::abs(fit.u - published::kFittedU) <= 0.02;
    });

    std::optional<CensusSummary> neg, pos;
    suite.run("census counts, negative", [&](std::string& d) {
        neg = run_census(Sign::Negative, jmax, opt);
        return census_counts(*neg, jmax, d);
    });
    suite.run("census counts, positive", [&](std::string& d) {
        pos = run_census(Sign::Positive, opt.profile == Profile::Full ? 7 : jmax, opt);
        return census_counts(*pos, opt.profile == Profile::Full ? 7 : jmax, d);
    });
    suite.run("cyclic subtotals vs character count", [&](std::string& d) {
        if (!pos) throw MissingCensus("positive census did not run");
        for (std::size_t i = 0; i < pos->checkpoints.size(); ++i) {
            if (pos->cyclic[i] != count_f(pos->checkpoints[i])) {
                d = "mismatch at x = " + std::to_string(pos->checkpoints[i]);
                return false;
            }
        }
        d = std::to_string(pos->checkpoints.size()) + " checkpoints";
        return true;
    });
    if (opt.profile == Profile::Full) {
        suite.run("local classes at 10^7", [&](std::string& d) {
            if (!pos) throw MissingCensus("positive census did not run");
            const auto rows = make_table3(published::kLocalX, *pos, z2);
            double worst_star = 0, worst_main = 0;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                worst_star = std::max(worst_star, std::abs(rows[i].ratio_two_term - 1));
                worst_main = std::max(worst_main, std::abs(rows[i].ratio_main - published::kLocal[i].ratio_main));
            }
            d = "max |h/H* - 1| " + fmt("%.4f", worst_star) + ", h/H max diff " + fmt("%.4f", worst_main);
            return worst_star <= 0.005 && worst_main <= 0.005;
        });
    }
    return suite.take();
}

int exit_status(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }) ? 0 : 1;
}

}  // namespace cubic
