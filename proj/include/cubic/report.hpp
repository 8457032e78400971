#pragma once

// Comparison tables between census counts and the density model, and the
// verification suite behind `cubic-census verify`.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cubic/census.hpp"

namespace cubic {

enum class Format { Text, Csv, Json };

std::optional<Format> parse_format(std::string_view name);

struct Cell {
    std::variant<i64, double, std::string> value;
    /// Fixed decimals for doubles.
    int digits = 0;

    static Cell integer(i64 v) { return {v, 0}; }
    static Cell real(double v, int digits) { return {v, digits}; }
    static Cell text(std::string v) { return {std::move(v), 0}; }
};

struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Deterministic rendering. Text is column-aligned, CSV has a header line,
/// JSON is an array with one object per row.
std::string render(const Table& table, Format format);

/// Raised when a table needs census data that was not supplied.
class MissingCensus : public std::runtime_error {
public:
    explicit MissingCensus(const std::string& what) : std::runtime_error(what) {}
};

/// Largest j for which table rows are filled from a census.
inline constexpr int kMaxCensusJ = 8;

struct Table1Row {
    int j = 0;
    i64 h = 0;
    bool from_census = false;
    double ratio_main = 0;
    double ratio_two_term = 0;
    double residual = 0;
};

struct Table2Row {
    int j = 0;
    i64 g = 0;
    i64 f = 0;
    bool from_census = false;
    double ratio_main = 0;
    double ratio_two_term = 0;
    double residual_h = 0;
    double residual_g = 0;
};

struct Table3Row {
    i64 p = 0;
    SplittingSymbol symbol = SplittingSymbol::Split;
    i64 g = 0;
    i64 f = 0;
    double ratio_main = 0;
    double ratio_two_term = 0;
};

/// Rows j = 2..11. For j <= jmax counts come from `census` (negative sign,
/// covering 10^jmax); beyond that the published counts are used.
std::vector<Table1Row> make_table1(int jmax, const CensusSummary* census, bool divide_by_zeta2 = false);

/// As make_table1 for positive discriminants; f always comes from the
/// cyclic-field count and h = g + f/3.
std::vector<Table2Row> make_table2(int jmax, const CensusSummary* census, bool divide_by_zeta2 = false);

/// The 20 classes {inf:+, p:s}, p in {2,3,5,7}, at checkpoint x of `census`.
std::vector<Table3Row> make_table3(i64 x, const CensusSummary& census, bool divide_by_zeta2 = false);

Table to_table(const std::vector<Table1Row>& rows);
Table to_table(const std::vector<Table2Row>& rows);
Table to_table(const std::vector<Table3Row>& rows, i64 x);

/// All constants as JSON, 15 significant digits.
std::string constants_json(bool divide_by_zeta2 = false);

enum class Profile { Quick, Full };

std::optional<Profile> parse_profile(std::string_view name);

struct VerifyOptions {
    Profile profile = Profile::Quick;
    int shards = 1;
    /// Census loop slack; below 1 truncates the search (alarm check).
    double slack = 1.0;
    bool divide_by_zeta2 = false;
};

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs every check of the profile, printing one line each to `log`.
std::vector<Check> verify(const VerifyOptions& options, std::ostream& log);

/// 0 when every check passed, 1 otherwise.
int exit_status(const std::vector<Check>& checks);

}  // namespace cubic
