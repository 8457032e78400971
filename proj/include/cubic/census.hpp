#pragma once

// Census of cubic fields by discriminant: one canonical binary cubic form per
// GL2(Z)-class of irreducible, primitive, maximal forms.

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubic/forms.hpp"

namespace cubic {

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

inline char sign_char(Sign s) { return s == Sign::Negative ? '-' : '+'; }

/// Primes whose splitting is cached on every record.
inline constexpr std::array<i64, 4> kCachedPrimes = {2, 3, 5, 7};

/// Index of p in kCachedPrimes, or -1.
int cached_prime_index(i64 p);

struct CensusConfig {
    Sign sign = Sign::Negative;
    i64 xmax = 1;
    int shard_count = 1;
    /// Enlarges every enumeration loop bound; values below 1 are a test mode
    /// that deliberately truncates the search.
    double slack = 1.0;
    /// Cumulative-count checkpoints; empty means powers of ten up to xmax.
    std::vector<i64> checkpoints;

    /// Throws std::invalid_argument for an unusable configuration.
    void validate() const;
    std::vector<i64> resolved_checkpoints() const;
};

struct FieldRecord {
    BinaryCubicForm form;
    i64 disc = 0;
    bool cyclic = false;
    std::array<SplittingSymbol, 4> splitting{};

    friend bool operator==(const FieldRecord&, const FieldRecord&) = default;

    SplittingSymbol symbol_at(i64 p) const;
};

/// Output order: (|disc|, a, b, c, d).
bool record_less(const FieldRecord& x, const FieldRecord& y);

/// Record for a canonical maximal irreducible form.
FieldRecord make_record(const BinaryCubicForm& canonical);

/// Whether the positive definite covariant of f (Hessian for disc > 0, the
/// complex-root quadratic for disc < 0) is reduced: |Q| <= P <= R. Exact.
/// Requires disc(f) != 0 and, for disc < 0, a != 0.
bool has_reduced_covariant(const BinaryCubicForm& f);

/// The GL2(Z) matrices with entries in {-1, 0, 1}; every matrix relating two
/// forms with reduced covariants belongs to this set.
const std::vector<UnimodularMatrix>& small_unimodular_matrices();

/// Distinguished representative of the GL2(Z)-class: among the equivalent
/// forms with reduced covariant and a > 0, the lexicographically smallest
/// (a, b, c, d). Throws std::invalid_argument for reducible or imprimitive
/// input.
BinaryCubicForm canonicalize(const BinaryCubicForm& f);

/// canonicalize(f) == f, for f already reduced with a > 0.
bool is_canonical_reduced(const BinaryCubicForm& f);

/// All fields of the configured sign with 0 < |disc| <= xmax, sorted by
/// record_less. Output does not depend on shard_count.
std::vector<FieldRecord> enumerate(const CensusConfig& config);

struct CensusSummary {
    Sign sign = Sign::Negative;
    i64 xmax = 0;
    std::vector<i64> checkpoints;
    /// Cumulative counts per checkpoint.
    std::vector<i64> total;
    std::vector<i64> cyclic;
    /// [checkpoint][prime index][symbol], split by cyclic / non-cyclic.
    using SymbolGrid = std::array<std::array<i64, 5>, 4>;
    std::vector<SymbolGrid> noncyclic_symbols;
    std::vector<SymbolGrid> cyclic_symbols;
    /// k -> number of n <= xmax with exactly k non-cyclic fields of |disc| n.
    std::map<int, i64> multiplicity_histogram;

    i64 noncyclic(std::size_t checkpoint) const { return total[checkpoint] - cyclic[checkpoint]; }
    std::size_t checkpoint_index(i64 x) const;
};

/// Throws std::invalid_argument if records are not sorted by |disc| or lie
/// outside the configured range.
CensusSummary tally(const std::vector<FieldRecord>& records, const CensusConfig& config);

/// Re-runs the census with loop bounds scaled by config.slack and compares
/// with the slack-1 census.
bool verify_slack(const CensusConfig& config);

class CensusFormatError : public std::runtime_error {
public:
    explicit CensusFormatError(const std::string& what) : std::runtime_error(what) {}
};

struct CensusFile {
    Sign sign = Sign::Negative;
    i64 xmax = 0;
    std::vector<FieldRecord> records;
};

/// Serialized census text; see README for the layout.
std::string serialize(const CensusFile& census);
CensusFile deserialize(const std::string& text);

void save(const CensusFile& census, const std::filesystem::path& path);
CensusFile load(const std::filesystem::path& path);

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& data);

}  // namespace cubic
