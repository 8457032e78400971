#pragma once

// A local condition on cubic fields: an optional sign at infinity plus a
// splitting symbol at each of finitely many primes.

#include <map>
#include <optional>
#include <string>

#include "cubic/census.hpp"
#include "cubic/forms.hpp"

namespace cubic {

struct RefinedClass {
    std::optional<Sign> infinity;
    std::map<i64, SplittingSymbol> local;

    friend bool operator==(const RefinedClass&, const RefinedClass&) = default;

    RefinedClass& with_sign(Sign s) {
        infinity = s;
        return *this;
    }
    RefinedClass& with(i64 p, SplittingSymbol s) {
        local[p] = s;
        return *this;
    }

    static RefinedClass sign_only(Sign s) { return RefinedClass{}.with_sign(s); }

    /// Fields meeting every condition; primes outside the record cache are
    /// recomputed from the form.
    bool admits(const FieldRecord& r) const;

    /// e.g. "inf:+ 2:111 7:1^3"; "{}" when the support is empty.
    std::string describe() const;
};

}  // namespace cubic
