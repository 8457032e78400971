#pragma once

// Cyclic cubic fields, counted by conductor and cubic character.
//
// A conductor is 9^e * q_1 * ... * q_r with distinct primes q_i = 1 mod 3;
// writing t for the number of local factors (9 counts once), there are
// 2^(t-1) fields of conductor f, one per conjugate pair of primitive cubic
// characters, each of discriminant f^2.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "cubic/forms.hpp"
#include "cubic/refined_class.hpp"

namespace cubic {

struct CyclicFieldLabel {
    i64 conductor = 0;
    /// Local factors of the conductor: 9 and/or primes = 1 mod 3, increasing.
    std::vector<i64> factors;
    /// Bit i (i >= 1) picks the conjugate local character at factors[i];
    /// factors[0] is pinned, which removes global conjugation.
    std::uint32_t choice = 0;

    i64 disc() const { return conductor * conductor; }
};

/// Local factors of f if f is a conductor of cyclic cubic fields.
std::optional<std::vector<i64>> conductor_factors(i64 f);

/// All conductors f <= fmax, increasing.
std::vector<i64> conductors_up_to(i64 fmax);

/// One label per cyclic cubic field of conductor f (empty if f is invalid).
std::vector<CyclicFieldLabel> labels_with_conductor(i64 f);

/// Number of cyclic cubic fields with discriminant <= x.
i64 count_f(i64 x);

/// Number of cyclic cubic fields with discriminant exactly n.
i64 a_coefficient(i64 n);

/// 111 if the field's character is trivial at p, 3 if not, 1^3 if p | f.
SplittingSymbol splitting_in_cyclic(const CyclicFieldLabel& label, i64 p);

/// Cyclic fields with discriminant <= x meeting every condition of alpha.
i64 count_f_alpha(i64 x, const RefinedClass& alpha);

/// Growth constant c with f(x) ~ c x^(1/2): the Euler product over primes
/// = 1 mod 6 truncated at `prime_bound`, with the tail estimated as
/// exp(-1 / (B log B)).
double abelian_growth_constant(i64 prime_bound = 1'000'000);

/// CSV rows "conductor,t,n_fields,disc" for every conductor f <= fmax.
void write_conductor_csv(std::ostream& os, i64 fmax);

}  // namespace cubic
