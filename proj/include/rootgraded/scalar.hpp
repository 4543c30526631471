#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace rootgraded {

// Exact rational scalar. GMP keeps values in lowest terms with a positive
// denominator, which is also the canonical serialized form.
using Scalar = mpq_class;

// Parses "num" or "num/den" (optionally signed). Non-canonical input such as
// "2/4" is accepted and reduced. Throws document_error on malformed text or a
// zero denominator.
Scalar scalar_from_string(const std::string& text);

// Canonical form: "num/den" with den > 0, or just "num" when den == 1.
std::string scalar_to_string(const Scalar& x);

bool scalar_is_integer(const Scalar& x);

// Exact conversion; throws invalid_parameter_error if x is not an integer or
// does not fit in long.
long scalar_to_long(const Scalar& x);

// Largest integer <= x / smallest integer >= x.
long scalar_floor_long(const Scalar& x);
long scalar_ceil_long(const Scalar& x);

using ScalarVec = std::vector<Scalar>;

}  // namespace rootgraded
