#pragma once

#include <gmpxx.h>

#include <string>

namespace lypbw {

/// Exact rational scalar, always kept in canonical reduced form. The base
/// field has characteristic zero.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" with decimal digits only; rejects anything else,
/// including zero denominators. The result is canonicalized.
Rational rational_from_string(const std::string& s);

/// Canonical rendering: "p" for integers, "p/q" otherwise, sign up front.
std::string rational_to_string(const Rational& q);

}  // namespace lypbw
