#pragma once

#include <gmpxx.h>

#include <string>

namespace swr {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace swr
