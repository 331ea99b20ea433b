#pragma once

#include <gmpxx.h>

#include <string>

namespace simpmon {

using Integer = mpz_class;

inline std::string to_string(const Integer& x) { return x.get_str(); }

}  // namespace simpmon
