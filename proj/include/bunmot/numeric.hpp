#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace bunmot {

// All arithmetic in this library is exact: unbounded integers and rationals,
// no floating point on any code path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Input that violates a precondition. The CLI maps this to exit code 2;
// the message starts with the offending field name.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// An internal identity that must hold failed to hold. The message exposes
// both sides of the failed identity.
class consistency_error : public std::logic_error {
public:
    explicit consistency_error(const std::string& msg) : std::logic_error(msg) {}
};

inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline std::string rat_str(const Rat& q) { return q.str(); }

// Accepts "p", "-p", "p/q" with nonzero q; anything else is rejected.
Rat parse_rational(const std::string& text);

}  // namespace bunmot
