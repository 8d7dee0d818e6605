#pragma once
//
// Exact exponent bookkeeping for the iterated I-method argument. Every
// exponent is affine in a = 1 - s and is carried as an exact rational.
//
#include <array>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gpelab {

using Rational = boost::multiprecision::cpp_rational;

Rational parse_rational(const std::string& text);  // "5/6", "0.9", "1"
std::string to_string(const Rational& r);

struct ExponentLedger {
    Rational s;
    // Powers of N in the increment bound, in display order:
    // -1 + 4a, -1 + 2a, -2 + 6a, -5/2 + 5a.
    std::array<Rational, 4> increments;
    Rational step_exponent;    // 4a
    Rational energy_exponent;  // 2a
};

ExponentLedger make_ledger(const Rational& s);

struct DominantTerm {
    int index;
    Rational exponent;
};

/// argmax over the increment exponents, ties to the lower index.
DominantTerm dominant_increment(const Rational& s);

struct GwpVerdict {
    bool holds;
    Rational slack;  // 2a - (-1 + 8a) = 1 - 6a
};

GwpVerdict gwp_condition(const Rational& s);
Rational iteration_count_exponent(const Rational& s);
Rational lwp_time_exponent(const Rational& s);

/// Smallest-denominator search for the gwp threshold: maintains a false left
/// end and a true right end and refines by mediants (Stern-Brocot descent)
/// while denominators stay <= max_denominator. Returns the final left end,
/// the largest failing rational found.
struct ThresholdSearch {
    Rational left;   // gwp false
    Rational right;  // gwp true
    int iterations;
};

ThresholdSearch gwp_threshold(long long max_denominator = 1000000);

}  // namespace gpelab
