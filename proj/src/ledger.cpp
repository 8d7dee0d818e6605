#include "gpelab/ledger.hpp"

#include <cctype>

#include "gpelab/errors.hpp"

namespace gpelab {

namespace {

using boost::multiprecision::cpp_int;

void require_open_interval(const Rational& s) {
    if (!(s > Rational(1, 2) && s < Rational(1)))
        throw DomainError("s must lie strictly between 1/2 and 1, got " + to_string(s));
}

bool all_digits(const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string t = text;
    bool negative = false;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        negative = t[0] == '-';
        t.erase(0, 1);
    }
    Rational value;
    if (auto slash = t.find('/'); slash != std::string::npos) {
        const std::string num = t.substr(0, slash), den = t.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw DomainError("malformed rational '" + text + "'");
        const cpp_int d(den);
        if (d == 0) throw DomainError("zero denominator in '" + text + "'");
        value = Rational(cpp_int(num), d);
    } else if (auto dot = t.find('.'); dot != std::string::npos) {
        const std::string whole = t.substr(0, dot), frac = t.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
            throw DomainError("malformed decimal '" + text + "'");
        cpp_int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        value = Rational(cpp_int(whole.empty() ? "0" : whole)) + Rational(cpp_int(frac), scale);
    } else {
        if (!all_digits(t)) throw DomainError("malformed rational '" + text + "'");
        value = Rational(cpp_int(t));
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
    const cpp_int num = boost::multiprecision::numerator(r);
    const cpp_int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

ExponentLedger make_ledger(const Rational& s) {
    require_open_interval(s);
    const Rational a = Rational(1) - s;
    ExponentLedger L;
    L.s = s;
    L.increments = {Rational(-1) + 4 * a, Rational(-1) + 2 * a, Rational(-2) + 6 * a,
                    Rational(-5, 2) + 5 * a};
    L.step_exponent = 4 * a;
    L.energy_exponent = 2 * a;
    return L;
}

DominantTerm dominant_increment(const Rational& s) {
    const ExponentLedger L = make_ledger(s);
    DominantTerm best{0, L.increments[0]};
    for (int i = 1; i < 4; ++i)
        if (L.increments[i] > best.exponent) best = {i, L.increments[i]};
    return best;
}

GwpVerdict gwp_condition(const Rational& s) {
    require_open_interval(s);
    const Rational a = Rational(1) - s;
    const Rational growth = Rational(-1) + 8 * a;  // increment + iteration count
    const Rational budget = 2 * a;
    return {growth < budget, budget - growth};
}

Rational iteration_count_exponent(const Rational& s) {
    // The endpoint s = 1 is admitted as the limiting case (exponent 0).
    if (!(s > Rational(1, 2) && s <= Rational(1))) throw DomainError("s must lie in (1/2, 1]");
    return 4 * (Rational(1) - s);
}

Rational lwp_time_exponent(const Rational& s) {
    if (!(s > Rational(1, 2))) throw DomainError("local time exponent needs s > 1/2");
    return Rational(4) / (2 * s - 1);
}

ThresholdSearch gwp_threshold(long long max_denominator) {
    // Ends: 1/2 fails and 1 holds in the limit; every mediant lies strictly inside.
    cpp_int ln = 1, ld = 2, rn = 1, rd = 1;
    ThresholdSearch out{Rational(ln, ld), Rational(rn, rd), 0};
    while (ld + rd <= max_denominator) {
        const cpp_int mn = ln + rn, md = ld + rd;
        const Rational mid(mn, md);
        if (gwp_condition(mid).holds) {
            rn = mn;
            rd = md;
        } else {
            ln = mn;
            ld = md;
        }
        ++out.iterations;
    }
    out.left = Rational(ln, ld);
    out.right = Rational(rn, rd);
    return out;
}

}  // namespace gpelab
