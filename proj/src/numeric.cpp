#include "egr/numeric.hpp"

namespace egr {

BigInt floor(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

BigInt ceil(const Rational& r) { return -floor(-r); }

std::string to_decimal(const Rational& r, int digits) {
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const bool negative = r < 0;
    const Rational a = negative ? Rational(-r) : r;
    const BigInt scaled = floor(a * scale + Rational(1, 2));
    std::string int_part = BigInt(scaled / scale).str();
    std::string frac = BigInt(scaled % scale).str();
    std::string out = negative && scaled != 0 ? "-" : "";
    out += int_part;
    if (digits > 0) out += "." + std::string(digits - frac.size(), '0') + frac;
    return out;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace egr
