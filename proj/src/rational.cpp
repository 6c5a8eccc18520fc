#include "fitland/rational.hpp"

#include "fitland/errors.hpp"

namespace fitland {

bool is_integral(const Rational& r) {
    return denominator(r) == 1;
}

Integer floor_to_integer(const Rational& r) {
    Integer q = numerator(r) / denominator(r); // truncates toward zero
    if (r < 0 && q * denominator(r) != numerator(r)) {
        --q;
    }
    return q;
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

std::string fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string compact_string(const Rational& r) {
    if (is_integral(r)) {
        return numerator(r).str();
    }
    return fraction_string(r);
}

Rational parse_rational(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        const Integer num(text.substr(0, slash));
        const Integer den(text.substr(slash + 1));
        if (den == 0) {
            throw ParseError("rational with zero denominator: " + text);
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("malformed rational: " + text);
    }
}

} // namespace fitland
