#include "ca/rational.hpp"

#include <ostream>

namespace ca {

Rational Rational::from_string(const std::string& s) {
    try {
        mpq_class v(s);
        v.canonicalize();
        return Rational(std::move(v));
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: '" + s + "'");
    }
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational r(1), b(*this);
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(mpq_class(f));
}

}  // namespace ca
