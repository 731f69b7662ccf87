#ifndef HECKE_TYPES_HPP
#define HECKE_TYPES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace hecke {

using std::int64_t;
using bigint = boost::multiprecision::cpp_int;
using Rational = boost::rational<bigint>;
using cplx = std::complex<double>;

inline Rational rat(int64_t num, int64_t den = 1) {
    return Rational(bigint(num), bigint(den));
}

// scale-aware conversions: numerator and denominator can far exceed the double
// range even when the ratio is small, so shift each into range first
inline double to_double(const bigint& n) {
    if (n.is_zero()) return 0.0;
    bigint a = boost::multiprecision::abs(n);
    long bits = (long)boost::multiprecision::msb(a);
    int shift = (int)std::max(0L, bits - 500);
    double v = std::ldexp((a >> shift).convert_to<double>(), shift > 1020 ? 0 : shift);
    if (shift > 1020) v = INFINITY;  // out of double range
    return n < 0 ? -v : v;
}

inline double to_double(const Rational& r) {
    if (r.numerator().is_zero()) return 0.0;
    bigint num = boost::multiprecision::abs(r.numerator());
    bigint den = r.denominator();
    long nb = (long)boost::multiprecision::msb(num);
    long db = (long)boost::multiprecision::msb(den);
    int sn = (int)std::max(0L, nb - 500);
    int sd = (int)std::max(0L, db - 500);
    double v = std::ldexp((num >> sn).convert_to<double>() / (den >> sd).convert_to<double>(),
                          sn - sd);
    return r.numerator() < 0 ? -v : v;
}

// r^e for e >= 0
inline Rational rat_pow(const Rational& r, int e) {
    Rational out(1);
    for (int i = 0; i < e; i++) out *= r;
    return out;
}

inline bigint bigint_pow(const bigint& b, int e) {
    bigint out(1), base(b);
    for (int i = 0; i < e; i++) out *= base;
    return out;
}

} // namespace hecke

#endif
