// Exact rational arithmetic used for every coordinate, threshold and slope in
// the library. Values are GMP rationals kept in canonical form (positive
// denominator, gcd-reduced), so comparisons and equality are exact.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcsi {

using rational = mpq_class;
using bigint = mpz_class;

inline rational rat(long num, long den = 1) {
    rational r(num, den);
    r.canonicalize();
    return r;
}

// floor(a / b) for b > 0.
inline bigint floor_div(const rational& a, const rational& b) {
    rational q = a / b;
    bigint out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

// a - floor(a/b)*b, in [0, b) for b > 0.
inline rational floor_mod(const rational& a, const rational& b) {
    return a - rational(floor_div(a, b)) * b;
}

inline long to_long(const bigint& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("bigint out of long range");
    return z.get_si();
}

// Canonical textual form: "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts integers ("-3"), fractions ("5/8") and plain decimals ("0.25").
inline std::optional<rational> try_parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::string s(text);
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos && dot != std::string::npos) return std::nullopt;

    auto is_int = [](std::string_view t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };

    if (slash != std::string::npos) {
        std::string_view num(s.data(), slash), den(s.data() + slash + 1, s.size() - slash - 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        bigint d(std::string(den), 10);
        if (d == 0) return std::nullopt;
        rational r(bigint(std::string(num), 10), d);
        r.canonicalize();
        return r;
    }
    if (dot != std::string::npos) {
        std::string_view whole(s.data(), dot), frac(s.data() + dot + 1, s.size() - dot - 1);
        bool neg = !whole.empty() && whole[0] == '-';
        std::string wh(whole.empty() || whole == "-" || whole == "+" ? "0" : std::string(whole));
        if (wh[0] == '+' || wh[0] == '-') wh = wh.substr(1);
        if (!is_int(wh) || (!frac.empty() && !is_int(frac))) return std::nullopt;
        bigint scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        bigint units = bigint(wh, 10) * scale + (frac.empty() ? bigint(0) : bigint(std::string(frac), 10));
        rational r(units, scale);
        if (neg) r = -r;
        r.canonicalize();
        return r;
    }
    if (!is_int(s)) return std::nullopt;
    return rational(bigint(s, 10));
}

inline rational parse_rational(std::string_view text) {
    auto r = try_parse_rational(text);
    if (!r) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    return *r;
}

// Numerators of `values` over one common denominator, as integers. Sorting or
// comparing the keys is equivalent to comparing the rationals but avoids the
// per-comparison cross multiplication.
inline std::vector<bigint> common_denominator_keys(const std::vector<rational>& values) {
    bigint den = 1;
    for (const auto& v : values) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<bigint> keys;
    keys.reserve(values.size());
    for (const auto& v : values) keys.push_back(v.get_num() * (den / v.get_den()));
    return keys;
}

}  // namespace mcsi
