#ifndef TRIDEND_RATIONAL_HPP
#define TRIDEND_RATIONAL_HPP

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tridend {

// Exact rational scalar used everywhere. GMP keeps values canonical
// (reduced fraction, positive denominator) after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "p/q" or plain integer text.
inline std::string to_string(const Rational &q)
{
    return q.get_str();
}

inline Rational parse_rational(const std::string &text)
{
    Rational q;
    if (q.set_str(text, 10) != 0) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

inline Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Bernoulli numbers with B_1 = -1/2, via sum_{k<=m} C(m+1,k) B_k = 0.
inline const Rational &bernoulli(unsigned m)
{
    static std::vector<Rational> cache{Rational(1)};
    while (cache.size() <= m) {
        const unsigned n = static_cast<unsigned>(cache.size());
        Rational acc(0);
        for (unsigned k = 0; k < n; ++k) {
            acc += Rational(binomial(n + 1, k)) * cache[k];
        }
        cache.push_back(-acc / Rational(binomial(n + 1, n)));
    }
    return cache[m];
}

} // namespace tridend

#endif
