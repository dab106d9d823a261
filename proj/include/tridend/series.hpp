#ifndef TRIDEND_SERIES_HPP
#define TRIDEND_SERIES_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "ops.hpp"
#include "rational.hpp"

namespace tridend {

// Graded series over a basis with a scalar slot for the adjoined unit and a
// hard truncation degree. Basis contract:
//   Basis::Element          ordered, equality-comparable basis element
//   Basis::degree(e)        grading, >= 1
//   Basis::product(a, b, op) -> std::map<Element, Rational>
//
// Unit rules: a prec 1 = a = 1 succ a, while 1 prec a, a succ 1, 1 dot a and
// a dot 1 all vanish; 1 prec 1, 1 succ 1 and 1 dot 1 are undefined and raise.
template <typename Basis>
class TriSeries {
public:
    using Element = typename Basis::Element;
    using TermMap = std::map<Element, Rational>;

    explicit TriSeries(int truncation) : truncation_(check_trunc(truncation)) {}

    static TriSeries unit(int truncation)
    {
        TriSeries s(truncation);
        s.scalar_ = 1;
        return s;
    }

    static TriSeries single(const Element &e, int truncation, Rational coeff = Rational(1))
    {
        TriSeries s(truncation);
        s.add_term(e, std::move(coeff));
        return s;
    }

    const Rational &scalar() const
    {
        return scalar_;
    }

    const TermMap &terms() const
    {
        return terms_;
    }

    int truncation() const
    {
        return truncation_;
    }

    bool is_zero() const
    {
        return scalar_ == 0 && terms_.empty();
    }

    bool unit_free() const
    {
        return scalar_ == 0;
    }

    Rational coefficient(const Element &e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Homogeneous part of the given degree (degree 0 = scalar slot).
    TriSeries homogeneous(int degree) const
    {
        TriSeries out(truncation_);
        if (degree == 0) {
            out.scalar_ = scalar_;
            return out;
        }
        for (const auto &[e, c] : terms_) {
            if (Basis::degree(e) == degree) {
                out.terms_.emplace(e, c);
            }
        }
        return out;
    }

    void add_scalar(const Rational &c)
    {
        scalar_ += c;
    }

    void add_term(const Element &e, Rational coeff)
    {
        if (Basis::degree(e) < 1) {
            throw std::invalid_argument("basis element of degree < 1");
        }
        if (Basis::degree(e) > truncation_ || coeff == 0) {
            return;
        }
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    friend TriSeries operator+(TriSeries a, const TriSeries &b)
    {
        a.scalar_ += b.scalar_;
        for (const auto &[e, c] : b.terms_) {
            a.add_term(e, c);
        }
        a.truncation_ = std::min(a.truncation_, b.truncation_);
        a.clip();
        return a;
    }

    friend TriSeries operator-(TriSeries a, const TriSeries &b)
    {
        return a + (b * Rational(-1));
    }

    friend TriSeries operator*(TriSeries a, const Rational &c)
    {
        if (c == 0) {
            return TriSeries(a.truncation_);
        }
        a.scalar_ *= c;
        for (auto &[e, coeff] : a.terms_) {
            coeff *= c;
        }
        return a;
    }

    friend bool operator==(const TriSeries &a, const TriSeries &b)
    {
        return a.scalar_ == b.scalar_ && a.terms_ == b.terms_;
    }

private:
    static int check_trunc(int t)
    {
        if (t < 0) {
            throw std::invalid_argument("negative truncation");
        }
        return t;
    }

    void clip()
    {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (Basis::degree(it->first) > truncation_) {
                it = terms_.erase(it);
            } else {
                ++it;
            }
        }
    }

    Rational scalar_{0};
    TermMap terms_;
    int truncation_;
};

namespace detail {

template <typename Basis>
void bilinear_basis_part(const TriSeries<Basis> &x, const TriSeries<Basis> &y, TriOp op,
                         TriSeries<Basis> &out)
{
    const int trunc = out.truncation();
    for (const auto &[ex, cx] : x.terms()) {
        for (const auto &[ey, cy] : y.terms()) {
            if (Basis::degree(ex) + Basis::degree(ey) > trunc) {
                continue;
            }
            const Rational c = cx * cy;
            for (const auto &[e, k] : Basis::product(ex, ey, op)) {
                out.add_term(e, c * k);
            }
        }
    }
}

template <typename Basis>
void check_defined(const TriSeries<Basis> &x, const TriSeries<Basis> &y)
{
    if (x.scalar() != 0 && y.scalar() != 0) {
        throw std::domain_error("strand product undefined on two unital arguments");
    }
}

} // namespace detail

template <typename Basis>
TriSeries<Basis> prec(const TriSeries<Basis> &x, const TriSeries<Basis> &y)
{
    detail::check_defined(x, y);
    TriSeries<Basis> out(std::min(x.truncation(), y.truncation()));
    detail::bilinear_basis_part(x, y, TriOp::Prec, out);
    if (y.scalar() != 0) { // a prec 1 = a
        for (const auto &[e, c] : x.terms()) {
            out.add_term(e, c * y.scalar());
        }
    }
    return out;
}

template <typename Basis>
TriSeries<Basis> succ(const TriSeries<Basis> &x, const TriSeries<Basis> &y)
{
    detail::check_defined(x, y);
    TriSeries<Basis> out(std::min(x.truncation(), y.truncation()));
    detail::bilinear_basis_part(x, y, TriOp::Succ, out);
    if (x.scalar() != 0) { // 1 succ a = a
        for (const auto &[e, c] : y.terms()) {
            out.add_term(e, c * x.scalar());
        }
    }
    return out;
}

template <typename Basis>
TriSeries<Basis> dot(const TriSeries<Basis> &x, const TriSeries<Basis> &y)
{
    detail::check_defined(x, y);
    TriSeries<Basis> out(std::min(x.truncation(), y.truncation()));
    detail::bilinear_basis_part(x, y, TriOp::Dot, out);
    return out;
}

// Associative product; the unit slot is a genuine two-sided identity here.
template <typename Basis>
TriSeries<Basis> star(const TriSeries<Basis> &x, const TriSeries<Basis> &y)
{
    TriSeries<Basis> out(std::min(x.truncation(), y.truncation()));
    out.add_scalar(x.scalar() * y.scalar());
    for (const auto &[e, c] : x.terms()) {
        out.add_term(e, c * y.scalar());
    }
    for (const auto &[e, c] : y.terms()) {
        out.add_term(e, c * x.scalar());
    }
    for (TriOp op : {TriOp::Prec, TriOp::Succ, TriOp::Dot}) {
        detail::bilinear_basis_part(x, y, op, out);
    }
    return out;
}

// Dendriform halves: preceq absorbs dot on the left side, succeq on the right.
template <typename Basis>
TriSeries<Basis> preceq(const TriSeries<Basis> &x, const TriSeries<Basis> &y)
{
    return prec(x, y) + dot(x, y);
}

template <typename Basis>
TriSeries<Basis> succeq(const TriSeries<Basis> &x, const TriSeries<Basis> &y)
{
    return succ(x, y) + dot(x, y);
}

enum class PreLieFlavor {
    LeftR,  // x succeq y - y prec x        (from the (prec, succeq) half)
    RightR, // x prec y  - y succeq x
    LeftL,  // x succ y  - y preceq x       (from the (preceq, succ) half)
    RightL, // x preceq y - y succ x
};

template <typename Basis>
TriSeries<Basis> prelie(const TriSeries<Basis> &x, const TriSeries<Basis> &y, PreLieFlavor flavor)
{
    if (!x.unit_free() || !y.unit_free()) {
        throw std::domain_error("pre-Lie product needs unit-free arguments");
    }
    switch (flavor) {
        case PreLieFlavor::LeftR:
            return succeq(x, y) - prec(y, x);
        case PreLieFlavor::RightR:
            return prec(x, y) - succeq(y, x);
        case PreLieFlavor::LeftL:
            return succ(x, y) - preceq(y, x);
        case PreLieFlavor::RightL:
            return preceq(x, y) - succ(y, x);
    }
    throw std::logic_error("unreachable");
}

// x diamond y = x succ y - y prec x; post-Lie together with the dot bracket.
template <typename Basis>
TriSeries<Basis> postlie_diamond(const TriSeries<Basis> &x, const TriSeries<Basis> &y)
{
    if (!x.unit_free() || !y.unit_free()) {
        throw std::domain_error("post-Lie product needs unit-free arguments");
    }
    return succ(x, y) - prec(y, x);
}

template <typename Basis>
TriSeries<Basis> dot_bracket(const TriSeries<Basis> &x, const TriSeries<Basis> &y)
{
    return dot(x, y) - dot(y, x);
}

// x^(n) nested with prec (right-nested) or succ (left-nested); x^(0) = 1.
template <typename Basis>
TriSeries<Basis> tridendriform_word(const TriSeries<Basis> &x, int n, TriOp side)
{
    if (n < 0 || (side != TriOp::Prec && side != TriOp::Succ)) {
        throw std::invalid_argument("tridendriform word needs n >= 0 and side prec or succ");
    }
    if (!x.unit_free()) {
        throw std::domain_error("tridendriform word needs a unit-free argument");
    }
    TriSeries<Basis> w = TriSeries<Basis>::unit(x.truncation());
    for (int i = 0; i < n; ++i) {
        w = (side == TriOp::Prec) ? prec(x, w) : succ(w, x);
    }
    return w;
}

template <typename Basis>
TriSeries<Basis> exp_star(const TriSeries<Basis> &x)
{
    if (!x.unit_free()) {
        throw std::domain_error("exp* needs a series with zero scalar part");
    }
    TriSeries<Basis> out = TriSeries<Basis>::unit(x.truncation());
    TriSeries<Basis> power = TriSeries<Basis>::unit(x.truncation());
    for (int n = 1; n <= x.truncation(); ++n) {
        power = star(power, x);
        out = out + power * (Rational(1) / Rational(factorial(static_cast<unsigned>(n))));
    }
    return out;
}

template <typename Basis>
TriSeries<Basis> log_star(const TriSeries<Basis> &x)
{
    if (x.scalar() != 1) {
        throw std::domain_error("log* needs a series with scalar part 1");
    }
    TriSeries<Basis> z = x - TriSeries<Basis>::unit(x.truncation());
    TriSeries<Basis> out(x.truncation());
    TriSeries<Basis> power = TriSeries<Basis>::unit(x.truncation());
    for (int n = 1; n <= x.truncation(); ++n) {
        power = star(power, z);
        const Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
        out = out + power * (sign / Rational(n));
    }
    return out;
}

} // namespace tridend

#endif
