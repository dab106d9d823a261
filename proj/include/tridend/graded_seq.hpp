#ifndef TRIDEND_GRADED_SEQ_HPP
#define TRIDEND_GRADED_SEQ_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "seqalg.hpp"

namespace tridend {

// Series whose degree-n coefficient is a matrix sequence; the sequence-side
// carrier of X, the Magnus logarithms and their prefix sums. Degree 0 is a
// rational scalar (multiple of the adjoined unit).
class GradedSeq {
public:
    GradedSeq(int dim, int horizon, int truncation)
        : dim_(dim), horizon_(horizon), truncation_(truncation),
          coeff_(static_cast<std::size_t>(truncation), MatSeq::zeros(dim, horizon))
    {
        if (truncation < 0) {
            throw std::invalid_argument("negative truncation");
        }
    }

    int dim() const
    {
        return dim_;
    }

    int horizon() const
    {
        return horizon_;
    }

    int truncation() const
    {
        return truncation_;
    }

    const Rational &scalar() const
    {
        return scalar_;
    }

    Rational &scalar()
    {
        return scalar_;
    }

    const MatSeq &degree(int n) const
    {
        if (n < 1 || n > truncation_) {
            throw std::out_of_range("degree outside 1..truncation");
        }
        return coeff_[static_cast<std::size_t>(n) - 1];
    }

    MatSeq &degree(int n)
    {
        return const_cast<MatSeq &>(static_cast<const GradedSeq *>(this)->degree(n));
    }

    friend bool operator==(const GradedSeq &a, const GradedSeq &b)
    {
        return a.scalar_ == b.scalar_ && a.coeff_ == b.coeff_;
    }

private:
    int dim_;
    int horizon_;
    int truncation_;
    Rational scalar_{0};
    std::vector<MatSeq> coeff_;
};

inline GradedSeq graded_add(const GradedSeq &a, const GradedSeq &b)
{
    GradedSeq out(a.dim(), std::min(a.horizon(), b.horizon()),
                  std::min(a.truncation(), b.truncation()));
    out.scalar() = a.scalar() + b.scalar();
    for (int n = 1; n <= out.truncation(); ++n) {
        out.degree(n) = seq_add(a.degree(n).truncated(out.horizon()),
                                b.degree(n).truncated(out.horizon()));
    }
    return out;
}

inline GradedSeq graded_scale(const GradedSeq &a, const Rational &c)
{
    GradedSeq out(a.dim(), a.horizon(), a.truncation());
    out.scalar() = a.scalar() * c;
    for (int n = 1; n <= a.truncation(); ++n) {
        out.degree(n) = seq_scale(a.degree(n), c);
    }
    return out;
}

// Graded associative product: degree-wise convolution by the sequence star,
// with the scalar slot acting as the unit.
inline GradedSeq graded_star(const GradedSeq &a, const GradedSeq &b)
{
    GradedSeq out(a.dim(), std::min(a.horizon(), b.horizon()),
                  std::min(a.truncation(), b.truncation()));
    out.scalar() = a.scalar() * b.scalar();
    for (int n = 1; n <= out.truncation(); ++n) {
        MatSeq acc = MatSeq::zeros(out.dim(), out.horizon());
        if (b.scalar() != 0) {
            acc = seq_add(acc, seq_scale(a.degree(n).truncated(out.horizon()), b.scalar()));
        }
        if (a.scalar() != 0) {
            acc = seq_add(acc, seq_scale(b.degree(n).truncated(out.horizon()), a.scalar()));
        }
        for (int p = 1; p < n; ++p) {
            acc = seq_add(acc, seq_star(a.degree(p).truncated(out.horizon()),
                                        b.degree(n - p).truncated(out.horizon())));
        }
        out.degree(n) = std::move(acc);
    }
    return out;
}

inline GradedSeq graded_log_star(const GradedSeq &x)
{
    if (x.scalar() != 1) {
        throw std::domain_error("log* needs scalar part 1");
    }
    GradedSeq z = x;
    z.scalar() = 0;
    GradedSeq out(x.dim(), x.horizon(), x.truncation());
    GradedSeq power(x.dim(), x.horizon(), x.truncation());
    power.scalar() = 1;
    for (int n = 1; n <= x.truncation(); ++n) {
        power = graded_star(power, z);
        const Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
        out = graded_add(out, graded_scale(power, sign / Rational(n)));
    }
    return out;
}

inline GradedSeq graded_exp_star(const GradedSeq &x)
{
    if (x.scalar() != 0) {
        throw std::domain_error("exp* needs scalar part 0");
    }
    GradedSeq out(x.dim(), x.horizon(), x.truncation());
    out.scalar() = 1;
    GradedSeq power(x.dim(), x.horizon(), x.truncation());
    power.scalar() = 1;
    for (int n = 1; n <= x.truncation(); ++n) {
        power = graded_star(power, x);
        out = graded_add(out, graded_scale(power, Rational(1) / Rational(factorial(static_cast<unsigned>(n)))));
    }
    return out;
}

// Degree-wise prefix sums.
inline GradedSeq graded_summ(const GradedSeq &x)
{
    GradedSeq out(x.dim(), x.horizon(), x.truncation());
    out.scalar() = x.scalar();
    for (int n = 1; n <= x.truncation(); ++n) {
        out.degree(n) = summ(x.degree(n));
    }
    return out;
}

// Solution prefix of X = 1 + a prec X (or a preceq X when with_diagonal is
// set) in the sequence algebra: the degree-n coefficient is the n-fold
// right-nested word of a.
inline GradedSeq sequence_fixed_point(const MatSeq &a, int truncation, bool with_diagonal)
{
    GradedSeq out(a.dim(), a.horizon(), truncation);
    out.scalar() = 1;
    if (truncation >= 1) {
        out.degree(1) = a;
        for (int n = 2; n <= truncation; ++n) {
            MatSeq w = seq_product(a, out.degree(n - 1), TriOp::Prec);
            if (with_diagonal) { // preceq = prec + dot
                w = seq_add(w, seq_product(a, out.degree(n - 1), TriOp::Dot));
            }
            out.degree(n) = std::move(w);
        }
    }
    return out;
}

} // namespace tridend

#endif
