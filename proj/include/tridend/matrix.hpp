#ifndef TRIDEND_MATRIX_HPP
#define TRIDEND_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace tridend {

// Dense square matrix with exact rational entries, row-major.
class RatMatrix {
public:
    explicit RatMatrix(int dim) : dim_(check_dim(dim)), data_(static_cast<std::size_t>(dim) * dim)
    {
    }

    static RatMatrix identity(int dim)
    {
        RatMatrix m(dim);
        for (int i = 0; i < dim; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    static RatMatrix constant(int dim, const Rational &v)
    {
        RatMatrix m(dim);
        for (auto &e : m.data_) {
            e = v;
        }
        return m;
    }

    int dim() const
    {
        return dim_;
    }

    Rational &operator()(int i, int j)
    {
        return data_[static_cast<std::size_t>(i) * dim_ + j];
    }

    const Rational &operator()(int i, int j) const
    {
        return data_[static_cast<std::size_t>(i) * dim_ + j];
    }

    friend RatMatrix operator+(RatMatrix a, const RatMatrix &b)
    {
        a.check_same(b);
        for (std::size_t k = 0; k < a.data_.size(); ++k) {
            a.data_[k] += b.data_[k];
        }
        return a;
    }

    friend RatMatrix operator-(RatMatrix a, const RatMatrix &b)
    {
        a.check_same(b);
        for (std::size_t k = 0; k < a.data_.size(); ++k) {
            a.data_[k] -= b.data_[k];
        }
        return a;
    }

    friend RatMatrix operator*(const RatMatrix &a, const RatMatrix &b)
    {
        a.check_same(b);
        const int d = a.dim_;
        RatMatrix out(d);
        Rational tmp;
        for (int i = 0; i < d; ++i) {
            for (int k = 0; k < d; ++k) {
                const Rational &aik = a(i, k);
                if (aik == 0) {
                    continue;
                }
                for (int j = 0; j < d; ++j) {
                    tmp = aik * b(k, j);
                    out(i, j) += tmp;
                }
            }
        }
        return out;
    }

    friend RatMatrix operator*(RatMatrix a, const Rational &c)
    {
        for (auto &e : a.data_) {
            e *= c;
        }
        return a;
    }

    RatMatrix &operator+=(const RatMatrix &b)
    {
        check_same(b);
        for (std::size_t k = 0; k < data_.size(); ++k) {
            data_[k] += b.data_[k];
        }
        return *this;
    }

    friend bool operator==(const RatMatrix &a, const RatMatrix &b)
    {
        return a.dim_ == b.dim_ && a.data_ == b.data_;
    }

    bool is_zero() const
    {
        for (const auto &e : data_) {
            if (e != 0) {
                return false;
            }
        }
        return true;
    }

private:
    static int check_dim(int d)
    {
        if (d < 1) {
            throw std::invalid_argument("matrix dimension must be positive");
        }
        return d;
    }

    void check_same(const RatMatrix &b) const
    {
        if (dim_ != b.dim_) {
            throw std::invalid_argument("matrix dimension mismatch");
        }
    }

    int dim_;
    std::vector<Rational> data_;
};

} // namespace tridend

#endif
