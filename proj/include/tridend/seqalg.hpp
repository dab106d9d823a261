#ifndef TRIDEND_SEQALG_HPP
#define TRIDEND_SEQALG_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "ops.hpp"
#include "rational.hpp"
#include "surjection.hpp"
#include "tree.hpp"

namespace tridend {

// Finite prefix a(0), ..., a(horizon-1) of a sequence of square rational
// matrices. Also the carrier of every computed sequence.
class MatSeq {
public:
    MatSeq(int dim, std::vector<RatMatrix> entries) : dim_(dim), entries_(std::move(entries))
    {
        for (const auto &m : entries_) {
            if (m.dim() != dim_) {
                throw std::invalid_argument("sequence entry dimension mismatch");
            }
        }
    }

    static MatSeq zeros(int dim, int horizon)
    {
        return MatSeq(dim, std::vector<RatMatrix>(static_cast<std::size_t>(horizon), RatMatrix(dim)));
    }

    // Scalar constant sequence (d = 1).
    static MatSeq constant_scalar(const Rational &v, int horizon)
    {
        return MatSeq(1, std::vector<RatMatrix>(static_cast<std::size_t>(horizon),
                                                RatMatrix::constant(1, v)));
    }

    int dim() const
    {
        return dim_;
    }

    int horizon() const
    {
        return static_cast<int>(entries_.size());
    }

    const RatMatrix &at(int n) const
    {
        if (n < 0 || n >= horizon()) {
            throw std::out_of_range("sequence index " + std::to_string(n)
                                    + " beyond horizon " + std::to_string(horizon()));
        }
        return entries_[static_cast<std::size_t>(n)];
    }

    RatMatrix &at(int n)
    {
        return const_cast<RatMatrix &>(static_cast<const MatSeq *>(this)->at(n));
    }

    MatSeq truncated(int new_horizon) const
    {
        if (new_horizon > horizon()) {
            throw std::out_of_range("cannot extend a sequence prefix");
        }
        return MatSeq(dim_, std::vector<RatMatrix>(entries_.begin(), entries_.begin() + new_horizon));
    }

    friend bool operator==(const MatSeq &a, const MatSeq &b)
    {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    int dim_;
    std::vector<RatMatrix> entries_;
};

// Prefix sums: S(f)(N) = sum_{r<N} f(r). Horizon-preserving; S(f)(0) = 0.
inline MatSeq summ(const MatSeq &f)
{
    MatSeq out = MatSeq::zeros(f.dim(), f.horizon());
    RatMatrix acc(f.dim());
    for (int n = 0; n < f.horizon(); ++n) {
        out.at(n) = acc;
        acc += f.at(n);
    }
    return out;
}

// Forward difference: D(f)(N) = f(N+1) - f(N). Horizon shrinks by one.
inline MatSeq diff(const MatSeq &f)
{
    if (f.horizon() < 1) {
        throw std::out_of_range("difference of an empty sequence");
    }
    std::vector<RatMatrix> out;
    out.reserve(static_cast<std::size_t>(f.horizon()) - 1);
    for (int n = 0; n + 1 < f.horizon(); ++n) {
        out.push_back(f.at(n + 1) - f.at(n));
    }
    return MatSeq(f.dim(), std::move(out));
}

namespace detail {

inline int common_horizon(const MatSeq &f, const MatSeq &g)
{
    if (f.dim() != g.dim()) {
        throw std::invalid_argument("sequence dimension mismatch");
    }
    return std::min(f.horizon(), g.horizon());
}

} // namespace detail

inline MatSeq seq_pointwise(const MatSeq &f, const MatSeq &g)
{
    const int h = detail::common_horizon(f, g);
    std::vector<RatMatrix> out;
    out.reserve(static_cast<std::size_t>(h));
    for (int n = 0; n < h; ++n) {
        out.push_back(f.at(n) * g.at(n));
    }
    return MatSeq(f.dim(), std::move(out));
}

inline MatSeq seq_add(const MatSeq &f, const MatSeq &g)
{
    const int h = detail::common_horizon(f, g);
    std::vector<RatMatrix> out;
    out.reserve(static_cast<std::size_t>(h));
    for (int n = 0; n < h; ++n) {
        out.push_back(f.at(n) + g.at(n));
    }
    return MatSeq(f.dim(), std::move(out));
}

inline MatSeq seq_scale(const MatSeq &f, const Rational &c)
{
    std::vector<RatMatrix> out;
    out.reserve(static_cast<std::size_t>(f.horizon()));
    for (int n = 0; n < f.horizon(); ++n) {
        out.push_back(f.at(n) * c);
    }
    return MatSeq(f.dim(), std::move(out));
}

// Strand products induced by the weight-1 summation operator:
//   f prec g = f S(g),  f succ g = S(f) g,  f dot g = fg.
inline MatSeq seq_product(const MatSeq &f, const MatSeq &g, TriOp op)
{
    switch (op) {
        case TriOp::Prec:
            return seq_pointwise(f, summ(g));
        case TriOp::Succ:
            return seq_pointwise(summ(f), g);
        case TriOp::Dot:
            return seq_pointwise(f, g);
    }
    throw std::logic_error("unreachable");
}

inline MatSeq seq_star(const MatSeq &f, const MatSeq &g)
{
    return seq_add(seq_add(seq_product(f, g, TriOp::Prec), seq_product(f, g, TriOp::Succ)),
                   seq_product(f, g, TriOp::Dot));
}

// Which way surjection values order the coordinates of a partial diagonal.
// ValueAligned: s_i > s_j iff sigma(i) > sigma(j). Inverted is the opposite
// reading (larger sigma values take smaller coordinates).
enum class DiagOrientation { ValueAligned, Inverted };

// All tuples of T_sigma(N): choose range(sigma) distinct values out of
// {0..N-1} and place them according to the word. |T_sigma(N)| = C(N, r).
inline std::vector<std::vector<int>> enumerate_diagonal(const Surjection &sigma, int N,
                                                        DiagOrientation orient)
{
    const int r = sigma.range();
    std::vector<std::vector<int>> out;
    if (N < r) {
        return out;
    }
    std::vector<int> chosen; // ascending r-subset of {0..N-1}
    auto rec = [&](auto &&self, int next_min) -> void {
        if (static_cast<int>(chosen.size()) == r) {
            std::vector<int> tuple;
            tuple.reserve(sigma.word().size());
            for (int v : sigma.word()) {
                const int idx = (orient == DiagOrientation::ValueAligned) ? v - 1 : r - v;
                tuple.push_back(chosen[static_cast<std::size_t>(idx)]);
            }
            out.push_back(std::move(tuple));
            return;
        }
        const int remaining = r - static_cast<int>(chosen.size());
        for (int v = next_min; v + remaining <= N; ++v) {
            chosen.push_back(v);
            self(self, v + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// sum over T_sigma(N) of a(s_1)...a(s_n)
inline RatMatrix diagonal_sum(const Surjection &sigma, const MatSeq &a, int N,
                              DiagOrientation orient)
{
    if (N > a.horizon()) {
        throw std::out_of_range("diagonal sum beyond sequence horizon");
    }
    RatMatrix acc(a.dim());
    for (const auto &tuple : enumerate_diagonal(sigma, N, orient)) {
        RatMatrix prod = a.at(tuple[0]);
        for (std::size_t i = 1; i < tuple.size(); ++i) {
            prod = prod * a.at(tuple[i]);
        }
        acc += prod;
    }
    return acc;
}

// The iterated-sum realization of a surjection: the difference of its
// diagonal sums. Defined for N <= horizon - 1.
inline MatSeq f_tilde(const Surjection &sigma, const MatSeq &a,
                      DiagOrientation orient = DiagOrientation::ValueAligned)
{
    std::vector<RatMatrix> out;
    out.reserve(static_cast<std::size_t>(a.horizon()));
    RatMatrix prev = diagonal_sum(sigma, a, 0, orient);
    for (int n = 0; n < a.horizon(); ++n) {
        RatMatrix next = diagonal_sum(sigma, a, n + 1, orient);
        out.push_back(next - prev);
        prev = std::move(next);
    }
    return MatSeq(a.dim(), std::move(out));
}

using FastEvalMemo = std::map<std::string, MatSeq>;

// Recursive evaluation of the unique tridendriform morphism sending the
// one-vertex binary tree to `a`. O(horizon * size(t)) matrix operations;
// shared subtrees are evaluated once through the memo.
inline const MatSeq &fast_eval(const Tree &t, const MatSeq &a, FastEvalMemo &memo)
{
    if (t.is_leaf()) {
        throw std::invalid_argument("fast_eval needs a non-unit tree");
    }
    const std::string key = t.encode();
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    const auto &kids = t.children();
    const std::size_t n = kids.size();
    // product of (S F(t_i)) a over i < n, then a trailing S F(t_n); unit
    // children drop their S factor.
    auto head_factor = [&](const Tree &c) {
        return c.is_leaf() ? a : seq_pointwise(summ(fast_eval(c, a, memo)), a);
    };
    MatSeq acc = head_factor(kids[0]);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        acc = seq_pointwise(acc, head_factor(kids[i]));
    }
    if (!kids[n - 1].is_leaf()) {
        acc = seq_pointwise(acc, summ(fast_eval(kids[n - 1], a, memo)));
    }
    return memo.emplace(key, std::move(acc)).first->second;
}

inline MatSeq fast_eval(const Tree &t, const MatSeq &a)
{
    FastEvalMemo memo;
    return fast_eval(t, a, memo);
}

struct SplitReport {
    bool ok = true;
    std::string detail;
};

// Checks that T_sigma(N) x T_tau(N) is partitioned by the standard
// juxtapositions, with the three parts classified by comparing the extreme
// coordinates of the two halves (max under ValueAligned, min under Inverted).
inline SplitReport split_check(const Surjection &sigma, const Surjection &tau, int N,
                               DiagOrientation orient = DiagOrientation::ValueAligned)
{
    SplitReport report;
    auto fail = [&](std::string msg) {
        report.ok = false;
        if (!report.detail.empty()) {
            report.detail += "; ";
        }
        report.detail += std::move(msg);
    };

    const auto left = enumerate_diagonal(sigma, N, orient);
    const auto right = enumerate_diagonal(tau, N, orient);

    // expected classification of each concatenated tuple
    std::map<std::vector<int>, TriOp> expected;
    for (const auto &s : left) {
        for (const auto &t : right) {
            const int es = (orient == DiagOrientation::ValueAligned)
                               ? *std::max_element(s.begin(), s.end())
                               : *std::min_element(s.begin(), s.end());
            const int et = (orient == DiagOrientation::ValueAligned)
                               ? *std::max_element(t.begin(), t.end())
                               : *std::min_element(t.begin(), t.end());
            bool left_first = (orient == DiagOrientation::ValueAligned) ? (es > et) : (es < et);
            bool right_first = (orient == DiagOrientation::ValueAligned) ? (es < et) : (es > et);
            TriOp cls = left_first ? TriOp::Prec : (right_first ? TriOp::Succ : TriOp::Dot);
            std::vector<int> joined(s);
            joined.insert(joined.end(), t.begin(), t.end());
            expected.emplace(std::move(joined), cls);
        }
    }

    std::map<std::vector<int>, TriOp> found;
    for (TriOp op : {TriOp::Prec, TriOp::Succ, TriOp::Dot}) {
        for (const auto &fg : wq_product(sigma, tau, op)) {
            for (auto &tuple : enumerate_diagonal(fg, N, orient)) {
                auto [it, inserted] = found.emplace(std::move(tuple), op);
                if (!inserted) {
                    fail("tuple covered twice in the juxtaposition union");
                }
            }
        }
    }

    if (expected.size() != found.size()) {
        fail("cardinality mismatch: " + std::to_string(expected.size()) + " pairs vs "
             + std::to_string(found.size()) + " covered tuples");
    }
    for (const auto &[tuple, cls] : expected) {
        auto it = found.find(tuple);
        if (it == found.end()) {
            fail("pair missing from the juxtaposition union");
            break;
        }
        if (it->second != cls) {
            fail("pair lands in the wrong strand");
            break;
        }
    }
    return report;
}

} // namespace tridend

#endif
