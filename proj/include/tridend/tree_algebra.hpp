#ifndef TRIDEND_TREE_ALGEBRA_HPP
#define TRIDEND_TREE_ALGEBRA_HPP

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ops.hpp"
#include "rational.hpp"
#include "series.hpp"
#include "surjection.hpp"
#include "tree.hpp"

namespace tridend {

namespace detail {

using TreeComb = std::map<Tree, Rational>;

inline void tree_add(TreeComb &acc, const Tree &t, const Rational &c)
{
    auto it = acc.find(t);
    if (it == acc.end()) {
        acc.emplace(t, c);
    } else {
        it->second += c;
        if (it->second == 0) {
            acc.erase(it);
        }
    }
}

inline TreeComb tree_product(const Tree &s, const Tree &t, TriOp op);

// Associative product with the single edge acting as unit.
inline TreeComb tree_star(const Tree &s, const Tree &t)
{
    if (s.is_leaf()) {
        return {{t, Rational(1)}};
    }
    if (t.is_leaf()) {
        return {{s, Rational(1)}};
    }
    TreeComb acc;
    for (TriOp op : {TriOp::Prec, TriOp::Succ, TriOp::Dot}) {
        for (const auto &[e, c] : tree_product(s, t, op)) {
            tree_add(acc, e, c);
        }
    }
    return acc;
}

// Recursive strand products of the free tridendriform algebra on trees:
//   s prec t = graft(s1,...,s_{n-1}, s_n * t)
//   s succ t = graft(s * t_1, t_2,...,t_p)
//   s dot  t = graft(s1,...,s_{n-1}, s_n * t_1, t_2,...,t_p)
inline TreeComb tree_product(const Tree &s, const Tree &t, TriOp op)
{
    if (s.is_leaf() || t.is_leaf()) {
        throw std::invalid_argument("strand product of basis trees needs non-unit trees");
    }
    const auto &sk = s.children();
    const auto &tk = t.children();
    TreeComb acc;
    auto graft_around = [&](const TreeComb &inner, auto &&assemble) {
        for (const auto &[mid, c] : inner) {
            tree_add(acc, assemble(mid), c);
        }
    };
    switch (op) {
        case TriOp::Prec:
            graft_around(tree_star(sk.back(), t), [&](const Tree &mid) {
                std::vector<Tree> kids(sk.begin(), sk.end() - 1);
                kids.push_back(mid);
                return Tree(std::move(kids));
            });
            break;
        case TriOp::Succ:
            graft_around(tree_star(s, tk.front()), [&](const Tree &mid) {
                std::vector<Tree> kids{mid};
                kids.insert(kids.end(), tk.begin() + 1, tk.end());
                return Tree(std::move(kids));
            });
            break;
        case TriOp::Dot:
            graft_around(tree_star(sk.back(), tk.front()), [&](const Tree &mid) {
                std::vector<Tree> kids(sk.begin(), sk.end() - 1);
                kids.push_back(mid);
                kids.insert(kids.end(), tk.begin() + 1, tk.end());
                return Tree(std::move(kids));
            });
            break;
    }
    return acc;
}

} // namespace detail

struct TreeBasis {
    using Element = Tree;

    static int degree(const Element &t)
    {
        return t.degree();
    }

    static std::map<Element, Rational> product(const Element &a, const Element &b, TriOp op)
    {
        return detail::tree_product(a, b, op);
    }
};

struct SurjBasis {
    using Element = Surjection;

    static int degree(const Element &f)
    {
        return f.degree();
    }

    static std::map<Element, Rational> product(const Element &a, const Element &b, TriOp op)
    {
        std::map<Element, Rational> out;
        for (const auto &fg : wq_product(a, b, op)) {
            out.emplace(fg, Rational(1));
        }
        return out;
    }
};

using TreeSeries = TriSeries<TreeBasis>;
using SurjSeries = TriSeries<SurjBasis>;

// Linear extension of Psi^*: each tree maps to the sum of its fiber.
inline SurjSeries psi_star(const TreeSeries &x,
                           LevelOrientation orient = LevelOrientation::RootDeepest)
{
    SurjSeries out(x.truncation());
    out.add_scalar(x.scalar());
    for (const auto &[t, c] : x.terms()) {
        for (const auto &f : psi_fiber(t, orient)) {
            out.add_term(f, c);
        }
    }
    return out;
}

enum class MorphismSide { Left, Right };

// F_L / F_R on a planar binary tree: the unique dendriform morphisms fixing
// the generator, where L reads the tridendriform halves as (preceq, succ) and
// R as (prec, succeq). Computed by the recursion
//   F_L(t1 v t2) = F_L(t1) succ Y preceq F_L(t2),
//   F_R(t1 v t2) = F_R(t1) succeq Y prec F_R(t2).
// Every term keeps the descent statistic of t (weak count for L, strict
// count for R), but the converse filter over the contraction closure admits
// extra trees from degree 3 on, so the recursion is the definition here.
inline TreeSeries f_lr(const Tree &t, MorphismSide side, int truncation,
                       DescentOrientation orient = DescentOrientation::AsPrinted)
{
    if (!is_binary(t) || t.is_leaf()) {
        throw std::domain_error("f_lr is defined on non-unit planar binary trees");
    }
    if (orient == DescentOrientation::Mirrored) {
        // Mirrored reading: compute in the mirror image and map back (the
        // mirror already exchanges the two pointing classes).
        const auto flipped = f_lr(t.mirror(), side, truncation, DescentOrientation::AsPrinted);
        TreeSeries out(truncation);
        for (const auto &[e, c] : flipped.terms()) {
            out.add_term(e.mirror(), c);
        }
        return out;
    }
    const TreeSeries y = TreeSeries::single(graft({Tree{}, Tree{}}), truncation);
    auto rec = [&](auto &&self, const Tree &node) -> TreeSeries {
        if (node.is_leaf()) {
            return TreeSeries::unit(truncation);
        }
        const auto &kids = node.children();
        const TreeSeries left = self(self, kids[0]);
        const TreeSeries right = self(self, kids[1]);
        const TreeSeries mid = (side == MorphismSide::Left) ? succ(left, y) : succeq(left, y);
        return (side == MorphismSide::Left) ? preceq(mid, right) : prec(mid, right);
    };
    return rec(rec, t);
}

// Independent route: contract only one pointing class of edges.
inline TreeSeries f_lr_by_contraction(const Tree &t, MorphismSide side, int truncation,
                                      DescentOrientation orient = DescentOrientation::AsPrinted)
{
    if (!is_binary(t) || t.is_leaf()) {
        throw std::domain_error("f_lr is defined on non-unit planar binary trees");
    }
    // Under the mirrored reading the pointing classes swap roles.
    EdgePointing admit_class = (side == MorphismSide::Left) ? EdgePointing::Right : EdgePointing::Left;
    if (orient == DescentOrientation::Mirrored) {
        admit_class = (admit_class == EdgePointing::Right) ? EdgePointing::Left : EdgePointing::Right;
    }
    TreeSeries out(truncation);
    const auto closure = contraction_closure_if(t, [&](const Tree &cur, const EdgePath &edge) {
        return edge_pointing(cur, edge) == admit_class;
    });
    for (const auto &u : closure) {
        out.add_term(u, Rational(1));
    }
    return out;
}

// Unique tridendriform morphism out of the tree basis with generator image
// `gen`. The Target supplies the three strand products and a unit object:
//   Target::Carrier
//   Target::unit()
//   Target::is_unit(x)
//   Target::prec/succ/dot(x, y)  with the standard unital rules
// Recursion over graft(t1,...,tn):
//   (F(t1) succ a) dot ... dot (F(t_{n-2}) succ a) dot (F(t_{n-1}) succ a prec F(t_n)).
template <typename Target>
typename Target::Carrier eval_tree_morphism(const Tree &t, const Target &target,
                                            const typename Target::Carrier &gen)
{
    if (t.is_leaf()) {
        return target.unit();
    }
    const auto &kids = t.children();
    const auto n = kids.size();
    std::vector<typename Target::Carrier> f;
    f.reserve(n);
    for (const auto &c : kids) {
        f.push_back(eval_tree_morphism(c, target, gen));
    }
    auto succ_gen = [&](const typename Target::Carrier &x) {
        return target.is_unit(x) ? gen : target.succ(x, gen);
    };
    typename Target::Carrier last = succ_gen(f[n - 2]);
    if (!target.is_unit(f[n - 1])) {
        last = target.prec(last, f[n - 1]);
    }
    typename Target::Carrier acc = last;
    for (std::size_t i = n - 2; i-- > 0;) {
        acc = target.dot(succ_gen(f[i]), acc);
    }
    return acc;
}

// Linear extension over a tree series; x must be unit-free (the target unit
// need not embed in the carrier's linear structure).
template <typename Target>
typename Target::Carrier eval_tree_morphism(const TreeSeries &x, const Target &target,
                                            const typename Target::Carrier &gen)
{
    if (!x.unit_free()) {
        throw std::domain_error("eval_tree_morphism needs a unit-free series");
    }
    typename Target::Carrier acc = target.zero();
    for (const auto &[t, c] : x.terms()) {
        acc = target.add(acc, target.scale(eval_tree_morphism(t, target, gen), c));
    }
    return acc;
}

// Target adaptor turning a TriSeries basis into an eval_tree_morphism target.
template <typename Basis>
struct SeriesTarget {
    using Carrier = TriSeries<Basis>;
    int truncation;

    Carrier unit() const
    {
        return Carrier::unit(truncation);
    }

    bool is_unit(const Carrier &x) const
    {
        return x.terms().empty() && x.scalar() == 1;
    }

    Carrier zero() const
    {
        return Carrier(truncation);
    }

    Carrier add(const Carrier &a, const Carrier &b) const
    {
        return a + b;
    }

    Carrier scale(const Carrier &a, const Rational &c) const
    {
        return a * c;
    }

    Carrier prec(const Carrier &a, const Carrier &b) const
    {
        return tridend::prec(a, b);
    }

    Carrier succ(const Carrier &a, const Carrier &b) const
    {
        return tridend::succ(a, b);
    }

    Carrier dot(const Carrier &a, const Carrier &b) const
    {
        return tridend::dot(a, b);
    }
};

} // namespace tridend

#endif
