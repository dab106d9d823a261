#ifndef TRIDEND_VERIFY_HPP
#define TRIDEND_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "magnus.hpp"
#include "rng.hpp"

namespace tridend {

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail; // minimal reproducer on failure
};

struct VerifyOptions {
    int max_degree = 4; // tree degrees
    int max_n = 4;      // surjection lengths
    int horizon = 6;    // sequence prefix length
    int dim = 2;        // matrix dimension
    int samples = 30;   // random triples per algebraic law
    std::uint64_t seed = 0;
};

namespace verify_detail {

// Independent count of planar reduced trees by leaves: convolution powers of
// the leaf-count vector, never touching tree objects.
inline std::vector<Integer> schroeder_counts(int max_degree)
{
    const int max_leaves = max_degree + 1;
    std::vector<Integer> count(static_cast<std::size_t>(max_leaves) + 1, Integer(0));
    count[1] = 1;
    for (int l = 2; l <= max_leaves; ++l) {
        // sum over arity k of the k-fold convolution at l
        std::vector<Integer> conv(static_cast<std::size_t>(l) + 1, Integer(0));
        conv[0] = 1; // 0-fold
        Integer total = 0;
        for (int k = 1; k <= l; ++k) {
            std::vector<Integer> next(static_cast<std::size_t>(l) + 1, Integer(0));
            for (int used = 0; used <= l; ++used) {
                if (conv[static_cast<std::size_t>(used)] == 0) {
                    continue;
                }
                for (int take = 1; used + take <= l; ++take) {
                    next[static_cast<std::size_t>(used + take)] +=
                        conv[static_cast<std::size_t>(used)] * count[static_cast<std::size_t>(take)];
                }
            }
            conv = std::move(next);
            if (k >= 2) {
                total += conv[static_cast<std::size_t>(l)];
            }
        }
        count[static_cast<std::size_t>(l)] = total;
    }
    std::vector<Integer> by_degree;
    for (int l = 1; l <= max_leaves; ++l) {
        by_degree.push_back(count[static_cast<std::size_t>(l)]);
    }
    return by_degree;
}

// Ordered Bell numbers via a(n) = sum_k C(n,k) a(n-k).
inline std::vector<Integer> fubini_counts(int max_n)
{
    std::vector<Integer> a{Integer(1)};
    for (int n = 1; n <= max_n; ++n) {
        Integer s = 0;
        for (int k = 1; k <= n; ++k) {
            s += binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))
                 * a[static_cast<std::size_t>(n - k)];
        }
        a.push_back(s);
    }
    return a;
}

// Small pools of low-degree basis elements the random series draw from.
template <typename Basis>
struct BasisPool;

template <>
struct BasisPool<TreeBasis> {
    static std::vector<Tree> make()
    {
        std::vector<Tree> pool;
        for (int d = 1; d <= 2; ++d) {
            for (const auto &t : enumerate_trees(d)) {
                pool.push_back(t);
            }
        }
        return pool;
    }
};

template <>
struct BasisPool<SurjBasis> {
    static std::vector<Surjection> make()
    {
        std::vector<Surjection> pool;
        for (int n = 1; n <= 2; ++n) {
            for (const auto &f : enumerate_surjections(n)) {
                pool.push_back(f);
            }
        }
        return pool;
    }
};

template <typename Basis>
TriSeries<Basis> random_series(const std::vector<typename Basis::Element> &pool, int truncation,
                               SplitMix64 &rng, int terms = 2)
{
    TriSeries<Basis> out(truncation);
    for (int i = 0; i < terms; ++i) {
        Rational c = rng.rational();
        while (c == 0) {
            c = rng.rational();
        }
        out.add_term(pool[rng.below(pool.size())], c);
    }
    return out;
}

} // namespace verify_detail

class Verifier {
public:
    explicit Verifier(VerifyOptions options) : opt_(options), rng_(options.seed) {}

    const std::vector<CheckResult> &results() const
    {
        return results_;
    }

    bool all_ok() const
    {
        for (const auto &r : results_) {
            if (!r.ok) {
                return false;
            }
        }
        return true;
    }

    void check(const std::string &name, bool ok, const std::string &detail = "")
    {
        results_.push_back({name, ok, ok ? "" : detail});
    }

    void run_all()
    {
        tree_checks();
        surjection_checks();
        bijection_checks();
        axiom_checks();
        lie_checks();
        word_and_factorization_checks();
        flr_checks();
        sequence_checks();
        magnus_checks();
    }

    // --- treekit ------------------------------------------------------

    void tree_checks()
    {
        const auto expected = verify_detail::schroeder_counts(opt_.max_degree);
        bool counts_ok = true;
        std::string detail;
        for (int n = 0; n <= opt_.max_degree; ++n) {
            const auto trees = enumerate_trees(n);
            if (Integer(static_cast<long>(trees.size())) != expected[static_cast<std::size_t>(n)]) {
                counts_ok = false;
                detail = "degree " + std::to_string(n) + ": enumerated " + std::to_string(trees.size())
                         + ", recurrence gives " + expected[static_cast<std::size_t>(n)].get_str();
                break;
            }
        }
        check("tree counts match arity-composition recurrence", counts_ok, detail);

        bool stats_ok = true, mirror_ok = true, parse_ok = true;
        std::string stats_detail, mirror_detail, parse_detail;
        for (int n = 1; n <= opt_.max_degree && stats_ok && mirror_ok && parse_ok; ++n) {
            for (const auto &t : enumerate_trees(n)) {
                const auto s = descent_stats(t);
                if (!(s.strict <= s.weak && s.weak <= t.degree() - 1)) {
                    stats_ok = false;
                    stats_detail = t.encode();
                    break;
                }
                if (!(t.mirror().mirror() == t)) {
                    mirror_ok = false;
                    mirror_detail = t.encode();
                    break;
                }
                if (!(parse_tree(t.encode()) == t)) {
                    parse_ok = false;
                    parse_detail = t.encode();
                    break;
                }
            }
        }
        check("descent bounds strict <= weak <= degree-1", stats_ok, stats_detail);
        check("mirror is an involution", mirror_ok, mirror_detail);
        check("encode/parse round trip", parse_ok, parse_detail);

        // contraction order: degree preserved, transitive, per-edge descent deltas
        bool order_ok = true, delta_ok = true;
        std::string order_detail, delta_detail;
        const int cap = std::min(opt_.max_degree, 5);
        for (int n = 1; n <= cap && (order_ok || delta_ok); ++n) {
            for (const auto &t : enumerate_trees(n)) {
                const auto closure = contraction_closure(t);
                for (const auto &u : closure) {
                    if (u.degree() != t.degree()) {
                        order_ok = false;
                        order_detail = t.encode() + " -> " + u.encode();
                    }
                    for (const auto &v : contraction_closure(u)) {
                        if (!closure.count(v)) {
                            order_ok = false;
                            order_detail = "transitivity via " + u.encode();
                        }
                    }
                }
                const auto base = descent_stats(t);
                for (const auto &edge : inner_edges(t)) {
                    const auto after = descent_stats(contract_edge(t, edge));
                    const auto cls = edge_pointing(t, edge);
                    // Right-pointing shrinks keep the weak count, left-pointing
                    // ones keep the strict count; either count moves by at most
                    // one towards weak+1 / strict-1.
                    const bool good = (cls != EdgePointing::Right || after.weak == base.weak)
                                      && (cls != EdgePointing::Left || after.strict == base.strict)
                                      && (after.weak == base.weak || after.weak == base.weak + 1)
                                      && (after.strict == base.strict || after.strict == base.strict - 1);
                    if (!good) {
                        delta_ok = false;
                        delta_detail = t.encode();
                    }
                }
            }
        }
        check("contraction order preserves degree and is transitive", order_ok, order_detail);
        check("edge shrinking shifts descents by pointing class", delta_ok, delta_detail);
    }

    // --- wqsurj -------------------------------------------------------

    void surjection_checks()
    {
        const auto expected = verify_detail::fubini_counts(opt_.max_n);
        bool counts_ok = true;
        std::string detail;
        for (int n = 1; n <= opt_.max_n; ++n) {
            const auto all = enumerate_surjections(n);
            if (Integer(static_cast<long>(all.size())) != expected[static_cast<std::size_t>(n)]) {
                counts_ok = false;
                detail = "n=" + std::to_string(n) + ": enumerated " + std::to_string(all.size())
                         + ", recurrence gives " + expected[static_cast<std::size_t>(n)].get_str();
                break;
            }
        }
        check("surjection counts match ordered-Bell recurrence", counts_ok, detail);

        bool std_ok = true;
        std::string std_detail;
        for (int s = 0; s < opt_.samples && std_ok; ++s) {
            const int len = 1 + static_cast<int>(rng_.below(6));
            std::vector<int> w;
            for (int i = 0; i < len; ++i) {
                w.push_back(1 + static_cast<int>(rng_.below(9)));
            }
            const auto f = standardize(w).word();
            for (int i = 0; i < len && std_ok; ++i) {
                for (int j = 0; j < len; ++j) {
                    if ((w[static_cast<std::size_t>(i)] < w[static_cast<std::size_t>(j)])
                        != (f[static_cast<std::size_t>(i)] < f[static_cast<std::size_t>(j)])) {
                        std_ok = false;
                        std_detail = "word sample " + std::to_string(s);
                        break;
                    }
                }
            }
        }
        check("standardization preserves strict value order", std_ok, std_detail);

        // juxtaposition of raw words is associative
        bool juxt_ok = true;
        for (int s = 0; s < opt_.samples; ++s) {
            std::vector<int> a, b, c;
            for (int i = 0; i < 3; ++i) {
                a.push_back(1 + static_cast<int>(rng_.below(4)));
                b.push_back(1 + static_cast<int>(rng_.below(4)));
                c.push_back(1 + static_cast<int>(rng_.below(4)));
            }
            std::vector<int> ab(a);
            ab.insert(ab.end(), b.begin(), b.end());
            std::vector<int> abc1(ab);
            abc1.insert(abc1.end(), c.begin(), c.end());
            std::vector<int> bc(b);
            bc.insert(bc.end(), c.begin(), c.end());
            std::vector<int> abc2(a);
            abc2.insert(abc2.end(), bc.begin(), bc.end());
            juxt_ok = juxt_ok && (abc1 == abc2);
        }
        check("juxtaposition associativity", juxt_ok);
    }

    void bijection_checks()
    {
        bool round_ok = true, descent_ok = true;
        std::string round_detail, descent_detail;
        for (int n = 1; n <= opt_.max_n; ++n) {
            for (const auto &f : enumerate_surjections(n)) {
                if (!(from_leveled_tree(to_leveled_tree(f)) == f)) {
                    round_ok = false;
                    round_detail = f.encode();
                }
                const auto wd = descents(f);
                const auto td = descent_stats(forget_levels(f));
                if (wd.strict != td.strict || wd.weak != td.weak) {
                    descent_ok = false;
                    descent_detail = f.encode();
                }
            }
        }
        check("leveled-tree bijection round trip", round_ok, round_detail);
        check("descents preserved by the shape map", descent_ok, descent_detail);

        // fibers partition ST_n
        bool fiber_ok = true;
        std::string fiber_detail;
        for (int n = 1; n <= opt_.max_n; ++n) {
            std::size_t total = 0;
            for (const auto &t : enumerate_trees(n)) {
                total += psi_fiber(t).size();
            }
            if (total != enumerate_surjections(n).size()) {
                fiber_ok = false;
                fiber_detail = "n=" + std::to_string(n);
            }
        }
        check("fibers of the shape map partition ST_n", fiber_ok, fiber_detail);

        // fiber-sum map is a morphism for all three strands
        bool morph_ok = true;
        std::string morph_detail;
        const int total_cap = std::min(opt_.max_degree + 1, 5);
        for (int ds = 1; ds < total_cap && morph_ok; ++ds) {
            for (const auto &s : enumerate_trees(ds)) {
                for (int dt = 1; ds + dt <= total_cap && morph_ok; ++dt) {
                    for (const auto &t : enumerate_trees(dt)) {
                        const auto xs = TreeSeries::single(s, total_cap);
                        const auto xt = TreeSeries::single(t, total_cap);
                        if (!(psi_star(prec(xs, xt)) == prec(psi_star(xs), psi_star(xt))
                              && psi_star(succ(xs, xt)) == succ(psi_star(xs), psi_star(xt))
                              && psi_star(dot(xs, xt)) == dot(psi_star(xs), psi_star(xt)))) {
                            morph_ok = false;
                            morph_detail = s.encode() + " , " + t.encode();
                            break;
                        }
                    }
                }
            }
        }
        check("fiber-sum map is a tridendriform morphism", morph_ok, morph_detail);
    }

    // --- trialg -------------------------------------------------------

    void axiom_checks()
    {
        check("tree-basis tridendriform axioms", series_axioms<TreeBasis>("tree"));
        check("surjection-basis tridendriform axioms", series_axioms<SurjBasis>("surjection"));
        check("sequence-algebra tridendriform axioms", sequence_axioms());
    }

    void lie_checks()
    {
        bool prelie_ok = true, postlie_ok = true, bracket_ok = true, decomp_ok = true;
        for (int s = 0; s < opt_.samples; ++s) {
            const auto [x, y, z] = random_tree_triple();
            // left pre-Lie for the two left flavors
            for (auto fl : {PreLieFlavor::LeftR, PreLieFlavor::LeftL}) {
                auto lhs = prelie(prelie(x, y, fl), z, fl) - prelie(x, prelie(y, z, fl), fl);
                auto rhs = prelie(prelie(y, x, fl), z, fl) - prelie(y, prelie(x, z, fl), fl);
                prelie_ok = prelie_ok && (lhs == rhs);
            }
            // right pre-Lie for the two right flavors
            for (auto fl : {PreLieFlavor::RightR, PreLieFlavor::RightL}) {
                auto lhs = prelie(prelie(x, y, fl), z, fl) - prelie(x, prelie(y, z, fl), fl);
                auto rhs = prelie(prelie(x, z, fl), y, fl) - prelie(x, prelie(z, y, fl), fl);
                prelie_ok = prelie_ok && (lhs == rhs);
            }
            // post-Lie compatibilities for (diamond, dot bracket)
            {
                auto lhs1 = postlie_diamond(x, dot_bracket(y, z));
                auto rhs1 = dot_bracket(postlie_diamond(x, y), z) + dot_bracket(y, postlie_diamond(x, z));
                postlie_ok = postlie_ok && (lhs1 == rhs1);
                auto lhs2 = postlie_diamond(dot_bracket(x, y), z);
                auto rhs2 = postlie_diamond(x, postlie_diamond(y, z))
                            - postlie_diamond(postlie_diamond(x, y), z)
                            - postlie_diamond(y, postlie_diamond(x, z))
                            + postlie_diamond(postlie_diamond(y, x), z);
                postlie_ok = postlie_ok && (lhs2 == rhs2);
            }
            // the three Lie brackets coincide
            {
                auto b_star = star(x, y) - star(y, x);
                auto b_r = prelie(x, y, PreLieFlavor::LeftR) - prelie(y, x, PreLieFlavor::LeftR);
                auto b_l = prelie(x, y, PreLieFlavor::LeftL) - prelie(y, x, PreLieFlavor::LeftL);
                bracket_ok = bracket_ok && (b_star == b_r) && (b_star == b_l);
            }
            // operator decompositions of the two pre-Lie products
            {
                decomp_ok = decomp_ok
                            && (prelie(x, y, PreLieFlavor::LeftR) == postlie_diamond(x, y) + dot(x, y))
                            && (prelie(x, y, PreLieFlavor::LeftL) == postlie_diamond(x, y) - dot(y, x));
            }
        }
        check("pre-Lie identities (all four flavors)", prelie_ok);
        check("post-Lie axioms for (diamond, dot bracket)", postlie_ok);
        check("the three Lie brackets coincide", bracket_ok);
        check("pre-Lie operators split through diamond and dot", decomp_ok);
    }

    void word_and_factorization_checks()
    {
        // nested words against the combs
        bool words_ok = true;
        const int trunc = std::min(opt_.max_degree, 5);
        const auto y = TreeSeries::single(generator_tree(), trunc);
        for (int n = 0; n <= trunc; ++n) {
            const auto expected_r = (n == 0) ? TreeSeries::unit(trunc)
                                             : TreeSeries::single(comb(n, CombSide::Right), trunc);
            const auto expected_l = (n == 0) ? TreeSeries::unit(trunc)
                                             : TreeSeries::single(comb(n, CombSide::Left), trunc);
            words_ok = words_ok && (tridendriform_word(y, n, TriOp::Prec) == expected_r)
                       && (tridendriform_word(y, n, TriOp::Succ) == expected_l);
        }
        check("nested strand words are the combs", words_ok);

        // grafting factorizations in arities 2..4
        bool fact_ok = true;
        std::string fact_detail;
        const int child_cap = 2;
        const int t2 = 4 * child_cap + 4;
        const auto yy = TreeSeries::single(generator_tree(), t2);
        std::vector<Tree> pool{Tree{}};
        for (int d = 1; d <= child_cap; ++d) {
            for (const auto &t : enumerate_trees(d)) {
                pool.push_back(t);
            }
        }
        auto as_series = [&](const Tree &t) {
            return t.is_leaf() ? TreeSeries::unit(t2) : TreeSeries::single(t, t2);
        };
        for (int s = 0; s < opt_.samples; ++s) {
            const int arity = 2 + static_cast<int>(rng_.below(3));
            std::vector<Tree> kids;
            for (int i = 0; i < arity; ++i) {
                kids.push_back(pool[rng_.below(pool.size())]);
            }
            const auto grafted = as_series(graft(kids));
            // head factors t_i succ Y, tail factor ... prec t_n
            TriSeries<TreeBasis> tail = prec(succ(as_series(kids[static_cast<std::size_t>(arity) - 2]), yy),
                                             as_series(kids[static_cast<std::size_t>(arity) - 1]));
            TriSeries<TreeBasis> acc = tail;
            for (int i = arity - 3; i >= 0; --i) {
                acc = dot(succ(as_series(kids[static_cast<std::size_t>(i)]), yy), acc);
            }
            if (!(acc == grafted)) {
                fact_ok = false;
                fact_detail = graft(kids).encode();
            }
        }
        check("grafting factorization through the strand products", fact_ok, fact_detail);

        // exp/log round trip on random unit-free series
        bool explog_ok = true;
        std::vector<Tree> small_pool;
        for (int d = 1; d <= 2; ++d) {
            for (const auto &t : enumerate_trees(d)) {
                small_pool.push_back(t);
            }
        }
        for (int s = 0; s < opt_.samples / 3 + 1; ++s) {
            const auto x = verify_detail::random_series<TreeBasis>(small_pool, 4, rng_);
            explog_ok = explog_ok && (log_star(exp_star(x)) == x);
        }
        check("log* inverts exp* up to truncation", explog_ok);
    }

    void flr_checks()
    {
        bool ok = true, stat_ok = true;
        std::string detail, stat_detail;
        const int cap = std::min(opt_.max_degree, 5);
        for (int n = 1; n <= cap && ok; ++n) {
            for (const auto &t : enumerate_trees(n)) {
                if (!is_binary(t)) {
                    continue;
                }
                const int d = descent_stats(t).strict;
                for (auto side : {MorphismSide::Left, MorphismSide::Right}) {
                    const auto image = f_lr(t, side, cap);
                    if (!(image == f_lr_by_contraction(t, side, cap))) {
                        ok = false;
                        detail = t.encode();
                    }
                    const auto closure = contraction_closure(t);
                    for (const auto &[u, c] : image.terms()) {
                        const auto stats = descent_stats(u);
                        const int kept = (side == MorphismSide::Left) ? stats.weak : stats.strict;
                        if (c != 1 || kept != d || !closure.count(u)) {
                            stat_ok = false;
                            stat_detail = t.encode() + " -> " + u.encode();
                        }
                    }
                }
            }
        }
        check("dendriform sections match directed contraction", ok, detail);
        check("section terms keep the descent statistic inside the closure", stat_ok, stat_detail);
    }

    // --- seqalg -------------------------------------------------------

    void sequence_checks()
    {
        const MatSeq a = random_matseq();
        const MatSeq b = random_matseq();

        bool ds_ok = (diff(summ(a)) == a.truncated(a.horizon() - 1));
        bool sd_ok = true;
        {
            const MatSeq sda = summ(diff(a));
            for (int n = 0; n < sda.horizon(); ++n) {
                sd_ok = sd_ok && (sda.at(n) == a.at(n) - a.at(0));
            }
        }
        check("difference inverts summation", ds_ok);
        check("summation after difference subtracts the initial value", sd_ok);

        check("weight-1 summation identity",
              seq_pointwise(summ(a), summ(b))
                  == summ(seq_add(seq_add(seq_pointwise(summ(a), b), seq_pointwise(a, summ(b))),
                                  seq_pointwise(a, b))));

        // hypercube partition by the partial diagonals
        bool part_ok = true;
        std::string part_detail;
        for (int n = 1; n <= std::min(opt_.max_n, 4) && part_ok; ++n) {
            for (int N = 0; N <= 7; ++N) {
                std::set<std::vector<int>> seen;
                std::size_t total = 0;
                for (const auto &sigma : enumerate_surjections(n)) {
                    const auto tuples = enumerate_diagonal(sigma, N, DiagOrientation::ValueAligned);
                    total += tuples.size();
                    for (const auto &tup : tuples) {
                        if (!seen.insert(tup).second) {
                            part_ok = false;
                            part_detail = "overlap at n=" + std::to_string(n);
                        }
                    }
                    // |T_sigma(N)| = C(N, r)
                    if (Integer(static_cast<long>(tuples.size()))
                        != binomial(static_cast<unsigned>(N), static_cast<unsigned>(sigma.range()))) {
                        part_ok = false;
                        part_detail = "cardinality of " + sigma.encode();
                    }
                }
                Integer expected = 1;
                for (int i = 0; i < n; ++i) {
                    expected *= N;
                }
                if (Integer(static_cast<long>(total)) != expected) {
                    part_ok = false;
                    part_detail = "total at n=" + std::to_string(n) + ", N=" + std::to_string(N);
                }
            }
        }
        check("partial diagonals partition the hypercube", part_ok, part_detail);

        // product splitting lemma
        bool split_ok = true;
        std::string split_detail;
        for (int n = 1; n <= 2 && split_ok; ++n) {
            for (int m = 1; n + m <= std::min(opt_.max_n + 1, 5) && split_ok; ++m) {
                for (const auto &sigma : enumerate_surjections(n)) {
                    for (const auto &tau : enumerate_surjections(m)) {
                        for (int N : {0, 3, 7}) {
                            const auto report = split_check(sigma, tau, N);
                            if (!report.ok) {
                                split_ok = false;
                                split_detail = sigma.encode() + " x " + tau.encode() + " at N="
                                               + std::to_string(N) + ": " + report.detail;
                            }
                        }
                    }
                }
            }
        }
        check("diagonal products split into the three strands", split_ok, split_detail);

        // evaluation morphism routes agree
        bool thm_ok = true, target_ok = true;
        std::string thm_detail;
        SeqMorphismTarget target{a.dim(), a.horizon()};
        for (int n = 1; n <= std::min(opt_.max_degree, 4) && thm_ok; ++n) {
            for (const auto &t : enumerate_trees(n)) {
                const MatSeq direct = fast_eval(t, a);
                MatSeq via_fibers = MatSeq::zeros(a.dim(), a.horizon());
                for (const auto &f : psi_fiber(t)) {
                    via_fibers = seq_add(via_fibers, f_tilde(f, a));
                }
                if (!(direct == via_fibers)) {
                    thm_ok = false;
                    thm_detail = t.encode();
                }
                const auto generic = eval_tree_morphism(t, target, SeqCarrier{false, a});
                if (generic.unit || !(generic.seq == direct)) {
                    target_ok = false;
                }
            }
        }
        check("tree evaluation equals the fiber sum of iterated sums", thm_ok, thm_detail);
        check("recursive evaluation matches the generic morphism", target_ok);
    }

    // --- magnus -------------------------------------------------------

    void magnus_checks()
    {
        const int trunc = std::min(opt_.max_degree, 6);
        ConventionLedger ledger = resolve_conventions(opt_.seed);
        check("convention resolution freezes a unique combination", ledger.frozen);
        {
            const ConventionLedger again = resolve_conventions(opt_.seed);
            check("convention resolution is deterministic",
                  again.descent_orientation == ledger.descent_orientation
                      && again.sign_rule == ledger.sign_rule
                      && again.diag_orientation == ledger.diag_orientation
                      && again.level_orientation == ledger.level_orientation);
        }

        const auto omega_strict = oracle_log(FixedPointFlavor::Prec, trunc);
        const auto omega_weak = oracle_log(FixedPointFlavor::PrecEq, trunc);
        check("closed tree formula (strict) equals log* of the solution",
              closed_formula_trees(DescentVariant::Strict, trunc, ledger) == omega_strict);
        check("closed tree formula (weak) equals log* of the diagonal solution",
              closed_formula_trees(DescentVariant::Weak, trunc, ledger) == omega_weak);
        check("pre-Lie recursion equals log* of the solution",
              prelie_magnus(PreLieFlavor::LeftR, trunc) == omega_strict);
        check("pre-Lie recursion (underlined flavor) equals the diagonal log*",
              prelie_magnus(PreLieFlavor::LeftL, trunc) == omega_weak);

        const int surj_trunc = std::min(trunc, opt_.max_n);
        check("surjection closed formula is the fiber sum of the tree one",
              psi_star(closed_formula_trees(DescentVariant::Strict, surj_trunc, ledger))
                      == closed_formula_surjections(DescentVariant::Strict, surj_trunc, ledger)
                  && psi_star(closed_formula_trees(DescentVariant::Weak, surj_trunc, ledger))
                         == closed_formula_surjections(DescentVariant::Weak, surj_trunc, ledger));

        const MatSeq a = random_matseq();
        const int seq_trunc = std::min(trunc, 5);
        for (auto variant : {DescentVariant::Strict, DescentVariant::Weak}) {
            const auto production = discrete_mps(a, seq_trunc, variant, ledger);
            const auto oracle = discrete_mps_oracle(a, seq_trunc, variant, ledger);
            const auto reference = sequence_log_reference(a, seq_trunc, variant);
            const char *label = (variant == DescentVariant::Strict) ? "strict" : "weak";
            check(std::string("discrete Magnus production path equals diagonal oracle (") + label
                      + ")",
                  production == oracle);
            check(std::string("discrete Magnus equals summed sequence log* (") + label + ")",
                  production == reference);
        }

        // locality of the discrete Magnus coefficients
        {
            const int cut = a.horizon() - 2;
            MatSeq tampered = a;
            for (int n = cut; n < a.horizon(); ++n) {
                tampered.at(n) = RatMatrix::identity(a.dim()) * rat(7, 2);
            }
            const auto full = discrete_mps(a, 3, DescentVariant::Strict, ledger);
            const auto cutoff = discrete_mps(tampered, 3, DescentVariant::Strict, ledger);
            bool local_ok = true;
            for (int n = 1; n <= 3; ++n) {
                for (int N = 0; N <= cut; ++N) {
                    local_ok = local_ok && (full.degree(n).at(N) == cutoff.degree(n).at(N));
                }
            }
            check("discrete Magnus at N only reads the prefix below N", local_ok);
        }

        // scalar sanity: a = 1 gives (-1)^{n-1} N / n
        {
            const MatSeq ones = MatSeq::constant_scalar(Rational(1), std::max(opt_.horizon, 8));
            const auto omega = discrete_mps(ones, std::min(trunc, 6), DescentVariant::Strict, ledger);
            bool scalar_ok = true;
            for (int n = 1; n <= omega.truncation(); ++n) {
                const Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
                for (int N = 0; N < omega.horizon(); ++N) {
                    scalar_ok = scalar_ok && (omega.degree(n).at(N)(0, 0) == sign * Rational(N) / Rational(n));
                }
            }
            check("scalar sequence reproduces N log(1+h)", scalar_ok);
        }

        const auto exp_report = exp_check(a, std::min(trunc, 5));
        check("exp* of the logarithm reproduces the solution (free basis)", exp_report.free_basis_ok);
        check("exp* of the logarithm reproduces the solution (sequences)", exp_report.sequence_ok);
    }

    // Target adaptor for the generic morphism over matrix sequences.
    struct SeqCarrier {
        bool unit;
        MatSeq seq;
    };

    struct SeqMorphismTarget {
        using Carrier = SeqCarrier;
        int dim;
        int horizon;

        Carrier unit() const
        {
            return {true, MatSeq::zeros(dim, horizon)};
        }

        bool is_unit(const Carrier &x) const
        {
            return x.unit;
        }

        Carrier zero() const
        {
            return {false, MatSeq::zeros(dim, horizon)};
        }

        Carrier add(const Carrier &a, const Carrier &b) const
        {
            return {false, seq_add(a.seq, b.seq)};
        }

        Carrier scale(const Carrier &a, const Rational &c) const
        {
            return {false, seq_scale(a.seq, c)};
        }

        Carrier prec(const Carrier &a, const Carrier &b) const
        {
            return {false, seq_product(a.seq, b.seq, TriOp::Prec)};
        }

        Carrier succ(const Carrier &a, const Carrier &b) const
        {
            return {false, seq_product(a.seq, b.seq, TriOp::Succ)};
        }

        Carrier dot(const Carrier &a, const Carrier &b) const
        {
            return {false, seq_product(a.seq, b.seq, TriOp::Dot)};
        }
    };

private:
    template <typename Basis>
    bool series_axioms(const std::string &)
    {
        std::vector<typename Basis::Element> pool = verify_detail::BasisPool<Basis>::make();
        bool ok = true;
        for (int s = 0; s < opt_.samples && ok; ++s) {
            const int trunc = 5;
            const auto a = verify_detail::random_series<Basis>(pool, trunc, rng_);
            const auto b = verify_detail::random_series<Basis>(pool, trunc, rng_);
            const auto c = verify_detail::random_series<Basis>(pool, trunc, rng_);
            ok = ok && (prec(prec(a, b), c) == prec(a, star(b, c)));                 // A1
            ok = ok && (prec(succ(a, b), c) == succ(a, prec(b, c)));                 // A2
            ok = ok && (succ(a, succ(b, c)) == succ(star(a, b), c));                 // A3
            ok = ok && (dot(dot(a, b), c) == dot(a, dot(b, c)));                     // A4
            ok = ok && (dot(succ(a, b), c) == succ(a, dot(b, c)));                   // A5
            ok = ok && (dot(prec(a, b), c) == dot(a, succ(b, c)));                   // A6
            ok = ok && (prec(dot(a, b), c) == dot(a, prec(b, c)));                   // A7
            ok = ok && (star(star(a, b), c) == star(a, star(b, c)));
            // dendriform halves reassemble the associative product
            ok = ok && (preceq(a, b) + succ(a, b) == star(a, b));
            ok = ok && (prec(a, b) + succeq(a, b) == star(a, b));
            // unit rules
            const auto one = TriSeries<Basis>::unit(trunc);
            ok = ok && (prec(a, one) == a) && (succ(one, a) == a);
            ok = ok && prec(one, a).is_zero() && succ(a, one).is_zero();
            ok = ok && dot(one, a).is_zero() && dot(a, one).is_zero();
            ok = ok && (star(one, a) == a) && (star(a, one) == a);
        }
        return ok;
    }

    bool sequence_axioms()
    {
        bool ok = true;
        for (int s = 0; s < opt_.samples && ok; ++s) {
            const MatSeq a = random_matseq();
            const MatSeq b = random_matseq();
            const MatSeq c = random_matseq();
            auto P = [&](const MatSeq &x, const MatSeq &y) { return seq_product(x, y, TriOp::Prec); };
            auto Su = [&](const MatSeq &x, const MatSeq &y) { return seq_product(x, y, TriOp::Succ); };
            auto Dt = [&](const MatSeq &x, const MatSeq &y) { return seq_product(x, y, TriOp::Dot); };
            ok = ok && (P(P(a, b), c) == P(a, seq_star(b, c)));
            ok = ok && (P(Su(a, b), c) == Su(a, P(b, c)));
            ok = ok && (Su(a, Su(b, c)) == Su(seq_star(a, b), c));
            ok = ok && (Dt(Dt(a, b), c) == Dt(a, Dt(b, c)));
            ok = ok && (Dt(Su(a, b), c) == Su(a, Dt(b, c)));
            ok = ok && (Dt(P(a, b), c) == Dt(a, Su(b, c)));
            ok = ok && (P(Dt(a, b), c) == Dt(a, P(b, c)));
            ok = ok && (seq_star(seq_star(a, b), c) == seq_star(a, seq_star(b, c)));
            // noncommutativity witness of the two outer strands
            ok = ok
                 && (seq_add(P(a, b), seq_scale(Su(b, a), Rational(-1)))
                     == seq_add(seq_pointwise(a, summ(b)),
                                seq_scale(seq_pointwise(summ(b), a), Rational(-1))));
        }
        return ok;
    }

    std::tuple<TreeSeries, TreeSeries, TreeSeries> random_tree_triple()
    {
        const auto pool = verify_detail::BasisPool<TreeBasis>::make();
        const int trunc = 5;
        return {verify_detail::random_series<TreeBasis>(pool, trunc, rng_),
                verify_detail::random_series<TreeBasis>(pool, trunc, rng_),
                verify_detail::random_series<TreeBasis>(pool, trunc, rng_)};
    }

    MatSeq random_matseq()
    {
        return detail::random_matseq(opt_.dim, opt_.horizon, rng_);
    }

    VerifyOptions opt_;
    SplitMix64 rng_;
    std::vector<CheckResult> results_;
};

} // namespace tridend

#endif
