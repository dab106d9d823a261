// Acceptance battery: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include <tridend/json_io.hpp>
#include <tridend/magnus.hpp>
#include <tridend/verify.hpp>

using namespace tridend;

namespace {

int failures = 0;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}

    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void report(int idx, const std::string &name, bool ok, double seconds, double bound = 0.0)
{
    if (bound > 0.0 && seconds >= bound) {
        ok = false;
    }
    if (!ok) {
        ++failures;
    }
    std::printf("[%2d] %s  %-58s (%.3fs%s)\n", idx, ok ? "PASS" : "FAIL", name.c_str(), seconds,
                bound > 0.0 ? (", bound " + std::to_string(bound).substr(0, 4) + "s").c_str() : "");
}

MatSeq random_seq(int dim, int horizon, std::uint64_t seed, long den = 3)
{
    SplitMix64 rng(seed);
    std::vector<RatMatrix> entries;
    for (int n = 0; n < horizon; ++n) {
        RatMatrix m(dim);
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                m(i, j) = rng.rational(5, den);
            }
        }
        entries.push_back(std::move(m));
    }
    return MatSeq(dim, std::move(entries));
}

void criterion_1()
{
    Timer timer;
    const std::size_t expected[] = {1, 3, 11, 45, 197, 903};
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
        ok = ok && enumerate_trees(n).size() == expected[n - 1];
    }
    report(1, "tree enumeration counts for degrees 1..6", ok, timer.seconds(), 1.0);
}

void criterion_2()
{
    Timer timer;
    const auto expected = verify_detail::fubini_counts(6);
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
        ok = ok
             && Integer(static_cast<long>(enumerate_surjections(n).size()))
                    == expected[static_cast<std::size_t>(n)];
    }
    report(2, "surjection counts for lengths 1..6 vs recurrence", ok, timer.seconds(), 5.0);
}

template <typename Basis>
bool axioms_on_samples(int samples, int truncation, std::uint64_t seed)
{
    const auto pool = verify_detail::BasisPool<Basis>::make();
    SplitMix64 rng(seed);
    bool ok = true;
    for (int s = 0; s < samples && ok; ++s) {
        const auto a = verify_detail::random_series<Basis>(pool, truncation, rng);
        const auto b = verify_detail::random_series<Basis>(pool, truncation, rng);
        const auto c = verify_detail::random_series<Basis>(pool, truncation, rng);
        ok = ok && (prec(prec(a, b), c) == prec(a, star(b, c)));
        ok = ok && (prec(succ(a, b), c) == succ(a, prec(b, c)));
        ok = ok && (succ(star(a, b), c) == succ(a, succ(b, c)));
        ok = ok && (dot(dot(a, b), c) == dot(a, dot(b, c)));
        ok = ok && (dot(succ(a, b), c) == succ(a, dot(b, c)));
        ok = ok && (dot(prec(a, b), c) == dot(a, succ(b, c)));
        ok = ok && (prec(dot(a, b), c) == dot(a, prec(b, c)));
        ok = ok && (star(star(a, b), c) == star(a, star(b, c)));
    }
    return ok;
}

bool sequence_axioms_on_samples(int samples, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    bool ok = true;
    for (int s = 0; s < samples && ok; ++s) {
        const auto a = detail::random_matseq(2, 6, rng);
        const auto b = detail::random_matseq(2, 6, rng);
        const auto c = detail::random_matseq(2, 6, rng);
        auto P = [](const MatSeq &x, const MatSeq &y) { return seq_product(x, y, TriOp::Prec); };
        auto S = [](const MatSeq &x, const MatSeq &y) { return seq_product(x, y, TriOp::Succ); };
        auto D = [](const MatSeq &x, const MatSeq &y) { return seq_product(x, y, TriOp::Dot); };
        ok = ok && (P(P(a, b), c) == P(a, seq_star(b, c)));
        ok = ok && (P(S(a, b), c) == S(a, P(b, c)));
        ok = ok && (S(seq_star(a, b), c) == S(a, S(b, c)));
        ok = ok && (D(D(a, b), c) == D(a, D(b, c)));
        ok = ok && (D(S(a, b), c) == S(a, D(b, c)));
        ok = ok && (D(P(a, b), c) == D(a, S(b, c)));
        ok = ok && (P(D(a, b), c) == D(a, P(b, c)));
        ok = ok && (seq_star(seq_star(a, b), c) == seq_star(a, seq_star(b, c)));
    }
    return ok;
}

void criterion_3()
{
    Timer timer;
    const bool ok = axioms_on_samples<TreeBasis>(100, 4, 1)
                    && axioms_on_samples<SurjBasis>(100, 4, 2)
                    && sequence_axioms_on_samples(100, 3);
    report(3, "tridendriform axioms on 100 random triples x 3 algebras", ok, timer.seconds());
}

void criterion_4()
{
    Timer timer;
    const auto pool = verify_detail::BasisPool<TreeBasis>::make();
    SplitMix64 rng(4);
    bool ok = true;
    for (int s = 0; s < 100 && ok; ++s) {
        const auto x = verify_detail::random_series<TreeBasis>(pool, 4, rng);
        const auto y = verify_detail::random_series<TreeBasis>(pool, 4, rng);
        const auto z = verify_detail::random_series<TreeBasis>(pool, 4, rng);
        for (auto fl : {PreLieFlavor::LeftR, PreLieFlavor::LeftL}) {
            ok = ok
                 && prelie(prelie(x, y, fl), z, fl) - prelie(x, prelie(y, z, fl), fl)
                        == prelie(prelie(y, x, fl), z, fl) - prelie(y, prelie(x, z, fl), fl);
        }
        for (auto fl : {PreLieFlavor::RightR, PreLieFlavor::RightL}) {
            ok = ok
                 && prelie(prelie(x, y, fl), z, fl) - prelie(x, prelie(y, z, fl), fl)
                        == prelie(prelie(x, z, fl), y, fl) - prelie(x, prelie(z, y, fl), fl);
        }
        // post-Lie axioms for (diamond, dot bracket)
        ok = ok
             && postlie_diamond(x, dot_bracket(y, z))
                    == dot_bracket(postlie_diamond(x, y), z)
                           + dot_bracket(y, postlie_diamond(x, z));
        ok = ok
             && postlie_diamond(dot_bracket(x, y), z)
                    == postlie_diamond(x, postlie_diamond(y, z))
                           - postlie_diamond(postlie_diamond(x, y), z)
                           - postlie_diamond(y, postlie_diamond(x, z))
                           + postlie_diamond(postlie_diamond(y, x), z);
        // the star, LeftR and LeftL commutator brackets coincide
        const auto b_star = star(x, y) - star(y, x);
        ok = ok
             && b_star == prelie(x, y, PreLieFlavor::LeftR) - prelie(y, x, PreLieFlavor::LeftR)
             && b_star == prelie(x, y, PreLieFlavor::LeftL) - prelie(y, x, PreLieFlavor::LeftL);
        // operator decompositions through diamond and dot
        ok = ok && prelie(x, y, PreLieFlavor::LeftR) == postlie_diamond(x, y) + dot(x, y);
        ok = ok && prelie(x, y, PreLieFlavor::LeftL) == postlie_diamond(x, y) - dot(y, x);
    }
    report(4, "pre-Lie/post-Lie identities and bracket coincidence", ok, timer.seconds());
}

void criterion_5(const ConventionLedger &ledger)
{
    Timer timer;
    bool ok = ledger.frozen;
    ok = ok
         && closed_formula_trees(DescentVariant::Strict, 6, ledger)
                == oracle_log(FixedPointFlavor::Prec, 6);
    ok = ok
         && closed_formula_trees(DescentVariant::Weak, 6, ledger)
                == oracle_log(FixedPointFlavor::PrecEq, 6);
    report(5, "unique conventions; closed formulas to degree 6", ok, timer.seconds(), 60.0);
}

void criterion_6()
{
    Timer timer;
    bool ok = prelie_magnus(PreLieFlavor::LeftR, 6) == oracle_log(FixedPointFlavor::Prec, 6)
              && prelie_magnus(PreLieFlavor::LeftL, 6) == oracle_log(FixedPointFlavor::PrecEq, 6);
    // explicit low-degree coefficients 1, -1/2, 1/4, 1/12
    const int trunc = 3;
    const auto a = TreeSeries::single(generator_tree(), trunc);
    const auto aa = prelie(a, a, PreLieFlavor::LeftR);
    const auto omega = prelie_magnus(PreLieFlavor::LeftR, trunc);
    ok = ok && omega.homogeneous(1) == a;
    ok = ok && omega.homogeneous(2) == aa * Rational(-1, 2);
    ok = ok
         && omega.homogeneous(3)
                == prelie(aa, a, PreLieFlavor::LeftR) * Rational(1, 4)
                       + prelie(a, aa, PreLieFlavor::LeftR) * Rational(1, 12);
    report(6, "pre-Lie Magnus recursion to degree 6 with exact coefficients", ok, timer.seconds());
}

void criterion_7()
{
    Timer timer;
    bool ok = true;
    for (int n = 1; n <= 6 && ok; ++n) {
        for (const auto &f : enumerate_surjections(n)) {
            ok = ok && from_leveled_tree(to_leveled_tree(f)) == f;
            const auto wd = descents(f);
            const auto td = descent_stats(forget_levels(f));
            ok = ok && wd.strict == td.strict && wd.weak == td.weak;
            if (!ok) {
                break;
            }
        }
    }
    // fiber-sum morphism on tree pairs of total degree <= 5
    for (int ds = 1; ds <= 4 && ok; ++ds) {
        for (const auto &s : enumerate_trees(ds)) {
            for (int dt = 1; ds + dt <= 5 && ok; ++dt) {
                for (const auto &t : enumerate_trees(dt)) {
                    const auto xs = TreeSeries::single(s, 5);
                    const auto xt = TreeSeries::single(t, 5);
                    ok = ok && psi_star(prec(xs, xt)) == prec(psi_star(xs), psi_star(xt))
                         && psi_star(succ(xs, xt)) == succ(psi_star(xs), psi_star(xt))
                         && psi_star(dot(xs, xt)) == dot(psi_star(xs), psi_star(xt));
                    if (!ok) {
                        break;
                    }
                }
            }
        }
    }
    // worked example: the pivot value splits the word into four blocks
    const auto blocks = split_blocks(parse_surjection("3,4,1,3,2,4,1,3,4,1,1,3"));
    ok = ok && blocks.size() == 4 && blocks[0] == std::vector<int>{3}
         && blocks[1] == std::vector<int>({1, 3, 2}) && blocks[2] == std::vector<int>({1, 3})
         && blocks[3] == std::vector<int>({1, 1, 3});
    report(7, "word/tree bijection layer through length 6", ok, timer.seconds());
}

void criterion_8()
{
    Timer timer;
    bool ok = true;
    for (int n = 1; n <= 4 && ok; ++n) {
        const auto words = enumerate_surjections(n);
        for (int N = 0; N <= 7; ++N) {
            std::set<std::vector<int>> seen;
            std::size_t total = 0;
            for (const auto &sigma : words) {
                const auto tuples = enumerate_diagonal(sigma, N, DiagOrientation::ValueAligned);
                total += tuples.size();
                seen.insert(tuples.begin(), tuples.end());
            }
            std::size_t cube = 1;
            for (int i = 0; i < n; ++i) {
                cube *= static_cast<std::size_t>(N);
            }
            ok = ok && total == cube && seen.size() == cube;
        }
    }
    for (int n = 1; n <= 4 && ok; ++n) {
        for (int m = 1; n + m <= 5 && ok; ++m) {
            for (const auto &sigma : enumerate_surjections(n)) {
                for (const auto &tau : enumerate_surjections(m)) {
                    for (int N = 0; N <= 7; ++N) {
                        ok = ok && split_check(sigma, tau, N).ok;
                    }
                    if (!ok) {
                        break;
                    }
                }
            }
        }
    }
    report(8, "diagonals tile the hypercube; products split exhaustively", ok, timer.seconds());
}

void criterion_9()
{
    Timer timer;
    const auto a = random_seq(2, 9, 99);
    bool ok = true;
    for (int n = 1; n <= 4 && ok; ++n) {
        for (const auto &t : enumerate_trees(n)) {
            MatSeq via_fibers = MatSeq::zeros(a.dim(), a.horizon());
            for (const auto &f : psi_fiber(t)) {
                via_fibers = seq_add(via_fibers, f_tilde(f, a));
            }
            ok = ok
                 && fast_eval(t, a).truncated(a.horizon() - 1)
                        == via_fibers.truncated(a.horizon() - 1);
            if (!ok) {
                break;
            }
        }
    }
    report(9, "tree evaluation equals the fiber sum of iterated sums", ok, timer.seconds());
}

void criterion_10(const ConventionLedger &ledger)
{
    Timer timer;
    bool ok = true;
    for (int dim = 1; dim <= 3 && ok; ++dim) {
        const auto a = random_seq(dim, 9, 100 + static_cast<std::uint64_t>(dim));
        for (auto variant : {DescentVariant::Strict, DescentVariant::Weak}) {
            ok = ok && discrete_mps(a, 5, variant, ledger) == sequence_log_reference(a, 5, variant);
        }
        ok = ok && exp_check(a, 5).ok();
    }
    report(10, "discrete Magnus equals sequence log* in both variants", ok, timer.seconds());
}

void criterion_11(const ConventionLedger &ledger)
{
    Timer timer;
    const auto ones = MatSeq::constant_scalar(Rational(1), 11);
    const auto omega = discrete_mps(ones, 6, DescentVariant::Strict, ledger);
    bool ok = true;
    for (int n = 1; n <= 6 && ok; ++n) {
        const Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
        for (int N = 0; N <= 10; ++N) {
            ok = ok && omega.degree(n).at(N)(0, 0) == sign * Rational(N) / Rational(n);
        }
    }
    report(11, "scalar sequence reproduces (-1)^(n-1) N / n", ok, timer.seconds());
}

void criterion_12(const ConventionLedger &ledger)
{
    const auto a = random_seq(4, 201, 1234, 1); // integer entries
    Timer timer;
    const auto fast = discrete_mps(a, 5, DescentVariant::Strict, ledger);
    const double elapsed = timer.seconds();
    bool ok = true;
    const auto oracle = discrete_mps_oracle(a.truncated(9), 5, DescentVariant::Strict, ledger);
    for (int n = 1; n <= 5 && ok; ++n) {
        for (int N = 0; N <= 8; ++N) {
            ok = ok && fast.degree(n).at(N) == oracle.degree(n).at(N);
        }
    }
    report(12, "fast evaluation at horizon 200 with diagonal cross-check", ok, elapsed, 5.0);
}

} // namespace

int main()
{
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    const ConventionLedger ledger = resolve_conventions(0);
    criterion_5(ledger);
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10(ledger);
    criterion_11(ledger);
    criterion_12(ledger);
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 12 criteria passed\n");
    return 0;
}
