#include <catch2/catch_amalgamated.hpp>

#include <map>

#include <tridend/surjection.hpp>

using namespace tridend;

namespace {
Surjection s(std::vector<int> w)
{
    return Surjection(std::move(w));
}
} // namespace

TEST_CASE("packed-word validation")
{
    CHECK(s({1, 2, 1}).range() == 2);
    CHECK(s({1}).length() == 1);
    CHECK_THROWS_AS(Surjection({}), std::invalid_argument);
    CHECK_THROWS_AS(Surjection({2}), std::invalid_argument);     // 1 missing
    CHECK_THROWS_AS(Surjection({1, 3}), std::invalid_argument);  // 2 missing
    CHECK_THROWS_AS(Surjection({0, 1}), std::invalid_argument);
    CHECK(parse_surjection("3,4,1,3,2,4,1,3,4,1,1,3").length() == 12);
    CHECK_THROWS_AS(parse_surjection("1,x"), std::invalid_argument);
}

TEST_CASE("standardization")
{
    CHECK(standardize({2, 7, 4, 1, 4}) == s({2, 4, 3, 1, 3}));
    CHECK(standardize({1, 2, 3}) == s({1, 2, 3}));
    CHECK(standardize({5, 5}) == s({1, 1}));
    CHECK_THROWS_AS(standardize({}), std::invalid_argument);
    // rank compression preserves the strict order of values
    const std::vector<int> w{9, 2, 9, 4, 2};
    const auto f = standardize(w).word();
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = 0; j < w.size(); ++j) {
            CHECK((w[i] < w[j]) == (f[i] < f[j]));
        }
    }
}

TEST_CASE("enumeration matches the ordered Bell numbers")
{
    CHECK(enumerate_surjections(1) == std::vector<Surjection>{s({1})});
    CHECK(enumerate_surjections(2)
          == std::vector<Surjection>({s({1, 1}), s({1, 2}), s({2, 1})}));
    const std::size_t expected[] = {1, 3, 13, 75, 541, 4683};
    for (int n = 1; n <= 6; ++n) {
        CHECK(enumerate_surjections(n).size() == expected[n - 1]);
    }
}

TEST_CASE("word descents")
{
    CHECK(descents(s({2, 1})).strict == 1);
    CHECK(descents(s({2, 1})).weak == 1);
    CHECK(descents(s({1, 1})).strict == 0);
    CHECK(descents(s({1, 1})).weak == 1);
    CHECK(descents(s({1, 2})).strict == 0);
    CHECK(descents(s({1, 2})).weak == 0);
}

TEST_CASE("quasi-shuffle products of two single letters")
{
    CHECK(wq_product(s({1}), s({1}), TriOp::Succ) == std::vector<Surjection>{s({1, 2})});
    CHECK(wq_product(s({1}), s({1}), TriOp::Prec) == std::vector<Surjection>{s({2, 1})});
    CHECK(wq_product(s({1}), s({1}), TriOp::Dot) == std::vector<Surjection>{s({1, 1})});
}

TEST_CASE("products are supported on standard juxtapositions of the right length")
{
    for (const auto &f : enumerate_surjections(2)) {
        for (const auto &g : enumerate_surjections(2)) {
            std::map<Surjection, int> seen;
            for (TriOp op : {TriOp::Prec, TriOp::Succ, TriOp::Dot}) {
                for (const auto &fg : wq_product(f, g, op)) {
                    CHECK(fg.length() == 4);
                    // the two halves standardize back to the factors
                    const auto &w = fg.word();
                    CHECK(standardize({w.begin(), w.begin() + 2}) == f);
                    CHECK(standardize({w.begin() + 2, w.end()}) == g);
                    ++seen[fg];
                }
            }
            // the three strands are disjoint
            for (const auto &[fg, count] : seen) {
                CHECK(count == 1);
            }
        }
    }
}

TEST_CASE("leveled-tree bijection on small words")
{
    const Tree Y = graft({Tree{}, Tree{}});
    const Tree C3 = graft({Tree{}, Tree{}, Tree{}});
    CHECK(to_leveled_tree(s({1})).shape == Y);
    CHECK(to_leveled_tree(s({1, 1})).shape == C3);
    CHECK(to_leveled_tree(s({2, 1})).shape == comb(2, CombSide::Right));
    CHECK(to_leveled_tree(s({1, 2})).shape == comb(2, CombSide::Left));

    // from_leveled_tree reads levels between consecutive leaves
    CHECK(from_leveled_tree({comb(2, CombSide::Right), {2, 1}}) == s({2, 1}));
    CHECK(from_leveled_tree({comb(2, CombSide::Left), {2, 1}}) == s({1, 2}));
    CHECK(from_leveled_tree({C3, {1}}) == s({1, 1}));
    // levels must be monotone towards the root and surjective
    CHECK_THROWS_AS(from_leveled_tree({comb(2, CombSide::Right), {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(from_leveled_tree({comb(2, CombSide::Right), {3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(from_leveled_tree({comb(2, CombSide::Right), {2}}), std::invalid_argument);
}

TEST_CASE("worked example splits into the four blocks")
{
    const auto f = parse_surjection("3,4,1,3,2,4,1,3,4,1,1,3");
    const auto blocks = split_blocks(f);
    REQUIRE(blocks.size() == 4);
    CHECK(blocks[0] == std::vector<int>{3});
    CHECK(blocks[1] == std::vector<int>({1, 3, 2}));
    CHECK(blocks[2] == std::vector<int>({1, 3}));
    CHECK(blocks[3] == std::vector<int>({1, 1, 3}));
    CHECK(standardize(blocks[0]) == s({1}));
    CHECK(standardize(blocks[1]) == s({1, 3, 2}));
    CHECK(standardize(blocks[2]) == s({1, 2}));
    CHECK(standardize(blocks[3]) == s({1, 1, 2}));
    // the shape grafts the four block shapes under a new root
    const auto lt = to_leveled_tree(f);
    REQUIRE(lt.shape.children().size() == 4);
    CHECK(from_leveled_tree(lt) == f);
}

TEST_CASE("round trip and descent preservation on all words up to length 6")
{
    for (int n = 1; n <= 6; ++n) {
        for (const auto &f : enumerate_surjections(n)) {
            CHECK(from_leveled_tree(to_leveled_tree(f)) == f);
            const auto wd = descents(f);
            const auto td = descent_stats(forget_levels(f));
            CHECK(wd.strict == td.strict);
            CHECK(wd.weak == td.weak);
        }
    }
}

TEST_CASE("shape-map fibers partition the words")
{
    CHECK(forget_levels(s({2, 1})) == comb(2, CombSide::Right));
    CHECK(forget_levels(s({1, 2})) == comb(2, CombSide::Left));
    for (int n = 1; n <= 5; ++n) {
        std::size_t total = 0;
        for (const auto &t : enumerate_trees(n)) {
            total += psi_fiber(t).size();
        }
        CHECK(total == enumerate_surjections(n).size());
    }
    CHECK(psi_fiber(graft({Tree{}, Tree{}})) == std::vector<Surjection>{s({1})});
}
