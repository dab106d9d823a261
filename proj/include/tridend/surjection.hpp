#ifndef TRIDEND_SURJECTION_HPP
#define TRIDEND_SURJECTION_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ops.hpp"
#include "tree.hpp"

namespace tridend {

// Packed word f(1..n) onto {1..r}: the image is exactly the initial
// interval {1,...,r}. Basis element of WQSym; degree = length.
class Surjection {
public:
    explicit Surjection(std::vector<int> word) : word_(std::move(word))
    {
        if (word_.empty()) {
            throw std::invalid_argument("empty surjection");
        }
        range_ = *std::max_element(word_.begin(), word_.end());
        std::vector<bool> hit(static_cast<std::size_t>(range_), false);
        for (int v : word_) {
            if (v < 1 || v > range_) {
                throw std::invalid_argument("surjection letter out of range");
            }
            hit[static_cast<std::size_t>(v) - 1] = true;
        }
        for (bool h : hit) {
            if (!h) {
                throw std::invalid_argument("word is not packed");
            }
        }
    }

    const std::vector<int> &word() const
    {
        return word_;
    }

    int length() const
    {
        return static_cast<int>(word_.size());
    }

    int range() const
    {
        return range_;
    }

    int degree() const
    {
        return length();
    }

    std::string encode() const
    {
        std::string s;
        for (std::size_t i = 0; i < word_.size(); ++i) {
            if (i > 0) {
                s += ',';
            }
            s += std::to_string(word_[i]);
        }
        return s;
    }

    friend bool operator==(const Surjection &a, const Surjection &b)
    {
        return a.word_ == b.word_;
    }

    friend bool operator<(const Surjection &a, const Surjection &b)
    {
        if (a.word_.size() != b.word_.size()) {
            return a.word_.size() < b.word_.size();
        }
        return a.word_ < b.word_;
    }

private:
    std::vector<int> word_;
    int range_;
};

inline Surjection parse_surjection(const std::string &text)
{
    std::vector<int> w;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            w.push_back(std::stoi(tok));
        } catch (const std::exception &) {
            throw std::invalid_argument("malformed surjection token: '" + tok + "'");
        }
    }
    return Surjection(std::move(w));
}

// Rank compression preserving strict value order.
inline Surjection standardize(const std::vector<int> &word)
{
    if (word.empty()) {
        throw std::invalid_argument("cannot standardize an empty word");
    }
    std::vector<int> sorted(word);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out;
    out.reserve(word.size());
    for (int v : word) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        out.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return Surjection(std::move(out));
}

// All of ST_n, lexicographically sorted. Counts are the ordered Bell
// numbers 1, 3, 13, 75, 541, 4683, ...
inline std::vector<Surjection> enumerate_surjections(int n)
{
    if (n < 1) {
        throw std::invalid_argument("surjection length must be positive");
    }
    std::vector<Surjection> out;
    std::vector<int> word;
    std::vector<int> uses(static_cast<std::size_t>(n) + 1, 0);
    auto rec = [&](auto &&self, int cur_max, int distinct) -> void {
        const int remaining = n - static_cast<int>(word.size());
        if (remaining == 0) {
            out.push_back(Surjection(word));
            return;
        }
        for (int v = 1; v <= n; ++v) {
            // still room to fill every gap below the running maximum
            const int new_max = std::max(cur_max, v);
            const int new_distinct = distinct + (uses[static_cast<std::size_t>(v)] == 0);
            if (new_max - new_distinct > remaining - 1) {
                continue;
            }
            word.push_back(v);
            ++uses[static_cast<std::size_t>(v)];
            self(self, new_max, new_distinct);
            --uses[static_cast<std::size_t>(v)];
            word.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

struct SurjDescents {
    int strict = 0; // f(j) >  f(j+1)
    int weak = 0;   // f(j) >= f(j+1)
};

inline SurjDescents descents(const Surjection &f)
{
    SurjDescents d;
    const auto &w = f.word();
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
        d.strict += (w[j] > w[j + 1]);
        d.weak += (w[j] >= w[j + 1]);
    }
    return d;
}

// WQSym products: all standard juxtapositions FG with std(F)=f, std(G)=g,
// filtered by comparing max(F) with max(G): '>' for Prec, '<' for Succ,
// '=' for Dot. Every term has coefficient one.
inline std::vector<Surjection> wq_product(const Surjection &f, const Surjection &g, TriOp op)
{
    const int r = f.range();
    const int q = g.range();
    std::vector<Surjection> out;
    // Merge the two value chains {1..r} and {1..q} into a common alphabet;
    // alpha/beta record where each chain lands.
    std::vector<int> alpha(static_cast<std::size_t>(r)), beta(static_cast<std::size_t>(q));
    auto emit = [&]() {
        const int fmax = alpha[static_cast<std::size_t>(r) - 1];
        const int gmax = beta[static_cast<std::size_t>(q) - 1];
        const bool keep = (op == TriOp::Prec)   ? (fmax > gmax)
                          : (op == TriOp::Succ) ? (fmax < gmax)
                                                : (fmax == gmax);
        if (!keep) {
            return;
        }
        std::vector<int> w;
        w.reserve(f.word().size() + g.word().size());
        for (int v : f.word()) {
            w.push_back(alpha[static_cast<std::size_t>(v) - 1]);
        }
        for (int v : g.word()) {
            w.push_back(beta[static_cast<std::size_t>(v) - 1]);
        }
        out.push_back(Surjection(std::move(w)));
    };
    auto rec = [&](auto &&self, int i, int j, int next) -> void {
        if (i == r && j == q) {
            emit();
            return;
        }
        if (i < r) {
            alpha[static_cast<std::size_t>(i)] = next;
            self(self, i + 1, j, next + 1);
        }
        if (j < q) {
            beta[static_cast<std::size_t>(j)] = next;
            self(self, i, j + 1, next + 1);
        }
        if (i < r && j < q) {
            alpha[static_cast<std::size_t>(i)] = next;
            beta[static_cast<std::size_t>(j)] = next;
            self(self, i + 1, j + 1, next + 1);
        }
    };
    rec(rec, 0, 0, 1);
    std::sort(out.begin(), out.end());
    return out;
}

// Whether the root vertex sits at the deepest level (level 1 on top) or at
// level 1.
enum class LevelOrientation { RootDeepest, RootTop };

// Planar reduced tree with levels on its internal vertices, listed in
// depth-first order (vertex first, then its subtrees left to right).
struct LeveledTree {
    Tree shape;
    std::vector<int> levels;
};

namespace detail {

// Build shape and levels from an arbitrary word (values need not be packed);
// levels keep the original values.
inline std::pair<Tree, std::vector<int>> leveled_from_word(const std::vector<int> &w,
                                                           LevelOrientation orient)
{
    if (w.empty()) {
        return {Tree{}, {}};
    }
    const int pivot = (orient == LevelOrientation::RootDeepest)
                          ? *std::max_element(w.begin(), w.end())
                          : *std::min_element(w.begin(), w.end());
    std::vector<std::vector<int>> blocks(1);
    for (int v : w) {
        if (v == pivot) {
            blocks.emplace_back();
        } else {
            blocks.back().push_back(v);
        }
    }
    std::vector<Tree> kids;
    std::vector<int> levels{pivot};
    for (const auto &block : blocks) {
        auto [sub_shape, sub_levels] = leveled_from_word(block, orient);
        kids.push_back(std::move(sub_shape));
        levels.insert(levels.end(), sub_levels.begin(), sub_levels.end());
    }
    return {Tree(std::move(kids)), std::move(levels)};
}

} // namespace detail

// Top-level block decomposition of the inverse bijection: the k-1 positions
// attaining the pivot value split the word into k (possibly empty) blocks.
inline std::vector<std::vector<int>> split_blocks(const Surjection &f,
                                                  LevelOrientation orient = LevelOrientation::RootDeepest)
{
    const auto &w = f.word();
    const int pivot = (orient == LevelOrientation::RootDeepest)
                          ? *std::max_element(w.begin(), w.end())
                          : *std::min_element(w.begin(), w.end());
    std::vector<std::vector<int>> blocks(1);
    for (int v : w) {
        if (v == pivot) {
            blocks.emplace_back();
        } else {
            blocks.back().push_back(v);
        }
    }
    return blocks;
}

// The inverse bijection: split the word at its extreme value and recurse.
inline LeveledTree to_leveled_tree(const Surjection &f,
                                   LevelOrientation orient = LevelOrientation::RootDeepest)
{
    auto [shape, levels] = detail::leveled_from_word(f.word(), orient);
    return LeveledTree{std::move(shape), std::move(levels)};
}

// Levels must hit every value of {1..r} and decrease strictly away from the
// root (increase, under RootTop).
inline void validate_levels(const LeveledTree &lt, LevelOrientation orient)
{
    if (lt.levels.empty()) {
        throw std::invalid_argument("leveled tree must have at least one vertex");
    }
    const int r = *std::max_element(lt.levels.begin(), lt.levels.end());
    std::vector<bool> hit(static_cast<std::size_t>(r), false);
    for (int l : lt.levels) {
        if (l < 1) {
            throw std::invalid_argument("levels must be positive");
        }
        hit[static_cast<std::size_t>(l) - 1] = true;
    }
    for (bool h : hit) {
        if (!h) {
            throw std::invalid_argument("levels are not surjective onto an initial interval");
        }
    }
    std::size_t next_vertex = 0;
    auto walk = [&](auto &&self, const Tree &node, int parent_level) -> void {
        const int level = lt.levels[next_vertex++];
        const bool ok = (parent_level == 0)
                        || (orient == LevelOrientation::RootDeepest ? level < parent_level
                                                                    : level > parent_level);
        if (!ok) {
            throw std::invalid_argument("levels are not monotone along the tree");
        }
        for (const auto &c : node.children()) {
            if (!c.is_leaf()) {
                self(self, c, level);
            }
        }
    };
    walk(walk, lt.shape, 0);
}

// Read the surjection back: the letter between leaves i and i+1 is the level
// of the vertex where the two leaf paths part.
inline Surjection from_leveled_tree(const LeveledTree &lt,
                                    LevelOrientation orient = LevelOrientation::RootDeepest)
{
    if (lt.shape.is_leaf()) {
        throw std::invalid_argument("leveled tree must have at least one vertex");
    }
    if (static_cast<int>(lt.levels.size()) != lt.shape.vertex_count()) {
        throw std::invalid_argument("level list does not match vertex count");
    }
    validate_levels(lt, orient);
    // word(node) = word(c1) level word(c2) level ... word(ck)
    std::vector<int> word;
    std::size_t next_vertex = 0;
    auto emit = [&](auto &&self, const Tree &node) -> void {
        const int level = lt.levels[next_vertex++];
        const auto &kids = node.children();
        for (std::size_t i = 0; i < kids.size(); ++i) {
            if (i > 0) {
                word.push_back(level);
            }
            if (!kids[i].is_leaf()) {
                self(self, kids[i]);
            }
        }
    };
    emit(emit, lt.shape);
    return Surjection(std::move(word));
}

// Shape-only projection Psi.
inline Tree forget_levels(const Surjection &f,
                          LevelOrientation orient = LevelOrientation::RootDeepest)
{
    return to_leveled_tree(f, orient).shape;
}

// Fiber of Psi over t: all surjections of length degree(t) whose shape is t.
inline std::vector<Surjection> psi_fiber(const Tree &t,
                                         LevelOrientation orient = LevelOrientation::RootDeepest)
{
    if (t.is_leaf()) {
        throw std::invalid_argument("psi fiber of the unit tree is empty");
    }
    static std::map<std::pair<int, LevelOrientation>, std::vector<Surjection>> all_cache;
    const auto key = std::make_pair(t.degree(), orient);
    auto it = all_cache.find(key);
    if (it == all_cache.end()) {
        it = all_cache.emplace(key, enumerate_surjections(t.degree())).first;
    }
    std::vector<Surjection> fiber;
    for (const auto &f : it->second) {
        if (forget_levels(f, orient) == t) {
            fiber.push_back(f);
        }
    }
    return fiber;
}

} // namespace tridend

#endif
