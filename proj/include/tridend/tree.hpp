#ifndef TRIDEND_TREE_HPP
#define TRIDEND_TREE_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tridend {

// Planar reduced tree: every internal vertex has at least two children.
// The default-constructed tree is the single edge (a leaf).
// Degree = number of leaves minus one.
class Tree {
public:
    Tree() = default;

    explicit Tree(std::vector<Tree> children) : kids_(std::move(children))
    {
        if (kids_.size() < 2) {
            throw std::invalid_argument("internal vertex needs at least 2 children");
        }
    }

    bool is_leaf() const
    {
        return kids_.empty();
    }

    const std::vector<Tree> &children() const
    {
        return kids_;
    }

    int leaf_count() const
    {
        if (is_leaf()) {
            return 1;
        }
        int n = 0;
        for (const auto &c : kids_) {
            n += c.leaf_count();
        }
        return n;
    }

    int degree() const
    {
        return leaf_count() - 1;
    }

    int vertex_count() const
    {
        if (is_leaf()) {
            return 0;
        }
        int n = 1;
        for (const auto &c : kids_) {
            n += c.vertex_count();
        }
        return n;
    }

    // Canonical nested-parenthesis form: "|" for a leaf, "(c1,...,ck)" for a vertex.
    std::string encode() const
    {
        if (is_leaf()) {
            return "|";
        }
        std::string s = "(";
        for (std::size_t i = 0; i < kids_.size(); ++i) {
            if (i > 0) {
                s += ',';
            }
            s += kids_[i].encode();
        }
        s += ')';
        return s;
    }

    Tree mirror() const
    {
        if (is_leaf()) {
            return Tree{};
        }
        std::vector<Tree> rev;
        rev.reserve(kids_.size());
        for (auto it = kids_.rbegin(); it != kids_.rend(); ++it) {
            rev.push_back(it->mirror());
        }
        return Tree(std::move(rev));
    }

    friend bool operator==(const Tree &a, const Tree &b)
    {
        return a.kids_ == b.kids_;
    }

    // Lexicographic order on canonical encodings.
    friend bool operator<(const Tree &a, const Tree &b)
    {
        return a.encode() < b.encode();
    }

private:
    std::vector<Tree> kids_;
};

inline Tree graft(std::vector<Tree> children)
{
    return Tree(std::move(children));
}

enum class CombSide { Left, Right };

inline Tree comb(int degree, CombSide side)
{
    if (degree < 0) {
        throw std::invalid_argument("negative comb degree");
    }
    Tree t;
    for (int i = 0; i < degree; ++i) {
        if (side == CombSide::Right) {
            t = graft({Tree{}, t});
        } else {
            t = graft({t, Tree{}});
        }
    }
    return t;
}

inline Tree parse_tree(const std::string &text)
{
    std::size_t pos = 0;
    auto fail = [&](const std::string &msg) -> void {
        throw std::invalid_argument("tree parse error at position " + std::to_string(pos) + ": " + msg);
    };
    // recursive descent over "|" and "(...)"
    auto parse = [&](auto &&self) -> Tree {
        if (pos >= text.size()) {
            fail("unexpected end of input");
        }
        if (text[pos] == '|') {
            ++pos;
            return Tree{};
        }
        if (text[pos] != '(') {
            fail(std::string("expected '|' or '(', got '") + text[pos] + "'");
        }
        ++pos;
        std::vector<Tree> kids;
        kids.push_back(self(self));
        while (pos < text.size() && text[pos] == ',') {
            ++pos;
            kids.push_back(self(self));
        }
        if (pos >= text.size() || text[pos] != ')') {
            fail("expected ',' or ')'");
        }
        ++pos;
        if (kids.size() < 2) {
            fail("vertex with fewer than 2 children");
        }
        return Tree(std::move(kids));
    };
    Tree t = parse(parse);
    if (pos != text.size()) {
        fail("trailing input");
    }
    return t;
}

// All planar reduced trees of the given degree, sorted by canonical encoding.
// Counts follow the little Schroeder numbers 1, 1, 3, 11, 45, 197, 903, ...
inline std::vector<Tree> enumerate_trees(int degree, int degree_cap = 10)
{
    if (degree < 0) {
        throw std::invalid_argument("negative degree");
    }
    if (degree > degree_cap) {
        throw std::invalid_argument("degree " + std::to_string(degree)
                                    + " above enumeration cap " + std::to_string(degree_cap));
    }
    // by_leaves[l] = all trees with l leaves
    std::vector<std::vector<Tree>> by_leaves(static_cast<std::size_t>(degree) + 2);
    by_leaves[1] = {Tree{}};
    for (int l = 2; l <= degree + 1; ++l) {
        std::vector<Tree> out;
        // choose arity k and a composition of l into k parts
        std::vector<Tree> stack;
        auto rec = [&](auto &&self, int remaining, int parts_left) -> void {
            if (parts_left == 0) {
                if (remaining == 0 && stack.size() >= 2) {
                    out.push_back(Tree(stack));
                }
                return;
            }
            for (int take = 1; take + (parts_left - 1) <= remaining; ++take) {
                for (const auto &sub : by_leaves[static_cast<std::size_t>(take)]) {
                    stack.push_back(sub);
                    self(self, remaining - take, parts_left - 1);
                    stack.pop_back();
                }
            }
        };
        for (int k = 2; k <= l; ++k) {
            rec(rec, l, k);
        }
        std::sort(out.begin(), out.end());
        by_leaves[static_cast<std::size_t>(l)] = std::move(out);
    }
    return by_leaves[static_cast<std::size_t>(degree) + 1];
}

struct DescentStats {
    int weak = 0;
    int strict = 0;
};

// Orientation of the drawing convention the descent statistics are read in.
// Under AsPrinted, a leaf is a (weak) descent if it
// is neither the leftmost leaf of the tree nor the rightmost edge above its
// vertex; it is strict if it is moreover the leftmost edge above its vertex.
// Mirrored swaps left and right throughout.
enum class DescentOrientation { AsPrinted, Mirrored };

inline DescentStats descent_stats(const Tree &t,
                                  DescentOrientation orient = DescentOrientation::AsPrinted)
{
    DescentStats stats;
    if (t.is_leaf()) {
        return stats;
    }
    // One left-to-right traversal; each leaf carries three flags.
    int leaf_index = 0;
    const int total_leaves = t.leaf_count();
    auto walk = [&](auto &&self, const Tree &node) -> void {
        const auto &kids = node.children();
        for (std::size_t i = 0; i < kids.size(); ++i) {
            if (kids[i].is_leaf()) {
                const bool first_of_tree = (leaf_index == 0);
                const bool last_of_tree = (leaf_index == total_leaves - 1);
                const bool leftmost_above = (i == 0);
                const bool rightmost_above = (i + 1 == kids.size());
                bool weak, strict;
                if (orient == DescentOrientation::AsPrinted) {
                    weak = !first_of_tree && !rightmost_above;
                    strict = weak && leftmost_above;
                } else {
                    weak = !last_of_tree && !leftmost_above;
                    strict = weak && rightmost_above;
                }
                stats.weak += weak;
                stats.strict += strict;
                ++leaf_index;
            } else {
                self(self, kids[i]);
            }
        }
    };
    walk(walk, t);
    return stats;
}

inline bool is_binary(const Tree &t)
{
    if (t.is_leaf()) {
        return true;
    }
    if (t.children().size() != 2) {
        return false;
    }
    return is_binary(t.children()[0]) && is_binary(t.children()[1]);
}

// Position of a contractible inner edge: path from the root to the child
// vertex that gets glued into its parent.
using EdgePath = std::vector<std::size_t>;

inline std::vector<EdgePath> inner_edges(const Tree &t)
{
    std::vector<EdgePath> edges;
    EdgePath path;
    auto walk = [&](auto &&self, const Tree &node) -> void {
        const auto &kids = node.children();
        for (std::size_t i = 0; i < kids.size(); ++i) {
            if (!kids[i].is_leaf()) {
                path.push_back(i);
                edges.push_back(path);
                self(self, kids[i]);
                path.pop_back();
            }
        }
    };
    if (!t.is_leaf()) {
        walk(walk, t);
    }
    return edges;
}

// Glue the vertex at the end of `edge` into its parent: its children are
// spliced in place of the edge. Degree is preserved.
inline Tree contract_edge(const Tree &t, const EdgePath &edge)
{
    if (edge.empty()) {
        throw std::invalid_argument("empty edge path");
    }
    auto rebuild = [&](auto &&self, const Tree &node, std::size_t depth) -> Tree {
        const auto &kids = node.children();
        const std::size_t at = edge[depth];
        if (at >= kids.size() || kids[at].is_leaf()) {
            throw std::invalid_argument("edge path does not name an inner edge");
        }
        std::vector<Tree> out;
        for (std::size_t i = 0; i < kids.size(); ++i) {
            if (i != at) {
                out.push_back(kids[i]);
            } else if (depth + 1 == edge.size()) {
                for (const auto &gc : kids[at].children()) {
                    out.push_back(gc);
                }
            } else {
                out.push_back(self(self, kids[at], depth + 1));
            }
        }
        return Tree(std::move(out));
    };
    return rebuild(rebuild, t, 0);
}

enum class EdgePointing { Left, Right, Middle };

inline EdgePointing edge_pointing(const Tree &t, const EdgePath &edge)
{
    const Tree *node = &t;
    for (std::size_t d = 0; d + 1 < edge.size(); ++d) {
        node = &node->children()[edge[d]];
    }
    const std::size_t at = edge.back();
    if (at == 0) {
        return EdgePointing::Left;
    }
    if (at + 1 == node->children().size()) {
        return EdgePointing::Right;
    }
    return EdgePointing::Middle;
}

// Downward closure of t in the contraction partial order (t included).
// The optional filter restricts which edges may be contracted.
template <typename EdgeFilter>
std::set<Tree> contraction_closure_if(const Tree &t, EdgeFilter &&admit)
{
    std::set<Tree> seen{t};
    std::vector<Tree> frontier{t};
    while (!frontier.empty()) {
        Tree cur = frontier.back();
        frontier.pop_back();
        for (const auto &edge : inner_edges(cur)) {
            if (!admit(cur, edge)) {
                continue;
            }
            Tree next = contract_edge(cur, edge);
            if (seen.insert(next).second) {
                frontier.push_back(next);
            }
        }
    }
    return seen;
}

inline std::set<Tree> contraction_closure(const Tree &t)
{
    return contraction_closure_if(t, [](const Tree &, const EdgePath &) { return true; });
}

} // namespace tridend

#endif
