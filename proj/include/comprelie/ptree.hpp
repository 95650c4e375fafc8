#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "comprelie/lincomb.hpp"

namespace comprelie {

/// Vertex decoration (counter, label). CP and H_CK keep counter == 0.
struct Dec {
    std::string label;
    unsigned counter = 0;

    friend bool operator==(const Dec&, const Dec&) = default;
};

std::string serialize(const Dec& d);

struct Node;
using Block = std::vector<Node>;

struct Node {
    Dec dec;
    std::vector<Block> children;  // child blocks
};

/// Flat presentation of a decorated partitioned forest: one entry per
/// vertex. Blocks are given by integer ids; members of a block must share
/// the same parent (or all be roots).
struct FlatForest {
    std::vector<Dec> dec;
    std::vector<int> parent;  // -1 for roots
    std::vector<int> block;   // arbitrary ids, compared for equality only

    std::size_t size() const { return dec.size(); }
    int add(Dec d, int parent_vertex, int block_id);
};

/// Isomorphism class of a decorated partitioned rooted forest, stored in
/// canonical form.
///
/// Canonical form: every subtree is canonicalized bottom-up, the nodes of a
/// block are sorted by their serialization and block lists are sorted by
/// theirs. Two forests are isomorphic iff their canonical forms (equivalently
/// their keys) are equal. The key is the serialization in the text grammar.
class PForest {
public:
    PForest() : key_("{}") {}
    explicit PForest(std::vector<Block> root_blocks);

    /// Builds from a flat presentation. Throws InvalidArgument when a block
    /// contains vertices with distinct parents.
    static PForest from_flat(const FlatForest& flat);

    /// Single vertex.
    static PForest vertex(Dec d);

    const std::vector<Block>& root_blocks() const { return roots_; }
    const std::string& key() const { return key_; }

    bool empty() const { return roots_.empty(); }
    std::size_t vertex_count() const { return vertices_; }
    std::size_t root_count() const;
    /// All roots in one block (the empty forest counts as a tree).
    bool is_tree() const { return roots_.size() <= 1; }
    bool one_rooted() const { return roots_.size() == 1 && roots_[0].size() == 1; }

    /// Flat presentation in canonical preorder: root blocks in order, then
    /// each node followed by its child blocks in order. Block ids are dense.
    FlatForest flatten() const;

    friend bool operator==(const PForest& a, const PForest& b) { return a.key_ == b.key_; }
    friend std::strong_ordering operator<=>(const PForest& a, const PForest& b) { return a.key_ <=> b.key_; }

private:
    std::vector<Block> roots_;
    std::string key_;
    std::size_t vertices_ = 0;
};

using PTree = PForest;

inline std::string serialize(const PForest& f) { return f.key(); }
inline std::ostream& operator<<(std::ostream& os, const PForest& f) { return os << f.key(); }

/// Parses the forest grammar; the result is canonical. Throws ParseError.
PForest parse_forest(std::string_view text);

/// Address of a vertex: (block index, node index) pairs from the root level
/// down, in canonical coordinates.
using VertexRef = std::vector<std::pair<std::size_t, std::size_t>>;

/// All vertices, in canonical preorder (the order of `flatten`).
std::vector<VertexRef> vertices(const PForest& f);

/// Index of `ref` in canonical preorder. Throws InvalidArgument.
std::size_t vertex_index(const PForest& f, const VertexRef& ref);

/// T·T': disjoint union with the two root blocks merged.
PForest mul(const PForest& a, const PForest& b);

/// Forest product of plain rooted forests: disjoint union, blocks untouched.
PForest concat(const PForest& a, const PForest& b);

/// T •_{s,b} T': graft every root of `t2` below vertex `s`. With a block id
/// (index into the child blocks of s), that block absorbs the root block of
/// t2; with nullopt (the `*` case) the roots form new block(s). Throws
/// InvalidArgument for a bad vertex or block, or an empty t2.
PForest graft(const PForest& t, std::size_t s, std::optional<std::size_t> b, const PForest& t2);
PForest graft(const PForest& t, const VertexRef& s, std::optional<std::size_t> b, const PForest& t2);

/// (T •_{s,b} T')[k]_s; nullopt when the counter of s would go negative.
std::optional<PForest> graft_shift(const PForest& t, std::size_t s, std::optional<std::size_t> b, const PForest& t2,
                                   int k);

/// Number of child blocks of vertex s (|bl(s)|).
std::size_t child_block_count(const PForest& t, std::size_t s);

/// T[k]_s; nullopt stands for the zero element (counter would go negative).
std::optional<PForest> shift(const PForest& t, std::size_t s, int k);
std::optional<PForest> shift(const PForest& t, const VertexRef& s, int k);

/// Vertex subsets as bitmasks over canonical preorder indices.
using VertexSet = std::uint64_t;

/// Every vertex set closed under taking children (an edge v -> w with v in
/// I forces w in I), including the empty set and the full vertex set.
std::vector<VertexSet> ideals(const PForest& f);

bool is_ideal(const PForest& f, VertexSet set);

/// Restriction of the forest to a vertex set: induced edges, blocks
/// intersected. Root blocks are kept apart (no product applied).
PForest restrict_to(const PForest& f, VertexSet set);

struct IdealSplit {
    PForest rest;    // R^I
    PForest pruned;  // P^I
    std::vector<unsigned> iota;  // ι_I(v) per vertex (0 for v in I)
};

/// (R^I, P^I, ι_I). P is the restriction to I with all root blocks merged
/// into one; R is the restriction to the complement, each counter raised by
/// ι_I(v) when `raise_counters`. Throws InvalidArgument if `ideal` is not one.
IdealSplit split_ideal(const PForest& t, VertexSet ideal, bool raise_counters = true);

/// All T' with T' <= T for the refinement order: same decorated rooted
/// tree, and every block of T' is a union of blocks of T (T' coarser). One
/// entry per coarsening of the vertex partition, so classes can repeat;
/// T itself is always first.
std::vector<PForest> refinements(const PForest& t);

/// T' <= T, i.e. T' is obtained from T by merging sibling blocks.
bool refines_below(const PForest& lower, const PForest& upper);

/// The same forest with every block split into singletons (forget blocks).
PForest forget_blocks(const PForest& f);

/// Number of child blocks of the root that are single vertices (ς).
/// Requires a one-rooted tree.
std::size_t varsigma(const PForest& t);

struct AdmissiblePartition {
    std::vector<int> part_of;  // part index per vertex (canonical preorder)
    PForest contracted;        // T/π, vertices decorated by `<key>` labels
};

/// All π ◁ T: partitions into parts whose restriction is a one-rooted tree
/// with ς = 0. The contraction is a plain rooted forest.
std::vector<AdmissiblePartition> admissible_partitions(const PForest& t);

enum class EnumMode {
    partitioned,  // partitioned trees: all roots in one block
    one_rooted,   // partitioned trees with a single root
    plain,        // plain rooted trees
    forest,       // plain rooted forests
};

/// All isoclasses with exactly n vertices decorated by `alphabet`, each once,
/// sorted by key. n = 0 yields the empty forest.
std::vector<PForest> enumerate(std::size_t n, const std::vector<Dec>& alphabet, EnumMode mode);

/// Decorations {d1..dk} (or explicit labels) crossed with counters 0..max.
std::vector<Dec> make_alphabet(const std::vector<std::string>& labels, unsigned max_counter = 0);
std::vector<std::string> default_labels(std::size_t k);

}  // namespace comprelie
