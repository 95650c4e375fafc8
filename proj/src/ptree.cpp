#include "comprelie/ptree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "comprelie/errors.hpp"

namespace comprelie {

std::string serialize(const Dec& d) {
    if (d.counter == 0) return d.label;
    return d.label + ":" + std::to_string(d.counter);
}

int FlatForest::add(Dec d, int parent_vertex, int block_id) {
    dec.push_back(std::move(d));
    parent.push_back(parent_vertex);
    block.push_back(block_id);
    return static_cast<int>(dec.size()) - 1;
}

namespace {

std::string canon_node(Node& n, std::size_t& count);

std::string canon_blocks(std::vector<Block>& blocks, std::size_t& count) {
    std::vector<std::pair<std::string, Block>> keyed;
    keyed.reserve(blocks.size());
    for (auto& b : blocks) {
        if (b.empty()) throw InvalidArgument("empty block");
        std::vector<std::pair<std::string, Node>> nodes;
        nodes.reserve(b.size());
        for (auto& n : b) {
            std::string k = canon_node(n, count);
            nodes.emplace_back(std::move(k), std::move(n));
        }
        std::sort(nodes.begin(), nodes.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        std::string bk = "[";
        Block sorted;
        sorted.reserve(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (i) bk += ',';
            bk += nodes[i].first;
            sorted.push_back(std::move(nodes[i].second));
        }
        bk += ']';
        keyed.emplace_back(std::move(bk), std::move(sorted));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::string out;
    blocks.clear();
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i) out += ',';
        out += keyed[i].first;
        blocks.push_back(std::move(keyed[i].second));
    }
    return out;
}

std::string canon_node(Node& n, std::size_t& count) {
    ++count;
    std::string k = serialize(n.dec);
    if (!n.children.empty()) k += "(" + canon_blocks(n.children, count) + ")";
    return k;
}

void flatten_blocks(const std::vector<Block>& blocks, int parent, FlatForest& out, int& next_block) {
    for (const auto& b : blocks) {
        int id = next_block++;
        // Members first, then descend, so that block members are adjacent
        // only at the root level; preorder is node-then-children.
        for (const auto& n : b) {
            int v = out.add(n.dec, parent, id);
            flatten_blocks(n.children, v, out, next_block);
        }
    }
}

void vertex_refs(const std::vector<Block>& blocks, VertexRef& prefix, std::vector<VertexRef>& out) {
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        for (std::size_t ni = 0; ni < blocks[bi].size(); ++ni) {
            prefix.emplace_back(bi, ni);
            out.push_back(prefix);
            vertex_refs(blocks[bi][ni].children, prefix, out);
            prefix.pop_back();
        }
    }
}

}  // namespace

PForest::PForest(std::vector<Block> root_blocks) : roots_(std::move(root_blocks)) {
    key_ = "{" + canon_blocks(roots_, vertices_) + "}";
}

PForest PForest::vertex(Dec d) { return PForest({Block{Node{std::move(d), {}}}}); }

std::size_t PForest::root_count() const {
    std::size_t n = 0;
    for (const auto& b : roots_) n += b.size();
    return n;
}

FlatForest PForest::flatten() const {
    FlatForest out;
    int next = 0;
    flatten_blocks(roots_, -1, out, next);
    return out;
}

PForest PForest::from_flat(const FlatForest& flat) {
    const int n = static_cast<int>(flat.size());
    if (flat.parent.size() != flat.size() || flat.block.size() != flat.size()) {
        throw InvalidArgument("flat forest arrays differ in length");
    }
    std::map<int, int> block_parent;
    for (int v = 0; v < n; ++v) {
        int p = flat.parent[v];
        if (p < -1 || p >= n || p == v) throw InvalidArgument("bad parent index");
        auto [it, inserted] = block_parent.try_emplace(flat.block[v], p);
        if (!inserted && it->second != p) throw InvalidArgument("block crosses distinct parents");
    }
    // Child block lists per vertex (index n stands for the root level).
    std::vector<std::map<int, std::vector<int>>> groups(n + 1);
    for (int v = 0; v < n; ++v) {
        int p = flat.parent[v] < 0 ? n : flat.parent[v];
        groups[p][flat.block[v]].push_back(v);
    }
    // Cycle check: every vertex must reach the root level.
    for (int v = 0; v < n; ++v) {
        int steps = 0;
        for (int u = v; u >= 0; u = flat.parent[u]) {
            if (++steps > n) throw InvalidArgument("parent relation has a cycle");
        }
    }
    std::function<Node(int)> build = [&](int v) {
        Node node{flat.dec[v], {}};
        for (const auto& [id, members] : groups[v]) {
            Block b;
            for (int w : members) b.push_back(build(w));
            node.children.push_back(std::move(b));
        }
        return node;
    };
    std::vector<Block> roots;
    for (const auto& [id, members] : groups[n]) {
        Block b;
        for (int w : members) b.push_back(build(w));
        roots.push_back(std::move(b));
    }
    return PForest(std::move(roots));
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    PForest forest_eof() {
        PForest f = forest();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return f;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    PForest forest() {
        expect('{');
        std::vector<Block> blocks;
        if (!peek('}')) {
            blocks.push_back(block());
            while (peek(',')) {
                ++pos_;
                blocks.push_back(block());
            }
        }
        expect('}');
        return PForest(std::move(blocks));
    }

    Block block() {
        expect('[');
        Block b;
        b.push_back(node());
        while (peek(',')) {
            ++pos_;
            b.push_back(node());
        }
        expect(']');
        return b;
    }

    Node node() {
        Node n{dec(), {}};
        if (peek('(')) {
            ++pos_;
            n.children.push_back(block());
            while (peek(',')) {
                ++pos_;
                n.children.push_back(block());
            }
            expect(')');
        }
        return n;
    }

    Dec dec() {
        Dec d;
        skip();
        if (peek('<')) {
            // Tree-valued label: `<forest>`, stored in canonical form.
            ++pos_;
            PForest inner = forest();
            expect('>');
            d.label = "<" + inner.key() + ">";
        } else {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                ++pos_;
            }
            if (pos_ == start) fail("expected a label");
            d.label = std::string(s_.substr(start, pos_ - start));
        }
        if (peek(':')) {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start) fail("expected a counter");
            std::string digits(s_.substr(start, pos_ - start));
            if (digits.size() > 9) fail("counter too large");
            d.counter = static_cast<unsigned>(std::stoul(digits));
        }
        return d;
    }
};

}  // namespace

PForest parse_forest(std::string_view text) { return Parser(text).forest_eof(); }

// --------------------------------------------------------------- vertices

std::vector<VertexRef> vertices(const PForest& f) {
    std::vector<VertexRef> out;
    VertexRef prefix;
    vertex_refs(f.root_blocks(), prefix, out);
    return out;
}

std::size_t vertex_index(const PForest& f, const VertexRef& ref) {
    auto all = vertices(f);
    auto it = std::find(all.begin(), all.end(), ref);
    if (it == all.end()) throw InvalidArgument("vertex reference does not resolve");
    return static_cast<std::size_t>(it - all.begin());
}

// ---------------------------------------------------------------- surgery

namespace {

/// Appends `src` to `dst` with parent/block offsets; returns the offset.
int append_flat(FlatForest& dst, const FlatForest& src, int block_offset) {
    int off = static_cast<int>(dst.size());
    for (std::size_t v = 0; v < src.size(); ++v) {
        int p = src.parent[v] < 0 ? -1 : src.parent[v] + off;
        dst.add(src.dec[v], p, src.block[v] + block_offset);
    }
    return off;
}

int max_block(const FlatForest& f) {
    int m = -1;
    for (int b : f.block) m = std::max(m, b);
    return m;
}

/// Ids of the child blocks of `s`, in canonical order.
std::vector<int> child_blocks(const FlatForest& f, int s) {
    std::vector<int> out;
    for (std::size_t v = 0; v < f.size(); ++v) {
        if (f.parent[v] == s && std::find(out.begin(), out.end(), f.block[v]) == out.end()) {
            out.push_back(f.block[v]);
        }
    }
    return out;
}

}  // namespace

PForest mul(const PForest& a, const PForest& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    FlatForest fa = a.flatten();
    FlatForest fb = b.flatten();
    int boff = max_block(fa) + 1;
    int off = append_flat(fa, fb, boff);
    // Everything at the root level goes into one block.
    const int root_block = max_block(fa) + 1;
    for (std::size_t v = 0; v < fa.size(); ++v) {
        if (fa.parent[v] < 0) fa.block[v] = root_block;
    }
    (void)off;
    return PForest::from_flat(fa);
}

PForest concat(const PForest& a, const PForest& b) {
    std::vector<Block> roots = a.root_blocks();
    for (const auto& blk : b.root_blocks()) roots.push_back(blk);
    return PForest(std::move(roots));
}

std::size_t child_block_count(const PForest& t, std::size_t s) {
    FlatForest f = t.flatten();
    if (s >= f.size()) throw InvalidArgument("vertex index out of range");
    return child_blocks(f, static_cast<int>(s)).size();
}

namespace {

FlatForest graft_flat(const PForest& t, std::size_t s, std::optional<std::size_t> b, const PForest& t2) {
    if (t2.empty()) throw InvalidArgument("cannot graft the empty forest");
    FlatForest f = t.flatten();
    if (s >= f.size()) throw InvalidArgument("vertex index out of range");
    int target_block = -1;
    if (b) {
        auto blocks = child_blocks(f, static_cast<int>(s));
        if (*b >= blocks.size()) throw InvalidArgument("block index out of range");
        target_block = blocks[*b];
    }
    FlatForest g = t2.flatten();
    int boff = max_block(f) + 1;
    int off = append_flat(f, g, boff);
    for (std::size_t v = off; v < f.size(); ++v) {
        if (f.parent[v] < 0) {
            f.parent[v] = static_cast<int>(s);
            if (target_block >= 0) f.block[v] = target_block;
        }
    }
    return f;
}

}  // namespace

PForest graft(const PForest& t, std::size_t s, std::optional<std::size_t> b, const PForest& t2) {
    return PForest::from_flat(graft_flat(t, s, b, t2));
}

std::optional<PForest> graft_shift(const PForest& t, std::size_t s, std::optional<std::size_t> b, const PForest& t2,
                                   int k) {
    FlatForest f = graft_flat(t, s, b, t2);
    long c = static_cast<long>(f.dec[s].counter) + k;
    if (c < 0) return std::nullopt;
    f.dec[s].counter = static_cast<unsigned>(c);
    return PForest::from_flat(f);
}

PForest graft(const PForest& t, const VertexRef& s, std::optional<std::size_t> b, const PForest& t2) {
    return graft(t, vertex_index(t, s), b, t2);
}

std::optional<PForest> shift(const PForest& t, std::size_t s, int k) {
    FlatForest f = t.flatten();
    if (s >= f.size()) throw InvalidArgument("vertex index out of range");
    long c = static_cast<long>(f.dec[s].counter) + k;
    if (c < 0) return std::nullopt;
    if (k == 0) return t;
    f.dec[s].counter = static_cast<unsigned>(c);
    return PForest::from_flat(f);
}

std::optional<PForest> shift(const PForest& t, const VertexRef& s, int k) {
    return shift(t, vertex_index(t, s), k);
}

// ----------------------------------------------------------------- ideals

namespace {

std::vector<std::vector<int>> children_of(const FlatForest& f) {
    std::vector<std::vector<int>> ch(f.size());
    for (std::size_t v = 0; v < f.size(); ++v) {
        if (f.parent[v] >= 0) ch[f.parent[v]].push_back(static_cast<int>(v));
    }
    return ch;
}

VertexSet subtree_mask(const std::vector<std::vector<int>>& ch, int v) {
    VertexSet m = VertexSet{1} << v;
    for (int w : ch[v]) m |= subtree_mask(ch, w);
    return m;
}

/// Ideals inside the subtree at v: the whole subtree, or any product of
/// ideals of the children's subtrees.
std::vector<VertexSet> subtree_ideals(const std::vector<std::vector<int>>& ch, int v) {
    std::vector<VertexSet> acc{0};
    for (int w : ch[v]) {
        auto sub = subtree_ideals(ch, w);
        std::vector<VertexSet> next;
        next.reserve(acc.size() * sub.size());
        for (VertexSet a : acc) {
            for (VertexSet s : sub) next.push_back(a | s);
        }
        acc = std::move(next);
    }
    acc.push_back(subtree_mask(ch, v));
    return acc;
}

void check_size(const PForest& f) {
    if (f.vertex_count() > 63) throw ResourceError("forest too large for vertex sets");
}

}  // namespace

std::vector<VertexSet> ideals(const PForest& f) {
    check_size(f);
    FlatForest flat = f.flatten();
    auto ch = children_of(flat);
    std::vector<VertexSet> acc{0};
    for (std::size_t v = 0; v < flat.size(); ++v) {
        if (flat.parent[v] >= 0) continue;
        auto sub = subtree_ideals(ch, static_cast<int>(v));
        std::vector<VertexSet> next;
        for (VertexSet a : acc) {
            for (VertexSet s : sub) next.push_back(a | s);
        }
        acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

bool is_ideal(const PForest& f, VertexSet set) {
    check_size(f);
    FlatForest flat = f.flatten();
    if (flat.size() < 64 && (set >> flat.size()) != 0) return false;
    for (std::size_t v = 0; v < flat.size(); ++v) {
        int p = flat.parent[v];
        if (p >= 0 && ((set >> p) & 1) && !((set >> v) & 1)) return false;
    }
    return true;
}

namespace {

/// Restriction of a flat forest; vertices whose parent is dropped become
/// roots and keep their block id (so sibling blocks stay apart).
FlatForest restrict_flat(const FlatForest& f, VertexSet set, std::vector<int>* new_index = nullptr) {
    std::vector<int> idx(f.size(), -1);
    FlatForest out;
    for (std::size_t v = 0; v < f.size(); ++v) {
        if (!((set >> v) & 1)) continue;
        int p = f.parent[v];
        int np = (p >= 0 && ((set >> p) & 1)) ? idx[p] : -1;
        idx[v] = out.add(f.dec[v], np, f.block[v]);
    }
    if (new_index) *new_index = std::move(idx);
    return out;
}

}  // namespace

PForest restrict_to(const PForest& f, VertexSet set) {
    check_size(f);
    return PForest::from_flat(restrict_flat(f.flatten(), set));
}

IdealSplit split_ideal(const PForest& t, VertexSet ideal, bool raise_counters) {
    if (!is_ideal(t, ideal)) throw InvalidArgument("vertex set is not an ideal");
    FlatForest f = t.flatten();
    IdealSplit out;
    out.iota.assign(f.size(), 0);
    // ι_I(v): child blocks of v entirely inside I.
    for (std::size_t v = 0; v < f.size(); ++v) {
        if ((ideal >> v) & 1) continue;
        for (int b : child_blocks(f, static_cast<int>(v))) {
            bool inside = true;
            for (std::size_t w = 0; w < f.size(); ++w) {
                if (f.parent[w] == static_cast<int>(v) && f.block[w] == b && !((ideal >> w) & 1)) {
                    inside = false;
                }
            }
            if (inside) ++out.iota[v];
        }
    }
    FlatForest pruned = restrict_flat(f, ideal);
    const int merged = max_block(f) + 1;
    for (std::size_t v = 0; v < pruned.size(); ++v) {
        if (pruned.parent[v] < 0) pruned.block[v] = merged;
    }
    out.pruned = PForest::from_flat(pruned);

    VertexSet all = f.size() >= 64 ? ~VertexSet{0} : ((VertexSet{1} << f.size()) - 1);
    FlatForest rest = f;
    if (raise_counters) {
        for (std::size_t v = 0; v < f.size(); ++v) rest.dec[v].counter += out.iota[v];
    }
    out.rest = PForest::from_flat(restrict_flat(rest, all & ~ideal));
    return out;
}

// ------------------------------------------------------------- refinement

namespace {

/// All set partitions of {0..n-1} as restricted growth strings.
void set_partitions(std::size_t n, std::vector<int>& cur, int used, std::vector<std::vector<int>>& out) {
    if (cur.size() == n) {
        out.push_back(cur);
        return;
    }
    for (int b = 0; b <= used; ++b) {
        cur.push_back(b);
        set_partitions(n, cur, std::max(used, b + 1), out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> set_partitions(std::size_t n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (n == 0) return {{}};
    cur.push_back(0);
    set_partitions(n, cur, 1, out);
    // Finest partition (0,1,..,n-1) first.
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<PForest> refinements(const PForest& t) {
    FlatForest f = t.flatten();
    // Sibling groups: per parent (root level included), the list of block ids.
    std::vector<std::vector<int>> groups;
    {
        std::map<int, std::vector<int>> by_parent;
        for (std::size_t v = 0; v < f.size(); ++v) {
            auto& ids = by_parent[f.parent[v]];
            if (std::find(ids.begin(), ids.end(), f.block[v]) == ids.end()) ids.push_back(f.block[v]);
        }
        for (auto& [p, ids] : by_parent) {
            if (ids.size() > 1) groups.push_back(std::move(ids));
        }
    }
    std::vector<std::vector<std::vector<int>>> choices;
    for (const auto& g : groups) choices.push_back(set_partitions(g.size()));

    std::vector<PForest> out;
    std::vector<std::size_t> pick(groups.size(), 0);
    while (true) {
        FlatForest g = f;
        std::map<int, int> remap;
        for (std::size_t i = 0; i < groups.size(); ++i) {
            const auto& rgs = choices[i][pick[i]];
            for (std::size_t j = 0; j < groups[i].size(); ++j) remap[groups[i][j]] = groups[i][rgs[j]];
        }
        for (auto& b : g.block) {
            auto it = remap.find(b);
            if (it != remap.end()) b = it->second;
        }
        out.push_back(PForest::from_flat(g));
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    return out;
}

bool refines_below(const PForest& lower, const PForest& upper) {
    for (const auto& r : refinements(upper)) {
        if (r == lower) return true;
    }
    return false;
}

PForest forget_blocks(const PForest& f) {
    FlatForest flat = f.flatten();
    for (std::size_t v = 0; v < flat.size(); ++v) flat.block[v] = static_cast<int>(v);
    return PForest::from_flat(flat);
}

std::size_t varsigma(const PForest& t) {
    if (!t.one_rooted()) throw InvalidArgument("varsigma needs a one-rooted tree");
    std::size_t n = 0;
    for (const auto& b : t.root_blocks()[0][0].children) {
        if (b.size() == 1) ++n;
    }
    return n;
}

std::vector<AdmissiblePartition> admissible_partitions(const PForest& t) {
    check_size(t);
    FlatForest f = t.flatten();
    const std::size_t n = f.size();
    std::vector<int> edges;  // non-root vertices: edge to their parent
    for (std::size_t v = 0; v < n; ++v) {
        if (f.parent[v] >= 0) edges.push_back(static_cast<int>(v));
    }
    if (edges.size() > 24) throw ResourceError("too many edges for partition enumeration");
    std::vector<AdmissiblePartition> out;
    for (std::uint64_t keep = 0; keep < (std::uint64_t{1} << edges.size()); ++keep) {
        std::vector<bool> kept(n, false);
        for (std::size_t e = 0; e < edges.size(); ++e) kept[edges[e]] = (keep >> e) & 1;
        // Parts are identified by their top vertex; preorder puts parents first.
        std::vector<int> top(n);
        for (std::size_t v = 0; v < n; ++v) top[v] = kept[v] ? top[f.parent[v]] : static_cast<int>(v);
        std::map<int, int> part_index;
        for (std::size_t v = 0; v < n; ++v) {
            if (top[v] == static_cast<int>(v)) part_index.emplace(static_cast<int>(v), static_cast<int>(part_index.size()));
        }
        bool ok = true;
        std::vector<PForest> pieces(part_index.size());
        for (const auto& [tv, pi] : part_index) {
            VertexSet mask = 0;
            for (std::size_t v = 0; v < n; ++v) {
                if (top[v] == tv) mask |= VertexSet{1} << v;
            }
            PForest piece = PForest::from_flat(restrict_flat(f, mask));
            if (varsigma(piece) != 0) {
                ok = false;
                break;
            }
            pieces[pi] = std::move(piece);
        }
        if (!ok) continue;
        AdmissiblePartition ap;
        ap.part_of.resize(n);
        for (std::size_t v = 0; v < n; ++v) ap.part_of[v] = part_index[top[v]];
        FlatForest c;
        for (const auto& [tv, pi] : part_index) {
            (void)pi;
            int p = f.parent[tv] < 0 ? -1 : part_index[top[f.parent[tv]]];
            c.add(Dec{"<" + pieces[part_index[tv]].key() + ">", 0}, p, static_cast<int>(c.size()));
        }
        ap.contracted = PForest::from_flat(c);
        out.push_back(std::move(ap));
    }
    return out;
}

// ------------------------------------------------------------ enumeration

namespace {

std::vector<PForest> grow(const PForest& t, const Dec& d, EnumMode mode) {
    std::vector<PForest> out;
    PForest leaf = PForest::vertex(d);
    const bool plain = mode == EnumMode::plain || mode == EnumMode::forest;
    if (mode == EnumMode::partitioned) out.push_back(mul(t, leaf));
    if (mode == EnumMode::forest) out.push_back(concat(t, leaf));
    for (std::size_t s = 0; s < t.vertex_count(); ++s) {
        out.push_back(graft(t, s, std::nullopt, leaf));
        if (!plain) {
            std::size_t nb = child_block_count(t, s);
            for (std::size_t b = 0; b < nb; ++b) out.push_back(graft(t, s, b, leaf));
        }
    }
    return out;
}

}  // namespace

std::vector<PForest> enumerate(std::size_t n, const std::vector<Dec>& alphabet, EnumMode mode) {
    if (n == 0) return {PForest()};
    check_degree(static_cast<int>(n), "enumerate");
    std::set<PForest> level;
    for (const auto& d : alphabet) level.insert(PForest::vertex(d));
    for (std::size_t k = 1; k < n; ++k) {
        std::set<PForest> next;
        for (const auto& t : level) {
            for (const auto& d : alphabet) {
                for (auto& g : grow(t, d, mode)) next.insert(std::move(g));
            }
        }
        level = std::move(next);
    }
    return {level.begin(), level.end()};
}

std::vector<std::string> default_labels(std::size_t k) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= k; ++i) out.push_back("d" + std::to_string(i));
    return out;
}

std::vector<Dec> make_alphabet(const std::vector<std::string>& labels, unsigned max_counter) {
    std::vector<Dec> out;
    for (const auto& l : labels) {
        for (unsigned c = 0; c <= max_counter; ++c) out.push_back(Dec{l, c});
    }
    return out;
}

}  // namespace comprelie
