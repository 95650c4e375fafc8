#include "comprelie/ucp.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "comprelie/errors.hpp"
#include "comprelie/linalg.hpp"

namespace comprelie {

std::string to_string(Algebra a) {
    switch (a) {
        case Algebra::ucp: return "ucp";
        case Algebra::cp: return "cp";
        case Algebra::hck: return "hck";
    }
    return "?";
}

Algebra parse_algebra(const std::string& name) {
    if (name == "ucp") return Algebra::ucp;
    if (name == "cp") return Algebra::cp;
    if (name == "hck") return Algebra::hck;
    throw ParseError("unknown algebra '" + name + "' (expected ucp, cp or hck)");
}

namespace {

Elem graft_sum(const PForest& t, const PForest& t2) {
    Elem out;
    for (std::size_t s = 0; s < t.vertex_count(); ++s) out.add_term(graft(t, s, std::nullopt, t2), 1);
    return out;
}

Elem cp_prelie_basis(const PForest& t, const PForest& t2) {
    if (t.empty()) return {};
    if (t2.empty()) return elem(t, static_cast<long>(t.vertex_count()));
    return graft_sum(t, t2);
}

Tensor ideal_sum(const PForest& t, bool raise) {
    Tensor out;
    for (VertexSet i : ideals(t)) {
        auto sp = split_ideal(t, i, raise);
        out.add_term({std::move(sp.rest), std::move(sp.pruned)}, 1);
    }
    return out;
}

}  // namespace

// ------------------------------------------------------------------- UCP

Elem ucp_prelie(const PForest& t, const PForest& t2) {
    if (t.empty()) return {};
    if (!t2.empty()) return graft_sum(t, t2);
    Elem out;
    for (std::size_t s = 0; s < t.vertex_count(); ++s) {
        if (auto sh = shift(t, s, 1)) out.add_term(*sh, 1);
    }
    return out;
}

Tensor ucp_coproduct(const PForest& t) { return ideal_sum(t, true); }

Elem ucp_mul(const Elem& x, const Elem& y) {
    return bilinear_extend([](const PForest& a, const PForest& b) { return elem(comprelie::mul(a, b)); }, x, y);
}

Elem ucp_prelie(const Elem& x, const Elem& y) {
    return bilinear_extend([](const PForest& a, const PForest& b) { return ucp_prelie(a, b); }, x, y);
}

Tensor ucp_coproduct(const Elem& x) {
    return linear_extend([](const PForest& t) { return ucp_coproduct(t); }, x);
}

// -------------------------------------------------------------------- CP

Elem cp_mul(const Elem& x, const Elem& y) { return ucp_mul(x, y); }

Elem cp_prelie(const Elem& x, const Elem& y) { return bilinear_extend(cp_prelie_basis, x, y); }

Tensor cp_coproduct(const Elem& x) {
    return linear_extend([](const PForest& t) { return ideal_sum(t, false); }, x);
}

FMatrix::FMatrix(std::vector<std::string> labels) : labels_(std::move(labels)) {
    m_.assign(labels_.size(), std::vector<Rational>(labels_.size(), Rational(0)));
}

FMatrix FMatrix::identity(std::vector<std::string> labels) {
    FMatrix f(std::move(labels));
    for (std::size_t i = 0; i < f.labels_.size(); ++i) f.m_[i][i] = 1;
    return f;
}

std::size_t FMatrix::index(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw InvalidArgument("label '" + label + "' not in the matrix alphabet");
    return static_cast<std::size_t>(it - labels_.begin());
}

FMatrix FMatrix::operator*(const FMatrix& o) const {
    if (labels_ != o.labels_) throw InvalidArgument("matrix alphabets differ");
    FMatrix r(labels_);
    const std::size_t n = labels_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) r.m_[i][j] += m_[i][k] * o.m_[k][j];
        }
    }
    return r;
}

FMatrix FMatrix::power(unsigned k) const {
    FMatrix r = identity(labels_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

Elem quotient_to_cp(const Elem& x, const FMatrix& f) {
    Elem out;
    for (const auto& [t, c] : x) {
        FlatForest flat = t.flatten();
        std::vector<std::pair<FlatForest, Rational>> acc{{flat, c}};
        for (std::size_t v = 0; v < flat.size(); ++v) {
            unsigned k = flat.dec[v].counter;
            if (k == 0) continue;
            FMatrix fk = f.power(k);
            std::size_t d = f.index(flat.dec[v].label);
            std::vector<std::pair<FlatForest, Rational>> next;
            for (const auto& [g, gc] : acc) {
                for (std::size_t e = 0; e < f.labels().size(); ++e) {
                    if (fk.at(e, d) == 0) continue;
                    FlatForest h = g;
                    h.dec[v] = Dec{f.labels()[e], 0};
                    next.emplace_back(std::move(h), gc * fk.at(e, d));
                }
            }
            acc = std::move(next);
        }
        for (const auto& [g, gc] : acc) out.add_term(PForest::from_flat(g), gc);
    }
    return out;
}

Elem cpf_prelie(const Elem& x, const Elem& y, const FMatrix& f) {
    auto op = [&f](const PForest& t, const PForest& t2) {
        if (t.empty()) return Elem{};
        if (!t2.empty()) return graft_sum(t, t2);
        Elem out;
        FlatForest flat = t.flatten();
        for (std::size_t s = 0; s < flat.size(); ++s) {
            std::size_t d = f.index(flat.dec[s].label);
            for (std::size_t e = 0; e < f.labels().size(); ++e) {
                if (f.at(e, d) == 0) continue;
                FlatForest g = flat;
                g.dec[s].label = f.labels()[e];
                out.add_term(PForest::from_flat(g), f.at(e, d));
            }
        }
        return out;
    };
    return bilinear_extend(op, x, y);
}

// ------------------------------------------------------------------ H_CK

Elem quotient_to_hck(const Elem& x) {
    return linear_extend([](const PForest& t) { return elem(forget_blocks(t)); }, x);
}

Elem hck_mul(const Elem& x, const Elem& y) {
    return bilinear_extend([](const PForest& a, const PForest& b) { return elem(concat(a, b)); }, x, y);
}

Elem hck_prelie(const Elem& x, const Elem& y) { return bilinear_extend(cp_prelie_basis, x, y); }

Tensor hck_coproduct(const Elem& x) {
    auto op = [](const PForest& t) {
        Tensor out;
        const VertexSet all = t.vertex_count() >= 64 ? ~VertexSet{0} : (VertexSet{1} << t.vertex_count()) - 1;
        for (VertexSet i : ideals(t)) out.add_term({restrict_to(t, all & ~i), restrict_to(t, i)}, 1);
        return out;
    };
    return linear_extend(op, x);
}

// ----------------------------------------------------------- dispatching

Elem mul(Algebra a, const Elem& x, const Elem& y) {
    return a == Algebra::hck ? hck_mul(x, y) : ucp_mul(x, y);
}

Elem prelie(Algebra a, const Elem& x, const Elem& y) {
    switch (a) {
        case Algebra::ucp: return ucp_prelie(x, y);
        case Algebra::cp: return cp_prelie(x, y);
        case Algebra::hck: return hck_prelie(x, y);
    }
    return {};
}

Tensor coproduct(Algebra a, const Elem& x) {
    switch (a) {
        case Algebra::ucp: return ucp_coproduct(x);
        case Algebra::cp: return cp_coproduct(x);
        case Algebra::hck: return hck_coproduct(x);
    }
    return {};
}

Tensor reduced_coproduct(Algebra a, const Elem& x) {
    Tensor t = coproduct(a, x);
    for (const auto& [k, c] : x) {
        if (k.empty()) {
            t.add_term({k, k}, -c);
            continue;
        }
        t.add_term({k, PForest()}, -c);
        t.add_term({PForest(), k}, -c);
    }
    return t;
}

Rational counit(const Elem& x) { return x.coeff(PForest()); }

std::vector<PForest> basis(Algebra a, std::size_t n, const std::vector<std::string>& labels, unsigned max_counter) {
    check_degree(static_cast<int>(n), "basis slice");
    switch (a) {
        case Algebra::ucp: return enumerate(n, make_alphabet(labels, max_counter), EnumMode::partitioned);
        case Algebra::cp: return enumerate(n, make_alphabet(labels), EnumMode::partitioned);
        case Algebra::hck: return enumerate(n, make_alphabet(labels), EnumMode::forest);
    }
    return {};
}

std::vector<Elem> primitive_basis(Algebra a, std::size_t n, const std::vector<std::string>& labels,
                                  unsigned max_counter) {
    auto b = basis(a, n, labels, max_counter);
    Indexer<std::pair<PForest, PForest>> idx;
    std::vector<SparseVec> cols;
    cols.reserve(b.size());
    for (const auto& t : b) cols.push_back(idx.to_vec(reduced_coproduct(a, elem(t))));
    std::vector<Elem> out;
    for (const auto& rel : kernel_of(cols)) {
        Elem e;
        for (const auto& [j, c] : rel) e.add_term(b[j], c);
        out.push_back(std::move(e));
    }
    return out;
}

// ----------------------------------------------------- permutative δ

Tensor delta_perm(const Elem& x) {
    Tensor out;
    for (const auto& [t, c] : x) {
        if (t.empty()) throw InvalidArgument("δ is defined on nonempty trees only");
        if (!t.is_tree()) throw InvalidArgument("δ expects partitioned trees");
        FlatForest f = t.flatten();
        const VertexSet all = (VertexSet{1} << f.size()) - 1;
        // Blocks hanging directly from a root, each with its descendants.
        std::vector<int> seen;
        for (std::size_t v = 0; v < f.size(); ++v) {
            int p = f.parent[v];
            if (p < 0 || f.parent[p] >= 0) continue;
            if (std::find(seen.begin(), seen.end(), f.block[v]) != seen.end()) continue;
            seen.push_back(f.block[v]);
            VertexSet mask = 0;
            for (std::size_t w = 0; w < f.size(); ++w) {
                // w is in the removed part if its ancestor chain reaches the block.
                for (int u = static_cast<int>(w); u >= 0; u = f.parent[u]) {
                    if (f.parent[u] == p && f.block[u] == f.block[v]) {
                        mask |= VertexSet{1} << w;
                        break;
                    }
                }
            }
            out.add_term({restrict_to(t, all & ~mask), restrict_to(t, mask)}, c);
        }
    }
    return out;
}

std::size_t kernel_delta_dims(std::size_t n, std::size_t d) {
    if (n < 1) throw InvalidArgument("degree must be at least 1");
    if (d < 1) throw InvalidArgument("need at least one label");
    check_degree(static_cast<int>(n), "kerdelta");
    auto b = basis(Algebra::cp, n, default_labels(d));
    Indexer<std::pair<PForest, PForest>> idx;
    Eliminator e;
    for (const auto& t : b) e.insert(idx.to_vec(delta_perm(elem(t))));
    return b.size() - e.rank();
}

// ------------------------------------------------------ Connes–Moscovici

std::string serialize(const IndexWord& w) {
    std::string out = "X_{";
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ',';
        out += w.letters[i];
    }
    return out + "}";
}

Elem growth(const Elem& x, const std::string& d) { return hck_prelie(x, elem(PForest::vertex(Dec{d, 0}))); }

Elem cm_generator(const IndexWord& w) {
    if (w.letters.empty()) throw InvalidArgument("generator needs a nonempty word");
    Elem x = elem(PForest::vertex(Dec{w.letters[0], 0}));
    for (std::size_t i = 1; i < w.letters.size(); ++i) x = growth(x, w.letters[i]);
    return x;
}

unsigned cm_m(unsigned long subset) {
    unsigned m = 0;
    while ((subset >> m) & 1UL) ++m;
    return m;
}

Tensor2<IndexWord, IndexWord> cm_reduced_coproduct(const IndexWord& w) {
    const std::size_t k = w.letters.size();
    if (k == 0) throw InvalidArgument("generator needs a nonempty word");
    if (k > 20) throw ResourceError("word too long");
    Tensor2<IndexWord, IndexWord> out;
    for (unsigned long i = 1; i < (1UL << k); ++i) {
        unsigned m = cm_m(i);
        if (m == 0) continue;
        IndexWord left, right;
        for (std::size_t j = 0; j < k; ++j) ((i >> j) & 1UL ? left : right).letters.push_back(w.letters[j]);
        if (right.letters.empty()) continue;
        out.add_term({left, right}, m);
    }
    return out;
}

namespace {

using Monomial = std::vector<IndexWord>;  // sorted multiset of generators

std::vector<IndexWord> words_up_to(std::size_t k, const std::vector<std::string>& alphabet) {
    std::vector<IndexWord> out;
    std::vector<IndexWord> level{IndexWord{}};
    for (std::size_t len = 1; len <= k; ++len) {
        std::vector<IndexWord> next;
        for (const auto& w : level) {
            for (const auto& a : alphabet) {
                IndexWord v = w;
                v.letters.push_back(a);
                next.push_back(v);
            }
        }
        level = std::move(next);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

/// Multisets of words (non-decreasing index) with total length m.
void monomials(const std::vector<IndexWord>& words, std::size_t from, std::size_t m, Monomial& cur,
               std::vector<Monomial>& out) {
    if (m == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < words.size(); ++i) {
        if (words[i].letters.size() > m) continue;
        cur.push_back(words[i]);
        monomials(words, i, m - words[i].letters.size(), cur, out);
        cur.pop_back();
    }
}

}  // namespace

Tensor2<IndexWord, IndexWord> cm_coproduct_direct(const IndexWord& w) {
    const std::size_t k = w.letters.size();
    if (k == 0) throw InvalidArgument("generator needs a nonempty word");
    check_degree(static_cast<int>(k), "cm");
    std::set<std::string> letters(w.letters.begin(), w.letters.end());
    std::vector<std::string> alphabet(letters.begin(), letters.end());
    auto words = words_up_to(k, alphabet);

    std::map<IndexWord, Elem> gen;
    for (const auto& u : words) gen.emplace(u, cm_generator(u));
    std::vector<std::vector<Monomial>> by_degree(k + 1);
    std::vector<std::vector<Elem>> expanded(k + 1);
    for (std::size_t m = 0; m <= k; ++m) {
        Monomial cur;
        monomials(words, 0, m, cur, by_degree[m]);
        for (const auto& mono : by_degree[m]) {
            Elem e = unit();
            for (const auto& u : mono) e = hck_mul(e, gen.at(u));
            expanded[m].push_back(std::move(e));
        }
    }

    Indexer<std::pair<PForest, PForest>> idx;
    Eliminator elim;
    std::vector<std::pair<const Monomial*, const Monomial*>> pairs;
    for (std::size_t m = 0; m <= k; ++m) {
        for (std::size_t i = 0; i < by_degree[m].size(); ++i) {
            for (std::size_t j = 0; j < by_degree[k - m].size(); ++j) {
                if (elim.insert(idx.to_vec(tensor(expanded[m][i], expanded[k - m][j])))) {
                    throw InvalidArgument("generator products are not independent");
                }
                pairs.emplace_back(&by_degree[m][i], &by_degree[k - m][j]);
            }
        }
    }
    auto sol = elim.solve(idx.to_vec(hck_coproduct(gen.at(w))));
    if (!sol) throw InvalidArgument("coproduct leaves the span of generator products");
    Tensor2<IndexWord, IndexWord> out;
    for (const auto& [j, c] : *sol) {
        const auto& [l, r] = pairs[j];
        if (l->size() == 1 && r->size() == 1) out.add_term({l->front(), r->front()}, c);
    }
    return out;
}

}  // namespace comprelie
