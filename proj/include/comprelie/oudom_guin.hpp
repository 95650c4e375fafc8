#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "comprelie/axioms.hpp"
#include "comprelie/errors.hpp"

namespace comprelie {

/// A ×-monomial a1×…×ak of S(A), kept as a sorted multiset of basis keys.
/// The empty multiset is the unit 1 of S(A); the algebra's own unit ∅ may
/// occur as a factor.
template <class K>
struct SymWord {
    std::vector<K> items;

    SymWord() = default;
    explicit SymWord(std::vector<K> v) : items(std::move(v)) { std::sort(items.begin(), items.end()); }

    std::size_t size() const { return items.size(); }
    bool is_one() const { return items.empty(); }
    friend auto operator<=>(const SymWord&, const SymWord&) = default;
};

template <class K>
std::string serialize(const SymWord<K>& w) {
    if (w.items.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.items.size(); ++i) {
        if (i) s += " x ";
        s += serialize(w.items[i]);
    }
    return s;
}

/// `1` or `e1 x e2 x …`, each factor read by `parse_key`.
template <class K>
SymWord<K> parse_symword(const std::string& text, const std::function<K(const std::string&)>& parse_key) {
    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string t = trim(text);
    if (t == "1") return {};
    if (t.empty()) throw ParseError("empty symmetric word");
    std::vector<K> items;
    std::size_t pos = 0;
    while (true) {
        auto next = t.find(" x ", pos);
        items.push_back(parse_key(trim(t.substr(pos, next == std::string::npos ? std::string::npos : next - pos))));
        if (next == std::string::npos) break;
        pos = next + 3;
    }
    return SymWord<K>(std::move(items));
}

/// The extension of • to S(A) ⊗ S(A) → S(A).
template <class K>
class GuinOudom {
public:
    using Comb = LinComb<K>;
    using SComb = LinComb<SymWord<K>>;

    explicit GuinOudom(AlgebraHandle<K> h, std::size_t depth_limit = 16) : h_(std::move(h)), limit_(depth_limit) {}

    const AlgebraHandle<K>& algebra() const { return h_; }

    /// a • (a1×…×ak) ∈ A. Memoized on the multiset; `memo = false` evaluates
    /// the recursion literally in the given order of `args`.
    Comb single(const K& a, const std::vector<K>& args, bool memo = true) {
        if (args.size() > limit_) throw ResourceError("symmetric word longer than the recursion bound");
        if (args.empty()) return Comb::basis(a);
        if (!memo) return peel(a, args, false);
        std::vector<K> key = args;
        std::sort(key.begin(), key.end());
        auto it = memo_.find({a, key});
        if (it != memo_.end()) return it->second;
        Comb r = peel(a, key, true);
        memo_.emplace(std::make_pair(a, std::move(key)), r);
        return r;
    }

    /// Linear in the first argument, multilinear over the factors.
    Comb single(const Comb& x, const std::vector<Comb>& args) {
        Comb out;
        std::vector<K> cur;
        std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t i, const Rational& c) {
            if (i == args.size()) {
                for (const auto& [a, ca] : x) out.axpy(c * ca, single(a, cur));
                return;
            }
            for (const auto& [k, ck] : args[i]) {
                cur.push_back(k);
                rec(i + 1, c * ck);
                cur.pop_back();
            }
        };
        rec(0, Rational(1));
        return out;
    }

    /// (a1×…×an) • (c1×…×cm): each ci goes to exactly one factor.
    SComb bullet(const SymWord<K>& x, const SymWord<K>& z) {
        if (z.is_one()) return SComb::basis(x);
        if (x.is_one()) return {};
        const std::size_t n = x.size(), m = z.size();
        SComb out;
        std::vector<std::size_t> assign(m, 0);
        while (true) {
            std::vector<std::vector<K>> parts(n);
            for (std::size_t j = 0; j < m; ++j) parts[assign[j]].push_back(z.items[j]);
            SComb prod = SComb::basis(SymWord<K>{});
            for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) {
                Comb f = single(x.items[i], parts[i]);
                SComb next;
                for (const auto& [w, cw] : prod) {
                    for (const auto& [k, ck] : f) {
                        std::vector<K> v = w.items;
                        v.push_back(k);
                        next.add_term(SymWord<K>(std::move(v)), cw * ck);
                    }
                }
                prod = std::move(next);
            }
            out += prod;
            std::size_t j = 0;
            while (j < m && ++assign[j] == n) assign[j++] = 0;
            if (j == m) break;
        }
        return out;
    }

    SComb bullet(const SComb& x, const SComb& z) {
        return bilinear_extend([this](const SymWord<K>& a, const SymWord<K>& b) { return bullet(a, b); }, x, z);
    }

private:
    Comb peel(const K& a, const std::vector<K>& args, bool memo) {
        const std::size_t k = args.size();
        const K& last = args[k - 1];
        std::vector<K> head(args.begin(), args.end() - 1);
        Comb r = h_.p(single(a, head, memo), Comb::basis(last));
        for (std::size_t i = 0; i + 1 < k; ++i) {
            for (const auto& [t, c] : h_.prelie(args[i], last)) {
                std::vector<K> rep = head;
                rep[i] = t;
                r.axpy(-c, single(a, rep, memo));
            }
        }
        return r;
    }

    AlgebraHandle<K> h_;
    std::size_t limit_;
    std::map<std::pair<K, std::vector<K>>, Comb> memo_;
};

namespace detail {

/// Multisets of size n drawn from `pool` (non-decreasing index sequences).
template <class K>
void for_multisets(const std::vector<K>& pool, std::size_t n, const std::function<void(const std::vector<K>&)>& f) {
    std::vector<K> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (cur.size() == n) {
            f(cur);
            return;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            rec(i);
            cur.pop_back();
        }
    };
    rec(0);
}

template <class K>
std::string show_args(const std::vector<std::pair<std::string, const K*>>& named, const std::vector<K>& word) {
    std::string s;
    for (const auto& [n, k] : named) s += n + "=" + serialize(*k) + " ";
    s += "c=" + serialize(SymWord<K>(word));
    return s;
}

}  // namespace detail

/// Bounds for the Guin–Oudom sweeps: factor degree, word size, and total
/// degree of all arguments together.
struct GOBounds {
    std::size_t max_arg_deg = 2;
    std::size_t max_word = 3;
    std::size_t max_total = 4;
};

/// Both parts of the product/coproduct compatibility of the extension:
/// (a·b)•(c1×…×cn) = Σ_I (a•Π_I c)(b•Π_{I^c} c), and
/// Δ(a•(b1×…×bn)) = Σ_I a⁽¹⁾•Π_I b_i⁽¹⁾ ⊗ (Π_I b_i⁽²⁾)·(a⁽²⁾•Π_{I^c} b_i).
template <class K>
std::vector<LawResult> check_prop6(GuinOudom<K>& go, const GOBounds& bd) {
    const auto& h = go.algebra();
    using Comb = LinComb<K>;
    std::vector<std::pair<K, std::size_t>> pool;
    for (std::size_t d = 0; d <= bd.max_arg_deg; ++d) {
        for (const auto& k : h.basis(d)) pool.push_back({k, d});
    }
    LawResult p1{"prop6-product"}, p2{"prop6-coproduct"};
    for (std::size_t n = 0; n <= bd.max_word; ++n) {
        std::vector<std::size_t> idx(pool.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        detail::for_multisets<std::size_t>(idx, n, [&](const std::vector<std::size_t>& ws) {
            std::size_t wdeg = 0;
            std::vector<K> c;
            for (auto i : ws) {
                wdeg += pool[i].second;
                c.push_back(pool[i].first);
            }
            if (wdeg > bd.max_total) return;
            for (const auto& [a, da] : pool) {
                if (wdeg + da > bd.max_total) continue;
                // Part 2 needs only a.
                if (h.has_coproduct() && p2.pass) {
                    ++p2.checked;
                    Tensor2<K, K> lhs = h.delta(go.single(a, c));
                    Tensor2<K, K> rhs;
                    for (unsigned long I = 0; I < (1ul << n); ++I) {
                        std::vector<K> out;
                        for (std::size_t i = 0; i < n; ++i) {
                            if (!(I >> i & 1)) out.push_back(c[i]);
                        }
                        std::vector<std::size_t> in;
                        for (std::size_t i = 0; i < n; ++i) {
                            if (I >> i & 1) in.push_back(i);
                        }
                        for (const auto& [ak, ac] : h.coproduct(a)) {
                            Comb right = go.single(ak.second, out);
                            if (right.is_zero()) continue;
                            std::vector<K> lefts;
                            std::function<void(std::size_t, const Rational&, Comb)> rec =
                                [&](std::size_t j, const Rational& coef, Comb acc) {
                                    if (j == in.size()) {
                                        Comb l = go.single(ak.first, lefts);
                                        if (!l.is_zero()) rhs += tensor(l, h.m(acc, right)) * (coef * ac);
                                        return;
                                    }
                                    for (const auto& [bk, bc] : h.coproduct(c[in[j]])) {
                                        lefts.push_back(bk.first);
                                        rec(j + 1, coef * bc, h.m(acc, Comb::basis(bk.second)));
                                        lefts.pop_back();
                                    }
                                };
                            rec(0, Rational(1), Comb::basis(h.unit));
                        }
                    }
                    if (!(lhs == rhs)) {
                        p2.pass = false;
                        p2.witness = detail::show_args<K>({{"a", &a}}, c);
                    }
                }
                if (!p1.pass) continue;
                for (const auto& [b, db] : pool) {
                    if (wdeg + da + db > bd.max_total || b < a) continue;
                    ++p1.checked;
                    std::vector<Comb> cc;
                    for (const auto& k : c) cc.push_back(Comb::basis(k));
                    Comb lhs = go.single(h.mul(a, b), cc);
                    Comb rhs;
                    for (unsigned long I = 0; I < (1ul << n); ++I) {
                        std::vector<K> in, out;
                        for (std::size_t i = 0; i < n; ++i) (I >> i & 1 ? in : out).push_back(c[i]);
                        rhs += h.m(go.single(a, in), go.single(b, out));
                    }
                    if (!(lhs == rhs)) {
                        p1.pass = false;
                        p1.witness = detail::show_args<K>({{"a", &a}, {"b", &b}}, c);
                    }
                }
            }
        });
    }
    std::vector<LawResult> out{p1};
    if (h.has_coproduct()) out.push_back(p2);
    return out;
}

/// a•(∅^{×k}×b1×…×bl) = f_A^k(a)•(b1×…×bl) for every primitive basis vector
/// a of degree ≤ max_prim_deg.
template <class K>
LawResult check_lemma7(GuinOudom<K>& go, std::size_t max_prim_deg, std::size_t maxk, const GOBounds& bd) {
    const auto& h = go.algebra();
    using Comb = LinComb<K>;
    std::vector<std::pair<K, std::size_t>> pool;
    for (std::size_t d = 0; d <= bd.max_arg_deg; ++d) {
        for (const auto& k : h.basis(d)) pool.push_back({k, d});
    }
    std::vector<std::size_t> idx(pool.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    LawResult r{"lemma7"};
    for (std::size_t pd = 1; pd <= max_prim_deg; ++pd) {
        for (const Comb& a : handle_primitives(h, pd)) {
            Comb fa = a;
            for (std::size_t k = 0; k <= maxk; ++k) {
                for (std::size_t l = 0; l + k <= bd.max_word; ++l) {
                    detail::for_multisets<std::size_t>(idx, l, [&](const std::vector<std::size_t>& ws) {
                        if (!r.pass) return;
                        std::size_t deg = pd;
                        std::vector<Comb> bs, with;
                        for (auto i : ws) {
                            deg += pool[i].second;
                            bs.push_back(Comb::basis(pool[i].first));
                        }
                        if (deg > bd.max_total) return;
                        with.assign(k, Comb::basis(h.unit));
                        with.insert(with.end(), bs.begin(), bs.end());
                        ++r.checked;
                        if (!(go.single(a, with) == go.single(fa, bs))) {
                            r.pass = false;
                            std::vector<K> word;
                            for (auto i : ws) word.push_back(pool[i].first);
                            r.witness = "a=" + to_string(a) + " k=" + std::to_string(k) + " " +
                                        detail::show_args<K>({}, word);
                        }
                    });
                }
                fa = h.p(fa, Comb::basis(h.unit));
            }
        }
    }
    return r;
}

/// CP_f as a handle: forest product and cpf_prelie.
AlgebraHandle<PForest> cpf_handle(const FMatrix& f);

/// The quotient map UCP(D) → CP_f rebuilt from the extension alone: a tree
/// with root (k,d) and child blocks B1…Bm goes to f^k(•_d)•(φ(B1)×…×φ(Bm)),
/// a block or forest to the product of the images of its trees.
Elem quotient_via_extension(const Elem& x, GuinOudom<PForest>& cpf);

}  // namespace comprelie
