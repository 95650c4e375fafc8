#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "comprelie/linalg.hpp"
#include "comprelie/lincomb.hpp"
#include "comprelie/shuffle.hpp"
#include "comprelie/ucp.hpp"

namespace comprelie {

/// Evaluators of a graded Com-PreLie (bi)algebra on basis keys.
template <class K>
struct AlgebraHandle {
    using Key = K;
    using Comb = LinComb<K>;
    using Tens = Tensor2<K, K>;

    std::string name;
    K unit;
    std::function<std::vector<K>(std::size_t)> basis;  // degree slice
    std::function<Comb(const K&, const K&)> mul;
    std::function<Comb(const K&, const K&)> prelie;
    std::function<Tens(const K&)> coproduct;  // empty for plain algebras
    std::function<Rational(const K&)> counit;  // defaults to "coefficient of unit"

    Comb m(const Comb& a, const Comb& b) const { return bilinear_extend(mul, a, b); }
    Comb p(const Comb& a, const Comb& b) const { return bilinear_extend(prelie, a, b); }
    Tens delta(const Comb& a) const { return linear_extend(coproduct, a); }
    Rational eps(const K& k) const { return counit ? counit(k) : Rational(k == unit ? 1 : 0); }
    Rational eps(const Comb& a) const {
        Rational r = 0;
        for (const auto& [k, c] : a) r += c * eps(k);
        return r;
    }
    bool has_coproduct() const { return static_cast<bool>(coproduct); }
};

/// Product of A⊗A: (a⊗b)(c⊗d) = ac ⊗ bd.
template <class K>
Tensor2<K, K> tensor_mul(const AlgebraHandle<K>& h, const Tensor2<K, K>& x, const Tensor2<K, K>& y) {
    Tensor2<K, K> out;
    for (const auto& [kx, cx] : x) {
        for (const auto& [ky, cy] : y) {
            auto l = h.mul(kx.first, ky.first);
            if (l.is_zero()) continue;
            auto r = h.mul(kx.second, ky.second);
            for (const auto& [a, ca] : l) {
                for (const auto& [b, cb] : r) out.add_term({a, b}, cx * cy * ca * cb);
            }
        }
    }
    return out;
}

struct LawResult {
    std::string law;
    bool pass = true;
    std::string witness;
    std::size_t checked = 0;
};

/// `LAW algebra maxdeg PASS|FAIL [witness]`.
std::string format_law(const LawResult& r, const std::string& algebra, std::size_t maxdeg);

namespace detail {

template <class K>
std::vector<std::vector<K>> slices(const AlgebraHandle<K>& h, std::size_t maxdeg) {
    std::vector<std::vector<K>> out(maxdeg + 1);
    for (std::size_t n = 0; n <= maxdeg; ++n) out[n] = h.basis(n);
    return out;
}

/// Runs `check` over every tuple of `arity` basis elements whose degrees
/// sum to at most maxdeg. Work is split over `jobs` threads by the first
/// element; the reported witness is the first failure in sweep order.
template <class K, class F>
LawResult sweep(const std::string& law, const std::vector<std::vector<K>>& sl, std::size_t maxdeg, int arity,
                unsigned jobs, F&& check) {
    struct Item {
        std::size_t deg;
        const K* key;
    };
    std::vector<Item> items;
    for (std::size_t d = 0; d <= maxdeg && d < sl.size(); ++d) {
        for (const auto& k : sl[d]) items.push_back({d, &k});
    }
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size() ? items.size() : 1)));
    std::vector<LawResult> parts(jobs);
    auto worker = [&](unsigned j) {
        LawResult& r = parts[j];
        for (std::size_t i = j; i < items.size(); i += jobs) {
            const auto& a = items[i];
            std::vector<const K*> tup{a.key};
            std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t used, std::size_t depth) {
                if (depth == static_cast<std::size_t>(arity)) {
                    ++r.checked;
                    std::string w;
                    if (!check(tup, w)) {
                        r.pass = false;
                        r.witness = w;
                        return false;
                    }
                    return true;
                }
                for (std::size_t d = 0; used + d <= maxdeg && d < sl.size(); ++d) {
                    for (const auto& k : sl[d]) {
                        tup.push_back(&k);
                        bool ok = rec(used + d, depth + 1);
                        tup.pop_back();
                        if (!ok) return false;
                    }
                }
                return true;
            };
            if (!rec(a.deg, 1)) {
                r.witness = std::to_string(i) + "\x1f" + r.witness;
                return;
            }
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> ts;
        for (unsigned j = 0; j < jobs; ++j) ts.emplace_back(worker, j);
        for (auto& t : ts) t.join();
    }
    LawResult out;
    out.law = law;
    std::size_t best = items.size();
    for (auto& p : parts) {
        out.checked += p.checked;
        if (p.pass) continue;
        auto sep = p.witness.find('\x1f');
        std::size_t at = std::stoul(p.witness.substr(0, sep));
        if (at < best) {
            best = at;
            out.pass = false;
            out.witness = p.witness.substr(sep + 1);
        }
    }
    return out;
}

template <class K>
std::string show(const std::vector<const K*>& t) {
    std::string s;
    const char* names[] = {"a", "b", "c", "d"};
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ' ';
        s += std::string(names[i]) + "=" + serialize(*t[i]);
    }
    return s;
}

}  // namespace detail

template <class K>
LinComb<K> B(const K& k) {
    return LinComb<K>::basis(k);
}

/// (a•b)•c − a•(b•c) symmetric in b, c; only `prelie` and `basis` are used.
template <class K>
LawResult check_prelie_law(const AlgebraHandle<K>& h, std::size_t maxdeg, unsigned jobs = 1,
                           std::vector<std::vector<K>> sl = {}) {
    if (sl.empty()) sl = detail::slices(h, maxdeg);
    return detail::sweep<K>("prelie", sl, maxdeg, 3, jobs, [&](const auto& t, std::string& w) {
        const K &a = *t[0], &b = *t[1], &c = *t[2];
        auto lhs = h.p(h.prelie(a, b), B(c)) - h.p(B(a), h.prelie(b, c));
        auto rhs = h.p(h.prelie(a, c), B(b)) - h.p(B(a), h.prelie(c, b));
        bool ok = lhs == rhs;
        if (!ok) w = detail::show(t);
        return ok;
    });
}

/// Commutativity, associativity, preLie and Leibniz identities on all basis
/// tuples with total degree ≤ maxdeg.
template <class K>
std::vector<LawResult> check_comprelie(const AlgebraHandle<K>& h, std::size_t maxdeg, unsigned jobs = 1) {
    auto sl = detail::slices(h, maxdeg);
    std::vector<LawResult> out;
    out.push_back(detail::sweep<K>("commutativity", sl, maxdeg, 2, jobs, [&](const auto& t, std::string& w) {
        bool ok = h.mul(*t[0], *t[1]) == h.mul(*t[1], *t[0]);
        if (!ok) w = detail::show(t);
        return ok;
    }));
    out.push_back(detail::sweep<K>("associativity", sl, maxdeg, 3, jobs, [&](const auto& t, std::string& w) {
        bool ok = h.m(h.mul(*t[0], *t[1]), B(*t[2])) == h.m(B(*t[0]), h.mul(*t[1], *t[2]));
        if (!ok) w = detail::show(t);
        return ok;
    }));
    out.push_back(check_prelie_law(h, maxdeg, jobs, sl));
    out.push_back(detail::sweep<K>("leibniz", sl, maxdeg, 3, jobs, [&](const auto& t, std::string& w) {
        const K &a = *t[0], &b = *t[1], &c = *t[2];
        auto lhs = h.p(h.mul(a, b), B(c));
        auto rhs = h.m(h.prelie(a, c), B(b)) + h.m(B(a), h.prelie(b, c));
        bool ok = lhs == rhs;
        if (!ok) w = detail::show(t);
        return ok;
    }));
    return out;
}

/// Bialgebra laws: Δ(a•b) compatibility, Δ multiplicative, coassociativity,
/// counit, ε(a•b) = 0 and ∅•a = 0.
template <class K>
std::vector<LawResult> check_bialgebra_compat(const AlgebraHandle<K>& h, std::size_t maxdeg, unsigned jobs = 1) {
    using T2 = Tensor2<K, K>;
    auto sl = detail::slices(h, maxdeg);
    std::vector<LawResult> out;
    out.push_back(detail::sweep<K>("compat", sl, maxdeg, 2, jobs, [&](const auto& t, std::string& w) {
        const K &a = *t[0], &b = *t[1];
        T2 lhs = h.delta(h.prelie(a, b));
        T2 da = h.coproduct(a), db = h.coproduct(b);
        T2 rhs;
        // a(1) ⊗ a(2)•b
        for (const auto& [k, c] : da) {
            for (const auto& [x, cx] : h.prelie(k.second, b)) rhs.add_term({k.first, x}, c * cx);
        }
        // a(1)•b(1) ⊗ a(2)·b(2)
        for (const auto& [ka, ca] : da) {
            for (const auto& [kb, cb] : db) {
                auto l = h.prelie(ka.first, kb.first);
                if (l.is_zero()) continue;
                auto r = h.mul(ka.second, kb.second);
                for (const auto& [x, cx] : l) {
                    for (const auto& [y, cy] : r) rhs.add_term({x, y}, ca * cb * cx * cy);
                }
            }
        }
        bool ok = lhs == rhs;
        if (!ok) w = detail::show(t);
        return ok;
    }));
    out.push_back(detail::sweep<K>("bialgebra", sl, maxdeg, 2, jobs, [&](const auto& t, std::string& w) {
        bool ok = h.delta(h.mul(*t[0], *t[1])) == tensor_mul(h, h.coproduct(*t[0]), h.coproduct(*t[1]));
        if (!ok) w = detail::show(t);
        return ok;
    }));
    out.push_back(detail::sweep<K>("coassociativity", sl, maxdeg, 1, jobs, [&](const auto& t, std::string& w) {
        T2 d = h.coproduct(*t[0]);
        bool ok = tensor_apply_left3(h.coproduct, d) == tensor_apply_right3(h.coproduct, d);
        if (!ok) w = detail::show(t);
        return ok;
    }));
    out.push_back(detail::sweep<K>("counit", sl, maxdeg, 1, jobs, [&](const auto& t, std::string& w) {
        LinComb<K> left, right;
        for (const auto& [k, c] : h.coproduct(*t[0])) {
            left.add_term(k.second, c * h.eps(k.first));
            right.add_term(k.first, c * h.eps(k.second));
        }
        bool ok = left == B(*t[0]) && right == B(*t[0]);
        if (!ok) w = detail::show(t);
        return ok;
    }));
    out.push_back(detail::sweep<K>("counit-prelie", sl, maxdeg, 2, jobs, [&](const auto& t, std::string& w) {
        bool ok = h.eps(h.prelie(*t[0], *t[1])) == 0;
        if (!ok) w = detail::show(t);
        return ok;
    }));
    out.push_back(detail::sweep<K>("unit-prelie", sl, maxdeg, 1, jobs, [&](const auto& t, std::string& w) {
        bool ok = h.prelie(h.unit, *t[0]).is_zero();
        if (!ok) w = detail::show(t);
        return ok;
    }));
    return out;
}

/// Law checks on random small combinations (coefficients in −2..2) drawn
/// from the slices up to maxdeg, with a fixed seed.
template <class K>
std::vector<LawResult> check_sampled(const AlgebraHandle<K>& h, std::size_t maxdeg, std::size_t samples,
                                     unsigned seed) {
    auto sl = detail::slices(h, maxdeg);
    std::mt19937 rng(seed);
    // Keep each factor's degree small enough that triples stay in range.
    std::size_t cap = std::max<std::size_t>(1, maxdeg / 3);
    std::vector<K> pool;
    for (std::size_t d = 0; d <= cap; ++d) pool.insert(pool.end(), sl[d].begin(), sl[d].end());
    auto draw = [&]() {
        LinComb<K> x;
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        std::uniform_int_distribution<int> coef(-2, 2);
        int terms = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < terms; ++i) x.add_term(pool[pick(rng)], coef(rng));
        return x;
    };
    std::vector<LawResult> out{{"sampled-commutativity"}, {"sampled-associativity"}, {"sampled-prelie"},
                               {"sampled-leibniz"}};
    if (h.has_coproduct()) out.push_back({"sampled-compat"});
    auto fail = [](LawResult& r, const LinComb<K>& a, const LinComb<K>& b, const LinComb<K>& c) {
        if (!r.pass) return;
        r.pass = false;
        r.witness = "a=" + to_string(a) + " b=" + to_string(b) + " c=" + to_string(c);
    };
    for (std::size_t s = 0; s < samples; ++s) {
        auto a = draw(), b = draw(), c = draw();
        for (auto& r : out) ++r.checked;
        if (!(h.m(a, b) == h.m(b, a))) fail(out[0], a, b, c);
        if (!(h.m(h.m(a, b), c) == h.m(a, h.m(b, c)))) fail(out[1], a, b, c);
        if (!(h.p(h.p(a, b), c) - h.p(a, h.p(b, c)) == h.p(h.p(a, c), b) - h.p(a, h.p(c, b)))) fail(out[2], a, b, c);
        if (!(h.p(h.m(a, b), c) == h.m(h.p(a, c), b) + h.m(a, h.p(b, c)))) fail(out[3], a, b, c);
        if (h.has_coproduct()) {
            Tensor2<K, K> rhs;
            for (const auto& [ka, ca] : a) {
                for (const auto& [kb, cb] : b) {
                    for (const auto& [k, c1] : h.coproduct(ka)) {
                        for (const auto& [x, cx] : h.prelie(k.second, kb)) rhs.add_term({k.first, x}, ca * cb * c1 * cx);
                        for (const auto& [k2, c2] : h.coproduct(kb)) {
                            auto l = h.prelie(k.first, k2.first);
                            if (l.is_zero()) continue;
                            auto r = h.mul(k.second, k2.second);
                            for (const auto& [x, cx] : l) {
                                for (const auto& [y, cy] : r) rhs.add_term({x, y}, ca * cb * c1 * c2 * cx * cy);
                            }
                        }
                    }
                }
            }
            if (!(h.delta(h.p(a, b)) == rhs)) fail(out[4], a, b, c);
        }
    }
    return out;
}

// ------------------------------------------------------------ tensor product

/// A1 ⊗ A2 with (a1⊗a2)(b1⊗b2) = a1b1 ⊗ a2b2 and
/// (a1⊗a2) •_ε (b1⊗b2) = a1•b1 ⊗ a2b2 + ε(b1) a1 ⊗ a2•b2.
template <class K1, class K2>
AlgebraHandle<std::pair<K1, K2>> tensor_comprelie(const AlgebraHandle<K1>& a1, std::function<Rational(const K1&)> eps,
                                                  const AlgebraHandle<K2>& a2) {
    using P = std::pair<K1, K2>;
    AlgebraHandle<P> h;
    h.name = a1.name + "(x)" + a2.name;
    h.unit = {a1.unit, a2.unit};
    h.basis = [a1, a2](std::size_t n) {
        std::vector<P> out;
        for (std::size_t i = 0; i <= n; ++i) {
            auto l = a1.basis(i);
            auto r = a2.basis(n - i);
            for (const auto& x : l) {
                for (const auto& y : r) out.push_back({x, y});
            }
        }
        return out;
    };
    h.mul = [a1, a2](const P& x, const P& y) {
        return tensor(a1.mul(x.first, y.first), a2.mul(x.second, y.second));
    };
    h.prelie = [a1, a2, eps](const P& x, const P& y) {
        auto out = tensor(a1.prelie(x.first, y.first), a2.mul(x.second, y.second));
        Rational e = eps(y.first);
        if (e != 0) out.axpy(e, tensor(B(x.first), a2.prelie(x.second, y.second)));
        return out;
    };
    return h;
}

/// ε(a•b) = ε(b•a) on all basis pairs up to maxdeg.
template <class K>
LawResult check_eps_condition(const AlgebraHandle<K>& h, const std::function<Rational(const K&)>& eps,
                              std::size_t maxdeg) {
    auto sl = detail::slices(h, maxdeg);
    return detail::sweep<K>("eps-symmetric", sl, maxdeg, 2, 1, [&](const auto& t, std::string& w) {
        auto e = [&](const LinComb<K>& x) {
            Rational r = 0;
            for (const auto& [k, c] : x) r += c * eps(k);
            return r;
        };
        bool ok = e(h.prelie(*t[0], *t[1])) == e(h.prelie(*t[1], *t[0]));
        if (!ok) w = detail::show(t);
        return ok;
    });
}

/// φ(ab) = φ(a)φ(b) and φ(a•b) = φ(a)•φ(b) on basis pairs up to maxdeg.
template <class K1, class K2>
std::vector<LawResult> check_morphism(const AlgebraHandle<K1>& from, const AlgebraHandle<K2>& to,
                                      const std::function<LinComb<K2>(const K1&)>& phi, std::size_t maxdeg) {
    auto sl = detail::slices(from, maxdeg);
    auto img = [&](const LinComb<K1>& x) { return linear_extend(phi, x); };
    std::vector<LawResult> out;
    out.push_back(detail::sweep<K1>("morphism-product", sl, maxdeg, 2, 1, [&](const auto& t, std::string& w) {
        bool ok = img(from.mul(*t[0], *t[1])) == to.m(phi(*t[0]), phi(*t[1]));
        if (!ok) w = detail::show(t);
        return ok;
    }));
    out.push_back(detail::sweep<K1>("morphism-prelie", sl, maxdeg, 2, 1, [&](const auto& t, std::string& w) {
        bool ok = img(from.prelie(*t[0], *t[1])) == to.p(phi(*t[0]), phi(*t[1]));
        if (!ok) w = detail::show(t);
        return ok;
    }));
    return out;
}

/// Basis of the primitive part of the degree-n slice of a handle.
template <class K>
std::vector<LinComb<K>> handle_primitives(const AlgebraHandle<K>& h, std::size_t n) {
    auto b = h.basis(n);
    Indexer<std::pair<K, K>> idx;
    std::vector<SparseVec> cols;
    for (const auto& k : b) {
        auto d = h.coproduct(k);
        d.add_term({k, h.unit}, -1);
        d.add_term({h.unit, k}, -1);
        cols.push_back(idx.to_vec(d));
    }
    std::vector<LinComb<K>> out;
    for (const auto& rel : kernel_of(cols)) {
        LinComb<K> e;
        for (const auto& [j, c] : rel) e.add_term(b[j], c);
        out.push_back(std::move(e));
    }
    return out;
}

// ------------------------------------------------------------------ handles

AlgebraHandle<PForest> tree_handle(Algebra a, const std::vector<std::string>& labels, unsigned max_counter = 0);
AlgebraHandle<Word> tvf_handle(const FMatrix& f);
AlgebraHandle<Word> degneg1_handle(const DegNeg1Spec& s);

/// Corruptions used by the harness self-test.
enum class Mutation { drop_prelie_term, skew_product, extra_coproduct_term, drop_coproduct_unit, unit_leak };
std::string to_string(Mutation m);

template <class K>
AlgebraHandle<K> mutate(AlgebraHandle<K> h, Mutation m) {
    auto deg = [b = h.basis](const K& k) {
        for (std::size_t n = 0; n < 8; ++n) {
            auto s = b(n);
            if (std::find(s.begin(), s.end(), k) != s.end()) return n;
        }
        return std::size_t{99};
    };
    switch (m) {
        case Mutation::drop_prelie_term: {
            auto p = h.prelie;
            h.prelie = [p](const K& a, const K& b) {
                auto r = p(a, b);
                if (r.size() >= 2) r.add_term(r.begin()->first, -r.begin()->second);
                return r;
            };
            break;
        }
        case Mutation::skew_product: {
            auto mu = h.mul;
            h.mul = [mu, deg](const K& a, const K& b) {
                auto r = mu(a, b);
                std::size_t da = deg(a), db = deg(b);
                if (da == 1 && db == 1) r *= Rational(2);
                if (da == 2 && db == 1) r *= Rational(3);
                return r;
            };
            break;
        }
        case Mutation::extra_coproduct_term: {
            auto d = h.coproduct;
            h.coproduct = [d, deg](const K& a) {
                auto r = d(a);
                if (deg(a) == 2) r.add_term({a, a}, 1);
                return r;
            };
            break;
        }
        case Mutation::unit_leak: {
            auto p = h.prelie;
            K u = h.unit;
            h.prelie = [p, u, deg](const K& a, const K& b) {
                if (a == u) return LinComb<K>::basis(b);
                auto r = p(a, b);
                if (deg(a) == 1 && deg(b) == 1) r.add_term(u, 1);
                return r;
            };
            break;
        }
        case Mutation::drop_coproduct_unit: {
            auto d = h.coproduct;
            K u = h.unit;
            h.coproduct = [d, u](const K& a) {
                auto r = d(a);
                if (!(a == u)) r.add_term({u, a}, -r.coeff({u, a}));
                return r;
            };
            break;
        }
    }
    return h;
}

}  // namespace comprelie
