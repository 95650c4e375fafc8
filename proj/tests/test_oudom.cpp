#include "doctest.h"

#include <algorithm>

#include "comprelie/oudom_guin.hpp"

using namespace comprelie;

namespace {

PForest P(const char* s) { return parse_forest(s); }
Elem E(const char* s, Rational c = 1) { return elem(P(s), c); }

FMatrix twist() {
    FMatrix f({"d", "e"});
    f.at(1, 0) = 1;
    f.at(0, 1) = 2;
    f.at(1, 1) = -1;
    return f;
}

}  // namespace

TEST_CASE("symmetric words") {
    SymWord<PForest> w({P("{[e]}"), P("{[d]}"), P("{}")});
    CHECK(serialize(w) == "{[d]} x {[e]} x {}");
    CHECK(serialize(SymWord<PForest>{}) == "1");
    std::function<PForest(const std::string&)> pk = [](const std::string& s) { return parse_forest(s); };
    CHECK(parse_symword(serialize(w), pk) == w);
    CHECK(parse_symword("1", pk).is_one());
    CHECK(SymWord<PForest>({P("{[d]}"), P("{[e]}")}) == SymWord<PForest>({P("{[e]}"), P("{[d]}")}));
    CHECK_THROWS_AS(parse_symword("  ", pk), ParseError);
}

TEST_CASE("low-order rules") {
    GuinOudom<PForest> go(tree_handle(Algebra::ucp, {"d", "e"}, 2));
    const auto& h = go.algebra();
    PForest a = P("{[d([e])]}"), b = P("{[e]}"), c = P("{[d:1]}");
    CHECK(go.single(a, {}) == elem(a));
    CHECK(go.single(a, {b}) == h.prelie(a, b));
    CHECK(go.single(a, {b, c}) == h.p(h.prelie(a, b), elem(c)) - h.p(elem(a), h.prelie(b, c)));
    // •_{(0,d)} • ∅^{×k} = •_{(k,d)}.
    CHECK(go.single(P("{[d]}"), {PForest()}) == E("{[d:1]}"));
    CHECK(go.single(P("{[d]}"), {PForest(), PForest()}) == E("{[d:2]}"));
    // 1•z and x•1.
    using SW = SymWord<PForest>;
    CHECK(go.bullet(SW{}, SW({a})).is_zero());
    CHECK(go.bullet(SW({a, b}), SW{}) == LinComb<SW>::basis(SW({a, b})));
}

TEST_CASE("products of symmetric words distribute the argument") {
    GuinOudom<PForest> go(tree_handle(Algebra::cp, {"d", "e"}));
    using SW = SymWord<PForest>;
    PForest x = P("{[d]}"), y = P("{[e]}"), z = P("{[d]}");
    auto got = go.bullet(SW({x, y}), SW({z}));
    LinComb<SW> want;
    for (const auto& [k, c] : go.single(x, {z})) want.add_term(SW({k, y}), c);
    for (const auto& [k, c] : go.single(y, {z})) want.add_term(SW({x, k}), c);
    CHECK(got == want);
}

TEST_CASE("the recursion does not depend on the peeling order") {
    for (Algebra alg : {Algebra::ucp, Algebra::cp}) {
        auto h = tree_handle(alg, {"d", "e"}, 1);
        GuinOudom<PForest> go(h);
        std::vector<PForest> pool;
        for (std::size_t n = 0; n <= 2; ++n) {
            for (const auto& t : h.basis(n)) pool.push_back(t);
        }
        std::vector<PForest> heads = h.basis(1);
        heads.push_back(P("{[d([e])]}"));
        std::size_t seen = 0;
        for (const auto& a : heads) {
            for (std::size_t i = 0; i < pool.size(); i += 3) {
                for (std::size_t j = 1; j < pool.size(); j += 4) {
                    for (std::size_t k = 2; k < pool.size(); k += 5) {
                        std::vector<PForest> args{pool[i], pool[j], pool[k]};
                        std::sort(args.begin(), args.end());
                        auto ref = go.single(a, args);
                        do {
                            CHECK(go.single(a, args, false) == ref);
                            ++seen;
                        } while (std::next_permutation(args.begin(), args.end()));
                    }
                }
            }
        }
        CHECK(seen > 100);
    }
}

TEST_CASE("linearity") {
    GuinOudom<PForest> go(tree_handle(Algebra::ucp, {"d", "e"}, 1));
    Elem x = E("{[d]}", 2) - E("{[e([d])]}");
    Elem y = E("{[e]}") + E("{}", Rational(1, 3));
    Elem z = E("{[d:1]}", -1);
    Elem lhs = go.single(x, {y, z});
    Elem rhs;
    for (const auto& [a, ca] : x) {
        for (const auto& [b, cb] : y) {
            for (const auto& [c, cc] : z) rhs.axpy(ca * cb * cc, go.single(a, {b, c}));
        }
    }
    CHECK(lhs == rhs);
}

TEST_CASE("product and coproduct identities") {
    SUBCASE("worked instance") {
        GuinOudom<PForest> go(tree_handle(Algebra::ucp, {"d", "e"}));
        PForest a = P("{[d]}"), c = P("{[e]}");
        Elem lhs = go.single(go.algebra().mul(a, a), {elem(c)});
        Elem rhs = go.algebra().m(go.single(a, {c}), elem(a)) * Rational(2);
        CHECK(lhs == rhs);
        CHECK(lhs.size() == 1);
        CHECK(lhs == E("{[d,d([e])]}", 2));
    }
    for (Algebra alg : {Algebra::ucp, Algebra::cp}) {
        GuinOudom<PForest> go(tree_handle(alg, {"d"}, 1));
        for (const auto& r : check_prop6(go, GOBounds{2, 3, 4})) CHECK_MESSAGE(r.pass, format_law(r, to_string(alg), 4));
        auto l = check_lemma7(go, 2, 2, GOBounds{2, 3, 4});
        CHECK_MESSAGE(l.pass, format_law(l, to_string(alg), 4));
        CHECK(l.checked > 50);
    }
    GuinOudom<Word> tv(tvf_handle(twist()));
    for (const auto& r : check_prop6(tv, GOBounds{2, 2, 4})) CHECK_MESSAGE(r.pass, format_law(r, "tvf", 4));
    CHECK(check_lemma7(tv, 2, 2, GOBounds{1, 3, 4}).pass);
}

TEST_CASE("a broken product is caught") {
    auto h = mutate(tree_handle(Algebra::cp, {"d"}), Mutation::drop_prelie_term);
    GuinOudom<PForest> go(h);
    bool failed = false;
    for (const auto& r : check_prop6(go, GOBounds{2, 2, 4})) failed |= !r.pass;
    CHECK(failed);
}

TEST_CASE("empty factors act through the unit") {
    GuinOudom<PForest> u(tree_handle(Algebra::ucp, {"d", "e"}, 2));
    PForest d0 = P("{[d]}");
    CHECK(u.single(d0, {PForest()}) == u.algebra().prelie(d0, PForest()));
    GuinOudom<PForest> c(tree_handle(Algebra::cp, {"d", "e"}));
    PForest e = P("{[e]}");
    CHECK(c.single(d0, {PForest(), PForest(), e}) == c.single(d0, {e}));
}

TEST_CASE("quotient map from the extension") {
    for (const FMatrix& f : {FMatrix::identity({"d", "e"}), twist()}) {
        GuinOudom<PForest> go(cpf_handle(f));
        std::size_t n_checked = 0;
        for (std::size_t n = 0; n <= 3; ++n) {
            for (const auto& t : basis(Algebra::ucp, n, f.labels(), 2)) {
                CHECK_MESSAGE(quotient_via_extension(elem(t), go) == quotient_to_cp(elem(t), f), t.key());
                ++n_checked;
            }
        }
        CHECK(n_checked > 100);
    }
}

TEST_CASE("recursion bound") {
    GuinOudom<PForest> go(tree_handle(Algebra::cp, {"d"}), 2);
    PForest d = P("{[d]}");
    CHECK_NOTHROW(go.single(d, {d, d}));
    CHECK_THROWS_AS(go.single(d, {d, d, d}), ResourceError);
}
