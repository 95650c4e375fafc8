#include "doctest.h"

#include <set>

#include "comprelie/axioms.hpp"

using namespace comprelie;

namespace {

const std::vector<std::string> L1{"d"};
const std::vector<std::string> L2{"d", "e"};

void require_all(const std::vector<LawResult>& rs, const std::string& alg, std::size_t n) {
    for (const auto& r : rs) CHECK_MESSAGE(r.pass, format_law(r, alg, n));
}

FMatrix sample_f() {
    FMatrix f({"a", "b"});
    f.at(1, 0) = 1;
    f.at(0, 1) = -2;
    f.at(1, 1) = Rational(1, 2);
    return f;
}

}  // namespace

TEST_CASE("tree algebras satisfy the laws") {
    for (Algebra a : {Algebra::ucp, Algebra::cp, Algebra::hck}) {
        auto h = tree_handle(a, L2, 1);
        require_all(check_comprelie(h, 3), h.name, 3);
        require_all(check_bialgebra_compat(h, 3), h.name, 3);
        auto h1 = tree_handle(a, L1, 1);
        require_all(check_comprelie(h1, 4, 2), h1.name, 4);
        require_all(check_bialgebra_compat(h1, 4, 2), h1.name, 4);
    }
}

TEST_CASE("word algebras satisfy the laws") {
    auto t = tvf_handle(sample_f());
    require_all(check_comprelie(t, 4), "tvf", 4);
    require_all(check_bialgebra_compat(t, 4), "tvf", 4);
    auto g = degneg1_handle(hyperboloid(2, 1, -2));
    require_all(check_comprelie(g, 4), "degneg1", 4);
    require_all(check_bialgebra_compat(g, 4), "degneg1", 4);
}

TEST_CASE("off-hyperboloid degree -1 product breaks the preLie law") {
    auto g = degneg1_handle(hyperboloid(2, 1, 1));
    bool failed = false;
    for (const auto& r : check_comprelie(g, 3)) failed |= !r.pass;
    CHECK(failed);
}

TEST_CASE("sampled mode") {
    auto h = tree_handle(Algebra::ucp, L2, 1);
    require_all(check_sampled(h, 5, 40, 7), "ucp", 5);
    auto r1 = check_sampled(tvf_handle(sample_f()), 4, 30, 11);
    auto r2 = check_sampled(tvf_handle(sample_f()), 4, 30, 11);
    REQUIRE(r1.size() == r2.size());
    for (std::size_t i = 0; i < r1.size(); ++i) CHECK(r1[i].checked == r2[i].checked);
    require_all(r1, "tvf", 4);
}

TEST_CASE("parallel sweep reports the same witness") {
    auto h = mutate(tree_handle(Algebra::cp, L1), Mutation::drop_prelie_term);
    auto a = check_comprelie(h, 4, 1);
    auto b = check_comprelie(h, 4, 3);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].pass == b[i].pass);
        CHECK(a[i].witness == b[i].witness);
        CHECK(a[i].checked >= 1);
    }
}

TEST_CASE("every law is sensitive to some mutation") {
    std::set<std::string> caught, laws;
    for (Algebra alg : {Algebra::cp, Algebra::ucp}) {
        auto base = tree_handle(alg, L1, 1);
        for (const auto& r : check_comprelie(base, 3)) laws.insert(r.law);
        for (const auto& r : check_bialgebra_compat(base, 3)) laws.insert(r.law);
        for (Mutation m : {Mutation::drop_prelie_term, Mutation::skew_product, Mutation::extra_coproduct_term,
                           Mutation::drop_coproduct_unit, Mutation::unit_leak}) {
            auto h = mutate(base, m);
            for (const auto& r : check_comprelie(h, 3)) {
                if (!r.pass) caught.insert(r.law);
            }
            for (const auto& r : check_bialgebra_compat(h, 3)) {
                if (!r.pass) caught.insert(r.law);
            }
        }
    }
    for (const auto& l : laws) CHECK_MESSAGE(caught.count(l), l);
    auto leib = check_comprelie(mutate(tree_handle(Algebra::ucp, L1), Mutation::drop_prelie_term), 3);
    CHECK_FALSE(leib[3].pass);
    CHECK_FALSE(leib[3].witness.empty());
}

TEST_CASE("report line format") {
    CHECK(format_law({"prelie", true, "", 10}, "ucp", 4) == "prelie ucp 4 PASS");
    CHECK(format_law({"leibniz", false, "a=x", 10}, "cp", 3) == "leibniz cp 3 FAIL a=x");
}

TEST_CASE("primitive cocycle form and f_A on primitives") {
    for (Algebra a : {Algebra::ucp, Algebra::cp, Algebra::hck}) {
        for (std::size_t n = 1; n <= 3; ++n) {
            for (const auto& x : primitive_basis(a, n, L1, 1)) {
                // f_A(x) = x•∅ is again primitive.
                CHECK(reduced_coproduct(a, prelie(a, x, unit())).is_zero());
                for (std::size_t m = 0; m + n <= 4; ++m) {
                    for (const auto& t : basis(a, m, L1, 1)) {
                        Tensor rhs = tensor(unit(), prelie(a, x, elem(t)));
                        for (const auto& [k, c] : coproduct(a, elem(t))) {
                            rhs += tensor(prelie(a, x, elem(k.first)), elem(k.second)) * c;
                        }
                        CHECK(coproduct(a, prelie(a, x, elem(t))) == rhs);
                    }
                }
            }
        }
    }
}

TEST_CASE("tensor products of Com-PreLie algebras") {
    auto ucp = tree_handle(Algebra::ucp, L1, 1);
    auto cp = tree_handle(Algebra::cp, L1);
    auto tvf = tvf_handle(FMatrix::identity({"a"}));
    std::function<Rational(const PForest&)> eps_t = [](const PForest& t) { return Rational(t.empty() ? 1 : 0); };
    std::function<Rational(const Word&)> eps_w = [](const Word& w) { return Rational(w.empty() ? 1 : 0); };

    CHECK(check_eps_condition(ucp, eps_t, 4).pass);
    auto uc = tensor_comprelie(ucp, eps_t, cp);
    require_all(check_comprelie(uc, 3), uc.name, 3);

    // A functional that breaks ε(a•b) = ε(b•a).
    std::function<Rational(const PForest&)> bad = [](const PForest& t) {
        return Rational(t.key() == "{[d([d])]}" ? 1 : 0);
    };
    auto r = check_eps_condition(cp, bad, 2);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.witness.empty());

    SUBCASE("Delta is a morphism into the epsilon-twisted tensor square") {
        for (Algebra a : {Algebra::ucp, Algebra::cp, Algebra::hck}) {
            auto h = tree_handle(a, L2, 1);
            auto sq = tensor_comprelie(h, eps_t, h);
            std::function<LinComb<std::pair<PForest, PForest>>(const PForest&)> d = h.coproduct;
            require_all(check_morphism(h, sq, d, 3), "delta-" + h.name, 3);
        }
        auto sq = tensor_comprelie(tvf, eps_w, tvf);
        std::function<LinComb<std::pair<Word, Word>>(const Word&)> d = tvf.coproduct;
        require_all(check_morphism(tvf, sq, d, 4), "delta-tvf", 4);
    }

    SUBCASE("associativity of the construction") {
        using P = std::pair<PForest, Word>;
        std::function<Rational(const P&)> eps_p = [&](const P& p) -> Rational { return eps_t(p.first) * eps_w(p.second); };
        auto ab = tensor_comprelie(cp, eps_t, tvf);
        CHECK(check_eps_condition(ab, eps_p, 3).pass);
        auto left = tensor_comprelie(ab, eps_p, cp);
        auto bc = tensor_comprelie(tvf, eps_w, cp);
        auto right = tensor_comprelie(cp, eps_t, bc);
        using KL = std::pair<P, PForest>;
        using KR = std::pair<PForest, std::pair<Word, PForest>>;
        std::function<LinComb<KR>(const KL&)> re = [](const KL& k) {
            return LinComb<KR>::basis({k.first.first, {k.first.second, k.second}});
        };
        require_all(check_morphism(left, right, re, 3), "reassociate", 3);
    }

    SUBCASE("eps (x) Id is a morphism") {
        using P = std::pair<PForest, PForest>;
        std::function<LinComb<PForest>(const P&)> proj = [&](const P& p) {
            return LinComb<PForest>::basis(p.second, eps_t(p.first));
        };
        require_all(check_morphism(uc, cp, proj, 3), "eps-id", 3);
    }

    SUBCASE("f (x) g is a morphism") {
        // f: UCP → CP the quotient, g: CP → H_CK the block-forgetting quotient.
        auto hck = tree_handle(Algebra::hck, L1);
        FMatrix id = FMatrix::identity(L1);
        std::function<Elem(const PForest&)> f = [id](const PForest& t) { return quotient_to_cp(elem(t), id); };
        std::function<Elem(const PForest&)> g = [](const PForest& t) { return quotient_to_hck(elem(t)); };
        require_all(check_morphism(ucp, cp, f, 3), "f", 3);
        require_all(check_morphism(cp, hck, g, 3), "g", 3);
        auto target = tensor_comprelie(cp, eps_t, hck);
        using P = std::pair<PForest, PForest>;
        std::function<LinComb<P>(const P&)> fg = [&](const P& p) { return tensor(f(p.first), g(p.second)); };
        require_all(check_morphism(uc, target, fg, 3), "f(x)g", 3);
    }
}
