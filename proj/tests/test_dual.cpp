#include "doctest.h"

#include "comprelie/dual.hpp"
#include "comprelie/errors.hpp"
#include "comprelie/linalg.hpp"

using namespace comprelie;

namespace {

PForest P(const std::string& s) { return parse_forest(s); }
Elem E(const std::string& s, Rational c = 1) { return elem(P(s), c); }

std::string v(unsigned i) { return i == 0 ? "d" : "d:" + std::to_string(i); }

const std::vector<std::string> L1{"d"};

// Θ codomain vertices carry generator trees as labels.
std::string g(const std::string& t) { return "<" + t + ">"; }

}  // namespace

TEST_CASE("diamond in g_UCP on small trees") {
    for (unsigned i = 0; i <= 3; ++i) {
        for (unsigned j = 0; j <= 2; ++j) {
            Elem want;
            if (i != 0) want = E("{[" + v(i - 1) + "([" + v(j) + "])]}");
            CHECK(diamond_ucp(P("{[" + v(i) + "]}"), P("{[" + v(j) + "]}")) == want);
        }
    }
    for (unsigned i = 0; i <= 2; ++i) {
        for (unsigned j = 0; j <= 2; ++j) {
            for (unsigned k = 0; k <= 1; ++k) {
                Elem want;
                if (j != 0) want += E("{[" + v(i) + "([" + v(j - 1) + "([" + v(k) + "])])]}");
                if (i != 0) {
                    want += E("{[" + v(i - 1) + "([" + v(k) + "],[" + v(j) + "])]}");
                    want += E("{[" + v(i - 1) + "([" + v(k) + "," + v(j) + "])]}");
                }
                CHECK(diamond_ucp(P("{[" + v(i) + "([" + v(j) + "])]}"), P("{[" + v(k) + "]}")) == want);
            }
        }
    }
    CHECK(diamond_ucp(P("{[d]}"), P("{[d:3([d])]}")).is_zero());
    CHECK_THROWS_AS(diamond_ucp(P("{[d,d]}"), P("{[d]}")), InvalidArgument);
}

TEST_CASE("diamond in g_CP") {
    CHECK(diamond_cp(P("{[d]}"), P("{[d]}")) == E("{[d([d])]}"));
    CHECK(diamond_cp(P("{[d([d])]}"), P("{[d]}")) == E("{[d([d([d])])]}") + E("{[d([d],[d])]}") + E("{[d([d,d])]}"));
}

TEST_CASE("diamond on all forests") {
    PForest t = P("{[d([e]),e]}");
    CHECK(diamond_ext(t, PForest()) == elem(t, 3));
    CHECK(diamond_ext(PForest(), t).is_zero());
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& a : enumerate(n, make_alphabet({"d", "e"}), EnumMode::one_rooted)) {
            for (const auto& b : enumerate(1, make_alphabet({"d", "e"}), EnumMode::one_rooted)) {
                CHECK(diamond_ext(a, b) == diamond_cp(a, b));
            }
        }
    }
}

TEST_CASE("preLie identity for the dual products") {
    auto r1 = check_prelie_law(gucp_handle({"d", "e"}, 1), 4);
    CHECK_MESSAGE(r1.pass, format_law(r1, "gucp", 4));
    auto r2 = check_prelie_law(gcp_handle({"d", "e"}), 4);
    CHECK_MESSAGE(r2.pass, format_law(r2, "gcp", 4));
    for (const auto& r : check_comprelie(cp_diamond_handle({"d", "e"}), 4)) {
        CHECK_MESSAGE(r.pass, format_law(r, "cp-diamond", 4));
    }
    // Shifting the counter of the root only, wherever the graft happens,
    // breaks the identity.
    auto bad = gucp_handle({"d"}, 2);
    bad.prelie = [](const PForest& a, const PForest& b) {
        Elem out;
        for (std::size_t s = 0; s < a.vertex_count(); ++s) {
            if (auto g2 = graft_shift(a, s, std::nullopt, b, s == 0 ? -1 : 0)) out.add_term(*g2, 1);
        }
        return out;
    };
    CHECK_FALSE(check_prelie_law(bad, 4).pass);
}

TEST_CASE("varsigma and free generators") {
    CHECK(varsigma(P("{[d]}")) == 0);
    CHECK(varsigma(P("{[d([d])]}")) == 1);
    CHECK(varsigma(P("{[d([d,d])]}")) == 0);
    CHECK(free_generators_cp(1, {"d", "e"}) == std::vector<PForest>{P("{[d]}"), P("{[e]}")});
    CHECK(free_generators_cp(2, L1).empty());
    CHECK(free_generators_cp(3, L1) == std::vector<PForest>{P("{[d([d,d])]}")});
    CHECK_THROWS_AS(free_generators_cp(0, L1), InvalidArgument);
}

TEST_CASE("the permutative coproduct on g_CP") {
    for (const auto& labels : {L1, std::vector<std::string>{"d", "e"}}) {
        for (std::size_t n = 1; n <= (labels.size() == 1 ? 5u : 4u); ++n) {
            auto b = enumerate(n, make_alphabet(labels), EnumMode::one_rooted);
            Indexer<std::pair<PForest, PForest>> idx;
            std::vector<SparseVec> cols;
            for (const auto& t : b) {
                Tensor d = delta_gcp(elem(t));
                cols.push_back(idx.to_vec(d));
                CHECK(upsilon(d) == elem(t, static_cast<long>(varsigma(t))));
                // (δ⊗Id)∘δ is invariant under swapping the last two legs.
                auto dd = tensor_apply_left3([](const PForest& x) { return delta_gcp(elem(x)); }, d);
                Tensor3<PForest, PForest, PForest> sw;
                for (const auto& [k, c] : dd) sw.add_term({std::get<0>(k), std::get<2>(k), std::get<1>(k)}, c);
                CHECK(dd == sw);
            }
            CHECK(b.size() - rank_of(cols) == free_generators_cp(n, labels).size());
            for (const auto& t : free_generators_cp(n, labels)) CHECK(delta_gcp(elem(t)).is_zero());
        }
    }
}

TEST_CASE("delta against the diamond product") {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& t : enumerate(n, make_alphabet({"d", "e"}), EnumMode::one_rooted)) {
            for (std::size_t m = 1; n + m <= 4; ++m) {
                for (const auto& t2 : enumerate(m, make_alphabet({"d", "e"}), EnumMode::one_rooted)) {
                    Tensor lhs = delta_gcp(diamond_cp(t, t2));
                    Tensor rhs = tensor(elem(t), elem(t2));
                    for (const auto& [k, c] : delta_gcp(elem(t))) {
                        rhs += tensor(diamond_cp(k.first, t2), elem(k.second)) * c;
                        rhs += tensor(elem(k.first), diamond_cp(k.second, t2)) * c;
                    }
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("Theta on small trees") {
    const std::string a = g("{[d]}"), b = g("{[d([d,d])]}");
    CHECK(theta(E("{[d]}")) == E("{[" + a + "]}"));
    CHECK(theta(E("{[d([d])]}")) == E("{[" + a + "([" + a + "])]}"));
    CHECK(theta(E("{[d([d],[d])]}")) == E("{[" + a + "([" + a + "],[" + a + "])]}"));
    CHECK(theta(E("{[d([d,d])]}")) == E("{[" + a + "([" + a + "],[" + a + "])]}") + E("{[" + b + "]}"));
    CHECK(theta(unit()) == unit());
}

TEST_CASE("Theta is a Hopf algebra isomorphism in low degree") {
    for (const auto& labels : {L1, std::vector<std::string>{"d", "e"}}) {
        const std::size_t top = labels.size() == 1 ? 4 : 3;
        for (std::size_t n = 0; n <= top; ++n) {
            auto b = basis(Algebra::cp, n, labels);
            Indexer<PForest> idx;
            std::vector<SparseVec> cols;
            for (const auto& t : b) {
                Elem th = theta(elem(t));
                cols.push_back(idx.to_vec(th));
                Tensor lhs = hck_coproduct(th);
                Tensor rhs;
                for (const auto& [k, c] : cp_coproduct(elem(t))) rhs += tensor(theta(elem(k.first)), theta(elem(k.second))) * c;
                CHECK_MESSAGE(lhs == rhs, t.key());
                for (std::size_t m = 0; n + m <= top; ++m) {
                    for (const auto& t2 : basis(Algebra::cp, m, labels)) {
                        CHECK(theta(cp_mul(elem(t), elem(t2))) == hck_mul(th, theta(elem(t2))));
                    }
                }
            }
            CHECK(rank_of(cols) == b.size());
        }
    }
}

TEST_CASE("Psi values") {
    CHECK(psi(E("{[d]}")) == E("{[d]}"));
    CHECK(psi(E("{[d([d])]}")) == E("{[d([d])]}"));
    CHECK(psi(E("{[d([d([d])])]}")) == E("{[d([d([d])])]}"));
    CHECK(psi(E("{[d([d],[d])]}")) == E("{[d([d],[d])]}") + E("{[d([d,d])]}"));
    CHECK(psi(E("{[d([d,d])]}")) == E("{[d([d,d])]}"));
    CHECK(psi(E("{[d([d],[d],[d])]}")) == E("{[d([d],[d],[d])]}") + E("{[d([d,d],[d])]}", 3) + E("{[d([d,d,d])]}"));
    CHECK(psi(E("{[d([d,d],[d])]}")) == E("{[d([d,d],[d])]}") + E("{[d([d,d,d])]}"));
    CHECK(psi(E("{[d([d,d,d])]}")) == E("{[d([d,d,d])]}"));
}

TEST_CASE("Psi is a Com-PreLie isomorphism") {
    const std::vector<std::string> labels{"d", "e"};
    for (std::size_t n = 0; n <= 4; ++n) {
        for (const auto& t : basis(Algebra::cp, n, n <= 3 ? labels : L1)) {
            CHECK(psi(psi_inverse(elem(t))) == elem(t));
            CHECK(psi_inverse(psi(elem(t))) == elem(t));
        }
    }
    for (std::size_t n = 0; n <= 3; ++n) {
        for (const auto& t : basis(Algebra::cp, n, labels)) {
            for (std::size_t m = 0; n + m <= 4; ++m) {
                for (const auto& t2 : basis(Algebra::cp, m, n + m <= 3 ? labels : L1)) {
                    Elem x = elem(t), y = elem(t2);
                    CHECK(psi(cp_mul(x, y)) == cp_mul(psi(x), psi(y)));
                    CHECK(psi(star_graft(x, y)) == diamond_ext(psi(x), psi(y)));
                }
            }
        }
    }
}
