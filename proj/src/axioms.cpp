#include "comprelie/axioms.hpp"

#include <set>

namespace comprelie {

std::string format_law(const LawResult& r, const std::string& algebra, std::size_t maxdeg) {
    std::string s = r.law + " " + algebra + " " + std::to_string(maxdeg) + (r.pass ? " PASS" : " FAIL");
    if (!r.pass && !r.witness.empty()) s += " " + r.witness;
    return s;
}

std::string to_string(Mutation m) {
    switch (m) {
        case Mutation::drop_prelie_term: return "drop-prelie-term";
        case Mutation::skew_product: return "skew-product";
        case Mutation::extra_coproduct_term: return "extra-coproduct-term";
        case Mutation::drop_coproduct_unit: return "drop-coproduct-unit";
        case Mutation::unit_leak: return "unit-leak";
    }
    return "?";
}

AlgebraHandle<PForest> tree_handle(Algebra a, const std::vector<std::string>& labels, unsigned max_counter) {
    AlgebraHandle<PForest> h;
    h.name = to_string(a);
    h.unit = PForest();
    h.basis = [a, labels, max_counter](std::size_t n) { return comprelie::basis(a, n, labels, max_counter); };
    h.mul = [a](const PForest& x, const PForest& y) { return comprelie::mul(a, elem(x), elem(y)); };
    h.prelie = [a](const PForest& x, const PForest& y) { return comprelie::prelie(a, elem(x), elem(y)); };
    h.coproduct = [a](const PForest& x) { return comprelie::coproduct(a, elem(x)); };
    return h;
}

namespace {

AlgebraHandle<Word> word_handle(std::string name, std::vector<std::string> alphabet) {
    AlgebraHandle<Word> h;
    h.name = std::move(name);
    h.unit = Word{};
    h.basis = [alphabet](std::size_t n) { return words_of_length(n, alphabet); };
    h.mul = [](const Word& x, const Word& y) { return shuffle(x, y); };
    h.coproduct = [](const Word& x) { return deconcat(x); };
    return h;
}

}  // namespace

AlgebraHandle<Word> tvf_handle(const FMatrix& f) {
    auto h = word_handle("tvf", f.labels());
    h.prelie = [f](const Word& x, const Word& y) { return bullet_tvf(f, x, y); };
    return h;
}

AlgebraHandle<Word> degneg1_handle(const DegNeg1Spec& s) {
    auto h = word_handle("degneg1", s.alphabet);
    h.prelie = [s](const Word& x, const Word& y) { return bullet_degneg1(s, x, y); };
    return h;
}

}  // namespace comprelie
