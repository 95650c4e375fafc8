#include "comprelie/oudom_guin.hpp"

namespace comprelie {

AlgebraHandle<PForest> cpf_handle(const FMatrix& f) {
    AlgebraHandle<PForest> h = tree_handle(Algebra::cp, f.labels());
    h.name = "cpf";
    h.prelie = [f](const PForest& x, const PForest& y) { return cpf_prelie(elem(x), elem(y), f); };
    // The coproduct of CP is only compatible when f = Id.
    h.coproduct = nullptr;
    return h;
}

namespace {

struct Phi {
    GuinOudom<PForest>& go;
    const FMatrix& f;

    Elem node(const Node& n) {
        Elem root;
        std::size_t d = f.index(n.dec.label);
        FMatrix fk = f.power(n.dec.counter);
        for (std::size_t e = 0; e < fk.labels().size(); ++e) {
            const Rational& c = fk.at(e, d);
            if (c != 0) root.add_term(PForest::vertex(Dec{fk.labels()[e], 0}), c);
        }
        std::vector<Elem> args;
        for (const Block& b : n.children) args.push_back(block(b));
        return go.single(root, args);
    }

    Elem block(const Block& b) {
        Elem out = unit();
        for (const Node& n : b) out = cp_mul(out, node(n));
        return out;
    }
};

}  // namespace

Elem quotient_via_extension(const Elem& x, GuinOudom<PForest>& cpf) {
    // The handle was built by cpf_handle, whose labels carry f; recover f
    // through the action of • ∅ on single vertices.
    const auto& h = cpf.algebra();
    std::vector<std::string> labels;
    for (const auto& v : h.basis(1)) labels.push_back(v.root_blocks()[0][0].dec.label);
    FMatrix f(labels);
    for (std::size_t d = 0; d < labels.size(); ++d) {
        for (const auto& [t, c] : h.prelie(PForest::vertex(Dec{labels[d], 0}), PForest())) {
            f.at(f.index(t.root_blocks()[0][0].dec.label), d) += c;
        }
    }
    Phi phi{cpf, f};
    Elem out;
    for (const auto& [t, c] : x) {
        Elem img = unit();
        for (const Block& b : t.root_blocks()) img = cp_mul(img, phi.block(b));
        out.axpy(c, img);
    }
    return out;
}

}  // namespace comprelie
