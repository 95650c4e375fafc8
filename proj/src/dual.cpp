#include "comprelie/dual.hpp"

#include <mutex>

#include "comprelie/errors.hpp"

namespace comprelie {

namespace {

/// Σ_{s, b ∈ bl(s) ⊔ {*}} (T •_{s,b} T')[k]_s.
Elem graft_sum(const PForest& t, const PForest& t2, int k) {
    Elem out;
    for (std::size_t s = 0; s < t.vertex_count(); ++s) {
        if (auto g = graft_shift(t, s, std::nullopt, t2, k)) out.add_term(*g, 1);
        const std::size_t nb = child_block_count(t, s);
        for (std::size_t b = 0; b < nb; ++b) {
            if (auto g = graft_shift(t, s, b, t2, k)) out.add_term(*g, 1);
        }
    }
    return out;
}

void require_one_rooted(const PForest& t) {
    if (!t.one_rooted()) throw InvalidArgument("expected a one-rooted tree, got " + t.key());
}

}  // namespace

Elem diamond_ucp(const PForest& t, const PForest& t2) {
    require_one_rooted(t);
    require_one_rooted(t2);
    return graft_sum(t, t2, -1);
}

Elem diamond_cp(const PForest& t, const PForest& t2) {
    require_one_rooted(t);
    require_one_rooted(t2);
    return graft_sum(t, t2, 0);
}

Elem diamond_ext(const PForest& t, const PForest& t2) {
    if (t2.empty()) return elem(t, static_cast<long>(t.vertex_count()));
    return graft_sum(t, t2, 0);
}

Elem diamond_ext(const Elem& x, const Elem& y) {
    return bilinear_extend([](const PForest& a, const PForest& b) { return diamond_ext(a, b); }, x, y);
}

Elem diamond_ucp(const Elem& x, const Elem& y) {
    return bilinear_extend([](const PForest& a, const PForest& b) { return diamond_ucp(a, b); }, x, y);
}

Elem diamond_cp(const Elem& x, const Elem& y) {
    return bilinear_extend([](const PForest& a, const PForest& b) { return diamond_cp(a, b); }, x, y);
}

std::vector<PForest> free_generators_cp(std::size_t n, const std::vector<std::string>& labels) {
    if (n == 0) throw InvalidArgument("generators have at least one vertex");
    std::vector<PForest> out;
    for (const auto& t : enumerate(n, make_alphabet(labels), EnumMode::one_rooted)) {
        if (varsigma(t) == 0) out.push_back(t);
    }
    return out;
}

Tensor delta_gcp(const Elem& x) {
    Tensor out;
    for (const auto& [t, c] : x) {
        require_one_rooted(t);
        const Node& root = t.root_blocks()[0][0];
        for (std::size_t i = 0; i < root.children.size(); ++i) {
            if (root.children[i].size() != 1) continue;
            Node rest = root;
            rest.children.erase(rest.children.begin() + static_cast<long>(i));
            out.add_term({PForest({Block{rest}}), PForest({root.children[i]})}, c);
        }
    }
    return out;
}

Elem upsilon(const Tensor& x) {
    Elem out;
    for (const auto& [k, c] : x) {
        require_one_rooted(k.first);
        out.add_term(graft(k.first, 0, std::nullopt, k.second), c);
    }
    return out;
}

Elem theta(const Elem& x) {
    Elem out;
    for (const auto& [t, c] : x) {
        for (const auto& p : admissible_partitions(t)) out.add_term(p.contracted, c);
    }
    return out;
}

Elem psi(const Elem& x) {
    Elem out;
    for (const auto& [t, c] : x) {
        for (const auto& r : refinements(t)) out.add_term(r, c);
    }
    return out;
}

namespace {

const Elem& psi_inverse_basis(const PForest& t) {
    static std::map<PForest, Elem> memo;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = memo.find(t);
    if (it != memo.end()) return it->second;
    Elem r = elem(t);
    auto refs = refinements(t);
    for (std::size_t i = 1; i < refs.size(); ++i) r.axpy(-1, psi_inverse_basis(refs[i]));
    return memo.emplace(t, std::move(r)).first->second;
}

}  // namespace

Elem psi_inverse(const Elem& x) {
    Elem out;
    for (const auto& [t, c] : x) out.axpy(c, psi_inverse_basis(t));
    return out;
}

Elem star_graft(const Elem& x, const Elem& y) { return cp_prelie(x, y); }

AlgebraHandle<PForest> gucp_handle(const std::vector<std::string>& labels, unsigned max_counter) {
    AlgebraHandle<PForest> h;
    h.name = "gucp";
    h.basis = [labels, max_counter](std::size_t n) {
        if (n == 0) return std::vector<PForest>{};
        return enumerate(n, make_alphabet(labels, max_counter), EnumMode::one_rooted);
    };
    h.prelie = [](const PForest& a, const PForest& b) { return diamond_ucp(a, b); };
    return h;
}

AlgebraHandle<PForest> gcp_handle(const std::vector<std::string>& labels) {
    auto h = gucp_handle(labels, 0);
    h.name = "gcp";
    h.prelie = [](const PForest& a, const PForest& b) { return diamond_cp(a, b); };
    return h;
}

AlgebraHandle<PForest> cp_diamond_handle(const std::vector<std::string>& labels) {
    AlgebraHandle<PForest> h = tree_handle(Algebra::cp, labels);
    h.name = "cp-diamond";
    h.prelie = [](const PForest& a, const PForest& b) { return diamond_ext(a, b); };
    h.coproduct = nullptr;
    return h;
}

}  // namespace comprelie
