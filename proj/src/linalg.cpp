#include "comprelie/linalg.hpp"

namespace comprelie {

namespace {

void axpy(SparseVec& v, const Rational& scale, const SparseVec& w) {
    for (const auto& [i, c] : w) {
        auto [it, inserted] = v.try_emplace(i, scale * c);
        if (!inserted) {
            it->second += scale * c;
            if (it->second == 0) v.erase(it);
        }
    }
}

}  // namespace

void Eliminator::reduce(SparseVec& v, SparseVec& combo) const {
    // Pivots are keyed by leading index, and subtracting a pivot only
    // touches indices >= its lead, so one ascending sweep suffices.
    auto it = v.begin();
    while (it != v.end()) {
        auto p = pivots_.find(it->first);
        if (p == pivots_.end()) {
            ++it;
            continue;
        }
        std::size_t lead = it->first;
        Rational f = it->second / p->second.row.begin()->second;
        axpy(v, -f, p->second.row);
        axpy(combo, -f, p->second.combo);
        it = v.upper_bound(lead);
    }
}

std::optional<SparseVec> Eliminator::insert(SparseVec v) {
    SparseVec combo;
    combo[count_] = 1;
    ++count_;
    reduce(v, combo);
    if (v.empty()) return combo;
    std::size_t lead = v.begin()->first;
    pivots_.emplace(lead, Pivot{std::move(v), std::move(combo)});
    return std::nullopt;
}

std::optional<SparseVec> Eliminator::solve(SparseVec target) const {
    SparseVec combo;
    reduce(target, combo);
    if (!target.empty()) return std::nullopt;
    for (auto& [i, c] : combo) c = -c;
    return combo;
}

std::size_t rank_of(const std::vector<SparseVec>& vectors) {
    Eliminator e;
    for (const auto& v : vectors) e.insert(v);
    return e.rank();
}

std::vector<SparseVec> kernel_of(const std::vector<SparseVec>& vectors) {
    Eliminator e;
    std::vector<SparseVec> out;
    for (const auto& v : vectors) {
        if (auto rel = e.insert(v)) out.push_back(std::move(*rel));
    }
    return out;
}

}  // namespace comprelie
