#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "comprelie/lincomb.hpp"
#include "comprelie/rational.hpp"

namespace comprelie {

using SparseVec = std::map<std::size_t, Rational>;

/// Incremental exact Gaussian elimination over Q.
///
/// Vectors are inserted one at a time. Each stored pivot row remembers the
/// combination of inserted vectors it equals, so the reducer yields kernels
/// and solutions as well as ranks.
class Eliminator {
public:
    /// Inserts the next vector (its input index is the number of prior
    /// inserts). Returns the kernel relation if it was dependent.
    std::optional<SparseVec> insert(SparseVec v);

    /// Expresses `target` as a combination of the inserted vectors.
    std::optional<SparseVec> solve(SparseVec target) const;

    std::size_t rank() const { return pivots_.size(); }
    std::size_t inserted() const { return count_; }

private:
    struct Pivot {
        SparseVec row;
        SparseVec combo;
    };
    void reduce(SparseVec& v, SparseVec& combo) const;

    std::map<std::size_t, Pivot> pivots_;  // keyed by leading index
    std::size_t count_ = 0;
};

/// Rank of a family of sparse vectors.
std::size_t rank_of(const std::vector<SparseVec>& vectors);

/// Basis of {c : Σ c_j v_j = 0}, each relation as a sparse vector over j.
std::vector<SparseVec> kernel_of(const std::vector<SparseVec>& vectors);

/// Assigns dense coordinates to basis keys on first sight.
template <class K>
class Indexer {
public:
    std::size_t index(const K& k) {
        auto [it, inserted] = ids_.try_emplace(k, keys_.size());
        if (inserted) keys_.push_back(k);
        return it->second;
    }
    std::optional<std::size_t> find(const K& k) const {
        auto it = ids_.find(k);
        if (it == ids_.end()) return std::nullopt;
        return it->second;
    }
    const K& key(std::size_t i) const { return keys_[i]; }
    std::size_t size() const { return keys_.size(); }

    SparseVec to_vec(const LinComb<K>& x) {
        SparseVec v;
        for (const auto& [k, c] : x) v[index(k)] = c;
        return v;
    }

private:
    std::map<K, std::size_t> ids_;
    std::vector<K> keys_;
};

}  // namespace comprelie
