#pragma once

#include <map>
#include <string>
#include <vector>

#include "comprelie/axioms.hpp"
#include "comprelie/linalg.hpp"
#include "comprelie/shuffle.hpp"
#include "comprelie/ucp.hpp"

namespace comprelie {

/// A connected Com-PreLie bialgebra of trees truncated at degree N, with the
/// maps of the rigidity construction: ω : T(V) → A for V = Prim(A), the
/// Eulerian projection ψ, ϖ = π∘ω⁻¹∘ψ∘ω and F = F_ϖ∘ω⁻¹ : A → T(V).
///
/// Letters of T(V) are named `v<n>_<i>`: the i-th basis vector (1-based) of
/// the degree-n primitives.
class Rigidity {
public:
    Rigidity(Algebra a, std::vector<std::string> labels, std::size_t max_degree);

    Algebra algebra() const { return alg_; }
    std::size_t max_degree() const { return N_; }

    const std::vector<PForest>& basis(std::size_t n) const { return basis_.at(n); }
    const std::vector<Elem>& primitives(std::size_t n) const { return prims_.at(n); }
    const Elem& letter_value(const std::string& letter) const { return letters_.at(letter); }
    std::size_t letter_degree(const std::string& letter) const { return letter_deg_.at(letter); }

    /// Words over the letters with total weight n.
    std::vector<Word> words(std::size_t n) const;
    std::size_t weight(const Word& w) const;

    /// A right inverse of f_A(x) = x•∅ on V, per degree. Throws
    /// InvalidArgument when f_A is not surjective in some degree.
    Elem g(const std::string& letter) const { return g_.at(letter); }

    Elem omega(const Word& w);
    Elem omega(const WordComb& x);
    /// Throws InvalidArgument if x leaves the image (cannot happen once the
    /// rank check passes).
    WordComb omega_inverse(const Elem& x);

    Elem eulerian_psi(const Elem& x);
    WordComb varpi(const Word& w);
    WordComb F_varpi(const Word& w);
    WordComb F(const Elem& x);

    struct Slice {
        std::size_t degree, dim, words, rank;
    };
    /// dim A_n, number of words of weight n, rank of ω on them.
    std::vector<Slice> slices();

    /// Δ∘ω = (ω⊗ω)∘Δ_deconcat on every word of weight ≤ N.
    LawResult check_omega_coalgebra();
    /// F(x·y) = F(x)⧢F(y) on basis pairs of total degree ≤ N.
    LawResult check_multiplicative();
    /// Δ∘F = (F⊗F)∘Δ on the basis.
    LawResult check_F_coalgebra();
    /// π∘F_ϖ = ϖ and F_ϖ(v) = v on letters.
    LawResult check_varpi();
    /// ψ(v) = v on V, ψ(x·y) = 0 on A₊·A₊, ψ∘ψ = ψ.
    std::vector<LawResult> check_psi();
    /// Whether ψ(x) is primitive for every basis x (reported, not asserted).
    LawResult check_psi_primitive();

private:
    Rational eps(const Elem& x) const { return counit(x); }
    Elem conv_power(const PForest& t, unsigned k);

    Algebra alg_;
    std::vector<std::string> labels_;
    std::size_t N_;
    std::vector<std::vector<PForest>> basis_;
    std::vector<std::vector<Elem>> prims_;
    std::map<std::string, Elem> letters_;
    std::map<std::string, std::size_t> letter_deg_;
    std::map<std::string, Elem> g_;
    std::map<Word, Elem> omega_memo_;
    std::map<Word, WordComb> varpi_memo_;
    std::map<std::pair<PForest, unsigned>, Elem> conv_memo_;
    std::vector<Eliminator> omega_elim_;
    std::vector<std::vector<Word>> omega_cols_;
    std::vector<Indexer<PForest>> coords_;
    bool elim_ready_ = false;
    void build_elim();
};

/// The degree-2 system Δ̃(x) = •_{(0,d)} ⊗ •_{(0,e)} in UCP(D). Returns
/// true when it has a solution.
///
/// Δ never lowers counters, so trees carrying a nonzero counter contribute
/// nothing to coordinates whose legs have counter zero everywhere. The
/// system restricted to those coordinates therefore involves only
/// counter-zero trees, and its infeasibility settles the full question.
bool ucp_primitive_extension_feasible(const std::string& d, const std::string& e);

}  // namespace comprelie
