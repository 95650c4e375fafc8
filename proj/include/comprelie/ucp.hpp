#pragma once

#include <compare>
#include <string>
#include <vector>

#include "comprelie/lincomb.hpp"
#include "comprelie/ptree.hpp"

namespace comprelie {

using Elem = LinComb<PForest>;
using Tensor = Tensor2<PForest, PForest>;

inline Elem unit() { return Elem::basis(PForest()); }
inline Elem elem(const PForest& t, Rational c = 1) { return Elem::basis(t, c); }

/// Which of the three Com-PreLie bialgebras an operation refers to.
enum class Algebra { ucp, cp, hck };

std::string to_string(Algebra a);
Algebra parse_algebra(const std::string& name);  // throws ParseError

// ------------------------------------------------------------------- UCP

Elem ucp_mul(const Elem& x, const Elem& y);
Elem ucp_prelie(const Elem& x, const Elem& y);
Tensor ucp_coproduct(const Elem& x);

Elem ucp_prelie(const PForest& t, const PForest& t2);
Tensor ucp_coproduct(const PForest& t);

// -------------------------------------------------------------------- CP

Elem cp_mul(const Elem& x, const Elem& y);
Elem cp_prelie(const Elem& x, const Elem& y);
Tensor cp_coproduct(const Elem& x);

/// Linear endomorphism f of the span of D, stored as f(d) = Σ_e at(e, d) e.
class FMatrix {
public:
    explicit FMatrix(std::vector<std::string> labels);
    static FMatrix identity(std::vector<std::string> labels);

    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t index(const std::string& label) const;  // throws InvalidArgument
    Rational& at(std::size_t e, std::size_t d) { return m_[e][d]; }
    const Rational& at(std::size_t e, std::size_t d) const { return m_[e][d]; }
    FMatrix operator*(const FMatrix& o) const;
    FMatrix power(unsigned k) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Rational>> m_;
};

/// Image in UCP(D)/I_f, written on the counter-zero basis: each decoration
/// (k,d) is replaced by Σ_e (f^k)_{e,d} (0,e), multilinearly over vertices.
Elem quotient_to_cp(const Elem& x, const FMatrix& f);

/// Pre-Lie product of CP_f: grafting for nonempty right factors and
/// T•∅ = Σ_s (f applied to the decoration of s). With f = Id this is CP.
Elem cpf_prelie(const Elem& x, const Elem& y, const FMatrix& f);

// ------------------------------------------------------------------ H_CK

Elem quotient_to_hck(const Elem& x);
Elem hck_mul(const Elem& x, const Elem& y);
Elem hck_prelie(const Elem& x, const Elem& y);
Tensor hck_coproduct(const Elem& x);

// ----------------------------------------------------------- dispatching

Elem mul(Algebra a, const Elem& x, const Elem& y);
Elem prelie(Algebra a, const Elem& x, const Elem& y);
Tensor coproduct(Algebra a, const Elem& x);

/// Δ(x) − x⊗∅ − ∅⊗x.
Tensor reduced_coproduct(Algebra a, const Elem& x);

/// Coefficient of ∅.
Rational counit(const Elem& x);

/// Basis of the degree-n slice: UCP counters range over 0..max_counter.
std::vector<PForest> basis(Algebra a, std::size_t n, const std::vector<std::string>& labels,
                           unsigned max_counter = 0);

/// Basis of the primitive elements in the degree-n slice (kernel of the
/// reduced coproduct), by exact elimination.
std::vector<Elem> primitive_basis(Algebra a, std::size_t n, const std::vector<std::string>& labels,
                                  unsigned max_counter = 0);

// ----------------------------------------------------- permutative δ

/// δ(T) = Σ over roots i and child blocks j of i: (T with block j of i
/// removed) ⊗ (that block with its descendants). Throws InvalidArgument on ∅.
Tensor delta_perm(const Elem& x);

/// dim Ker(δ) in degree n over |D| = d labels (N − rank).
std::size_t kernel_delta_dims(std::size_t n, std::size_t d);

// ------------------------------------------------------ Connes–Moscovici

struct IndexWord {
    std::vector<std::string> letters;
    friend auto operator<=>(const IndexWord&, const IndexWord&) = default;
};

std::string serialize(const IndexWord& w);

/// N_d(x) = x • •_d in H_CK.
Elem growth(const Elem& x, const std::string& d);

/// X_{i1..ik} = N_{ik} ∘ … ∘ N_{i2}(•_{i1}). Throws InvalidArgument if empty.
Elem cm_generator(const IndexWord& w);

/// m(I) = max{i : {1..i} ⊆ I}; I is a bitmask over positions 1..k (bit i-1).
unsigned cm_m(unsigned long subset);

/// Σ_{∅≠I⊆[k]} m(I) X_{i_I} ⊗ X_{i_[k]∖I}, dropping terms with an empty
/// right leg.
Tensor2<IndexWord, IndexWord> cm_reduced_coproduct(const IndexWord& w);

/// The same quantity computed from Δ in H_CK: Δ(X_w) is written on the
/// basis of products of generators, and the coefficients of single
/// generator ⊗ single generator are kept. Throws if Δ(X_w) leaves the span.
Tensor2<IndexWord, IndexWord> cm_coproduct_direct(const IndexWord& w);

}  // namespace comprelie
