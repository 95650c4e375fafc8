#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "comprelie/lincomb.hpp"
#include "comprelie/ucp.hpp"

namespace comprelie {

/// Word over the alphabet D; the empty word is the unit ∅ of T(V).
struct Word {
    std::vector<std::string> letters;

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    friend auto operator<=>(const Word&, const Word&) = default;
};

using WordComb = LinComb<Word>;
using WordTensor = Tensor2<Word, Word>;

/// `eps` for ∅, otherwise letters joined by '.'.
std::string serialize(const Word& w);
Word parse_word(std::string_view text);  // throws ParseError
Word letter(const std::string& a);
Word concat(const Word& a, const Word& b);

/// Words of length exactly n over the alphabet, in lexicographic order.
std::vector<Word> words_of_length(std::size_t n, const std::vector<std::string>& alphabet);

WordComb shuffle(const Word& u, const Word& v);
WordComb shuffle(const WordComb& x, const WordComb& y);
WordTensor deconcat(const Word& w);
WordTensor deconcat(const WordComb& x);

/// Concatenation, extended bilinearly.
WordComb concat(const WordComb& x, const WordComb& y);

/// Finitely supported map ϖ : T(V) ⊗ T(V) → V, stored on basis word pairs.
class VarpiSpec {
public:
    void set(const Word& u, const Word& v, WordComb value);
    WordComb operator()(const Word& u, const Word& v) const;
    WordComb operator()(const WordComb& x, const WordComb& y) const;

    /// ϖ with the single component ϖ_{1,0} = f.
    static VarpiSpec from_f(const FMatrix& f);

    const std::map<std::pair<Word, Word>, WordComb>& components() const { return values_; }
    std::vector<std::string> alphabet() const;

private:
    std::map<std::pair<Word, Word>, WordComb> values_;
};

/// u • v = u⁽¹⁾ ϖ(u⁽²⁾ ⊗ v⁽¹⁾) (u⁽³⁾ ⧢ v⁽²⁾).
WordComb bullet_from_varpi(const VarpiSpec& w, const Word& u, const Word& v);
WordComb bullet_from_varpi(const VarpiSpec& w, const WordComb& x, const WordComb& y);

struct CheckResult {
    bool pass = true;
    std::string witness;  // first failing instance, empty on success
    std::size_t checked = 0;
};

/// ϖ((u⧢v)⊗w) = ε(u)ϖ(v⊗w) + ε(v)ϖ(u⊗w), over all word triples with total
/// length ≤ maxdeg.
CheckResult check_eq2(const VarpiSpec& w, const std::vector<std::string>& alphabet, std::size_t maxdeg);

/// ϖ(u•v⊗w) − ϖ(u⊗v•w) = ϖ(u•w⊗v) − ϖ(u⊗w•v), same range.
CheckResult check_eq3(const VarpiSpec& w, const std::vector<std::string>& alphabet, std::size_t maxdeg);

/// T(V,f): x1…xm • y1…yn = Σ_{i=1..m} x1…x(i−1) f(xi) (x(i+1)…xm ⧢ y1…yn).
WordComb bullet_tvf(const FMatrix& f, const Word& u, const Word& v);
WordComb bullet_tvf(const FMatrix& f, const WordComb& x, const WordComb& y);

/// The same product through the sum over (k,l)-shuffles weighted by m_k.
WordComb bullet_tvf_shuffles(const FMatrix& f, const Word& u, const Word& v);

/// (k,l)-shuffles as images σ(1..k+l), 1-based.
using Permutation = std::vector<int>;
std::vector<Permutation> shuffles(std::size_t k, std::size_t l);

/// max{i ∈ [k] : σ(1)=1,…,σ(i)=i}, 0 when σ(1) ≠ 1. Throws InvalidArgument
/// when σ is not a (k,l)-shuffle for l = |σ| − k.
std::size_t m_k_statistic(const Permutation& sigma, std::size_t k);

/// Bilinear products * and {−,−} on V.
struct DegNeg1Spec {
    std::vector<std::string> alphabet;
    std::map<std::pair<std::string, std::string>, WordComb> star;
    std::map<std::pair<std::string, std::string>, WordComb> bracket;

    WordComb star_of(const std::string& x, const std::string& y) const;
    WordComb bracket_of(const std::string& x, const std::string& y) const;
    VarpiSpec varpi() const;
};

/// x1…xm • y1…yn = Σ_{i=1..m} x1…x(i−1)(xi*y1)(x(i+1)…xm ⧢ y2…yn)
///               + Σ_{i=1..m−1} x1…x(i−1){xi,x(i+1)}(x(i+2)…xm ⧢ y1…yn).
WordComb bullet_degneg1(const DegNeg1Spec& s, const Word& u, const Word& v);
WordComb bullet_degneg1(const DegNeg1Spec& s, const WordComb& x, const WordComb& y);

/// The four identities on letters that make the degree −1 product
/// Com-PreLie: * right-symmetric, {−,−} antisymmetric, x*{y,z} = {x*y,z},
/// {x,y}*z = {x*z,y} + {x,y*z} + {{x,y},z}.
CheckResult check_eq7(const DegNeg1Spec& s);

/// The 3-letter family on x, y, z: x*v = v, y* = z* = 0,
/// {x,y} = a y + b z, {x,z} = c y + (1−a) z, {y,z} = 0.
DegNeg1Spec hyperboloid(const Rational& a, const Rational& b, const Rational& c);
bool on_hyperboloid(const Rational& a, const Rational& b, const Rational& c);

/// Parsed spec file: `f d -> …`, `star d e -> …`, `br d e -> …`, optional
/// `alphabet a b c`; `#` starts a comment. Throws ParseError.
struct ProductSpec {
    std::vector<std::string> alphabet;
    std::map<std::string, WordComb> f;
    DegNeg1Spec degneg1;
    bool has_f = false;
    bool has_degneg1 = false;

    FMatrix f_matrix() const;
};

ProductSpec parse_product_spec(std::string_view text);

/// `c1*e1 + c2*e2 - e3`, or `0`. Letters become one-letter words.
WordComb parse_letter_comb(std::string_view text);

}  // namespace comprelie
