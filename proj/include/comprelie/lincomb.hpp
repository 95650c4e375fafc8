#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

#include "comprelie/rational.hpp"

namespace comprelie {

// Basis-key serialization. Each basis type provides `serialize` in its own
// namespace; these cover the composite keys used by tensors.
inline std::string serialize(const std::string& s) { return s; }

template <class A, class B>
std::string serialize(const std::pair<A, B>& p);

template <class A, class B, class C>
std::string serialize(const std::tuple<A, B, C>& t);

/// Finite formal sum of basis keys with exact rational coefficients.
///
/// Zero coefficients are never stored, so two combinations are equal iff
/// their term maps are equal. Keys iterate in their natural order, which for
/// every basis type in this library is the order of canonical serializations.
template <class K>
class LinComb {
public:
    using Key = K;
    using Terms = std::map<K, Rational>;

    LinComb() = default;

    static LinComb basis(K key, Rational coeff = 1) {
        LinComb r;
        r.add_term(std::move(key), coeff);
        return r;
    }

    void add_term(const K& key, const Rational& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add_term(K&& key, const Rational& coeff) {
        if (coeff == 0) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Adds `scale * other` in place.
    void axpy(const Rational& scale, const LinComb& other) {
        if (scale == 0) return;
        for (const auto& [k, c] : other.terms_) add_term(k, scale * c);
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [k, c] : terms_) c *= s;
        }
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
    friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
    friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const K& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const Terms& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

private:
    Terms terms_;
};

template <class A, class B>
using Tensor2 = LinComb<std::pair<A, B>>;

template <class A, class B, class C>
using Tensor3 = LinComb<std::tuple<A, B, C>>;

/// Extends `op` (key -> LinComb) linearly.
template <class K, class F>
auto linear_extend(F&& op, const LinComb<K>& x) {
    using R = decltype(op(std::declval<const K&>()));
    R out;
    for (const auto& [k, c] : x) out.axpy(c, op(k));
    return out;
}

/// Extends `op` (key, key -> LinComb) bilinearly.
template <class A, class B, class F>
auto bilinear_extend(F&& op, const LinComb<A>& a, const LinComb<B>& b) {
    using R = decltype(op(std::declval<const A&>(), std::declval<const B&>()));
    R out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) out.axpy(ca * cb, op(ka, kb));
    }
    return out;
}

/// a ⊗ b.
template <class A, class B>
Tensor2<A, B> tensor(const LinComb<A>& a, const LinComb<B>& b) {
    Tensor2<A, B> out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) out.add_term({ka, kb}, ca * cb);
    }
    return out;
}

/// (f ⊗ g)(t) where f, g map basis keys to linear combinations.
template <class A, class B, class F, class G>
auto tensor_apply(F&& f, G&& g, const Tensor2<A, B>& t) {
    using LA = decltype(f(std::declval<const A&>()));
    using LB = decltype(g(std::declval<const B&>()));
    Tensor2<typename LA::Key, typename LB::Key> out;
    for (const auto& [k, c] : t) {
        auto fa = f(k.first);
        if (fa.is_zero()) continue;
        auto gb = g(k.second);
        for (const auto& [ka, ca] : fa) {
            for (const auto& [kb, cb] : gb) out.add_term({ka, kb}, c * ca * cb);
        }
    }
    return out;
}

/// Same as tensor_apply but maps into a flat 3-tensor: (f ⊗ Id) when f
/// returns a 2-tensor, i.e. (Δ ⊗ Id)∘Δ.
template <class A, class B, class F>
auto tensor_apply_left3(F&& f, const Tensor2<A, B>& t) {
    using TL = decltype(f(std::declval<const A&>()));
    using P = typename TL::Key;
    Tensor3<typename P::first_type, typename P::second_type, B> out;
    for (const auto& [k, c] : t) {
        for (const auto& [kp, cp] : f(k.first)) out.add_term({kp.first, kp.second, k.second}, c * cp);
    }
    return out;
}

/// (Id ⊗ f) when f returns a 2-tensor.
template <class A, class B, class F>
auto tensor_apply_right3(F&& f, const Tensor2<A, B>& t) {
    using TR = decltype(f(std::declval<const B&>()));
    using P = typename TR::Key;
    Tensor3<A, typename P::first_type, typename P::second_type> out;
    for (const auto& [k, c] : t) {
        for (const auto& [kp, cp] : f(k.second)) out.add_term({k.first, kp.first, kp.second}, c * cp);
    }
    return out;
}

/// Swaps the two legs.
template <class A, class B>
Tensor2<B, A> flip(const Tensor2<A, B>& t) {
    Tensor2<B, A> out;
    for (const auto& [k, c] : t) out.add_term({k.second, k.first}, c);
    return out;
}

template <class A, class B>
std::string serialize(const std::pair<A, B>& p) {
    return serialize(p.first) + " (x) " + serialize(p.second);
}

template <class A, class B, class C>
std::string serialize(const std::tuple<A, B, C>& t) {
    return serialize(std::get<0>(t)) + " (x) " + serialize(std::get<1>(t)) + " (x) " +
           serialize(std::get<2>(t));
}

/// `c1*B1 + c2*B2 + ...` in key order; the zero element prints as `0`.
template <class K>
std::string to_string(const LinComb<K>& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : x) {
        if (!first) out += " + ";
        first = false;
        out += to_string(c);
        out += '*';
        out += serialize(k);
    }
    return out;
}

/// Inverse of to_string: `c1*B1 + c2*B2 + ...`, `B` alone meaning `1*B`,
/// `0` for zero. Keys must not contain " + " or '*'. Throws ParseError
/// (through the key parser or the scalar parser).
template <class K, class ParseKey>
LinComb<K> parse_lincomb(std::string_view text, ParseKey&& parse_key) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
        return v;
    };
    LinComb<K> out;
    std::string_view rest = trim(text);
    if (rest == "0") return out;
    while (true) {
        auto plus = rest.find(" + ");
        std::string_view term = trim(rest.substr(0, plus));
        auto star = term.find('*');
        Rational c = 1;
        std::string_view key = term;
        if (star != std::string_view::npos) {
            c = parse_rational(trim(term.substr(0, star)));
            key = trim(term.substr(star + 1));
        } else if (!key.empty() && key.front() == '-') {
            c = -1;
            key = trim(key.substr(1));
        }
        out.add_term(parse_key(std::string(key)), c);
        if (plus == std::string_view::npos) break;
        rest = rest.substr(plus + 3);
    }
    return out;
}

}  // namespace comprelie
