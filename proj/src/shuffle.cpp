#include "comprelie/shuffle.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "comprelie/errors.hpp"

namespace comprelie {

namespace {

bool is_letter_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

Word sub(const Word& w, std::size_t from, std::size_t to) {
    return Word{{w.letters.begin() + static_cast<long>(from), w.letters.begin() + static_cast<long>(to)}};
}

}  // namespace

std::string serialize(const Word& w) {
    if (w.empty()) return "eps";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += '.';
        out += w.letters[i];
    }
    return out;
}

Word parse_word(std::string_view text) {
    std::string s = trim(text);
    if (s == "eps") return {};
    Word w;
    std::size_t start = 0;
    while (true) {
        std::size_t dot = s.find('.', start);
        std::string part = trim(std::string_view(s).substr(start, dot == std::string::npos ? std::string::npos : dot - start));
        if (part.empty() || !std::all_of(part.begin(), part.end(), is_letter_char)) {
            throw ParseError("bad word '" + s + "'");
        }
        w.letters.push_back(part);
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    return w;
}

Word letter(const std::string& a) { return Word{{a}}; }

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
}

WordComb concat(const WordComb& x, const WordComb& y) {
    return bilinear_extend([](const Word& a, const Word& b) { return WordComb::basis(concat(a, b)); }, x, y);
}

std::vector<Word> words_of_length(std::size_t n, const std::vector<std::string>& alphabet) {
    std::vector<Word> level{Word{}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Word> next;
        for (const auto& w : level) {
            for (const auto& a : alphabet) next.push_back(concat(w, letter(a)));
        }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end());
    return level;
}

WordComb shuffle(const Word& u, const Word& v) {
    // Interleavings correspond to the positions taken by u's letters.
    const std::size_t n = u.size() + v.size();
    WordComb out;
    std::vector<bool> take_u(n, false);
    std::fill(take_u.begin(), take_u.begin() + static_cast<long>(u.size()), true);
    std::sort(take_u.begin(), take_u.end());
    do {
        Word w;
        std::size_t i = 0, j = 0;
        for (std::size_t p = 0; p < n; ++p) w.letters.push_back(take_u[p] ? u.letters[i++] : v.letters[j++]);
        out.add_term(std::move(w), 1);
    } while (std::next_permutation(take_u.begin(), take_u.end()));
    return out;
}

WordComb shuffle(const WordComb& x, const WordComb& y) {
    return bilinear_extend([](const Word& a, const Word& b) { return shuffle(a, b); }, x, y);
}

WordTensor deconcat(const Word& w) {
    WordTensor out;
    for (std::size_t i = 0; i <= w.size(); ++i) out.add_term({sub(w, 0, i), sub(w, i, w.size())}, 1);
    return out;
}

WordTensor deconcat(const WordComb& x) {
    return linear_extend([](const Word& w) { return deconcat(w); }, x);
}

// -------------------------------------------------------------------- ϖ

void VarpiSpec::set(const Word& u, const Word& v, WordComb value) {
    for (const auto& [k, c] : value) {
        (void)c;
        if (k.size() != 1) throw InvalidArgument("ϖ must take values in V");
    }
    if (value.is_zero()) {
        values_.erase({u, v});
    } else {
        values_[{u, v}] = std::move(value);
    }
}

WordComb VarpiSpec::operator()(const Word& u, const Word& v) const {
    auto it = values_.find({u, v});
    return it == values_.end() ? WordComb{} : it->second;
}

WordComb VarpiSpec::operator()(const WordComb& x, const WordComb& y) const {
    return bilinear_extend([this](const Word& a, const Word& b) { return (*this)(a, b); }, x, y);
}

VarpiSpec VarpiSpec::from_f(const FMatrix& f) {
    VarpiSpec w;
    const auto& ls = f.labels();
    for (std::size_t d = 0; d < ls.size(); ++d) {
        WordComb img;
        for (std::size_t e = 0; e < ls.size(); ++e) img.add_term(letter(ls[e]), f.at(e, d));
        w.set(letter(ls[d]), Word{}, img);
    }
    return w;
}

std::vector<std::string> VarpiSpec::alphabet() const {
    std::set<std::string> s;
    for (const auto& [k, v] : values_) {
        for (const auto& a : k.first.letters) s.insert(a);
        for (const auto& a : k.second.letters) s.insert(a);
        for (const auto& [w, c] : v) {
            (void)c;
            for (const auto& a : w.letters) s.insert(a);
        }
    }
    return {s.begin(), s.end()};
}

WordComb bullet_from_varpi(const VarpiSpec& w, const Word& u, const Word& v) {
    WordComb out;
    for (std::size_t i = 0; i <= u.size(); ++i) {
        for (std::size_t j = i; j <= u.size(); ++j) {
            Word u1 = sub(u, 0, i), u2 = sub(u, i, j), u3 = sub(u, j, u.size());
            for (std::size_t p = 0; p <= v.size(); ++p) {
                WordComb mid = w(u2, sub(v, 0, p));
                if (mid.is_zero()) continue;
                WordComb tail = shuffle(u3, sub(v, p, v.size()));
                out += concat(concat(WordComb::basis(u1), mid), tail);
            }
        }
    }
    return out;
}

WordComb bullet_from_varpi(const VarpiSpec& w, const WordComb& x, const WordComb& y) {
    return bilinear_extend([&w](const Word& a, const Word& b) { return bullet_from_varpi(w, a, b); }, x, y);
}

namespace {

/// Word triples with total length ≤ maxdeg.
template <class F>
CheckResult for_triples(const std::vector<std::string>& alphabet, std::size_t maxdeg, F&& check) {
    std::vector<std::vector<Word>> by_len(maxdeg + 1);
    for (std::size_t n = 0; n <= maxdeg; ++n) by_len[n] = words_of_length(n, alphabet);
    CheckResult r;
    for (std::size_t a = 0; a <= maxdeg; ++a) {
        for (std::size_t b = 0; a + b <= maxdeg; ++b) {
            for (std::size_t c = 0; a + b + c <= maxdeg; ++c) {
                for (const auto& u : by_len[a]) {
                    for (const auto& v : by_len[b]) {
                        for (const auto& w : by_len[c]) {
                            ++r.checked;
                            if (!check(u, v, w)) {
                                r.pass = false;
                                r.witness = "u=" + serialize(u) + " v=" + serialize(v) + " w=" + serialize(w);
                                return r;
                            }
                        }
                    }
                }
            }
        }
    }
    return r;
}

Rational eps(const Word& w) { return w.empty() ? 1 : 0; }

}  // namespace

CheckResult check_eq2(const VarpiSpec& w, const std::vector<std::string>& alphabet, std::size_t maxdeg) {
    return for_triples(alphabet, maxdeg, [&](const Word& u, const Word& v, const Word& x) {
        WordComb lhs = w(shuffle(u, v), WordComb::basis(x));
        WordComb rhs = eps(u) * w(v, x) + eps(v) * w(u, x);
        return lhs == rhs;
    });
}

CheckResult check_eq3(const VarpiSpec& w, const std::vector<std::string>& alphabet, std::size_t maxdeg) {
    return for_triples(alphabet, maxdeg, [&](const Word& u, const Word& v, const Word& x) {
        WordComb U = WordComb::basis(u), V = WordComb::basis(v), X = WordComb::basis(x);
        WordComb lhs = w(bullet_from_varpi(w, u, v), X) - w(U, bullet_from_varpi(w, v, x));
        WordComb rhs = w(bullet_from_varpi(w, u, x), V) - w(U, bullet_from_varpi(w, x, v));
        return lhs == rhs;
    });
}

// --------------------------------------------------------------- T(V,f)

namespace {

WordComb apply_f(const FMatrix& f, const std::string& a) {
    std::size_t d = f.index(a);
    WordComb out;
    for (std::size_t e = 0; e < f.labels().size(); ++e) out.add_term(letter(f.labels()[e]), f.at(e, d));
    return out;
}

}  // namespace

WordComb bullet_tvf(const FMatrix& f, const Word& u, const Word& v) {
    WordComb out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        WordComb head = concat(WordComb::basis(sub(u, 0, i)), apply_f(f, u.letters[i]));
        out += concat(head, shuffle(sub(u, i + 1, u.size()), v));
    }
    return out;
}

WordComb bullet_tvf(const FMatrix& f, const WordComb& x, const WordComb& y) {
    return bilinear_extend([&f](const Word& a, const Word& b) { return bullet_tvf(f, a, b); }, x, y);
}

std::vector<Permutation> shuffles(std::size_t k, std::size_t l) {
    const std::size_t n = k + l;
    std::vector<bool> first(n, false);
    std::fill(first.begin(), first.begin() + static_cast<long>(k), true);
    std::sort(first.begin(), first.end());
    std::vector<Permutation> out;
    do {
        // first[p] marks positions p+1 that receive σ(1..k).
        Permutation sigma(n);
        std::size_t a = 0, b = k;
        for (std::size_t p = 0; p < n; ++p) sigma[first[p] ? a++ : b++] = static_cast<int>(p + 1);
        out.push_back(std::move(sigma));
    } while (std::next_permutation(first.begin(), first.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t m_k_statistic(const Permutation& sigma, std::size_t k) {
    const std::size_t n = sigma.size();
    if (k > n) throw InvalidArgument("k exceeds the permutation size");
    std::vector<bool> seen(n + 1, false);
    for (int x : sigma) {
        if (x < 1 || static_cast<std::size_t>(x) > n || seen[x]) throw InvalidArgument("not a permutation");
        seen[x] = true;
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (i != k && sigma[i - 1] > sigma[i]) throw InvalidArgument("not a (k,l)-shuffle");
    }
    std::size_t m = 0;
    while (m < k && sigma[m] == static_cast<int>(m + 1)) ++m;
    return m;
}

WordComb bullet_tvf_shuffles(const FMatrix& f, const Word& u, const Word& v) {
    const std::size_t k = u.size(), l = v.size();
    Word all = concat(u, v);
    WordComb out;
    for (const auto& sigma : shuffles(k, l)) {
        std::size_t m = m_k_statistic(sigma, k);
        if (m == 0) continue;
        // Letter at position σ(j) is v_j.
        Word w;
        w.letters.resize(k + l);
        for (std::size_t j = 0; j < k + l; ++j) w.letters[sigma[j] - 1] = all.letters[j];
        for (std::size_t i = 0; i < m; ++i) {
            WordComb head = concat(WordComb::basis(sub(w, 0, i)), apply_f(f, w.letters[i]));
            out += concat(head, WordComb::basis(sub(w, i + 1, w.size())));
        }
    }
    return out;
}

// -------------------------------------------------------------- degree −1

WordComb DegNeg1Spec::star_of(const std::string& x, const std::string& y) const {
    auto it = star.find({x, y});
    return it == star.end() ? WordComb{} : it->second;
}

WordComb DegNeg1Spec::bracket_of(const std::string& x, const std::string& y) const {
    auto it = bracket.find({x, y});
    return it == bracket.end() ? WordComb{} : it->second;
}

VarpiSpec DegNeg1Spec::varpi() const {
    VarpiSpec w;
    for (const auto& [k, v] : star) w.set(letter(k.first), letter(k.second), v);
    for (const auto& [k, v] : bracket) w.set(concat(letter(k.first), letter(k.second)), Word{}, v);
    return w;
}

WordComb bullet_degneg1(const DegNeg1Spec& s, const Word& u, const Word& v) {
    WordComb out;
    const std::size_t m = u.size();
    if (!v.empty()) {
        Word rest = sub(v, 1, v.size());
        for (std::size_t i = 0; i < m; ++i) {
            WordComb head = concat(WordComb::basis(sub(u, 0, i)), s.star_of(u.letters[i], v.letters[0]));
            if (head.is_zero()) continue;
            out += concat(head, shuffle(sub(u, i + 1, m), rest));
        }
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
        WordComb head = concat(WordComb::basis(sub(u, 0, i)), s.bracket_of(u.letters[i], u.letters[i + 1]));
        if (head.is_zero()) continue;
        out += concat(head, shuffle(sub(u, i + 2, m), v));
    }
    return out;
}

WordComb bullet_degneg1(const DegNeg1Spec& s, const WordComb& x, const WordComb& y) {
    return bilinear_extend([&s](const Word& a, const Word& b) { return bullet_degneg1(s, a, b); }, x, y);
}

CheckResult check_eq7(const DegNeg1Spec& s) {
    auto star = [&s](const WordComb& a, const WordComb& b) {
        return bilinear_extend([&s](const Word& x, const Word& y) { return s.star_of(x.letters[0], y.letters[0]); }, a, b);
    };
    auto br = [&s](const WordComb& a, const WordComb& b) {
        return bilinear_extend([&s](const Word& x, const Word& y) { return s.bracket_of(x.letters[0], y.letters[0]); }, a, b);
    };
    CheckResult r;
    for (const auto& x : s.alphabet) {
        for (const auto& y : s.alphabet) {
            WordComb X = WordComb::basis(letter(x)), Y = WordComb::basis(letter(y));
            ++r.checked;
            if (!(br(X, Y) == -br(Y, X))) {
                r.pass = false;
                r.witness = "antisymmetry fails at " + x + "," + y;
                return r;
            }
            for (const auto& z : s.alphabet) {
                WordComb Z = WordComb::basis(letter(z));
                ++r.checked;
                std::string where = " at " + x + "," + y + "," + z;
                if (!(star(star(X, Y), Z) - star(X, star(Y, Z)) == star(star(X, Z), Y) - star(X, star(Z, Y)))) {
                    r = {false, "pre-Lie identity fails" + where, r.checked};
                    return r;
                }
                if (!(star(X, br(Y, Z)) == br(star(X, Y), Z))) {
                    r = {false, "x*{y,z} = {x*y,z} fails" + where, r.checked};
                    return r;
                }
                if (!(star(br(X, Y), Z) == br(star(X, Z), Y) + br(X, star(Y, Z)) + br(br(X, Y), Z))) {
                    r = {false, "{x,y}*z identity fails" + where, r.checked};
                    return r;
                }
            }
        }
    }
    return r;
}

DegNeg1Spec hyperboloid(const Rational& a, const Rational& b, const Rational& c) {
    DegNeg1Spec s;
    s.alphabet = {"x", "y", "z"};
    auto L = [](const char* l) { return WordComb::basis(letter(l)); };
    for (const char* v : {"x", "y", "z"}) s.star[{"x", v}] = L(v);
    WordComb xy = a * L("y") + b * L("z");
    WordComb xz = c * L("y") + (1 - a) * L("z");
    s.bracket[{"x", "y"}] = xy;
    s.bracket[{"y", "x"}] = -xy;
    s.bracket[{"x", "z"}] = xz;
    s.bracket[{"z", "x"}] = -xz;
    for (auto* m : {&s.star, &s.bracket}) {
        for (auto it = m->begin(); it != m->end();) it = it->second.is_zero() ? m->erase(it) : std::next(it);
    }
    return s;
}

bool on_hyperboloid(const Rational& a, const Rational& b, const Rational& c) { return a * a - a + b * c == 0; }

// ---------------------------------------------------------------- parsing

WordComb parse_letter_comb(std::string_view text) {
    std::string s = trim(text);
    if (s.empty()) throw ParseError("empty right-hand side");
    if (s == "0") return {};
    WordComb out;
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        int sign = 1;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in '" + s + "'");
        }
        first = false;
        std::size_t end = s.find_first_of("+-", pos);
        std::string term = trim(std::string_view(s).substr(pos, end == std::string::npos ? std::string::npos : end - pos));
        pos = end == std::string::npos ? s.size() : end;
        Rational coeff = 1;
        std::string name = term;
        if (auto star = term.find('*'); star != std::string::npos) {
            coeff = parse_rational(term.substr(0, star));
            name = trim(std::string_view(term).substr(star + 1));
        }
        if (name.empty() || !std::all_of(name.begin(), name.end(), is_letter_char)) {
            throw ParseError("bad term '" + term + "'");
        }
        out.add_term(letter(name), sign * coeff);
    }
    return out;
}

FMatrix ProductSpec::f_matrix() const {
    FMatrix m(alphabet);
    for (const auto& [d, img] : f) {
        for (const auto& [w, c] : img) m.at(m.index(w.letters[0]), m.index(d)) = c;
    }
    return m;
}

ProductSpec parse_product_spec(std::string_view text) {
    ProductSpec spec;
    std::set<std::string> letters;
    std::vector<std::string> declared;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& what) {
        throw ParseError("line " + std::to_string(lineno) + ": " + what);
    };
    auto check_name = [&](const std::string& n) {
        if (n.empty() || !std::all_of(n.begin(), n.end(), is_letter_char)) fail("bad letter '" + n + "'");
        letters.insert(n);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        std::string lhs = line, rhs;
        auto arrow = line.find("->");
        if (arrow != std::string::npos) {
            lhs = line.substr(0, arrow);
            rhs = line.substr(arrow + 2);
        }
        std::istringstream ls(lhs);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) fail("missing directive");
        try {
            if (tok[0] == "alphabet") {
                if (arrow != std::string::npos || tok.size() < 2) fail("alphabet takes a list of letters");
                for (std::size_t i = 1; i < tok.size(); ++i) {
                    check_name(tok[i]);
                    declared.push_back(tok[i]);
                }
            } else if (tok[0] == "f") {
                if (arrow == std::string::npos || tok.size() != 2) fail("expected 'f d -> ...'");
                check_name(tok[1]);
                WordComb v = parse_letter_comb(rhs);
                for (const auto& [w, c] : v) check_name(w.letters[0]);
                spec.f[tok[1]] = v;
                spec.has_f = true;
            } else if (tok[0] == "star" || tok[0] == "br") {
                if (arrow == std::string::npos || tok.size() != 3) fail("expected '" + tok[0] + " d e -> ...'");
                check_name(tok[1]);
                check_name(tok[2]);
                WordComb v = parse_letter_comb(rhs);
                for (const auto& [w, c] : v) check_name(w.letters[0]);
                auto& table = tok[0] == "star" ? spec.degneg1.star : spec.degneg1.bracket;
                table[{tok[1], tok[2]}] = v;
                spec.has_degneg1 = true;
            } else {
                fail("unknown directive '" + tok[0] + "'");
            }
        } catch (const ParseError& e) {
            std::string msg = e.what();
            if (msg.rfind("line ", 0) == 0) throw;
            fail(msg);
        }
    }
    if (!declared.empty()) {
        for (const auto& l : letters) {
            if (std::find(declared.begin(), declared.end(), l) == declared.end()) {
                throw ParseError("letter '" + l + "' is not in the declared alphabet");
            }
        }
        spec.alphabet = declared;
    } else {
        spec.alphabet.assign(letters.begin(), letters.end());
    }
    spec.degneg1.alphabet = spec.alphabet;
    return spec;
}

}  // namespace comprelie
