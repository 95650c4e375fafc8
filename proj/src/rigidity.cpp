#include "comprelie/rigidity.hpp"

#include <functional>

#include "comprelie/errors.hpp"

namespace comprelie {

namespace {

std::string letter_name(std::size_t n, std::size_t i) { return "v" + std::to_string(n) + "_" + std::to_string(i + 1); }

Elem homogeneous_part(const Elem& x, std::size_t n) {
    Elem out;
    for (const auto& [t, c] : x) {
        if (t.vertex_count() == n) out.add_term(t, c);
    }
    return out;
}

}  // namespace

Rigidity::Rigidity(Algebra a, std::vector<std::string> labels, std::size_t max_degree)
    : alg_(a), labels_(std::move(labels)), N_(max_degree) {
    if (a == Algebra::ucp) throw InvalidArgument("the rigidity construction needs CP or H_CK");
    check_degree(N_, "rigidity degree");
    for (std::size_t n = 0; n <= N_; ++n) {
        basis_.push_back(comprelie::basis(a, n, labels_));
        prims_.push_back(n == 0 ? std::vector<Elem>{} : primitive_basis(a, n, labels_));
    }
    for (std::size_t n = 1; n <= N_; ++n) {
        const auto& P = prims_[n];
        // Coordinates in the primitive basis.
        Indexer<PForest> idx;
        Eliminator el;
        for (const auto& p : P) el.insert(idx.to_vec(p));
        for (std::size_t i = 0; i < P.size(); ++i) {
            letters_[letter_name(n, i)] = P[i];
            letter_deg_[letter_name(n, i)] = n;
        }
        // Solve f_A(y) = p for each basis primitive p, in the span of the images.
        Eliminator fa;
        std::vector<Elem> images;
        for (const auto& p : P) {
            images.push_back(prelie(a, p, unit()));
            fa.insert(idx.to_vec(images.back()));
        }
        for (std::size_t i = 0; i < P.size(); ++i) {
            auto sol = fa.solve(idx.to_vec(P[i]));
            if (!sol) throw InvalidArgument("f_A is not surjective in degree " + std::to_string(n));
            Elem y;
            for (const auto& [j, c] : *sol) y.axpy(c, P[j]);
            g_[letter_name(n, i)] = y;
        }
    }
}

std::size_t Rigidity::weight(const Word& w) const {
    std::size_t s = 0;
    for (const auto& l : w.letters) s += letter_deg_.at(l);
    return s;
}

std::vector<Word> Rigidity::words(std::size_t n) const {
    std::vector<Word> out;
    Word cur;
    std::function<void(std::size_t)> rec = [&](std::size_t left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t d = 1; d <= left; ++d) {
            for (std::size_t i = 0; i < prims_[d].size(); ++i) {
                cur.letters.push_back(letter_name(d, i));
                rec(left - d);
                cur.letters.pop_back();
            }
        }
    };
    rec(n);
    return out;
}

Elem Rigidity::omega(const Word& w) {
    if (w.empty()) return unit();
    auto it = omega_memo_.find(w);
    if (it != omega_memo_.end()) return it->second;
    Word rest{std::vector<std::string>(w.letters.begin() + 1, w.letters.end())};
    Elem r = prelie(alg_, g_.at(w.letters[0]), omega(rest));
    omega_memo_.emplace(w, r);
    return r;
}

Elem Rigidity::omega(const WordComb& x) {
    Elem out;
    for (const auto& [w, c] : x) out.axpy(c, omega(w));
    return out;
}

void Rigidity::build_elim() {
    if (elim_ready_) return;
    omega_elim_.assign(N_ + 1, Eliminator{});
    omega_cols_.assign(N_ + 1, {});
    coords_.assign(N_ + 1, Indexer<PForest>{});
    for (std::size_t n = 0; n <= N_; ++n) {
        for (const auto& t : basis_[n]) coords_[n].index(t);
        for (const auto& w : words(n)) {
            omega_cols_[n].push_back(w);
            omega_elim_[n].insert(coords_[n].to_vec(omega(w)));
        }
    }
    elim_ready_ = true;
}

WordComb Rigidity::omega_inverse(const Elem& x) {
    build_elim();
    WordComb out;
    for (std::size_t n = 0; n <= N_; ++n) {
        Elem part = homogeneous_part(x, n);
        if (part.is_zero()) continue;
        auto sol = omega_elim_[n].solve(coords_[n].to_vec(part));
        if (!sol) throw InvalidArgument("element outside the image of omega");
        for (const auto& [j, c] : *sol) out.add_term(omega_cols_[n][j], c);
    }
    for (const auto& [t, c] : x) {
        if (t.vertex_count() > N_) throw ResourceError("element above the truncation degree");
    }
    return out;
}

Elem Rigidity::conv_power(const PForest& t, unsigned k) {
    if (k == 0) return t.empty() ? unit() : Elem{};
    if (t.empty()) return {};
    auto key = std::make_pair(t, k);
    auto it = conv_memo_.find(key);
    if (it != conv_memo_.end()) return it->second;
    Elem r;
    if (k == 1) {
        r = elem(t);
    } else {
        for (const auto& [p, c] : coproduct(alg_, elem(t))) {
            if (p.first.empty() || p.second.empty()) continue;
            r.axpy(c, mul(alg_, elem(p.first), conv_power(p.second, k - 1)));
        }
    }
    conv_memo_.emplace(key, r);
    return r;
}

Elem Rigidity::eulerian_psi(const Elem& x) {
    Elem out;
    for (const auto& [t, c] : x) {
        for (unsigned k = 1; k <= t.vertex_count(); ++k) {
            Rational coef(k % 2 ? 1 : -1, k);
            out.axpy(c * coef, conv_power(t, k));
        }
    }
    return out;
}

WordComb Rigidity::varpi(const Word& w) {
    auto it = varpi_memo_.find(w);
    if (it != varpi_memo_.end()) return it->second;
    WordComb r;
    if (!w.empty()) {
        for (const auto& [u, c] : omega_inverse(eulerian_psi(omega(w)))) {
            if (u.size() == 1) r.add_term(u, c);
        }
    }
    varpi_memo_.emplace(w, r);
    return r;
}

WordComb Rigidity::F_varpi(const Word& w) {
    if (w.empty()) return WordComb::basis(Word{});
    WordComb out;
    // Compositions of w: the first factor has length i.
    for (std::size_t i = 1; i <= w.size(); ++i) {
        Word head{std::vector<std::string>(w.letters.begin(), w.letters.begin() + static_cast<long>(i))};
        Word tail{std::vector<std::string>(w.letters.begin() + static_cast<long>(i), w.letters.end())};
        WordComb h = varpi(head);
        if (h.is_zero()) continue;
        out += concat(h, F_varpi(tail));
    }
    return out;
}

WordComb Rigidity::F(const Elem& x) {
    WordComb out;
    for (const auto& [w, c] : omega_inverse(x)) out.axpy(c, F_varpi(w));
    return out;
}

std::vector<Rigidity::Slice> Rigidity::slices() {
    build_elim();
    std::vector<Slice> out;
    for (std::size_t n = 0; n <= N_; ++n) {
        out.push_back({n, basis_[n].size(), omega_cols_[n].size(), omega_elim_[n].rank()});
    }
    return out;
}

LawResult Rigidity::check_omega_coalgebra() {
    LawResult r{"omega-coalgebra"};
    for (std::size_t n = 0; n <= N_ && r.pass; ++n) {
        for (const auto& w : words(n)) {
            ++r.checked;
            Tensor rhs;
            for (std::size_t i = 0; i <= w.size(); ++i) {
                Word a{std::vector<std::string>(w.letters.begin(), w.letters.begin() + static_cast<long>(i))};
                Word b{std::vector<std::string>(w.letters.begin() + static_cast<long>(i), w.letters.end())};
                rhs += tensor(omega(a), omega(b));
            }
            if (!(coproduct(alg_, omega(w)) == rhs)) {
                r.pass = false;
                r.witness = serialize(w);
                break;
            }
        }
    }
    return r;
}

LawResult Rigidity::check_multiplicative() {
    LawResult r{"F-multiplicative"};
    for (std::size_t n = 0; n <= N_ && r.pass; ++n) {
        for (const auto& x : basis_[n]) {
            WordComb fx = F(elem(x));
            for (std::size_t m = 0; n + m <= N_ && r.pass; ++m) {
                for (const auto& y : basis_[m]) {
                    ++r.checked;
                    if (!(F(mul(alg_, elem(x), elem(y))) == shuffle(fx, F(elem(y))))) {
                        r.pass = false;
                        r.witness = "x=" + x.key() + " y=" + y.key();
                        break;
                    }
                }
            }
        }
    }
    return r;
}

LawResult Rigidity::check_F_coalgebra() {
    LawResult r{"F-coalgebra"};
    for (std::size_t n = 0; n <= N_ && r.pass; ++n) {
        for (const auto& x : basis_[n]) {
            ++r.checked;
            WordTensor rhs;
            for (const auto& [p, c] : coproduct(alg_, elem(x))) rhs += tensor(F(elem(p.first)), F(elem(p.second))) * c;
            if (!(deconcat(F(elem(x))) == rhs)) {
                r.pass = false;
                r.witness = x.key();
                break;
            }
        }
    }
    return r;
}

LawResult Rigidity::check_varpi() {
    LawResult r{"varpi"};
    for (std::size_t n = 1; n <= N_ && r.pass; ++n) {
        for (const auto& w : words(n)) {
            ++r.checked;
            WordComb proj;
            for (const auto& [u, c] : F_varpi(w)) {
                if (u.size() == 1) proj.add_term(u, c);
            }
            bool ok = proj == varpi(w);
            if (w.size() == 1) ok = ok && F_varpi(w) == WordComb::basis(w);
            if (!ok) {
                r.pass = false;
                r.witness = serialize(w);
                break;
            }
        }
    }
    return r;
}

std::vector<LawResult> Rigidity::check_psi() {
    LawResult fix{"psi-fixes-primitives"}, kill{"psi-kills-products"}, idem{"psi-idempotent"};
    for (std::size_t n = 1; n <= N_; ++n) {
        for (const auto& p : prims_[n]) {
            ++fix.checked;
            if (fix.pass && !(eulerian_psi(p) == p)) {
                fix.pass = false;
                fix.witness = to_string(p);
            }
        }
        for (const auto& x : basis_[n]) {
            ++idem.checked;
            Elem px = eulerian_psi(elem(x));
            if (idem.pass && !(eulerian_psi(px) == px)) {
                idem.pass = false;
                idem.witness = x.key();
            }
            for (std::size_t m = 1; n + m <= N_; ++m) {
                for (const auto& y : basis_[m]) {
                    ++kill.checked;
                    if (kill.pass && !eulerian_psi(mul(alg_, elem(x), elem(y))).is_zero()) {
                        kill.pass = false;
                        kill.witness = "x=" + x.key() + " y=" + y.key();
                    }
                }
            }
        }
    }
    return {fix, kill, idem};
}

LawResult Rigidity::check_psi_primitive() {
    LawResult r{"psi-image-primitive"};
    for (std::size_t n = 1; n <= N_ && r.pass; ++n) {
        for (const auto& x : basis_[n]) {
            ++r.checked;
            if (!reduced_coproduct(alg_, eulerian_psi(elem(x))).is_zero()) {
                r.pass = false;
                r.witness = x.key();
                break;
            }
        }
    }
    return r;
}

bool ucp_primitive_extension_feasible(const std::string& d, const std::string& e) {
    const std::vector<std::string> labels{d, e};
    auto zero_counters = [](const PForest& t) {
        for (const auto& dec : t.flatten().dec) {
            if (dec.counter != 0) return false;
        }
        return true;
    };
    Indexer<std::pair<PForest, PForest>> idx;
    Eliminator el;
    for (const auto& t : basis(Algebra::ucp, 2, labels, 0)) {
        SparseVec col;
        for (const auto& [k, c] : reduced_coproduct(Algebra::ucp, elem(t))) {
            if (zero_counters(k.first) && zero_counters(k.second)) col[idx.index(k)] = c;
        }
        el.insert(col);
    }
    std::pair<PForest, PForest> target{PForest::vertex(Dec{d, 0}), PForest::vertex(Dec{e, 0})};
    return el.solve(SparseVec{{idx.index(target), Rational(1)}}).has_value();
}

}  // namespace comprelie
