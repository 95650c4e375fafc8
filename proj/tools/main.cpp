#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "comprelie/axioms.hpp"
#include "comprelie/dual.hpp"
#include "comprelie/errors.hpp"
#include "comprelie/rigidity.hpp"
#include "comprelie/shuffle.hpp"
#include "comprelie/ucp.hpp"

using namespace comprelie;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr std::size_t kDefaultBound = 5;

struct Common {
    std::size_t labels = 1;
    std::string alphabet;
    bool force = false;
    unsigned jobs = 1;
    unsigned seed = 1;

    std::vector<std::string> label_list() const {
        if (alphabet.empty()) return default_labels(labels);
        std::vector<std::string> out;
        std::stringstream ss(alphabet);
        for (std::string item; std::getline(ss, item, ',');) {
            if (item.empty()) throw ParseError("empty label in --alphabet");
            out.push_back(item);
        }
        return out;
    }

    void bound(std::size_t value, const std::string& what) const {
        if (!force && value > kDefaultBound) {
            throw ResourceError(what + " " + std::to_string(value) + " exceeds " + std::to_string(kDefaultBound) +
                                " (use --force)");
        }
        check_degree(static_cast<int>(value), what);
    }
};

Elem parse_elem(const std::string& text) { return parse_lincomb<PForest>(text, parse_forest); }
WordComb parse_words(const std::string& text) { return parse_lincomb<Word>(text, parse_word); }

ProductSpec read_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read spec file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_product_spec(ss.str());
}

bool is_word_algebra(const std::string& a) { return a == "tvf" || a == "degneg1"; }

AlgebraHandle<Word> word_algebra(const std::string& a, const std::string& spec_path,
                                 const std::vector<std::string>& labels) {
    if (spec_path.empty()) {
        if (a == "tvf") return tvf_handle(FMatrix::identity(labels));
        throw ParseError("--spec is required for degneg1");
    }
    ProductSpec spec = read_spec(spec_path);
    if (a == "tvf") {
        if (!spec.has_f) throw ParseError("spec file has no f lines");
        return tvf_handle(spec.f_matrix());
    }
    if (!spec.has_degneg1) throw ParseError("spec file has no star/br lines");
    return degneg1_handle(spec.degneg1);
}

void print_laws(const std::vector<LawResult>& rs, const std::string& alg, std::size_t maxdeg, bool& failed) {
    for (const auto& r : rs) {
        std::cout << format_law(r, alg, maxdeg) << "\n";
        failed |= !r.pass;
    }
}

Mutation parse_mutation(const std::string& name) {
    for (Mutation m : {Mutation::drop_prelie_term, Mutation::skew_product, Mutation::extra_coproduct_term,
                       Mutation::drop_coproduct_unit, Mutation::unit_leak}) {
        if (to_string(m) == name) return m;
    }
    throw ParseError("unknown mutation '" + name + "'");
}

EnumMode parse_mode(const std::string& m) {
    if (m == "partitioned") return EnumMode::partitioned;
    if (m == "one-rooted" || m == "one_rooted") return EnumMode::one_rooted;
    if (m == "plain") return EnumMode::plain;
    if (m == "forest") return EnumMode::forest;
    throw ParseError("unknown mode '" + m + "'");
}

IndexWord parse_index_word(const std::string& text) {
    IndexWord w;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty()) throw ParseError("empty index in --word");
        w.letters.push_back(item);
    }
    if (w.letters.empty()) throw ParseError("empty index word");
    return w;
}

void add_common(CLI::App* sub, Common& c, bool with_labels = true) {
    if (with_labels) {
        sub->add_option("--labels", c.labels, "Use the labels d1..dk");
        sub->add_option("--alphabet", c.alphabet, "Comma-separated labels");
    }
    sub->add_flag("--force", c.force, "Lift the default degree bound");
    sub->add_option("--jobs", c.jobs, "Worker threads for sweeps");
    sub->add_option("--seed", c.seed, "Seed for sampled checks");
}

int run(int argc, char** argv) {
    CLI::App app{"Com-PreLie algebras and bialgebras on partitioned trees and words"};
    app.require_subcommand(1);
    Common c;

    // enum
    auto* en = app.add_subcommand("enum", "List isoclasses of n-vertex trees");
    std::size_t n = 0;
    std::string mode = "partitioned";
    unsigned max_counter = 0;
    en->add_option("--n", n, "Number of vertices")->required();
    en->add_option("--mode", mode, "partitioned | one-rooted | plain | forest");
    en->add_option("--max-counter", max_counter, "Counters 0..c (UCP decorations)");
    add_common(en, c);

    // eval
    auto* ev = app.add_subcommand("eval", "Evaluate a product");
    std::string algebra = "ucp", op = "prelie", spec_path;
    std::string x_text, y_text;
    ev->add_option("--algebra", algebra, "ucp | cp | hck | tvf | degneg1");
    ev->add_option("--op", op, "mul | prelie");
    ev->add_option("--spec", spec_path, "Product spec file for word algebras");
    ev->add_option("x", x_text, "Left argument")->required();
    ev->add_option("y", y_text, "Right argument")->required();
    add_common(ev, c);

    // coprod
    auto* co = app.add_subcommand("coprod", "Coproduct of an element");
    bool reduced = false;
    co->add_option("--algebra", algebra, "ucp | cp | hck | tvf");
    co->add_flag("--reduced", reduced, "Drop the primitive part x(x)1 + 1(x)x");
    co->add_option("x", x_text, "Element")->required();
    add_common(co, c);

    // delta
    auto* de = app.add_subcommand("delta", "Permutative coproduct of a partitioned tree");
    bool gcp = false;
    de->add_flag("--gcp", gcp, "Only one-rooted right legs (the coproduct on g_CP)");
    de->add_option("x", x_text, "Element")->required();
    add_common(de, c, false);

    // kerdelta
    auto* kd = app.add_subcommand("kerdelta", "Dimension of Ker(delta) in a degree");
    std::size_t degree = 1;
    kd->add_option("--degree", degree, "Degree")->required();
    add_common(kd, c);

    // cm
    auto* cm = app.add_subcommand("cm", "Connes-Moscovici generators");
    std::string word_text;
    bool direct = false, generator = false;
    cm->add_option("--word", word_text, "Comma-separated index word")->required();
    cm->add_flag("--direct", direct, "Compute through the coproduct of H_CK");
    cm->add_flag("--generator", generator, "Print the generator instead of its coproduct");
    add_common(cm, c, false);

    // diamond
    auto* di = app.add_subcommand("diamond", "Dual preLie product");
    std::string which = "cp";
    di->add_option("--algebra", which, "ucp | cp | ext");
    di->add_option("x", x_text, "Left argument")->required();
    di->add_option("y", y_text, "Right argument")->required();
    add_common(di, c, false);

    // theta, psi
    auto* th = app.add_subcommand("theta", "Hopf isomorphism onto decorated H_CK");
    th->add_option("x", x_text, "Element of CP")->required();
    add_common(th, c, false);
    auto* ps = app.add_subcommand("psi", "Com-PreLie isomorphism of CP");
    bool inverse = false;
    ps->add_flag("--inverse", inverse, "Apply the inverse map");
    ps->add_option("x", x_text, "Element of CP")->required();
    add_common(ps, c, false);

    // rigidity
    auto* rg = app.add_subcommand("rigidity", "Isomorphism with a shuffle algebra");
    std::string rg_action = "iso";
    std::size_t maxdeg = 4;
    rg->add_option("action", rg_action, "iso | obstruction");
    rg->add_option("--algebra", algebra, "cp | hck");
    rg->add_option("--maxdeg", maxdeg, "Truncation degree");
    add_common(rg, c);

    // check
    auto* ck = app.add_subcommand("check", "Law sweeps");
    std::size_t samples = 0;
    std::string mutation, hyper;
    ck->add_option("--algebra", algebra, "ucp | cp | hck | tvf | degneg1 | gucp | gcp | cp-diamond");
    ck->add_option("--maxdeg", maxdeg, "Total degree bound");
    ck->add_option("--max-counter", max_counter, "Counters 0..c for ucp and gucp");
    ck->add_option("--spec", spec_path, "Product spec file for word algebras");
    ck->add_option("--hyperboloid", hyper, "a,b,c for the degree -1 fixture");
    ck->add_option("--sampled", samples, "Random combinations instead of basis tuples");
    ck->add_option("--mutate", mutation, "Corrupt the structure first (self-test)");
    add_common(ck, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }
    if (c.force) set_degree_limit(1 << 20);
    if (c.jobs == 0) c.jobs = std::max(1u, std::thread::hardware_concurrency());

    if (*en) {
        c.bound(n, "enum --n");
        for (const auto& t : enumerate(n, make_alphabet(c.label_list(), max_counter), parse_mode(mode))) {
            std::cout << t.key() << "\n";
        }
        return 0;
    }
    if (*ev) {
        if (op != "mul" && op != "prelie") throw ParseError("unknown op '" + op + "'");
        if (is_word_algebra(algebra)) {
            auto h = word_algebra(algebra, spec_path, c.label_list());
            WordComb x = parse_words(x_text), y = parse_words(y_text);
            std::cout << to_string(op == "mul" ? h.m(x, y) : h.p(x, y)) << "\n";
            return 0;
        }
        Algebra a = parse_algebra(algebra);
        Elem x = parse_elem(x_text), y = parse_elem(y_text);
        std::cout << to_string(op == "mul" ? mul(a, x, y) : prelie(a, x, y)) << "\n";
        return 0;
    }
    if (*co) {
        if (is_word_algebra(algebra)) {
            WordComb x = parse_words(x_text);
            WordTensor d = deconcat(x);
            if (reduced) {
                for (const auto& [w, cw] : x) {
                    d.add_term({w, Word{}}, -cw);
                    d.add_term({Word{}, w}, -cw);
                }
            }
            std::cout << to_string(d) << "\n";
            return 0;
        }
        Algebra a = parse_algebra(algebra);
        Elem x = parse_elem(x_text);
        std::cout << to_string(reduced ? reduced_coproduct(a, x) : coproduct(a, x)) << "\n";
        return 0;
    }
    if (*de) {
        Elem x = parse_elem(x_text);
        std::cout << to_string(gcp ? delta_gcp(x) : delta_perm(x)) << "\n";
        return 0;
    }
    if (*kd) {
        c.bound(degree, "kerdelta --degree");
        std::cout << kernel_delta_dims(degree, c.labels) << "\n";
        return 0;
    }
    if (*cm) {
        IndexWord w = parse_index_word(word_text);
        c.bound(w.letters.size(), "cm word length");
        if (generator) {
            std::cout << to_string(cm_generator(w)) << "\n";
        } else {
            std::cout << to_string(direct ? cm_coproduct_direct(w) : cm_reduced_coproduct(w)) << "\n";
        }
        return 0;
    }
    if (*di) {
        Elem x = parse_elem(x_text), y = parse_elem(y_text);
        Elem r;
        if (which == "ucp") {
            r = diamond_ucp(x, y);
        } else if (which == "cp") {
            r = diamond_cp(x, y);
        } else if (which == "ext") {
            r = diamond_ext(x, y);
        } else {
            throw ParseError("unknown diamond algebra '" + which + "'");
        }
        std::cout << to_string(r) << "\n";
        return 0;
    }
    if (*th) {
        std::cout << to_string(theta(parse_elem(x_text))) << "\n";
        return 0;
    }
    if (*ps) {
        Elem x = parse_elem(x_text);
        std::cout << to_string(inverse ? psi_inverse(x) : psi(x)) << "\n";
        return 0;
    }
    if (*rg) {
        if (rg_action == "obstruction") {
            auto labels = c.label_list();
            if (labels.size() < 2) throw InvalidArgument("the obstruction needs two labels");
            bool feasible = ucp_primitive_extension_feasible(labels[0], labels[1]);
            std::cout << "ucp-cofree-obstruction " << labels[0] << " " << labels[1] << " "
                      << (feasible ? "FEASIBLE" : "INFEASIBLE") << "\n";
            return feasible ? kExitCheckFailed : 0;
        }
        if (rg_action != "iso") throw ParseError("unknown rigidity action '" + rg_action + "'");
        c.bound(maxdeg, "rigidity --maxdeg");
        Rigidity r(parse_algebra(algebra), c.label_list(), maxdeg);
        for (const auto& s : r.slices()) {
            std::cout << "degree " << s.degree << " dim " << s.dim << " words " << s.words << " rank " << s.rank
                      << "\n";
            for (const auto& w : r.words(s.degree)) {
                std::cout << "  omega(" << serialize(w) << ") = " << to_string(r.omega(w)) << "\n";
            }
            for (const auto& t : r.basis(s.degree)) {
                std::cout << "  F(" << t.key() << ") = " << to_string(r.F(elem(t))) << "\n";
            }
        }
        bool failed = false;
        std::vector<LawResult> laws{r.check_omega_coalgebra(), r.check_F_coalgebra(), r.check_varpi(),
                                    r.check_multiplicative()};
        for (const auto& l : r.check_psi()) laws.push_back(l);
        for (const auto& s : r.slices()) failed |= s.rank != s.words || s.dim != s.words;
        print_laws(laws, algebra, maxdeg, failed);
        return failed ? kExitCheckFailed : 0;
    }
    if (*ck) {
        c.bound(maxdeg, "check --maxdeg");
        bool failed = false;
        auto labels = c.label_list();
        auto sweep = [&](auto h, bool bialgebra) {
            if (!mutation.empty()) h = mutate(h, parse_mutation(mutation));
            if (samples > 0) {
                print_laws(check_sampled(h, maxdeg, samples, c.seed), algebra, maxdeg, failed);
                return;
            }
            print_laws(check_comprelie(h, maxdeg, c.jobs), algebra, maxdeg, failed);
            if (bialgebra) print_laws(check_bialgebra_compat(h, maxdeg, c.jobs), algebra, maxdeg, failed);
        };
        if (algebra == "gucp" || algebra == "gcp") {
            auto h = algebra == "gucp" ? gucp_handle(labels, max_counter) : gcp_handle(labels);
            print_laws({check_prelie_law(h, maxdeg, c.jobs)}, algebra, maxdeg, failed);
        } else if (algebra == "cp-diamond") {
            sweep(cp_diamond_handle(labels), false);
        } else if (algebra == "degneg1" && !hyper.empty()) {
            std::vector<Rational> abc;
            std::stringstream ss(hyper);
            for (std::string item; std::getline(ss, item, ',');) abc.push_back(parse_rational(item));
            if (abc.size() != 3) throw ParseError("--hyperboloid expects a,b,c");
            DegNeg1Spec s = hyperboloid(abc[0], abc[1], abc[2]);
            auto e2 = check_eq2(s.varpi(), s.alphabet, maxdeg);
            auto e3 = check_eq3(s.varpi(), s.alphabet, maxdeg);
            print_laws({{"eq2", e2.pass, e2.witness, e2.checked}, {"eq3", e3.pass, e3.witness, e3.checked}},
                       algebra, maxdeg, failed);
            sweep(degneg1_handle(s), true);
        } else if (is_word_algebra(algebra)) {
            sweep(word_algebra(algebra, spec_path, labels), true);
        } else {
            Algebra a = parse_algebra(algebra);
            sweep(tree_handle(a, labels, a == Algebra::ucp ? max_counter : 0), true);
        }
        return failed ? kExitCheckFailed : 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InvalidArgument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitParse;
    } catch (const ResourceError& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return kExitResource;
    }
}
