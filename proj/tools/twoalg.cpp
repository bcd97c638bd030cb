// Command line front end. Exit codes: 0 all checks pass, 1 axiom violation
// (the report shows witnesses), 2 usage or parse error.

#include "twoalg/equivalence.hpp"
#include "twoalg/mult_alg.hpp"
#include "twoalg/oracle.hpp"
#include "twoalg/selftest.hpp"
#include "twoalg/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace twoalg;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << bytes;
}

Structure load(const std::string& path) {
    return parse_structure(read_file(path));
}

Vec parse_coords(const std::string& text) {
    Vec v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stoll(item));
    return v;
}

int report_exit(const Report& rep) {
    std::cout << rep.to_string();
    return rep.ok() ? 0 : 1;
}

int run_check(const std::string& path, bool exhaustive, std::uint64_t cap) {
    Structure s = load(path);
    if (auto* a = std::get_if<FiniteAlgebra>(&s)) {
        Report rep = exhaustive ? check_algebra_exhaustive(*a, cap) : check_algebra(*a);
        rep.subject = path;
        return report_exit(rep);
    }
    if (auto* x = std::get_if<CrossedModule>(&s)) {
        Report rep = exhaustive ? check_crossed_module_exhaustive(*x, cap)
                                : check_crossed_module(*x);
        rep.subject = path;
        std::cout << rep.to_string();
        switch (classify_crossed_module(rep)) {
            case XModClass::crossed: std::cout << "class: crossed\n"; break;
            case XModClass::precrossed: std::cout << "class: pre-crossed\n"; break;
            case XModClass::invalid: std::cout << "class: invalid\n"; break;
        }
        return rep.ok() ? 0 : 1;
    }
    if (auto* a = std::get_if<TwoAlgebra>(&s)) {
        TwoAlgebraCheckOptions opts;
        opts.exhaustive = exhaustive;
        opts.elem_cap = cap;
        Report rep = check_two_algebra(*a, opts);
        rep.subject = path;
        return report_exit(rep);
    }
    if (auto* f = std::get_if<XModMorphism>(&s)) {
        Report rep = check_xmod_morphism(*f);
        rep.subject = path;
        return report_exit(rep);
    }
    if (auto* f = std::get_if<TwoAlgMorphism>(&s)) {
        Report rep = check_two_alg_morphism(*f);
        rep.subject = path;
        return report_exit(rep);
    }
    if (auto* d = std::get_if<DerivationDatum>(&s)) {
        Report rep = check_derivation(d->derivation());
        rep.subject = path;
        return report_exit(rep);
    }
    if (auto* h = std::get_if<TwoAlgHomotopy>(&s)) {
        Report rep = check_two_alg_homotopy(*h);
        rep.subject = path;
        return report_exit(rep);
    }
    throw std::logic_error("unhandled structure kind");
}

ActionTensor default_or_file_action(const FiniteAlgebra& r, const FiniteAlgebra& mod,
                                    const std::string& action_path) {
    ActionTensor act(r, mod);
    if (!action_path.empty()) {
        auto j = nlohmann::json::parse(read_file(action_path));
        if (!j.is_array()) throw std::runtime_error("action file must hold a JSON array");
        for (const auto& e : j) {
            if (!e.is_array() || e.size() != 4)
                throw std::runtime_error("action entries must be [i,j,l,value]");
            act.at(e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<std::size_t>()) =
                residue(e[3].get<Coeff>(), r.modulus());
        }
        return act;
    }
    if (r.rank == 1 && r.unit && (*r.unit)[0] == 1) {
        for (std::size_t j = 0; j < mod.rank; ++j) act.at(0, j, j) = 1;
        return act;
    }
    throw std::runtime_error(
        "--action FILE is required unless R is the rank-1 ground ring with unit (1)");
}

int run_construct(const std::string& what, const std::vector<std::string>& inputs,
                  const std::vector<std::string>& gens, const std::string& action_path,
                  const std::string& out_path) {
    if (what == "ideal") {
        FiniteAlgebra r = parse_algebra(read_file(inputs.at(0)));
        std::vector<Vec> gen_vecs;
        for (const auto& g : gens) gen_vecs.push_back(parse_coords(g));
        CrossedModule x = from_ideal(r, gen_vecs);
        write_file(out_path, serialize(x));
        std::cout << "wrote " << out_path << " (ideal crossed module, rank C = " << x.c.rank
                  << ")\n";
        return 0;
    }
    if (what == "zero") {
        FiniteAlgebra mod = parse_algebra(read_file(inputs.at(0)));
        FiniteAlgebra r = parse_algebra(read_file(inputs.at(1)));
        CrossedModule x = from_module(mod, r, default_or_file_action(r, mod, action_path));
        write_file(out_path, serialize(x));
        std::cout << "wrote " << out_path << " (zero-boundary crossed module)\n";
        return 0;
    }
    if (what == "mult") {
        FiniteAlgebra c = parse_algebra(read_file(inputs.at(0)));
        CrossedModule x = from_multiplication(c);
        write_file(out_path, serialize(x));
        std::cout << "wrote " << out_path << " (multiplication crossed module, rank M(C) = "
                  << x.r.rank << ")\n";
        return 0;
    }
    throw std::runtime_error("unknown construct kind: " + what);
}

int run_to_2alg(const std::string& path, const std::string& out_path) {
    Structure s = load(path);
    if (auto* x = std::get_if<CrossedModule>(&s)) {
        Report rep = check_crossed_module(*x);
        XModClass cls = classify_crossed_module(rep);
        if (cls == XModClass::invalid) {
            std::cout << rep.to_string();
            std::cerr << "input is not a (pre-)crossed module\n";
            return 1;
        }
        if (cls == XModClass::precrossed)
            std::cout << "note: input is only pre-crossed; interchange not guaranteed\n";
        write_file(out_path, serialize(psi(*x)));
        std::cout << "wrote " << out_path << "\n";
        return 0;
    }
    if (auto* f = std::get_if<XModMorphism>(&s)) {
        write_file(out_path, serialize(psi_mor(*f)));
        std::cout << "wrote " << out_path << "\n";
        return 0;
    }
    throw std::runtime_error("to-2alg expects an xmod or xmod_morphism file");
}

int run_to_xmod(const std::string& path, const std::string& out_path) {
    Structure s = load(path);
    if (auto* a = std::get_if<TwoAlgebra>(&s)) {
        Report rep = check_two_algebra(*a);
        if (!rep.ok()) {
            std::cout << rep.to_string();
            std::cerr << "input is not a valid 2-algebra\n";
            return 1;
        }
        write_file(out_path, serialize(gamma(*a)));
        std::cout << "wrote " << out_path << "\n";
        return 0;
    }
    if (auto* f = std::get_if<TwoAlgMorphism>(&s)) {
        write_file(out_path, serialize(gamma_mor(*f)));
        std::cout << "wrote " << out_path << "\n";
        return 0;
    }
    throw std::runtime_error("to-xmod expects a 2alg or 2alg_morphism file");
}

void print_map(const char* name, const LinearMap& f) {
    std::cout << name << " =";
    for (std::size_t i = 0; i < f.rows; ++i) {
        std::cout << (i == 0 ? " [" : "; ");
        for (std::size_t j = 0; j < f.cols; ++j) std::cout << (j ? "," : "") << f.at(i, j);
    }
    std::cout << "]\n";
}

int run_roundtrip(const std::string& path) {
    Structure s = load(path);
    RoundTripWitness w;
    if (auto* x = std::get_if<CrossedModule>(&s)) {
        Report rep = check_crossed_module(*x);
        if (!rep.ok()) {
            std::cout << rep.to_string();
            return 1;
        }
        w = roundtrip_xmod(*x);
    } else if (auto* a = std::get_if<TwoAlgebra>(&s)) {
        Report rep = check_two_algebra(*a);
        if (!rep.ok()) {
            std::cout << rep.to_string();
            return 1;
        }
        w = phi_iso(*a);
    } else {
        throw std::runtime_error("roundtrip expects an xmod or 2alg file");
    }
    print_map("forward.f1", w.forward1);
    print_map("forward.f0", w.forward0);
    print_map("backward.f1", w.backward1);
    print_map("backward.f0", w.backward0);
    return report_exit(w.report);
}

int run_homotopy(const std::string& action, const std::vector<std::string>& files,
                 const std::string& out_path) {
    if (action == "check") {
        Structure s = load(files.at(0));
        if (auto* d = std::get_if<DerivationDatum>(&s)) {
            Report rep = check_derivation(d->derivation());
            rep.subject = files.at(0);
            if (rep.ok()) {
                XModHomotopy h = homotopy_target(d->f, d->derivation());
                print_map("target.g1", h.g.f1);
                print_map("target.g0", h.g.f0);
            }
            return report_exit(rep);
        }
        if (auto* h = std::get_if<TwoAlgHomotopy>(&s)) {
            Report rep = check_two_alg_homotopy(*h);
            rep.subject = files.at(0);
            return report_exit(rep);
        }
        throw std::runtime_error("homotopy check expects a derivation or 2alg_homotopy file");
    }
    if (action == "compose") {
        Structure s1 = load(files.at(0));
        Structure s2 = load(files.at(1));
        if (auto* d1 = std::get_if<DerivationDatum>(&s1)) {
            auto* d2 = std::get_if<DerivationDatum>(&s2);
            if (!d2) throw std::runtime_error("cannot compose a derivation with a 2alg homotopy");
            XModHomotopy h1 = homotopy_target(d1->f, d1->derivation());
            XModHomotopy h2 = homotopy_target(d2->f, d2->derivation());
            XModHomotopy sum = add_derivations(h1, h2);
            write_file(out_path, serialize(DerivationDatum{sum.f, sum.d.map}));
            std::cout << "wrote " << out_path << "\n";
            return 0;
        }
        auto* h1 = std::get_if<TwoAlgHomotopy>(&s1);
        auto* h2 = std::get_if<TwoAlgHomotopy>(&s2);
        if (!h1 || !h2) throw std::runtime_error("homotopy compose expects two files of one kind");
        write_file(out_path, serialize(star(*h1, *h2)));
        std::cout << "wrote " << out_path << "\n";
        return 0;
    }
    if (action == "to-2alg") {
        Structure s = load(files.at(0));
        auto* d = std::get_if<DerivationDatum>(&s);
        if (!d) throw std::runtime_error("homotopy to-2alg expects a derivation file");
        XModHomotopy h = homotopy_target(d->f, d->derivation());
        write_file(out_path, serialize(psi_htpy(h)));
        std::cout << "wrote " << out_path << "\n";
        return 0;
    }
    if (action == "to-xmod") {
        Structure s = load(files.at(0));
        auto* h = std::get_if<TwoAlgHomotopy>(&s);
        if (!h) throw std::runtime_error("homotopy to-xmod expects a 2alg_homotopy file");
        Report rep = check_two_alg_homotopy(*h);
        if (!rep.ok()) {
            std::cout << rep.to_string();
            return 1;
        }
        XModHomotopy back = gamma_htpy(*h);
        write_file(out_path, serialize(DerivationDatum{back.f, back.d.map}));
        std::cout << "wrote " << out_path << "\n";
        return 0;
    }
    throw std::runtime_error("unknown homotopy action: " + action);
}

int run_enumerate(const std::string& what, const std::vector<std::string>& files, Coeff modulus,
                  std::size_t rank_c, std::size_t rank_r, bool unital, std::uint64_t cap) {
    auto dump_line = [](const Structure& s) {
        auto j = nlohmann::ordered_json::parse(serialize(s));
        std::cout << "  " << j.dump() << "\n";
    };
    if (what == "algebras") {
        auto algebras = enumerate_algebras(modulus, rank_c, unital, cap);
        std::cout << "algebras: " << algebras.size() << "\n";
        for (const auto& a : algebras) dump_line(Structure{a});
        return 0;
    }
    if (what == "actions") {
        FiniteAlgebra r = parse_algebra(read_file(files.at(0)));
        FiniteAlgebra c = parse_algebra(read_file(files.at(1)));
        auto actions = enumerate_actions(r, c, cap);
        std::cout << "actions: " << actions.size() << "\n";
        for (const auto& act : actions) {
            nlohmann::ordered_json j = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < r.rank; ++i)
                for (std::size_t jj = 0; jj < c.rank; ++jj)
                    for (std::size_t l = 0; l < c.rank; ++l)
                        if (act.at(i, jj, l) != 0)
                            j.push_back({i, jj, l, act.at(i, jj, l)});
            std::cout << "  " << j.dump() << "\n";
        }
        return 0;
    }
    if (what == "xmods") {
        XModCensus census;
        if (files.size() >= 2) {
            FiniteAlgebra r = parse_algebra(read_file(files.at(0)));
            FiniteAlgebra c = parse_algebra(read_file(files.at(1)));
            census = enumerate_crossed_modules(r, c, cap);
        } else {
            for (std::size_t rc = 0; rc <= rank_c; ++rc)
                for (std::size_t rr = 0; rr <= rank_r; ++rr)
                    for (const auto& c : enumerate_algebras(modulus, rc, false, cap))
                        for (const auto& r : enumerate_algebras(modulus, rr, true, cap)) {
                            XModCensus part = enumerate_crossed_modules(r, c, cap);
                            for (auto& x : part.crossed) census.crossed.push_back(std::move(x));
                            for (auto& x : part.precrossed_only)
                                census.precrossed_only.push_back(std::move(x));
                        }
        }
        std::cout << "crossed: " << census.crossed.size() << "\n";
        std::cout << "pre-crossed only: " << census.precrossed_only.size() << "\n";
        return 0;
    }
    if (what == "derivations") {
        XModMorphism f = parse_xmod_morphism(read_file(files.at(0)));
        auto ds = enumerate_derivations(f, cap);
        std::cout << "derivations: " << ds.size() << "\n";
        for (const auto& d : ds) dump_line(Structure{DerivationDatum{f, d.map}});
        return 0;
    }
    if (what == "2alg-homotopies") {
        TwoAlgMorphism f = parse_two_alg_morphism(read_file(files.at(0)));
        TwoAlgMorphism g = parse_two_alg_morphism(read_file(files.at(1)));
        auto hs = enumerate_two_alg_homotopies(f, g, cap);
        std::cout << "homotopies: " << hs.size() << "\n";
        for (const auto& h : hs) dump_line(Structure{h});
        return 0;
    }
    throw std::runtime_error("unknown enumeration target: " + what);
}

int run_selftest(const std::string& corpus_dir) {
    auto results = run_acceptance(corpus_dir);
    bool all = true;
    for (const auto& r : results) {
        // timings go to stderr so stdout stays byte-identical across runs
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name
                  << " (" << r.detail << ")\n";
        std::cerr << "criterion " << r.id << ": " << r.seconds << "s\n";
        all = all && r.pass;
    }
    std::cout << (all ? "selftest: all criteria pass\n" : "selftest: FAILURES\n");
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crossed modules and strict 2-algebras over Z/m"};
    app.require_subcommand(1);

    std::string file, file2, out_path = "out.json", corpus_dir = "corpus";
    std::vector<std::string> files, gens;
    std::string what, action_path;
    bool exhaustive = false, unital = false;
    std::uint64_t cap = twoalg::kDefaultCap;
    twoalg::Coeff modulus = 2;
    std::size_t rank_c = 1, rank_r = 1;

    auto* check = app.add_subcommand("check", "validate a structure file");
    check->add_option("file", file)->required();
    check->add_flag("--exhaustive", exhaustive, "element-level checks under the cap");
    check->add_option("--cap", cap, "element enumeration cap");

    auto* construct = app.add_subcommand("construct", "build a crossed module");
    construct->add_option("kind", what, "ideal | zero | mult")->required();
    construct->add_option("inputs", files, "input algebra files");
    construct->add_option("--gens", gens, "ideal generator coordinates, e.g. 0,1");
    construct->add_option("--action", action_path, "sparse action tensor file");
    construct->add_option("-o,--out", out_path);

    auto* to2 = app.add_subcommand("to-2alg", "apply the semidirect-product functor");
    to2->add_option("file", file)->required();
    to2->add_option("-o,--out", out_path);

    auto* tox = app.add_subcommand("to-xmod", "apply the kernel functor");
    tox->add_option("file", file)->required();
    tox->add_option("-o,--out", out_path);

    auto* rt = app.add_subcommand("roundtrip", "verify the equivalence round trip");
    rt->add_option("file", file)->required();

    auto* ho = app.add_subcommand("homotopy", "check, compose or transport homotopies");
    ho->add_option("action", what, "check | compose | to-xmod | to-2alg")->required();
    ho->add_option("files", files);
    ho->add_option("-o,--out", out_path);

    auto* en = app.add_subcommand("enumerate", "brute-force oracles");
    en->add_option("what", what, "algebras | actions | xmods | derivations | 2alg-homotopies")
        ->required();
    en->add_option("files", files);
    en->add_option("--modulus", modulus);
    en->add_option("--rank-c", rank_c);
    en->add_option("--rank-r", rank_r);
    en->add_flag("--unital", unital);
    en->add_option("--cap", cap);

    auto* st = app.add_subcommand("selftest", "run the acceptance corpus");
    st->add_option("--corpus", corpus_dir, "bundled corpus directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return run_check(file, exhaustive, cap);
        if (construct->parsed()) return run_construct(what, files, gens, action_path, out_path);
        if (to2->parsed()) return run_to_2alg(file, out_path);
        if (tox->parsed()) return run_to_xmod(file, out_path);
        if (rt->parsed()) return run_roundtrip(file);
        if (ho->parsed()) return run_homotopy(what, files, out_path);
        if (en->parsed()) return run_enumerate(what, files, modulus, rank_c, rank_r, unital, cap);
        if (st->parsed()) return run_selftest(corpus_dir);
    } catch (const twoalg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
