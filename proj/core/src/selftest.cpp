#include "twoalg/selftest.hpp"

#include "twoalg/equivalence.hpp"
#include "twoalg/mult_alg.hpp"
#include "twoalg/serialize.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace twoalg {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

FiniteAlgebra product_ring_z2() {
    // Z/2 x Z/2: e0^2 = e0, e1^2 = e1, e0 e1 = 0, unit e0 + e1.
    FiniteAlgebra a(CoefficientRing(2), 2);
    a.c(0, 0, 0) = 1;
    a.c(1, 1, 1) = 1;
    a.unit = Vec{1, 1};
    return a;
}

ActionTensor identity_action_on_trivial(const FiniteAlgebra& r, std::size_t rank) {
    // R = ground ring acting coordinatewise on a zero-multiplication module.
    FiniteAlgebra mod = FiniteAlgebra::zero_multiplication(r.modulus(), rank);
    ActionTensor act(r, mod);
    for (std::size_t j = 0; j < rank; ++j) act.at(0, j, j) = 1;
    return act;
}

struct Z2Census {
    std::vector<FiniteAlgebra> cs, rs;
    struct Entry {
        std::size_t ci, ri;
        CrossedModule x;
    };
    std::vector<Entry> crossed, precrossed;
};

const Z2Census& z2_census() {
    static const Z2Census census = [] {
        Z2Census out;
        for (std::size_t rank = 0; rank <= 2; ++rank) {
            auto cs = enumerate_algebras(2, rank, /*require_unit=*/false, kDefaultCap);
            out.cs.insert(out.cs.end(), cs.begin(), cs.end());
            auto rs = enumerate_algebras(2, rank, /*require_unit=*/true, kDefaultCap);
            out.rs.insert(out.rs.end(), rs.begin(), rs.end());
        }
        for (std::size_t ri = 0; ri < out.rs.size(); ++ri)
            for (std::size_t ci = 0; ci < out.cs.size(); ++ci) {
                XModCensus part =
                    enumerate_crossed_modules(out.rs[ri], out.cs[ci], kDefaultCap);
                for (auto& x : part.crossed)
                    out.crossed.push_back(Z2Census::Entry{ci, ri, std::move(x)});
                for (auto& x : part.precrossed_only)
                    out.precrossed.push_back(Z2Census::Entry{ci, ri, std::move(x)});
            }
        return out;
    }();
    return census;
}

bool interchange_entries_pass(const Report& rep) {
    for (const auto& e : rep.entries)
        if ((e.axiom == "ICHG" || e.axiom == "ICHG_ELEM") && !e.pass) return false;
    return true;
}

std::string count_detail(std::initializer_list<std::pair<const char*, std::uint64_t>> counts) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : counts) {
        if (!first) os << ", ";
        os << k << " = " << v;
        first = false;
    }
    return os.str();
}

}  // namespace

std::vector<std::pair<std::string, TwoAlgebra>> example_two_algebras() {
    std::vector<std::pair<std::string, TwoAlgebra>> out;

    FiniteAlgebra z2 = FiniteAlgebra::ground(2);
    TwoAlgebra discrete{z2, z2, LinearMap::identity(2, 1), LinearMap::identity(2, 1),
                        LinearMap::identity(2, 1)};
    out.emplace_back("discrete_z2", std::move(discrete));

    out.emplace_back("mult_z2", multiplication_two_algebra(FiniteAlgebra::ground(2)));
    out.emplace_back("mult_z3", multiplication_two_algebra(FiniteAlgebra::ground(3)));
    out.emplace_back("mult_z4", multiplication_two_algebra(FiniteAlgebra::ground(4)));
    out.emplace_back("mult_z6", multiplication_two_algebra(FiniteAlgebra::ground(6)));
    out.emplace_back("mult_dual2", multiplication_two_algebra(FiniteAlgebra::dual_numbers(2)));
    out.emplace_back("mult_z2xz2", multiplication_two_algebra(product_ring_z2()));

    FiniteAlgebra dual2 = FiniteAlgebra::dual_numbers(2);
    out.emplace_back("psi_ideal_dual2", psi(from_ideal(dual2, {Vec{0, 1}})));

    FiniteAlgebra r = FiniteAlgebra::ground(2);
    out.emplace_back("psi_zero_mod1",
                     psi(from_module(FiniteAlgebra::zero_multiplication(2, 1), r,
                                     identity_action_on_trivial(r, 1))));
    out.emplace_back("psi_zero_mod2",
                     psi(from_module(FiniteAlgebra::zero_multiplication(2, 2), r,
                                     identity_action_on_trivial(r, 2))));
    return out;
}

XModCensus census_z2_rank2() {
    const Z2Census& c = z2_census();
    XModCensus out;
    for (const auto& e : c.crossed) out.crossed.push_back(e.x);
    for (const auto& e : c.precrossed) out.precrossed_only.push_back(e.x);
    return out;
}

CriterionResult criterion_forced_composition() {
    Timer timer;
    CriterionResult res{1, "forced composition uniqueness", false, "", 0.0};
    Coeff m = 2;
    std::size_t d0 = 1, d1 = 2;

    std::vector<LinearMap> stmaps = enumerate_linear_maps(m, d0, d1, kDefaultCap);
    std::vector<LinearMap> emaps = enumerate_linear_maps(m, d1, d0, kDefaultCap);
    std::vector<LinearMap> candidates = enumerate_linear_maps(m, d1, 2 * d1, kDefaultCap);
    std::vector<Vec> cells = all_vectors(m, d1, 16);

    std::uint64_t modules = 0, survivors_total = 0;
    for (const LinearMap& s : stmaps)
        for (const LinearMap& t : stmaps)
            for (const LinearMap& e : emaps) {
                if (compose(s, e) != LinearMap::identity(m, d0)) continue;
                if (compose(t, e) != LinearMap::identity(m, d0)) continue;
                ++modules;
                TwoModule tm{m, d0, d1, s, t, e};

                std::vector<std::pair<Vec, Vec>> composable;
                for (const Vec& a : cells)
                    for (const Vec& b : cells)
                        if (t.apply(a) == s.apply(b)) composable.emplace_back(a, b);

                std::size_t survivors = 0;
                bool all_match = true;
                for (const LinearMap& g : candidates) {
                    auto compose_candidate = [&](const Vec& a, const Vec& b) {
                        Vec ab = a;
                        ab.insert(ab.end(), b.begin(), b.end());
                        return g.apply(ab);
                    };
                    bool laws = true;
                    for (const auto& [a, b] : composable) {
                        Vec ab = compose_candidate(a, b);
                        if (s.apply(ab) != s.apply(a) || t.apply(ab) != t.apply(b)) {
                            laws = false;
                            break;
                        }
                    }
                    if (laws)
                        for (const Vec& a : cells) {
                            if (compose_candidate(e.apply(s.apply(a)), a) != a ||
                                compose_candidate(a, e.apply(t.apply(a))) != a) {
                                laws = false;
                                break;
                            }
                        }
                    if (!laws) continue;
                    ++survivors;
                    for (const auto& [a, b] : composable)
                        if (compose_candidate(a, b) != compose_cells(tm, a, b)) {
                            all_match = false;
                            break;
                        }
                }
                if (survivors == 0 || !all_match) {
                    res.detail = "a 2-module admits a law-abiding composition differing from "
                                 "a + b - e(s(b))";
                    res.seconds = timer.elapsed();
                    return res;
                }
                survivors_total += survivors;
            }

    res.seconds = timer.elapsed();
    res.pass = modules > 0 && res.seconds < 10.0;
    res.detail = count_detail({{"2-modules", modules}, {"surviving candidates", survivors_total}});
    return res;
}

CriterionResult criterion_kernel_composition() {
    Timer timer;
    CriterionResult res{2, "composition with kernel cells is addition", false, "", 0.0};
    std::uint64_t pairs = 0;
    for (const auto& [name, a] : example_two_algebras()) {
        Submodule ker_s = cell_kernel(a);
        Submodule ker_t = kernel(a.t);
        for (const Vec& x : ker_t.elements(4096))
            for (const Vec& b : ker_s.elements(4096)) {
                Vec composed = compose_cells(a, x, b);
                if (composed != vec_add(x, b, a.modulus())) {
                    res.detail = "a o b != a + b in " + name;
                    res.seconds = timer.elapsed();
                    return res;
                }
                ++pairs;
            }
    }
    res.seconds = timer.elapsed();
    res.pass = pairs >= 100;
    res.detail = count_detail({{"pairs checked", pairs}});
    return res;
}

CriterionResult criterion_roundtrips() {
    Timer timer;
    CriterionResult res{3, "round trips of the equivalence", false, "", 0.0};
    const Z2Census& census = z2_census();
    std::uint64_t xmods = 0;
    for (const auto& entry : census.crossed) {
        RoundTripWitness w = roundtrip_xmod(entry.x);
        if (!w.ok()) {
            res.detail = "roundtrip_xmod failed:\n" + w.report.to_string();
            res.seconds = timer.elapsed();
            return res;
        }
        ++xmods;
    }
    std::uint64_t algebras = 0;
    for (const auto& [name, a] : example_two_algebras()) {
        RoundTripWitness w = phi_iso(a);
        if (!w.ok()) {
            res.detail = "phi_iso failed on " + name + ":\n" + w.report.to_string();
            res.seconds = timer.elapsed();
            return res;
        }
        ++algebras;
    }
    res.seconds = timer.elapsed();
    res.pass = res.seconds < 120.0;
    res.detail =
        count_detail({{"crossed modules", xmods}, {"corpus 2-algebras", algebras}});
    return res;
}

CriterionResult criterion_interchange_peiffer() {
    Timer timer;
    CriterionResult res{4, "interchange holds iff Peiffer holds", false, "", 0.0};
    const Z2Census& census = z2_census();
    TwoAlgebraCheckOptions opts;
    opts.exhaustive = true;

    std::uint64_t crossed = 0, precrossed = 0;
    for (const auto& entry : census.crossed) {
        Report rep = check_two_algebra(psi(entry.x), opts);
        if (!rep.ok()) {
            res.detail = "psi of a crossed module failed validation:\n" + rep.to_string();
            res.seconds = timer.elapsed();
            return res;
        }
        ++crossed;
    }
    for (const auto& entry : census.precrossed) {
        Report rep = check_two_algebra(psi(entry.x), opts);
        if (interchange_entries_pass(rep)) {
            res.detail = "psi of a CM2-violating specimen passed the interchange check";
            res.seconds = timer.elapsed();
            return res;
        }
        ++precrossed;
    }
    res.seconds = timer.elapsed();
    res.pass = crossed > 0 && precrossed > 0;
    res.detail = count_detail({{"crossed", crossed}, {"pre-crossed only", precrossed}});
    return res;
}

CriterionResult criterion_multiplication_two_algebra() {
    Timer timer;
    CriterionResult res{5, "multiplication 2-algebras", false, "", 0.0};
    std::vector<std::pair<std::string, FiniteAlgebra>> bases;
    bases.emplace_back("Z2", FiniteAlgebra::ground(2));
    bases.emplace_back("Z4", FiniteAlgebra::ground(4));
    bases.emplace_back("dual2", FiniteAlgebra::dual_numbers(2));

    TwoAlgebraCheckOptions opts;
    opts.exhaustive = true;
    for (const auto& [name, c] : bases) {
        TwoAlgebra direct = multiplication_two_algebra(c);
        Report rep = check_two_algebra(direct, opts);
        if (!rep.ok()) {
            res.detail = "multiplication 2-algebra over " + name + " failed:\n" +
                         rep.to_string();
            res.seconds = timer.elapsed();
            return res;
        }
        TwoAlgebra via_psi = psi(from_multiplication(c));
        if (!(direct == via_psi)) {
            res.detail = "multiplication 2-algebra over " + name +
                         " differs from psi(from_multiplication)";
            res.seconds = timer.elapsed();
            return res;
        }
    }
    res.seconds = timer.elapsed();
    res.pass = res.seconds < 60.0;
    res.detail = "exhaustive checks and structural equality over Z2, Z4, Z2[x]/(x^2)";
    return res;
}

namespace {

/// Shared walk for criteria 6 and 7: every morphism between every ordered
/// pair of census crossed modules, every derivation over it, and every
/// composable chain of the resulting homotopies.
struct TransportAudit {
    std::uint64_t morphisms = 0, derivations = 0, chains = 0;
    bool target_audit_ok = true;     // criterion 6
    bool transports_ok = true;       // criterion 7
    std::string failure;
    double seconds = 0.0;
};

const TransportAudit& transport_audit() {
    static const TransportAudit audit = [] {
        TransportAudit out;
        Timer timer;
        const Z2Census& census = z2_census();
        Coeff m = 2;

        // Algebra morphism candidates are shared across crossed module pairs.
        using Key = std::pair<std::size_t, std::size_t>;
        std::map<Key, std::vector<LinearMap>> mor_c, mor_r;
        auto morphisms_between = [m](std::map<Key, std::vector<LinearMap>>& cache, Key key,
                                     const FiniteAlgebra& a, const FiniteAlgebra& b,
                                     bool unital) -> const std::vector<LinearMap>& {
            auto [it, inserted] = cache.try_emplace(key);
            if (inserted)
                for (LinearMap& f : enumerate_linear_maps(a.modulus(), b.rank, a.rank,
                                                          kDefaultCap))
                    if (check_morphism(f, a, b, unital).ok())
                        it->second.push_back(std::move(f));
            return it->second;
        };

        auto key_of = [](const LinearMap& f1, const LinearMap& f0) {
            std::vector<Coeff> key = f1.entries;
            key.push_back(-1);
            key.insert(key.end(), f0.entries.begin(), f0.entries.end());
            return key;
        };

        for (const auto& sx : census.crossed) {
            for (const auto& tx : census.crossed) {
                const auto& f1s =
                    morphisms_between(mor_c, {sx.ci, tx.ci}, sx.x.c, tx.x.c, false);
                const auto& f0s =
                    morphisms_between(mor_r, {sx.ri, tx.ri}, sx.x.r, tx.x.r, true);
                if (f0s.empty()) continue;

                struct MorphismData {
                    XModMorphism f;
                    std::vector<XModHomotopy> homotopies;
                };
                std::vector<MorphismData> found;
                std::map<std::vector<Coeff>, std::size_t> index;

                for (const LinearMap& f1 : f1s) {
                    LinearMap bd_f1 = compose(tx.x.boundary, f1);
                    for (const LinearMap& f0 : f0s) {
                        if (bd_f1 != compose(f0, sx.x.boundary)) continue;
                        bool eqv = true;
                        for (std::size_t i = 0; i < sx.x.r.rank && eqv; ++i)
                            for (std::size_t j = 0; j < sx.x.c.rank && eqv; ++j)
                                if (f1.apply(sx.x.action.basis_act(i, j)) !=
                                    tx.x.action.act(f0.column(i), f1.column(j)))
                                    eqv = false;
                        if (!eqv) continue;
                        index[key_of(f1, f0)] = found.size();
                        found.push_back(MorphismData{XModMorphism{sx.x, tx.x, f1, f0}, {}});
                    }
                }
                out.morphisms += found.size();

                // Criterion 6: every derivation yields a valid target.
                // Criterion 7, part one: both transport round trips.
                for (auto& md : found) {
                    for (const Derivation& d : enumerate_derivations(md.f, kDefaultCap)) {
                        ++out.derivations;
                        XModHomotopy h;
                        try {
                            h = homotopy_target(md.f, d);
                        } catch (const std::exception& ex) {
                            out.target_audit_ok = false;
                            out.failure =
                                std::string("homotopy_target integrity error: ") + ex.what();
                            out.seconds = timer.elapsed();
                            return out;
                        }
                        if (out.transports_ok) {
                            TwoAlgHomotopy big = psi_htpy(h);
                            if (!check_two_alg_homotopy(big).ok()) {
                                out.transports_ok = false;
                                out.failure = "psi_htpy output failed validation";
                            } else {
                                XModHomotopy back = gamma_htpy(big);
                                if (back.d.map != h.d.map || back.f.f1 != h.f.f1 ||
                                    back.f.f0 != h.f.f0 || back.g.f1 != h.g.f1 ||
                                    back.g.f0 != h.g.f0) {
                                    out.transports_ok = false;
                                    out.failure = "gamma_htpy(psi_htpy(h)) differs from h";
                                } else if (psi_htpy(back).delta != big.delta) {
                                    out.transports_ok = false;
                                    out.failure = "psi_htpy(gamma_htpy(H)) differs from H";
                                }
                            }
                        }
                        md.homotopies.push_back(std::move(h));
                    }
                }
                if (!out.transports_ok) continue;

                // Criterion 7, part two: star laws over composable chains.
                for (const auto& md : found) {
                    for (const XModHomotopy& h : md.homotopies) {
                        auto git = index.find(key_of(h.g.f1, h.g.f0));
                        if (git == index.end()) {
                            out.target_audit_ok = false;
                            out.transports_ok = false;
                            out.failure = "homotopy target morphism missing from enumeration";
                            out.seconds = timer.elapsed();
                            return out;
                        }
                        TwoAlgHomotopy big_h = psi_htpy(h);
                        for (const XModHomotopy& h2 : found[git->second].homotopies) {
                            ++out.chains;
                            XModHomotopy sum = add_derivations(h, h2);
                            TwoAlgHomotopy starred = star(big_h, psi_htpy(h2));
                            if (psi_htpy(sum).delta != starred.delta) {
                                out.transports_ok = false;
                                out.failure = "psi_htpy(h + h') differs from star of transports";
                                break;
                            }
                            if (gamma_htpy(starred).d.map != sum.d.map) {
                                out.transports_ok = false;
                                out.failure =
                                    "gamma_htpy(star(H, H')) differs from summed derivations";
                                break;
                            }
                        }
                        if (!out.transports_ok) break;
                    }
                    if (!out.transports_ok) break;
                }
            }
        }
        out.seconds = timer.elapsed();
        return out;
    }();
    return audit;
}

}  // namespace

CriterionResult criterion_homotopy_audit() {
    const TransportAudit& audit = transport_audit();
    CriterionResult res{6, "homotopy targets are always morphisms", audit.target_audit_ok,
                        "", audit.seconds};
    res.detail = audit.target_audit_ok
                     ? count_detail({{"morphisms", audit.morphisms},
                                     {"derivations", audit.derivations}})
                     : audit.failure;
    if (audit.morphisms == 0 || audit.derivations == 0) {
        res.pass = false;
        res.detail = "empty population";
    }
    return res;
}

CriterionResult criterion_transport_laws() {
    const TransportAudit& audit = transport_audit();
    CriterionResult res{7, "transport laws of homotopies", audit.transports_ok, "",
                        audit.seconds};
    res.detail = audit.transports_ok
                     ? count_detail({{"derivations", audit.derivations},
                                     {"chains", audit.chains}})
                     : audit.failure;
    if (audit.chains == 0) {
        res.pass = false;
        res.detail = "empty chain population";
    }
    return res;
}

CriterionResult criterion_infrastructure(const std::string& corpus_dir) {
    Timer timer;
    CriterionResult res{8, "Howell forms and file round trips", false, "", 0.0};
    std::mt19937 rng(0x5eed);

    std::uint64_t matrices = 0, exhaustive = 0;
    for (Coeff m : {Coeff{4}, Coeff{6}}) {
        for (int trial = 0; trial < 1000; ++trial) {
            std::size_t n = 1 + rng() % 4;
            std::size_t k = rng() % 5;
            std::vector<Vec> rows(k, Vec(n));
            for (auto& r : rows)
                for (auto& x : r) x = static_cast<Coeff>(rng() % static_cast<unsigned>(m));

            std::vector<Vec> h = howell_form(rows, m, n);
            if (howell_form(h, m, n) != h) {
                res.detail = "howell_form is not idempotent";
                res.seconds = timer.elapsed();
                return res;
            }
            Submodule span{m, n, h};
            for (const Vec& r : rows)
                if (!span.contains(r)) {
                    res.detail = "an input row does not reduce to zero against its Howell form";
                    res.seconds = timer.elapsed();
                    return res;
                }
            ++matrices;

            if (n <= 3) {
                std::set<Vec> brute;
                Vec coeffs(k, 0);
                for (;;) {
                    Vec v = vec_zero(n);
                    for (std::size_t i = 0; i < k; ++i) vec_add_scaled(v, coeffs[i], rows[i], m);
                    brute.insert(std::move(v));
                    std::size_t i = k;
                    bool done = (k == 0);
                    while (i > 0) {
                        --i;
                        if (++coeffs[i] < m) break;
                        coeffs[i] = 0;
                        if (i == 0) done = true;
                    }
                    if (done) break;
                }
                for (const Vec& v : all_vectors(m, n, 4096))
                    if (span.contains(v) != (brute.count(v) > 0)) {
                        res.detail = "membership differs from brute-force span enumeration";
                        res.seconds = timer.elapsed();
                        return res;
                    }
                ++exhaustive;
            }
        }
    }

    std::uint64_t files = 0;
    namespace fs = std::filesystem;
    if (!fs::is_directory(corpus_dir)) {
        res.detail = "corpus directory not found: " + corpus_dir;
        res.seconds = timer.elapsed();
        return res;
    }
    std::vector<fs::path> paths;
    for (const auto& e : fs::directory_iterator(corpus_dir))
        if (e.is_regular_file() && e.path().extension() == ".json") paths.push_back(e.path());
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        std::string bytes = buf.str();
        try {
            Structure s = parse_structure(bytes);
            if (serialize(s) != bytes) {
                res.detail = "parse/serialize round trip not byte-identical for " +
                             p.filename().string();
                res.seconds = timer.elapsed();
                return res;
            }
        } catch (const std::exception& ex) {
            res.detail = "corpus file " + p.filename().string() + " failed to parse: " +
                         ex.what();
            res.seconds = timer.elapsed();
            return res;
        }
        ++files;
    }
    if (files == 0) {
        res.detail = "no corpus files found in " + corpus_dir;
        res.seconds = timer.elapsed();
        return res;
    }

    res.seconds = timer.elapsed();
    res.pass = true;
    res.detail = count_detail({{"random matrices", matrices},
                               {"exhaustive membership checks", exhaustive},
                               {"corpus files", files}});
    return res;
}

std::vector<CriterionResult> run_acceptance(const std::string& corpus_dir) {
    std::vector<CriterionResult> results;
    results.push_back(criterion_forced_composition());
    results.push_back(criterion_kernel_composition());
    results.push_back(criterion_roundtrips());
    results.push_back(criterion_interchange_peiffer());
    results.push_back(criterion_multiplication_two_algebra());
    results.push_back(criterion_homotopy_audit());
    results.push_back(criterion_transport_laws());
    results.push_back(criterion_infrastructure(corpus_dir));
    return results;
}

}  // namespace twoalg
