#include "twoalg/equivalence.hpp"
#include "twoalg/mult_alg.hpp"
#include "twoalg/selftest.hpp"
#include "twoalg/serialize.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace twoalg;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("algebra round trip") {
    FiniteAlgebra dual = FiniteAlgebra::dual_numbers(2);
    dual.labels = {"1", "x"};
    std::string bytes = serialize(dual);
    FiniteAlgebra back = parse_algebra(bytes);
    CHECK(back == dual);
    CHECK(serialize(back) == bytes);
}

TEST_CASE("equal values serialize byte-identically") {
    // built two different ways: constructor vs parse of handwritten text
    FiniteAlgebra a = FiniteAlgebra::ground(2);
    FiniteAlgebra b = parse_algebra(R"({
        "kind": "algebra",
        "rank": 1,
        "modulus": 2,
        "mul": [[0, 0, 0, 1]],
        "unit": [1]
    })");
    CHECK(a == b);
    CHECK(serialize(a) == serialize(b));
}

TEST_CASE("structure round trips across all kinds") {
    CrossedModule x = from_ideal(FiniteAlgebra::dual_numbers(2), {Vec{0, 1}});
    XModMorphism id = identity_xmod_morphism(x);
    std::vector<Structure> values;
    values.emplace_back(FiniteAlgebra::ground(6));
    values.emplace_back(x);
    values.emplace_back(psi(x));
    values.emplace_back(id);
    values.emplace_back(psi_mor(id));
    for (const Derivation& d : enumerate_derivations(id, kDefaultCap)) {
        values.emplace_back(DerivationDatum{id, d.map});
        values.emplace_back(psi_htpy(homotopy_target(id, d)));
    }
    for (const Structure& v : values) {
        std::string bytes = serialize(v);
        Structure back = parse_structure(bytes);
        CHECK(kind_of(back) == kind_of(v));
        CHECK(serialize(back) == bytes);
    }
}

TEST_CASE("parse rejections carry locations") {
    SUBCASE("malformed JSON") {
        CHECK_THROWS_AS(parse_structure("{"), ParseError);
    }
    SUBCASE("unknown kind") {
        CHECK_THROWS_AS(parse_structure(R"({"kind": "nonsense"})"), ParseError);
    }
    SUBCASE("out-of-range entry names the field") {
        try {
            parse_algebra(R"({"kind":"algebra","modulus":2,"rank":1,"mul":[[0,0,0,2]]})");
            FAIL("expected rejection");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("$.mul[0][3]") != std::string::npos);
        }
    }
    SUBCASE("duplicate sparse entries are rejected") {
        CHECK_THROWS_AS(
            parse_algebra(
                R"({"kind":"algebra","modulus":3,"rank":1,"mul":[[0,0,0,1],[0,0,0,2]]})"),
            ParseError);
    }
    SUBCASE("shape mismatch in an embedded map") {
        CrossedModule x = from_ideal(FiniteAlgebra::dual_numbers(2), {Vec{0, 1}});
        std::string bytes = serialize(x);
        std::string broken = bytes;
        auto pos = broken.find("\"boundary\"");
        REQUIRE(pos != std::string::npos);
        broken.replace(pos, std::string("\"boundary\"").size(), "\"boundarX\"");
        CHECK_THROWS_AS(parse_xmod(broken), ParseError);
    }
    SUBCASE("modulus below 2") {
        CHECK_THROWS_AS(parse_algebra(R"({"kind":"algebra","modulus":1,"rank":0,"mul":[]})"),
                        ParseError);
    }
}

TEST_CASE("serialization of psi is reproducible") {
    CrossedModule x = from_ideal(FiniteAlgebra::dual_numbers(2), {Vec{0, 1}});
    CHECK(serialize(psi(x)) == serialize(psi(x)));
}

TEST_CASE("bundled corpus matches a fresh generator run") {
    namespace fs = std::filesystem;
    fs::path fresh = fs::temp_directory_path() / "twoalg_corpus_regen";
    fs::remove_all(fresh);
    fs::create_directories(fresh);
    std::string cmd = std::string(TWOALG_CORPUS_GEN) + " " + fresh.string() + " > /dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);

    fs::path bundled = TWOALG_CORPUS_DIR;
    REQUIRE(fs::is_directory(bundled));
    std::size_t compared = 0;
    for (const auto& e : fs::directory_iterator(bundled)) {
        if (!e.is_regular_file()) continue;
        fs::path regenerated = fresh / e.path().filename();
        REQUIRE_MESSAGE(fs::exists(regenerated),
                        "missing from regeneration: ", e.path().filename().string());
        CHECK_MESSAGE(slurp(e.path()) == slurp(regenerated),
                      "bundled corpus file drifted: ", e.path().filename().string());
        ++compared;
    }
    CHECK(compared > 0);
    fs::remove_all(fresh);
}

TEST_CASE("bundled corpus parses and round trips byte-identically") {
    namespace fs = std::filesystem;
    fs::path bundled = TWOALG_CORPUS_DIR;
    REQUIRE(fs::is_directory(bundled));
    for (const auto& e : fs::directory_iterator(bundled)) {
        if (!e.is_regular_file() || e.path().extension() != ".json") continue;
        std::string bytes = slurp(e.path());
        Structure s = parse_structure(bytes);
        CHECK_MESSAGE(serialize(s) == bytes, e.path().filename().string());
    }
}
