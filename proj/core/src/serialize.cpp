#include "twoalg/serialize.hpp"

#include <json.hpp>

#include <set>

namespace twoalg {

namespace {

using Json = nlohmann::ordered_json;

// ---------- writing ----------

Json sparse_tensor(const std::vector<Coeff>& t, std::size_t di, std::size_t dj, std::size_t dl) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < di; ++i)
        for (std::size_t j = 0; j < dj; ++j)
            for (std::size_t l = 0; l < dl; ++l) {
                Coeff v = t[(i * dj + j) * dl + l];
                if (v != 0) entries.push_back(Json::array({i, j, l, v}));
            }
    return entries;
}

Json dense_map(const LinearMap& f) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < f.rows; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < f.cols; ++j) row.push_back(f.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json algebra_json(const FiniteAlgebra& a) {
    Json j;
    j["kind"] = "algebra";
    j["modulus"] = a.modulus();
    j["rank"] = a.rank;
    j["mul"] = sparse_tensor(a.mul, a.rank, a.rank, a.rank);
    if (a.unit) j["unit"] = *a.unit;
    if (!a.labels.empty()) j["labels"] = a.labels;
    return j;
}

Json xmod_json(const CrossedModule& x) {
    Json j;
    j["kind"] = "xmod";
    j["modulus"] = x.modulus();
    j["c"] = algebra_json(x.c);
    j["r"] = algebra_json(x.r);
    j["boundary"] = dense_map(x.boundary);
    j["action"] = sparse_tensor(x.action.a, x.r.rank, x.c.rank, x.c.rank);
    return j;
}

Json two_alg_json(const TwoAlgebra& a) {
    Json j;
    j["kind"] = "2alg";
    j["modulus"] = a.modulus();
    j["a0"] = algebra_json(a.a0);
    j["a1"] = algebra_json(a.a1);
    j["s"] = dense_map(a.s);
    j["t"] = dense_map(a.t);
    j["e"] = dense_map(a.e);
    return j;
}

Json xmod_morphism_json(const XModMorphism& f) {
    Json j;
    j["kind"] = "xmod_morphism";
    j["modulus"] = f.source.modulus();
    j["source"] = xmod_json(f.source);
    j["target"] = xmod_json(f.target);
    j["f1"] = dense_map(f.f1);
    j["f0"] = dense_map(f.f0);
    return j;
}

Json two_alg_morphism_json(const TwoAlgMorphism& f) {
    Json j;
    j["kind"] = "2alg_morphism";
    j["modulus"] = f.source.modulus();
    j["source"] = two_alg_json(f.source);
    j["target"] = two_alg_json(f.target);
    j["f1"] = dense_map(f.f1);
    j["f0"] = dense_map(f.f0);
    return j;
}

Json derivation_json(const DerivationDatum& d) {
    Json j;
    j["kind"] = "derivation";
    j["modulus"] = d.f.source.modulus();
    j["morphism"] = xmod_morphism_json(d.f);
    j["map"] = dense_map(d.map);
    return j;
}

Json two_alg_homotopy_json(const TwoAlgHomotopy& h) {
    Json j;
    j["kind"] = "2alg_homotopy";
    j["modulus"] = h.f.source.modulus();
    j["f"] = two_alg_morphism_json(h.f);
    j["g"] = two_alg_morphism_json(h.g);
    j["delta"] = dense_map(h.delta);
    return j;
}

std::string dump(const Json& j) {
    return j.dump(2) + "\n";
}

// ---------- reading ----------

const Json& field(const Json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where, std::string("missing field \"") + key + "\"");
    return *it;
}

Coeff int_field(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
    return j.get<Coeff>();
}

std::size_t size_field(const Json& j, const std::string& where) {
    Coeff v = int_field(j, where);
    if (v < 0) throw ParseError(where, "expected a non-negative integer");
    return static_cast<std::size_t>(v);
}

Coeff coeff_field(const Json& j, Coeff m, const std::string& where) {
    Coeff v = int_field(j, where);
    if (v < 0 || v >= m)
        throw ParseError(where, "value " + std::to_string(v) + " outside [0, " +
                                    std::to_string(m) + ")");
    return v;
}

Coeff modulus_field(const Json& j, const std::string& where) {
    Coeff m = int_field(field(j, "modulus", where), where + ".modulus");
    if (m < 2) throw ParseError(where + ".modulus", "modulus must be >= 2");
    if (m > kMaxModulus)
        throw ParseError(where + ".modulus",
                         "modulus exceeds " + std::to_string(kMaxModulus));
    return m;
}

void read_sparse_tensor(const Json& j, std::vector<Coeff>& out, std::size_t di, std::size_t dj,
                        std::size_t dl, Coeff m, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array of [i,j,l,value] entries");
    std::set<std::size_t> seen;
    for (std::size_t n = 0; n < j.size(); ++n) {
        std::string at = where + "[" + std::to_string(n) + "]";
        const Json& e = j[n];
        if (!e.is_array() || e.size() != 4) throw ParseError(at, "expected [i,j,l,value]");
        std::size_t i = size_field(e[0], at + "[0]");
        std::size_t jj = size_field(e[1], at + "[1]");
        std::size_t l = size_field(e[2], at + "[2]");
        if (i >= di || jj >= dj || l >= dl) throw ParseError(at, "index out of range");
        Coeff v = coeff_field(e[3], m, at + "[3]");
        if (v == 0) throw ParseError(at, "explicit zero entry is not canonical");
        std::size_t flat = (i * dj + jj) * dl + l;
        if (!seen.insert(flat).second) throw ParseError(at, "duplicate tensor index");
        out[flat] = v;
    }
}

LinearMap read_dense_map(const Json& j, std::size_t rows, std::size_t cols, Coeff m,
                         const std::string& where) {
    if (!j.is_array() || j.size() != rows)
        throw ParseError(where, "expected " + std::to_string(rows) + " rows");
    LinearMap f(m, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = j[i];
        std::string at = where + "[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != cols)
            throw ParseError(at, "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            f.at(i, c) = coeff_field(row[c], m, at + "[" + std::to_string(c) + "]");
    }
    return f;
}

FiniteAlgebra read_algebra(const Json& j, const std::string& where) {
    if (!j.is_object()) throw ParseError(where, "expected an algebra object");
    if (field(j, "kind", where) != "algebra")
        throw ParseError(where + ".kind", "expected \"algebra\"");
    Coeff m = modulus_field(j, where);
    std::size_t rank = size_field(field(j, "rank", where), where + ".rank");
    FiniteAlgebra a(CoefficientRing(m), rank);
    read_sparse_tensor(field(j, "mul", where), a.mul, rank, rank, rank, m, where + ".mul");
    if (j.contains("unit")) {
        const Json& u = j["unit"];
        if (!u.is_array() || u.size() != rank)
            throw ParseError(where + ".unit", "expected " + std::to_string(rank) + " entries");
        Vec unit(rank);
        for (std::size_t i = 0; i < rank; ++i)
            unit[i] = coeff_field(u[i], m, where + ".unit[" + std::to_string(i) + "]");
        a.unit = std::move(unit);
    }
    if (j.contains("labels")) {
        const Json& lab = j["labels"];
        if (!lab.is_array() || lab.size() != rank)
            throw ParseError(where + ".labels", "expected " + std::to_string(rank) + " labels");
        for (std::size_t i = 0; i < rank; ++i) {
            if (!lab[i].is_string())
                throw ParseError(where + ".labels[" + std::to_string(i) + "]",
                                 "expected a string");
            a.labels.push_back(lab[i].get<std::string>());
        }
    }
    return a;
}

CrossedModule read_xmod(const Json& j, const std::string& where) {
    if (!j.is_object()) throw ParseError(where, "expected an xmod object");
    if (field(j, "kind", where) != "xmod") throw ParseError(where + ".kind", "expected \"xmod\"");
    Coeff m = modulus_field(j, where);
    FiniteAlgebra c = read_algebra(field(j, "c", where), where + ".c");
    FiniteAlgebra r = read_algebra(field(j, "r", where), where + ".r");
    if (c.modulus() != m) throw ParseError(where + ".c.modulus", "differs from xmod modulus");
    if (r.modulus() != m) throw ParseError(where + ".r.modulus", "differs from xmod modulus");
    LinearMap bd = read_dense_map(field(j, "boundary", where), r.rank, c.rank, m,
                                  where + ".boundary");
    ActionTensor act(r, c);
    read_sparse_tensor(field(j, "action", where), act.a, r.rank, c.rank, c.rank, m,
                       where + ".action");
    return CrossedModule{std::move(c), std::move(r), std::move(bd), std::move(act)};
}

TwoAlgebra read_two_algebra(const Json& j, const std::string& where) {
    if (!j.is_object()) throw ParseError(where, "expected a 2alg object");
    if (field(j, "kind", where) != "2alg") throw ParseError(where + ".kind", "expected \"2alg\"");
    Coeff m = modulus_field(j, where);
    FiniteAlgebra a0 = read_algebra(field(j, "a0", where), where + ".a0");
    FiniteAlgebra a1 = read_algebra(field(j, "a1", where), where + ".a1");
    if (a0.modulus() != m) throw ParseError(where + ".a0.modulus", "differs from 2alg modulus");
    if (a1.modulus() != m) throw ParseError(where + ".a1.modulus", "differs from 2alg modulus");
    LinearMap s = read_dense_map(field(j, "s", where), a0.rank, a1.rank, m, where + ".s");
    LinearMap t = read_dense_map(field(j, "t", where), a0.rank, a1.rank, m, where + ".t");
    LinearMap e = read_dense_map(field(j, "e", where), a1.rank, a0.rank, m, where + ".e");
    return TwoAlgebra{std::move(a0), std::move(a1), std::move(s), std::move(t), std::move(e)};
}

XModMorphism read_xmod_morphism(const Json& j, const std::string& where) {
    if (!j.is_object()) throw ParseError(where, "expected an xmod_morphism object");
    if (field(j, "kind", where) != "xmod_morphism")
        throw ParseError(where + ".kind", "expected \"xmod_morphism\"");
    Coeff m = modulus_field(j, where);
    CrossedModule src = read_xmod(field(j, "source", where), where + ".source");
    CrossedModule dst = read_xmod(field(j, "target", where), where + ".target");
    if (src.modulus() != m || dst.modulus() != m)
        throw ParseError(where, "source/target modulus differs from morphism modulus");
    LinearMap f1 = read_dense_map(field(j, "f1", where), dst.c.rank, src.c.rank, m,
                                  where + ".f1");
    LinearMap f0 = read_dense_map(field(j, "f0", where), dst.r.rank, src.r.rank, m,
                                  where + ".f0");
    return XModMorphism{std::move(src), std::move(dst), std::move(f1), std::move(f0)};
}

TwoAlgMorphism read_two_alg_morphism(const Json& j, const std::string& where) {
    if (!j.is_object()) throw ParseError(where, "expected a 2alg_morphism object");
    if (field(j, "kind", where) != "2alg_morphism")
        throw ParseError(where + ".kind", "expected \"2alg_morphism\"");
    Coeff m = modulus_field(j, where);
    TwoAlgebra src = read_two_algebra(field(j, "source", where), where + ".source");
    TwoAlgebra dst = read_two_algebra(field(j, "target", where), where + ".target");
    if (src.modulus() != m || dst.modulus() != m)
        throw ParseError(where, "source/target modulus differs from morphism modulus");
    LinearMap f1 = read_dense_map(field(j, "f1", where), dst.a1.rank, src.a1.rank, m,
                                  where + ".f1");
    LinearMap f0 = read_dense_map(field(j, "f0", where), dst.a0.rank, src.a0.rank, m,
                                  where + ".f0");
    return TwoAlgMorphism{std::move(src), std::move(dst), std::move(f1), std::move(f0)};
}

DerivationDatum read_derivation(const Json& j, const std::string& where) {
    if (!j.is_object()) throw ParseError(where, "expected a derivation object");
    if (field(j, "kind", where) != "derivation")
        throw ParseError(where + ".kind", "expected \"derivation\"");
    Coeff m = modulus_field(j, where);
    XModMorphism f = read_xmod_morphism(field(j, "morphism", where), where + ".morphism");
    if (f.source.modulus() != m)
        throw ParseError(where, "morphism modulus differs from derivation modulus");
    LinearMap map = read_dense_map(field(j, "map", where), f.target.c.rank, f.source.r.rank, m,
                                   where + ".map");
    return DerivationDatum{std::move(f), std::move(map)};
}

TwoAlgHomotopy read_two_alg_homotopy(const Json& j, const std::string& where) {
    if (!j.is_object()) throw ParseError(where, "expected a 2alg_homotopy object");
    if (field(j, "kind", where) != "2alg_homotopy")
        throw ParseError(where + ".kind", "expected \"2alg_homotopy\"");
    Coeff m = modulus_field(j, where);
    TwoAlgMorphism f = read_two_alg_morphism(field(j, "f", where), where + ".f");
    TwoAlgMorphism g = read_two_alg_morphism(field(j, "g", where), where + ".g");
    if (f.source.modulus() != m)
        throw ParseError(where, "morphism modulus differs from homotopy modulus");
    if (!(f.source == g.source) || !(f.target == g.target))
        throw ParseError(where, "f and g must share source and target");
    LinearMap delta = read_dense_map(field(j, "delta", where), f.target.a1.rank,
                                     f.source.a0.rank, m, where + ".delta");
    return TwoAlgHomotopy{std::move(f), std::move(g), std::move(delta)};
}

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw ParseError("$", "malformed JSON");
    if (!j.is_object()) throw ParseError("$", "expected a JSON object");
    return j;
}

}  // namespace

std::string kind_of(const Structure& s) {
    struct Visitor {
        std::string operator()(const FiniteAlgebra&) const { return "algebra"; }
        std::string operator()(const CrossedModule&) const { return "xmod"; }
        std::string operator()(const TwoAlgebra&) const { return "2alg"; }
        std::string operator()(const XModMorphism&) const { return "xmod_morphism"; }
        std::string operator()(const TwoAlgMorphism&) const { return "2alg_morphism"; }
        std::string operator()(const DerivationDatum&) const { return "derivation"; }
        std::string operator()(const TwoAlgHomotopy&) const { return "2alg_homotopy"; }
    };
    return std::visit(Visitor{}, s);
}

std::string serialize(const FiniteAlgebra& a) { return dump(algebra_json(a)); }
std::string serialize(const CrossedModule& x) { return dump(xmod_json(x)); }
std::string serialize(const TwoAlgebra& a) { return dump(two_alg_json(a)); }
std::string serialize(const XModMorphism& f) { return dump(xmod_morphism_json(f)); }
std::string serialize(const TwoAlgMorphism& f) { return dump(two_alg_morphism_json(f)); }
std::string serialize(const DerivationDatum& d) { return dump(derivation_json(d)); }
std::string serialize(const TwoAlgHomotopy& h) { return dump(two_alg_homotopy_json(h)); }

std::string serialize(const Structure& s) {
    return std::visit([](const auto& v) { return serialize(v); }, s);
}

Structure parse_structure(const std::string& text) {
    Json j = parse_json(text);
    std::string kind = field(j, "kind", "$").is_string() ? j["kind"].get<std::string>() : "";
    if (kind == "algebra") return read_algebra(j, "$");
    if (kind == "xmod") return read_xmod(j, "$");
    if (kind == "2alg") return read_two_algebra(j, "$");
    if (kind == "xmod_morphism") return read_xmod_morphism(j, "$");
    if (kind == "2alg_morphism") return read_two_alg_morphism(j, "$");
    if (kind == "derivation") return read_derivation(j, "$");
    if (kind == "2alg_homotopy") return read_two_alg_homotopy(j, "$");
    throw ParseError("$.kind", "unknown kind \"" + kind + "\"");
}

FiniteAlgebra parse_algebra(const std::string& text) { return read_algebra(parse_json(text), "$"); }
CrossedModule parse_xmod(const std::string& text) { return read_xmod(parse_json(text), "$"); }
TwoAlgebra parse_two_algebra(const std::string& text) {
    return read_two_algebra(parse_json(text), "$");
}
XModMorphism parse_xmod_morphism(const std::string& text) {
    return read_xmod_morphism(parse_json(text), "$");
}
TwoAlgMorphism parse_two_alg_morphism(const std::string& text) {
    return read_two_alg_morphism(parse_json(text), "$");
}
DerivationDatum parse_derivation(const std::string& text) {
    return read_derivation(parse_json(text), "$");
}
TwoAlgHomotopy parse_two_alg_homotopy(const std::string& text) {
    return read_two_alg_homotopy(parse_json(text), "$");
}

}  // namespace twoalg
