#pragma once

/// Canonical JSON files, one structure per file, sub-structures embedded by
/// value. Serialization is byte-deterministic: fixed key order, sparse tensor
/// entries sorted by index, two-space indentation, trailing newline. Parsing
/// is strict: unknown kinds, shape mismatches, duplicate sparse entries and
/// out-of-range coefficients are rejected with the offending location.

#include "twoalg/algebra.hpp"
#include "twoalg/homotopy.hpp"
#include "twoalg/two_cat.hpp"
#include "twoalg/xmod.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace twoalg {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what) {}
};

/// A derivation as stored on disk: the full source morphism plus the map.
struct DerivationDatum {
    XModMorphism f;
    LinearMap map;  // R -> C'

    Derivation derivation() const { return Derivation{f.source, f.target, f.f0, map}; }
    bool operator==(const DerivationDatum&) const = default;
};

using Structure = std::variant<FiniteAlgebra, CrossedModule, TwoAlgebra, XModMorphism,
                               TwoAlgMorphism, DerivationDatum, TwoAlgHomotopy>;

/// The "kind" tag a structure serializes under.
std::string kind_of(const Structure& s);

std::string serialize(const FiniteAlgebra& a);
std::string serialize(const CrossedModule& x);
std::string serialize(const TwoAlgebra& a);
std::string serialize(const XModMorphism& f);
std::string serialize(const TwoAlgMorphism& f);
std::string serialize(const DerivationDatum& d);
std::string serialize(const TwoAlgHomotopy& h);
std::string serialize(const Structure& s);

Structure parse_structure(const std::string& text);

FiniteAlgebra parse_algebra(const std::string& text);
CrossedModule parse_xmod(const std::string& text);
TwoAlgebra parse_two_algebra(const std::string& text);
XModMorphism parse_xmod_morphism(const std::string& text);
TwoAlgMorphism parse_two_alg_morphism(const std::string& text);
DerivationDatum parse_derivation(const std::string& text);
TwoAlgHomotopy parse_two_alg_homotopy(const std::string& text);

}  // namespace twoalg
