#pragma once

/// Brute-force enumerators. Each one lists candidates in lexicographic order
/// over the flattened coefficient tuple and keeps exactly those the
/// corresponding checker accepts, so the outputs are deterministic ground
/// truth for the rest of the library. Estimated candidate counts are checked
/// against a hard cap before any work starts; refusal is loud.

#include "twoalg/homotopy.hpp"
#include "twoalg/two_cat.hpp"
#include "twoalg/xmod.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>

namespace twoalg {

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

class CapExceeded : public std::length_error {
public:
    CapExceeded(std::uint64_t count, std::uint64_t cap)
        : std::length_error("enumeration refused: " + std::to_string(count) +
                            " candidates exceed cap " + std::to_string(cap)),
          count(count),
          cap(cap) {}

    std::uint64_t count, cap;
};

struct EnumerationSpec {
    enum class What { algebras, actions, crossed_modules, derivations, two_alg_homotopies,
                      linear_maps };
    Coeff modulus = 2;
    std::size_t rank_c = 1;
    std::size_t rank_r = 1;
    What what = What::crossed_modules;
    std::uint64_t cap = kDefaultCap;
};

/// m^exponent, saturating at 2^63-1.
std::uint64_t candidate_count(Coeff m, std::size_t exponent);

/// Throws CapExceeded when m^exponent > cap.
void require_within_cap(Coeff m, std::size_t exponent, std::uint64_t cap);

/// Saturating estimate of the candidate count a spec describes; the rank
/// fields are read per structure (actions and crossed modules use both,
/// derivations and homotopies read rank_c as the domain and rank_r as the
/// codomain rank).
std::uint64_t estimate_candidates(const EnumerationSpec& spec);

/// Throws CapExceeded when the estimate exceeds the spec's cap.
void validate(const EnumerationSpec& spec);

/// All linear maps of the given shape, lex over the row-major entries.
std::vector<LinearMap> enumerate_linear_maps(Coeff m, std::size_t rows, std::size_t cols,
                                             std::uint64_t cap);

/// All valid commutative associative algebras of the given rank; with
/// require_unit, only those possessing a (necessarily unique) unit, which is
/// attached to the result.
std::vector<FiniteAlgebra> enumerate_algebras(Coeff m, std::size_t rank, bool require_unit,
                                              std::uint64_t cap);

/// All unital actions of R on C.
std::vector<ActionTensor> enumerate_actions(const FiniteAlgebra& r, const FiniteAlgebra& c,
                                            std::uint64_t cap);

struct XModCensus {
    std::vector<CrossedModule> crossed;
    std::vector<CrossedModule> precrossed_only;  // CM1 holds, CM2 fails
};

/// All (boundary, action) pairs over the given algebras, classified.
XModCensus enumerate_crossed_modules(const FiniteAlgebra& r, const FiniteAlgebra& c,
                                     std::uint64_t cap);

/// All crossed module morphisms between two validated crossed modules.
std::vector<XModMorphism> enumerate_xmod_morphisms(const CrossedModule& x,
                                                   const CrossedModule& y, std::uint64_t cap);

/// Streaming form: hands (f1, f0) pairs to the sink without materializing
/// morphism values.
void for_each_xmod_morphism(const CrossedModule& x, const CrossedModule& y, std::uint64_t cap,
                            const std::function<void(const LinearMap&, const LinearMap&)>& sink);

/// All f0-derivations over the morphism f.
std::vector<Derivation> enumerate_derivations(const XModMorphism& f, std::uint64_t cap);

/// All homotopies connecting F to G.
std::vector<TwoAlgHomotopy> enumerate_two_alg_homotopies(const TwoAlgMorphism& f,
                                                         const TwoAlgMorphism& g,
                                                         std::uint64_t cap);

}  // namespace twoalg
