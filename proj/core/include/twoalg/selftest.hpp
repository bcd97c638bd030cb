#pragma once

/// The acceptance suite: eight property batteries covering forced-composition
/// uniqueness, kernel composition, round trips of the equivalence, the
/// interchange/Peiffer correspondence, multiplication 2-algebras, the
/// homotopy-target audit, transport laws, and infrastructure (Howell forms
/// and file round trips). Shared between the acceptance test binary and the
/// CLI `selftest` subcommand.

#include "twoalg/oracle.hpp"
#include "twoalg/two_cat.hpp"
#include "twoalg/xmod.hpp"

#include <string>
#include <vector>

namespace twoalg {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Named 2-algebras exercised throughout: discrete, multiplication 2-algebras
/// over several ground rings, and semidirect products of the standard crossed
/// module constructions.
std::vector<std::pair<std::string, TwoAlgebra>> example_two_algebras();

/// Every (C, R, boundary, action) candidate over Z/2 with rank(C) <= 2 and
/// rank(R) <= 2, classified into crossed and pre-crossed-only.
XModCensus census_z2_rank2();

CriterionResult criterion_forced_composition();               // 1
CriterionResult criterion_kernel_composition();               // 2
CriterionResult criterion_roundtrips();                       // 3
CriterionResult criterion_interchange_peiffer();              // 4
CriterionResult criterion_multiplication_two_algebra();       // 5
CriterionResult criterion_homotopy_audit();                   // 6
CriterionResult criterion_transport_laws();                   // 7
CriterionResult criterion_infrastructure(const std::string& corpus_dir);  // 8

/// Runs all eight criteria. corpus_dir points at the bundled structure files
/// for the parse/serialize round-trip half of criterion 8.
std::vector<CriterionResult> run_acceptance(const std::string& corpus_dir);

}  // namespace twoalg
