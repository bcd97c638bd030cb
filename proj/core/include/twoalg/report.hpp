#pragma once

/// Verification reports. Axiom failures are data, not errors: every checker
/// returns a Report whose entries carry a stable axiom id and, on failure, a
/// witness (basis indices) plus a human-readable detail line.

#include <cstddef>
#include <string>
#include <vector>

namespace twoalg {

struct Report {
    struct Entry {
        std::string axiom;  // stable id: COMM, ASSOC, UNIT, MORPH, ACT1..ACT3,
                            // CM1, CM2, SRC, TGT, ICHG, COMP, DERIV, HTPY1..HTPY3
        bool pass = true;
        std::vector<std::size_t> witness;
        std::string detail;
    };

    std::string subject;
    std::vector<Entry> entries;

    void add_pass(const std::string& axiom) { entries.push_back({axiom, true, {}, {}}); }
    void add_fail(const std::string& axiom, std::vector<std::size_t> witness,
                  std::string detail) {
        entries.push_back({axiom, false, std::move(witness), std::move(detail)});
    }
    void merge(const Report& other);

    bool ok() const;
    /// First failing entry, or nullptr.
    const Entry* first_failure() const;
    std::string to_string() const;
};

}  // namespace twoalg
