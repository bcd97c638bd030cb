#include "twoalg/report.hpp"

#include <sstream>

namespace twoalg {

void Report::merge(const Report& other) {
    for (const auto& e : other.entries) {
        Entry copy = e;
        if (!other.subject.empty() && other.subject != subject)
            copy.axiom = other.subject + "." + copy.axiom;
        entries.push_back(std::move(copy));
    }
}

bool Report::ok() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

const Report::Entry* Report::first_failure() const {
    for (const auto& e : entries)
        if (!e.pass) return &e;
    return nullptr;
}

std::string Report::to_string() const {
    std::ostringstream os;
    os << "subject: " << subject << '\n';
    for (const auto& e : entries) {
        os << (e.pass ? "[PASS] " : "[FAIL] ") << e.axiom;
        if (!e.pass) {
            if (!e.witness.empty()) {
                os << " witness (";
                for (std::size_t i = 0; i < e.witness.size(); ++i) {
                    if (i) os << ',';
                    os << e.witness[i];
                }
                os << ')';
            }
            if (!e.detail.empty()) os << ": " << e.detail;
        }
        os << '\n';
    }
    os << "verdict: " << (ok() ? "pass" : "fail") << '\n';
    return os.str();
}

}  // namespace twoalg
