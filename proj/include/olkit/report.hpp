#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace olkit {

/// Structural problem with the input itself (dangling identifiers, duplicate
/// names, non-total maps). Distinct from a law violation. CLI exit code 3.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured size/cap was exceeded. CLI exit code 3.
class cap_error : public input_error {
public:
    using input_error::input_error;
};

/// A condition that is a theorem failed to verify; indicates a bug in the
/// checker or builder, never a property of the input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// One failed law together with the elements witnessing the failure.
struct Violation {
    std::string law;
    std::vector<std::string> witness;

    std::string witness_string() const {
        std::string s;
        for (std::size_t i = 0; i < witness.size(); ++i) {
            if (i) s += ',';
            s += witness[i];
        }
        return s;
    }

    friend bool operator==(const Violation& a, const Violation& b) {
        return a.law == b.law && a.witness == b.witness;
    }
    friend bool operator<(const Violation& a, const Violation& b) {
        if (a.law != b.law) return a.law < b.law;
        return a.witness < b.witness;
    }
};

/// Outcome of a checker: empty list of violations means pass. Violations are
/// kept sorted so reports are stable regardless of evaluation schedule.
struct Report {
    std::vector<Violation> violations;
    std::vector<std::string> notes;  // informational lines, not failures

    bool pass() const { return violations.empty(); }

    void add(std::string law, std::vector<std::string> witness) {
        violations.push_back({std::move(law), std::move(witness)});
    }
    void note(std::string text) { notes.push_back(std::move(text)); }

    void merge(const Report& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    }

    void normalize() {
        std::sort(violations.begin(), violations.end());
        violations.erase(std::unique(violations.begin(), violations.end()), violations.end());
    }

    bool has(const std::string& law) const {
        for (const auto& v : violations)
            if (v.law == law) return true;
        return false;
    }
};

}  // namespace olkit
