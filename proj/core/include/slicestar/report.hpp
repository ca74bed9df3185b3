#pragma once

#include <string>

#include "json.hpp"

namespace slicestar {

using json = nlohmann::json;

enum class Verdict { no_violation_found, violation_found };

inline std::string to_string(Verdict v) {
    return v == Verdict::violation_found ? "violation-found" : "no-violation-found";
}

/// Outcome of a falsifier.  A violation always carries re-checkable
/// witnesses; "no-violation-found" is a statement at the recorded resolution,
/// never a proof.
struct CheckReport {
    Verdict verdict = Verdict::no_violation_found;
    json witnesses = json::array();
    json resolution = json::object();

    bool passed() const { return verdict == Verdict::no_violation_found; }

    void add_witness(json w) {
        witnesses.push_back(std::move(w));
        verdict = Verdict::violation_found;
    }
};

}  // namespace slicestar
