#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cmc {

// Outcome of one verification pipeline.
//  ForcesConstancy       - closing polynomial in a single unknown certified
//                          nonzero, so the unknown is locally constant
//  ContradictionCertified- derived system contradicts the standing
//                          distinctness assumptions
//  Verified              - every claimed identity checked out (no terminal
//                          elimination involved)
//  FixtureMismatch       - a reconstructed quantity disagrees with its
//                          reference
//  Inconclusive          - a step could not be decided either way
enum class Verdict {
    ForcesConstancy,
    ContradictionCertified,
    Verified,
    FixtureMismatch,
    Inconclusive,
};

std::string verdict_text(Verdict v);

struct StepRecord {
    std::string kind;   // Differentiate, Combine, DependencyDet, Resultant,
                        // EliminateTrace, MatchFixture, AssertZero,
                        // ClearDenominators, SpecializeCheck
    std::string name;
    std::string detail;
    std::vector<std::string> fixtures;
    bool ok = true;
    double seconds = 0; // text rendering only, never serialized
};

struct SideConditionRecord {
    std::string expr;
    std::string reason;
};

struct WitnessRecord {
    std::vector<std::pair<std::string, std::string>> point; // sorted by name
    std::string value;
    std::uint64_t seed = 0;
};

struct CertificateRecord {
    std::string final_text;
    std::string variable; // empty when the certificate is a contradiction
    std::optional<WitnessRecord> witness;
};

struct VerificationReport {
    std::string pipeline;
    std::string profile;
    std::uint64_t seed = 0;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<StepRecord> steps;
    std::vector<SideConditionRecord> side_conditions;
    std::vector<std::string> fixtures_matched; // sorted, deduplicated
    std::vector<std::string> notes;
    std::optional<CertificateRecord> certificate;
    double seconds = 0; // text rendering only

    bool ok() const;
};

// Deterministic serialization: no timings, no environment data, so reruns at
// the same seed are byte-identical.
nlohmann::ordered_json report_json(const VerificationReport&);
nlohmann::ordered_json reports_json(const std::vector<VerificationReport>&);

// Human rendering, with per-step timing and the side-condition ledger.
std::string report_text(const VerificationReport&);

} // namespace cmc
