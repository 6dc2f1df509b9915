#ifndef SPSLICE_VERIFY_REPORT_HPP
#define SPSLICE_VERIFY_REPORT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace spslice::verify {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr std::size_t kDefaultSamples = 100;

enum class Status { Pass, Fail, Skipped };
const char* to_string(Status s);

struct Claim {
    std::string id;
    std::string section;
    std::string statement;
    Status status = Status::Skipped;
    std::optional<std::string> witness;
    std::int64_t runtime_ms = 0;
};

struct VerificationReport {
    std::vector<Claim> claims;
    std::uint64_t seed = kDefaultSeed;
    std::size_t samples = kDefaultSamples;
    std::string version = kVersion;

    /// PASS iff every non-skipped claim passes.
    bool passed() const;
};

enum class Format { Json, Markdown };

struct VerifyConfig {
    std::set<int> sections{1, 2, 3, 4, 5};
    std::uint64_t seed = kDefaultSeed;
    std::size_t samples = kDefaultSamples;
    Format format = Format::Json;
    std::optional<std::string> out;
    /// Adds a claim that always fails (exit-code contract testing).
    bool inject_failure = false;
};

/// Outcome of one claim body.
struct ClaimOutcome {
    bool passed = false;
    std::string witness;
};

struct ClaimSpec {
    std::string id;        ///< "S<section>.<slug>"
    int section = 0;
    std::string topic;     ///< human-readable traceability anchor
    std::string statement;
    std::function<ClaimOutcome(std::uint64_t seed, std::size_t samples)> run;
};

/// Every registered claim, sorted by id. Ids are unique.
const std::vector<ClaimSpec>& claim_registry();

/// Parses "1,2,5" (empty string selects nothing). UsageError on anything
/// outside 1..5 or malformed input.
std::set<int> parse_sections(const std::string& text);

/// Runs the selected claims (exceptions inside a claim make it FAIL with the
/// message as witness). UsageError if samples == 0 or a section is invalid.
VerificationReport run_verify(const VerifyConfig& config);

/// JSON text; runtime_ms is omitted when include_timing is false.
std::string to_json(const VerificationReport& report, bool include_timing = true);
std::string to_markdown(const VerificationReport& report);
/// Parses a JSON report written by to_json.
VerificationReport from_json(const std::string& text);

/// Process exit code: 0 when the report passes, 1 otherwise.
int exit_code(const VerificationReport& report);

} // namespace spslice::verify

#endif
