#include "spslice/verify/report.hpp"

#include "spslice/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace spslice::verify {

using nlohmann::json;

const char* to_string(Status s)
{
    switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
    }
    return "?";
}

namespace {

Status status_from(const std::string& s)
{
    if (s == "PASS") return Status::Pass;
    if (s == "FAIL") return Status::Fail;
    if (s == "SKIPPED") return Status::Skipped;
    throw ParseError("report: unknown status '" + s + "'");
}

std::string escape_cell(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '|') out += "\\|";
        else if (c == '\n') out += ' ';
        else out += c;
    }
    return out;
}

} // namespace

bool VerificationReport::passed() const
{
    return std::none_of(claims.begin(), claims.end(), [](const Claim& c) { return c.status == Status::Fail; });
}

std::string to_json(const VerificationReport& report, bool include_timing)
{
    json claims = json::array();
    for (const auto& c : report.claims) {
        json j{{"id", c.id}, {"section", c.section}, {"statement", c.statement}, {"status", to_string(c.status)}};
        j["witness"] = c.witness ? json(*c.witness) : json(nullptr);
        if (include_timing) j["runtime_ms"] = c.runtime_ms;
        claims.push_back(std::move(j));
    }
    json doc{{"claims", std::move(claims)}, {"seed", report.seed}, {"samples", report.samples}, {"version", report.version}};
    return doc.dump(2) + "\n";
}

VerificationReport from_json(const std::string& text)
{
    VerificationReport r;
    try {
        const json doc = json::parse(text);
        r.seed = doc.at("seed").get<std::uint64_t>();
        r.samples = doc.at("samples").get<std::size_t>();
        r.version = doc.at("version").get<std::string>();
        for (const auto& j : doc.at("claims")) {
            Claim c;
            c.id = j.at("id").get<std::string>();
            c.section = j.at("section").get<std::string>();
            c.statement = j.at("statement").get<std::string>();
            c.status = status_from(j.at("status").get<std::string>());
            if (j.contains("witness") && !j.at("witness").is_null()) c.witness = j.at("witness").get<std::string>();
            if (j.contains("runtime_ms")) c.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
            r.claims.push_back(std::move(c));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
    return r;
}

std::string to_markdown(const VerificationReport& report)
{
    std::map<std::string, std::string> topics;
    for (const auto& spec : claim_registry()) topics[spec.id] = spec.topic;
    std::ostringstream os;
    std::size_t pass = 0, fail = 0, skipped = 0;
    for (const auto& c : report.claims) {
        pass += c.status == Status::Pass;
        fail += c.status == Status::Fail;
        skipped += c.status == Status::Skipped;
    }
    os << "# Verification report\n\n";
    os << "- version: " << report.version << "\n- seed: " << report.seed << "\n- samples: " << report.samples << "\n";
    os << "- result: " << (report.passed() ? "PASS" : "FAIL") << " (" << pass << " passed, " << fail << " failed, "
       << skipped << " skipped)\n\n";
    if (report.claims.empty()) {
        os << "No claims selected.\n";
        return os.str();
    }
    os << "| id | section | topic | status | statement |\n|---|---|---|---|---|\n";
    for (const auto& c : report.claims) {
        const auto it = topics.find(c.id);
        os << "| " << c.id << " | " << c.section << " | " << escape_cell(it == topics.end() ? "" : it->second) << " | "
           << to_string(c.status) << " | " << escape_cell(c.statement) << " |\n";
    }
    os << "\n## Witnesses\n";
    for (const auto& c : report.claims) {
        os << "\n### " << c.id << " (" << to_string(c.status) << ", " << c.runtime_ms << " ms)\n\n";
        os << "```\n" << c.witness.value_or("(none)") << "\n```\n";
    }
    return os.str();
}

int exit_code(const VerificationReport& report)
{
    return report.passed() ? 0 : 1;
}

} // namespace spslice::verify
