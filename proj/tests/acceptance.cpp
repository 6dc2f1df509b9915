// Acceptance battery: one PASS/FAIL line per criterion.
//
// A criterion that is known to be unattainable (its failing sub-checks are
// listed in kKnownFailures together with the reason) is still reported as
// FAIL, but does not change the exit status. Any other failure, including a
// known-unattainable criterion failing in an unexpected sub-check, exits 1.

#include "spslice/verify/report.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace spslice::verify;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> claims;
};

const std::map<std::string, std::string> kKnownFailures{
    {"S1.jacobian-xi",
     "at u = 0 the rows d g1 = (-2a, 0) and d g2 = (0, a) are independent for a != 0, so the Jacobian of "
     "(g1, g2) has rank 2 on XI; the singularity there comes from the u -> -u quotient, not from the equations"},
};

int cli_exit(const std::string& args, std::string* out = nullptr)
{
    const auto path = std::filesystem::temp_directory_path() / "spslice_acceptance_out.json";
    const std::string cmd = std::string(SPSLICE_CLI) + " " + args + " > " + path.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    if (out) {
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        *out = ss.str();
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

int main()
{
    VerifyConfig config;
    config.sections = {1, 2, 3, 4, 5};
    const VerificationReport report = run_verify(config);
    std::map<std::string, const Claim*> by_id;
    for (const auto& c : report.claims) by_id[c.id] = &c;

    const std::vector<Criterion> criteria{
        {1, "symbolic slice equations", {"S1.trace-identities"}},
        {2, "wreath isomorphism", {"S2.wreath-isomorphism"}},
        {3, "orbit calculus", {"S1.orbit-types", "S1.orbit-closure", "S1.orbit-dimensions"}},
        {4,
         "singular locus",
         {"S1.singular-families", "S1.singular-classification", "S1.jacobian-smooth", "S1.jacobian-delta",
          "S1.jacobian-xi"}},
        {5, "Springer fibers and z_t", {"S3.fiber-sampler", "S3.kernel-limit"}},
        {6, "deformation diagram", {"S4.deformation-p1", "S4.deformation-p2"}},
    };

    bool unexpected = false;
    for (const auto& crit : criteria) {
        std::vector<std::string> failed;
        for (const auto& id : crit.claims) {
            const auto it = by_id.find(id);
            if (it == by_id.end() || it->second->status != Status::Pass) failed.push_back(id);
        }
        if (failed.empty()) {
            std::cout << "PASS criterion " << crit.number << " (" << crit.title << ")\n";
            continue;
        }
        bool all_known = true;
        std::cout << "FAIL criterion " << crit.number << " (" << crit.title << "): failing";
        for (const auto& id : failed) {
            std::cout << " " << id;
            all_known = all_known && kKnownFailures.count(id);
        }
        std::cout << "\n";
        for (const auto& id : failed) {
            const auto it = by_id.find(id);
            if (it != by_id.end() && it->second->witness) std::cout << "    witness " << id << ": " << *it->second->witness << "\n";
            if (kKnownFailures.count(id)) std::cout << "    known unattainable: " << kKnownFailures.at(id) << "\n";
        }
        unexpected = unexpected || !all_known;
    }

    {
        // Determinism and the exit-code contract, through the library and the CLI.
        VerifyConfig a;
        a.sections = {1, 2, 3, 4, 5};
        a.seed = 4242;
        a.samples = 20;
        const bool same_lib = to_json(run_verify(a), false) == to_json(run_verify(a), false);
        std::string j1, j2;
        const int c1 = cli_exit("verify --sections 2,3,5 --seed 11 --samples 10", &j1);
        const int c2 = cli_exit("verify --sections 2,3,5 --seed 11 --samples 10", &j2);
        bool same_cli = false;
        try {
            same_cli = to_json(from_json(j1), false) == to_json(from_json(j2), false);
        } catch (const std::exception&) {
            same_cli = false;
        }
        const int empty = cli_exit("verify --sections \"\"");
        const int injected = cli_exit("verify --sections \"\" --inject-failure");
        const int usage = cli_exit("verify --sections 9");
        const bool ok = same_lib && same_cli && c1 == 0 && c2 == 0 && empty == 0 && injected == 1 && usage == 2;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion 7 (determinism and report contract)";
        if (!ok)
            std::cout << ": same_lib=" << same_lib << " same_cli=" << same_cli << " exits=" << c1 << "," << c2 << ","
                      << empty << "," << injected << "," << usage;
        std::cout << "\n";
        unexpected = unexpected || !ok;
    }
    return unexpected ? 1 : 0;
}
