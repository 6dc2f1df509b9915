#include "spslice/errors.hpp"
#include "spslice/liealg/sp_algebra.hpp"
#include "spslice/linalg/charpoly.hpp"
#include "spslice/linalg/matrix_io.hpp"
#include "spslice/orbits/jordan.hpp"
#include "spslice/verify/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace spslice;

int run_verify_command(verify::VerifyConfig config, const std::string& sections, const std::string& format)
{
    config.sections = verify::parse_sections(sections);
    if (format == "json") config.format = verify::Format::Json;
    else if (format == "md" || format == "markdown") config.format = verify::Format::Markdown;
    else throw UsageError("unknown format '" + format + "' (expected json or md)");

    std::ofstream file;
    if (config.out) {
        file.open(*config.out);
        if (!file) throw UsageError("cannot write to '" + *config.out + "'");
    }
    const verify::VerificationReport report = verify::run_verify(config);
    const std::string text =
        config.format == verify::Format::Json ? verify::to_json(report) : verify::to_markdown(report);
    if (config.out) {
        file << text;
        if (!file) throw UsageError("failed writing '" + *config.out + "'");
        std::size_t failed = 0;
        for (const auto& c : report.claims) failed += c.status == verify::Status::Fail;
        std::cerr << report.claims.size() << " claims, " << failed << " failed; report written to " << *config.out
                  << "\n";
    } else {
        std::cout << text;
    }
    return verify::exit_code(report);
}

QMatrix load(const std::string& path)
{
    return read_matrix_file(path);
}

int run_jordan_type(const std::string& path)
{
    const QMatrix m = load(path);
    if (!m.is_square()) throw UsageError("jordan-type: matrix is not square");
    std::cout << orbits::jordan_type(m).str() << "\n";
    return 0;
}

int run_charpoly(const std::string& path)
{
    const QMatrix m = load(path);
    if (!m.is_square()) throw UsageError("charpoly: matrix is not square");
    std::cout << charpoly_string(charpoly(m)) << "\n";
    return 0;
}

int run_in_sp(const std::string& path)
{
    const QMatrix m = load(path);
    if (!m.is_square() || m.rows() == 0 || m.rows() % 2 != 0)
        throw UsageError("in-sp: matrix must be 2n x 2n");
    std::cout << (lie::in_sp(m, lie::SpAlgebra::split(m.rows() / 2)) ? "true" : "false") << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of the sp6 slice computations"};
    app.require_subcommand(1);

    verify::VerifyConfig config;
    std::string sections = "1,2,3,4,5", format = "json", out;
    auto* verify_cmd = app.add_subcommand("verify", "Run the claim battery and print a report");
    verify_cmd->add_option("--sections", sections, "Comma-separated sections to run (1..5)");
    verify_cmd->add_option("--seed", config.seed, "Seed for randomized suites");
    verify_cmd->add_option("--samples", config.samples, "Base sample count for randomized suites");
    verify_cmd->add_option("--format", format, "Report format: json or md");
    verify_cmd->add_option("--out", out, "Write the report to PATH instead of stdout");
    verify_cmd->add_flag("--inject-failure", config.inject_failure, "Add a failing claim")->group("");

    std::string file;
    auto* jordan_cmd = app.add_subcommand("jordan-type", "Print the Jordan type of a nilpotent matrix");
    jordan_cmd->add_option("FILE", file, "Matrix file")->required();
    auto* charpoly_cmd = app.add_subcommand("charpoly", "Print the characteristic polynomial");
    charpoly_cmd->add_option("FILE", file, "Matrix file")->required();
    auto* in_sp_cmd = app.add_subcommand("in-sp", "Test membership in sp_2n (split form)");
    in_sp_cmd->add_option("FILE", file, "Matrix file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify_cmd) {
            if (!out.empty()) config.out = out;
            return run_verify_command(config, sections, format);
        }
        if (*jordan_cmd) return run_jordan_type(file);
        if (*charpoly_cmd) return run_charpoly(file);
        if (*in_sp_cmd) return run_in_sp(file);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
