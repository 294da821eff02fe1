// SPDX-License-Identifier: MIT
//
// mcover compute <d> [--factored] [--breakdown] [--threads N]
// mcover verify [--max-degree N] [--table PATH] [--threads N]
//
// Exit status: 0 success, 1 verification mismatch, 2 usage error.

#include <mcover/localize.hpp>
#include <mcover/report.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <string>

#ifndef MCOVER_DEFAULT_TABLE
#define MCOVER_DEFAULT_TABLE "data/reference_table.tsv"
#endif

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxDegree = 12;

int cmd_compute(int d, bool factored, bool breakdown, unsigned threads)
{
    if (d < 2) {
        std::cerr << "degree must be at least 2\n";
        return kExitUsage;
    }
    if (d > kMaxDegree) {
        std::cerr << "degree must be at most " << kMaxDegree << "\n";
        return kExitUsage;
    }
    if (breakdown) {
        mcover::write_breakdown(std::cout, d);
        return 0;
    }
    mcover::EvalOptions opt;
    opt.threads = threads;
    const mcover::BigRational v = mcover::multiple_cover_invariant(d, opt);
    std::cout << (factored ? mcover::format_factored(v) : mcover::to_string(v)) << '\n';
    return 0;
}

int cmd_verify(int max_degree, const std::string& path, unsigned threads)
{
    if (max_degree < 2 || max_degree > 9) {
        std::cerr << "--max-degree must lie in 2..9\n";
        return kExitUsage;
    }
    mcover::ReferenceTable table;
    try {
        table = mcover::load_reference_table(path);
    } catch (const mcover::TableError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
    mcover::EvalOptions opt;
    opt.threads = threads;
    bool all = true;
    for (int d = 2; d <= max_degree; ++d) {
        const auto row = table.find(d);
        if (row == table.end()) {
            std::cout << "d=" << d << " FAIL missing from table\n";
            all = false;
            continue;
        }
        const mcover::BigRational got = mcover::multiple_cover_invariant(d, opt);
        if (got == row->second) {
            std::cout << "d=" << d << " PASS\n";
        } else {
            std::cout << "d=" << d << " FAIL expected " << mcover::format_factored(row->second) << " got "
                      << (got == 0 ? std::string("0") : mcover::format_factored(got)) << '\n';
            all = false;
        }
    }
    return all ? 0 : kExitMismatch;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact multiple-cover invariants by torus localization"};
    app.require_subcommand(1);

    unsigned threads = 1;
    app.add_option("--threads", threads, "worker threads for the configuration sum")->check(CLI::Range(1u, 256u));

    int degree = 0;
    bool factored = false, breakdown = false;
    auto* compute = app.add_subcommand("compute", "print the invariant for one degree");
    compute->add_option("d", degree, "cover degree")->required();
    compute->add_flag("--factored", factored, "print as a product of prime powers");
    compute->add_flag("--breakdown", breakdown, "print one key=value record per fixed locus");

    int max_degree = 9;
    std::string table = MCOVER_DEFAULT_TABLE;
    auto* verify = app.add_subcommand("verify", "compare against the reference table");
    verify->add_option("--max-degree", max_degree, "largest degree to check (2..9)");
    verify->add_option("--table", table, "reference table file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*compute) return cmd_compute(degree, factored, breakdown, threads);
    return cmd_verify(max_degree, table, threads);
}
