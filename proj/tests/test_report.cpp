// SPDX-License-Identifier: MIT
#include "golden.hpp"

#include <mcover/report.hpp>

#include <doctest.h>

#include <set>
#include <sstream>

using namespace mcover;

namespace {

struct Record {
    std::map<std::string, std::string> kv;
};

std::vector<Record> split_records(const std::string& text)
{
    std::vector<Record> out(1);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            out.emplace_back();
            continue;
        }
        const auto eq = line.find('=');
        REQUIRE(eq != std::string::npos);
        out.back().kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    if (out.back().kv.empty()) out.pop_back();
    return out;
}

} // namespace

TEST_SUITE("report") {

TEST_CASE("shipped reference table")
{
    const ReferenceTable t = load_reference_table(MCOVER_TABLE);
    REQUIRE(t.size() == 8);
    CHECK(t.begin()->first == 2);
    CHECK(t.rbegin()->first == 9);
    CHECK(t.at(2) == make_rational(-1, 200));
    CHECK(t.at(3) == make_rational(-46225, 78121827));
}

TEST_CASE("table reader diagnostics")
{
    std::istringstream ok("# comment\n\n2\t-1/(2^3*5^2)\r\n");
    CHECK(read_reference_table(ok).size() == 1);

    auto error = [](const std::string& text) {
        std::istringstream in(text);
        try {
            read_reference_table(in, "t");
        } catch (const TableError& e) {
            return std::string(e.what());
        }
        return std::string("<no error>");
    };
    CHECK(error("2 -1/(2^3)\n").find("t:1: expected d<TAB>value") != std::string::npos);
    CHECK(error("# x\nx\t1\n").find("t:2: bad degree") != std::string::npos);
    CHECK(error("2\t1\n2\t1\n").find("duplicate degree 2") != std::string::npos);
    CHECK(error("3\t4\n").find("non-prime base: '4'") != std::string::npos);
}

TEST_CASE("degree 2 breakdown")
{
    std::ostringstream os;
    const BigRational sum = write_breakdown(os, 2);
    CHECK(sum == make_rational(-1, 200));
    const auto recs = split_records(os.str());
    REQUIRE(recs.size() == 5);
    std::set<std::string> z1_node, z1_main;
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(recs[i].kv.count("config") == 1);
        CHECK(recs[i].kv.at("total").ends_with("*a^0"));
        z1_node.insert(recs[i].kv.at("factor.z1.node"));
        z1_main.insert(recs[i].kv.at("factor.z1.main"));
    }
    CHECK(z1_node == std::set<std::string>{"-2/3*a^-1", "-2/5*a^-1"});
    CHECK(z1_main == std::set<std::string>{"-1/2*a^-3", "1/2*a^-3"});
    CHECK(recs[4].kv.at("config") == "sum d=2 count=4");
    CHECK(recs[4].kv.at("total") == "-1/200*a^0");
}

TEST_CASE("breakdown records sum to the invariant")
{
    for (int d = 3; d <= 5; ++d) {
        CAPTURE(d);
        std::ostringstream os;
        write_breakdown(os, d);
        const auto recs = split_records(os.str());
        REQUIRE(static_cast<long>(recs.size()) == golden::integer("configs", d) + 1);
        BigRational sum{0};
        for (std::size_t i = 0; i + 1 < recs.size(); ++i) {
            const std::string t = recs[i].kv.at("total");
            REQUIRE(t.ends_with("*a^0"));
            BigRational q(t.substr(0, t.size() - 4));
            q.canonicalize();
            sum += q;
        }
        CHECK(sum == multiple_cover_invariant(d));
    }
}

} // TEST_SUITE
