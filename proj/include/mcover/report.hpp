// SPDX-License-Identifier: MIT
#pragma once

#include "exact.hpp"
#include "localize.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mcover {

/// Degree -> expected invariant, read from `d<TAB>factored` lines.
using ReferenceTable = std::map<int, BigRational>;

struct TableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline ReferenceTable read_reference_table(std::istream& in, const std::string& origin = "<table>")
{
    ReferenceTable rows;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const std::string where = origin + ":" + std::to_string(lineno) + ": ";
        const auto tab = line.find('\t');
        if (tab == std::string::npos) throw TableError(where + "expected d<TAB>value");
        int d = 0;
        try {
            std::size_t used = 0;
            d = std::stoi(line.substr(0, tab), &used);
            if (used != tab) throw std::invalid_argument("junk");
        } catch (const std::exception&) {
            throw TableError(where + "bad degree '" + line.substr(0, tab) + "'");
        }
        try {
            if (!rows.emplace(d, parse_factored(line.substr(tab + 1))).second)
                throw TableError(where + "duplicate degree " + std::to_string(d));
        } catch (const ParseError& e) {
            throw TableError(where + e.what());
        }
    }
    return rows;
}

inline ReferenceTable load_reference_table(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw TableError("cannot open reference table " + path);
    return read_reference_table(in, path);
}

/// One `key=value` record per configuration, records separated by a blank
/// line, closed by a record with config=sum.  Returns the exact sum.
inline BigRational write_breakdown(std::ostream& os, int d)
{
    const ConfigurationList cfgs = enumerate_configurations(d);
    BigRational sum{0};
    for (std::size_t i = 0; i < cfgs.size(); ++i) {
        const ConfigurationReport r = configuration_contribution(cfgs[i]);
        os << "config=" << i << " d=" << d << " zero=" << describe(*r.configuration.chain_zero)
           << " infinity=" << describe(*r.configuration.chain_infinity) << '\n';
        for (const TraceEntry& t : r.per_factor_trace) os << "factor." << t.label << '=' << to_string(t.value) << '\n';
        os << "total=" << to_string(r.total) << "\n\n";
        sum += r.total.coeff;
    }
    os << "config=sum d=" << d << " count=" << cfgs.size() << '\n' << "total=" << to_string(AlphaMonomial{sum, 0}) << '\n';
    return sum;
}

} // namespace mcover
