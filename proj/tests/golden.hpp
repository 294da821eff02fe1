// SPDX-License-Identifier: MIT
//
// Reader for tests/golden/oracle_values.tsv, the values frozen from the
// Fraction-based oracle in tests/oracle/oracle.py.
#pragma once

#include <mcover/exact.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace golden {

inline const std::map<std::pair<std::string, int>, std::string>& table()
{
    static const auto rows = [] {
        std::map<std::pair<std::string, int>, std::string> out;
        std::ifstream in(MCOVER_GOLDEN);
        if (!in) throw std::runtime_error("missing golden file " MCOVER_GOLDEN);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ss(line);
            std::string key, value;
            int d = 0;
            ss >> key >> d >> value;
            out[{key, d}] = value;
        }
        return out;
    }();
    return rows;
}

inline mcover::BigRational rational(const std::string& key, int d)
{
    mcover::BigRational q(table().at({key, d}));
    q.canonicalize();
    return q;
}

inline long integer(const std::string& key, int d) { return std::stol(table().at({key, d})); }

} // namespace golden
