/*
   Copyright 2026, the sincfrac authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sincfrac/cli/emit.hpp"

namespace sincfrac::cli {

std::string format_number(double v) {
    if (!std::isfinite(v)) return "NAN";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_csv(const Table& table, std::ostream& out) {
    std::size_t rows = 0;
    for (const Column& c : table.columns) rows = std::max(rows, c.size());
    for (const Column& c : table.columns) {
        if (c.size() != rows) throw OutputError("csv: column '" + c.name + "' has a different length");
    }
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
        const Column& c = table.columns[j];
        out << (j ? "," : "") << c.name;
        if (!c.unit.empty()) out << " [" << c.unit << "]";
    }
    out << '\n';
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < table.columns.size(); ++j) {
            const Column& c = table.columns[j];
            out << (j ? "," : "") << (c.is_text() ? c.text[i] : format_number(c.values[i]));
        }
        out << '\n';
    }
    out << "# config: " << table.config << '\n';
}

void emit_csv(const Table& table, const std::string& path) {
    std::ostringstream buf;
    write_csv(table, buf);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw OutputError("cannot open '" + path + "' for writing");
    f << buf.str();
    f.flush();
    if (!f) throw OutputError("write to '" + path + "' failed");
}

}  // namespace sincfrac::cli
