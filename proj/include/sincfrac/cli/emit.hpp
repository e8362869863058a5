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

#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sincfrac::cli {

/// Raised when an artifact cannot be written.
class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numeric column (values) or text column (text, e.g. point flags).
struct Column {
    std::string name;
    std::string unit;
    std::vector<double> values;
    std::vector<std::string> text;

    bool is_text() const { return !text.empty(); }
    std::size_t size() const { return is_text() ? text.size() : values.size(); }
};

struct Table {
    std::vector<Column> columns;
    std::string config;  // written as the trailing `# config:` line
};

/// 12 significant digits, `.` decimal point; non-finite values become NAN.
std::string format_number(double v);

/// Header `name [unit]`, one row per entry, trailing `# config: ...`.
void write_csv(const Table& table, std::ostream& out);
void emit_csv(const Table& table, const std::string& path);

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;  // non-finite entries are skipped
};

struct Plot {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
};

/// Standalone SVG 1.1: axes, tick labels, legend, one polyline per series.
/// Constant ranges are padded by 5% of their magnitude (or by 0.05 at 0).
void write_svg(const Plot& plot, std::ostream& out);
void emit_svg(const Plot& plot, const std::string& path);

}  // namespace sincfrac::cli
