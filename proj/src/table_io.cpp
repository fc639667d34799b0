// SPDX-License-Identifier: Apache-2.0
//
// rtwnoma - performance analysis of RIS-assisted two-way NOMA networks
// Copyright (C) 2026 The rtwnoma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "rtwnoma/error.hpp"
#include "rtwnoma/sweep.hpp"

#include "json.hpp"

#include <array>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace rtwnoma::sweep {

namespace {

constexpr std::array<std::string_view, 20> columns{
    "figure", "sweep_variable", "sweep_value", "pu_db", "m_elements", "a1",       "a2",
    "r1",     "r2",             "scheme",      "user",  "sic",        "residual", "metric",
    "value",  "std_error",      "ci95",        "trials", "clamped",   "low_confidence"};

std::string number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// The value as it reads back from its 10-digit text form.
double rounded(double v) { return std::strtod(number(v).c_str(), nullptr); }

std::vector<std::string> fields(const Row& r) {
    return {r.figure,
            r.sweep_variable,
            number(r.sweep_value),
            number(r.pu_db),
            std::to_string(r.m_elements),
            number(r.a1),
            number(r.a2),
            number(r.r1),
            number(r.r2),
            r.scheme,
            r.user,
            r.sic,
            r.residual,
            r.metric,
            number(r.value),
            r.std_error ? number(*r.std_error) : "",
            r.ci95 ? number(*r.ci95) : "",
            r.trials ? std::to_string(*r.trials) : "",
            r.clamped ? "1" : "0",
            r.low_confidence ? "1" : "0"};
}

void append_field(std::string& out, const std::string& f) {
    if (f.find_first_of(",\"\r\n") == std::string::npos) {
        out += f;
        return;
    }
    out += '"';
    for (char ch : f) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
}

// RFC 4180 records with 1-based line numbers of their first character.
struct Record {
    std::vector<std::string> fields;
    std::size_t line;
};

std::vector<Record> split_records(std::string_view text) {
    std::vector<Record> out;
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        Record rec{{}, line};
        std::string field;
        bool done = false;
        while (!done) {
            if (i < text.size() && text[i] == '"') {
                const std::size_t open_line = line;
                ++i;
                for (;;) {
                    if (i >= text.size()) throw ParseError("csv: unterminated quoted field", open_line, 0);
                    if (text[i] == '"') {
                        if (i + 1 < text.size() && text[i + 1] == '"') {
                            field += '"';
                            i += 2;
                            continue;
                        }
                        ++i;
                        break;
                    }
                    if (text[i] == '\n') ++line;
                    field += text[i++];
                }
                if (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r')
                    throw ParseError("csv: unexpected character after quoted field", line, 0);
            } else {
                while (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
                    if (text[i] == '"') throw ParseError("csv: stray quote in unquoted field", line, 0);
                    field += text[i++];
                }
            }
            rec.fields.push_back(std::move(field));
            field.clear();
            if (i >= text.size()) {
                done = true;
            } else if (text[i] == ',') {
                ++i;
            } else {
                if (text[i] == '\r') ++i;
                if (i < text.size() && text[i] == '\n') ++i;
                ++line;
                done = true;
            }
        }
        out.push_back(std::move(rec));
    }
    return out;
}

double parse_double(const std::string& s, std::size_t line, std::string_view column) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE)
        throw ParseError("csv: column " + std::string(column) + " is not a number: '" + s + "'", line, 0);
    return v;
}

std::uint64_t parse_u64(const std::string& s, std::size_t line, std::string_view column) {
    errno = 0;
    char* end = nullptr;
    const auto v = std::strtoull(s.c_str(), &end, 10);
    if (s.empty() || s[0] == '-' || end != s.c_str() + s.size() || errno == ERANGE)
        throw ParseError("csv: column " + std::string(column) + " is not an unsigned integer: '" + s + "'", line, 0);
    return v;
}

bool parse_flag(const std::string& s, std::size_t line, std::string_view column) {
    if (s == "0") return false;
    if (s == "1") return true;
    throw ParseError("csv: column " + std::string(column) + " must be 0 or 1", line, 0);
}

} // namespace

Format parse_format(std::string_view name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw InvalidArgument("unknown output format '" + std::string(name) + "' (expected csv or json)");
}

std::string to_csv(const ResultTable& table) {
    std::string out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) out += ',';
        out += columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        const auto f = fields(row);
        for (std::size_t c = 0; c < f.size(); ++c) {
            if (c) out += ',';
            append_field(out, f[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const ResultTable& table) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : table.rows) {
        nlohmann::ordered_json o;
        o["figure"] = r.figure;
        o["sweep_variable"] = r.sweep_variable;
        o["sweep_value"] = rounded(r.sweep_value);
        o["pu_db"] = rounded(r.pu_db);
        o["m_elements"] = r.m_elements;
        o["a1"] = rounded(r.a1);
        o["a2"] = rounded(r.a2);
        o["r1"] = rounded(r.r1);
        o["r2"] = rounded(r.r2);
        o["scheme"] = r.scheme;
        o["user"] = r.user;
        o["sic"] = r.sic;
        o["residual"] = r.residual;
        o["metric"] = r.metric;
        o["value"] = rounded(r.value);
        o["std_error"] = r.std_error ? nlohmann::ordered_json(rounded(*r.std_error)) : nullptr;
        o["ci95"] = r.ci95 ? nlohmann::ordered_json(rounded(*r.ci95)) : nullptr;
        o["trials"] = r.trials ? nlohmann::ordered_json(*r.trials) : nullptr;
        o["clamped"] = r.clamped;
        o["low_confidence"] = r.low_confidence;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

ResultTable parse_csv(std::string_view text) {
    const auto records = split_records(text);
    if (records.empty()) throw ParseError("csv: missing header", 1, 0);
    const auto& header = records.front().fields;
    if (header.size() != columns.size() || !std::equal(header.begin(), header.end(), columns.begin()))
        throw ParseError("csv: header does not match the result table columns", 1, 0);

    ResultTable table;
    for (std::size_t k = 1; k < records.size(); ++k) {
        const auto& [f, line] = records[k];
        if (f.size() != columns.size())
            throw ParseError("csv: expected " + std::to_string(columns.size()) + " fields, got " +
                                 std::to_string(f.size()),
                             line, 0);
        Row r;
        r.figure = f[0];
        r.sweep_variable = f[1];
        r.sweep_value = parse_double(f[2], line, columns[2]);
        r.pu_db = parse_double(f[3], line, columns[3]);
        r.m_elements = static_cast<unsigned>(parse_u64(f[4], line, columns[4]));
        r.a1 = parse_double(f[5], line, columns[5]);
        r.a2 = parse_double(f[6], line, columns[6]);
        r.r1 = parse_double(f[7], line, columns[7]);
        r.r2 = parse_double(f[8], line, columns[8]);
        r.scheme = f[9];
        r.user = f[10];
        r.sic = f[11];
        r.residual = f[12];
        r.metric = f[13];
        r.value = parse_double(f[14], line, columns[14]);
        if (!f[15].empty()) r.std_error = parse_double(f[15], line, columns[15]);
        if (!f[16].empty()) r.ci95 = parse_double(f[16], line, columns[16]);
        if (!f[17].empty()) r.trials = parse_u64(f[17], line, columns[17]);
        r.clamped = parse_flag(f[18], line, columns[18]);
        r.low_confidence = parse_flag(f[19], line, columns[19]);
        table.rows.push_back(std::move(r));
    }
    return table;
}

void emit(const ResultTable& table, Format format, const std::string& path) {
    const std::string body = format == Format::csv ? to_csv(table) : to_json(table);
    if (path == "-") {
        std::cout << body << std::flush;
        if (!std::cout) throw IoError("cannot write results to standard output");
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open output file '" + path + "'");
    out << body;
    out.close();
    if (!out) throw IoError("failed writing output file '" + path + "'");
}

} // namespace rtwnoma::sweep
