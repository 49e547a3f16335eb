#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "core.hpp"

namespace ctriples {

enum class OutputFormat { bfile, json, csv };

inline OutputFormat parse_format(std::string_view name) {
    if (name == "bfile") return OutputFormat::bfile;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw DomainError("unknown output format '" + std::string(name) + "' (expected bfile, json or csv)");
}

struct SequenceMeta {
    std::string method;  // "product" | "classes" | "brute"
    std::size_t order = 0;
    bool include = true;
};

/// Writes a(0..) in the chosen format. All numbers are full-precision decimal.
///
///   bfile: one "<n> <a(n)>\n" line per term, n from 0.
///   json:  {"method":"...","order":N,"coefficients":[...]} or, without
///          metadata, the bare array. Coefficients are JSON integers of
///          arbitrary length.
///   csv:   header "n,a" then "<n>,<a(n)>" rows.
inline void write_sequence(std::ostream& os, std::span<const BigInt> values, OutputFormat format,
                           const SequenceMeta& meta) {
    switch (format) {
        case OutputFormat::bfile:
            for (std::size_t n = 0; n < values.size(); ++n) os << n << ' ' << values[n] << '\n';
            break;
        case OutputFormat::json: {
            if (meta.include) os << R"({"method":")" << meta.method << R"(","order":)" << meta.order << R"(,"coefficients":)";
            os << '[';
            for (std::size_t n = 0; n < values.size(); ++n) os << (n ? "," : "") << values[n];
            os << ']';
            if (meta.include) os << '}';
            os << '\n';
            break;
        }
        case OutputFormat::csv:
            os << "n,a\n";
            for (std::size_t n = 0; n < values.size(); ++n) os << n << ',' << values[n] << '\n';
            break;
    }
}

}  // namespace ctriples
