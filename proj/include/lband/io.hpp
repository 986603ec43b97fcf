// File formats and JSON glue.
//
// Vector/band files: one scalar per line, decimal or "p/q"; blank lines
// and surrounding whitespace are ignored. Alternative: a JSON array of
// scalar strings (integers also accepted as JSON numbers). Dense matrices:
// CSV, one row per line. All emission is deterministic: rationals print as
// canonical "p/q" strings, floats as shortest round-trip JSON numbers.
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lband/core.hpp"
#include "lband/errors.hpp"
#include "lband/scalar.hpp"

namespace lband {

using json = nlohmann::ordered_json;

namespace detail {

inline std::string trim(std::string_view s) {
    const char* ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return std::string(s.substr(b, e - b + 1));
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace detail

/// One scalar per line. Empty input is a parse error: every consumer of a
/// vector file requires at least one entry.
template <field_scalar S>
std::vector<S> parse_scalar_lines(const std::string& text) {
    std::vector<S> out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string item = detail::trim(line);
        if (item.empty()) continue;
        try {
            out.push_back(parse_scalar<S>(item));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (out.empty()) throw ParseError("no scalar entries found");
    return out;
}

/// JSON array of scalars. Strings parse through the scalar grammar; number
/// tokens are accepted exactly when they are representable without loss
/// (any number in float mode, integers only in rational mode).
template <field_scalar S>
std::vector<S> parse_scalar_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty())
        throw ParseError("expected a non-empty JSON array of scalars");
    std::vector<S> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        if (item.is_string()) {
            out.push_back(parse_scalar<S>(item.template get<std::string>()));
        } else if (item.is_number_integer()) {
            out.push_back(S(static_cast<long>(item.template get<long long>())));
        } else if (item.is_number_float()) {
            if constexpr (scalar_traits<S>::is_exact)
                throw ParseError("rational mode requires string scalars in JSON (got a float token)");
            else
                out.push_back(S(item.template get<double>()));
        } else {
            throw ParseError("JSON array entries must be scalar strings or numbers");
        }
    }
    return out;
}

template <field_scalar S>
std::vector<S> load_vector(const std::string& path, bool json_format = false) {
    const std::string text = detail::read_file(path);
    return json_format ? parse_scalar_json<S>(text) : parse_scalar_lines<S>(text);
}

/// CSV rows of equal length.
template <field_scalar S>
DenseMatrix<S> parse_csv(const std::string& text) {
    std::vector<std::vector<S>> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::trim(line).empty()) continue;
        std::vector<S> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            const std::string item = detail::trim(cell);
            if (item.empty())
                throw ParseError("line " + std::to_string(lineno) + ": empty cell");
            try {
                row.push_back(parse_scalar<S>(item));
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("line " + std::to_string(lineno) + ": ragged row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("no matrix rows found");
    DenseMatrix<S> m(rows.size(), rows.front().size());
    for (index_t i = 1; i <= m.rows(); ++i)
        for (index_t j = 1; j <= m.cols(); ++j)
            m.at(i, j) = rows[i - 1][j - 1];
    return m;
}

/// CSV matrix validated as symmetric.
template <field_scalar S>
DenseSymMatrix<S> load_sym_csv(const std::string& path, const ToleranceConfig& tol = {}) {
    return DenseSymMatrix<S>(parse_csv<S>(detail::read_file(path)), tol);
}

/// Scalars in JSON: rationals as canonical strings, floats as numbers
/// (nlohmann emits shortest round-trip decimals).
inline json scalar_json(const Rational& v) { return json(v.str()); }
inline json scalar_json(double v) { return json(v); }

template <field_scalar S>
json vector_json(const std::vector<S>& v) {
    json arr = json::array();
    for (const S& x : v) arr.push_back(scalar_json(x));
    return arr;
}

template <field_scalar S>
json matrix_json(const DenseMatrix<S>& m) {
    json rows = json::array();
    for (index_t i = 1; i <= m.rows(); ++i) {
        json row = json::array();
        for (index_t j = 1; j <= m.cols(); ++j)
            row.push_back(scalar_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace lband
