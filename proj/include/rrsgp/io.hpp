#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "rrsgp/ideal.hpp"

namespace rrsgp {

/// "6,9,11" -> {6, 9, 11}
inline std::vector<Int> parse_generator_list(const std::string& text) {
    std::vector<Int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        Int value = 0;
        try {
            value = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw error(errc::parse_error, "bad integer '" + item + "' in generator list");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size())
            throw error(errc::parse_error, "trailing characters in '" + item + "'");
        out.push_back(value);
    }
    if (out.empty()) throw error(errc::parse_error, "empty generator list");
    return out;
}

/// "9,11 @ 6,9,11" -> ideal generators and ambient generators
inline std::pair<std::vector<Int>, std::vector<Int>> parse_ideal_literal(const std::string& text) {
    const auto at = text.find('@');
    if (at == std::string::npos)
        throw error(errc::parse_error, "ideal literal must look like \"9,11 @ 6,9,11\"");
    return {parse_generator_list(text.substr(0, at)), parse_generator_list(text.substr(at + 1))};
}

inline std::string format_generator_list(const std::vector<Int>& gens) {
    std::string out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(gens[i]);
    }
    return out;
}

inline const char* arrow(bool ascii) { return ascii ? "->" : "→"; }

/// "{9,11,15,...,24,26,->}" : sporadic elements, then the tail start and an arrow.
inline std::string format_set(const RelativeIdeal& e, bool ascii = false) {
    std::string out = "{";
    for (Int x : e.sporadic()) out += std::to_string(x) + ",";
    out += std::to_string(e.tail_start());
    out += ",";
    out += arrow(ascii);
    out += "}";
    return out;
}

inline std::string format_set(const NumericalSemigroup& s, bool ascii = false) {
    std::string out = "{";
    for (Int x : s.small_elements()) out += std::to_string(x) + ",";
    out += std::to_string(s.conductor());
    out += ",";
    out += arrow(ascii);
    out += "}";
    return out;
}

inline std::string format_apery(const AperyTable& t) {
    std::string out = "{";
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t.entries[i]);
    }
    out += "}";
    return out;
}

inline std::string format_int_list(const std::vector<Int>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    out += "]";
    return out;
}

} // namespace rrsgp
