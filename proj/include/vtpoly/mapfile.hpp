// Text format for symbol sets: one orbit symbol per line, e.g. "(Y1,Y4,I1)";
// '#' starts a comment line; blank lines and line order are insignificant.
#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "vtpoly/error.hpp"
#include "vtpoly/symbol.hpp"

namespace vtpoly {

inline std::vector<OrbitSymbol> parse_map_text(std::istream& in) {
    std::vector<OrbitSymbol> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto fail = [&](const std::string& why) {
            raise(Errc::parse_error, "line " + std::to_string(lineno) + ": " + why);
        };
        std::string body;
        for (char c : line) {
            if (c == '#') break;
            if (!isspace(static_cast<unsigned char>(c))) body += c;
        }
        if (body.empty()) continue;
        if (body.front() != '(' || body.back() != ')') {
            fail("expected '(name,...)', got '" + line + "'");
        }
        std::vector<std::string> names;
        std::string cur;
        for (char c : body.substr(1, body.size() - 2)) {
            if (c == ',') {
                names.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        names.push_back(cur);
        try {
            out.push_back(validate_symbol(names));
        } catch (const Error& e) {
            fail(e.what());
        }
    }
    if (out.empty()) raise(Errc::parse_error, "no orbit symbols found");
    return out;
}

inline std::vector<OrbitSymbol> parse_map_text(const std::string& text) {
    std::istringstream in(text);
    return parse_map_text(in);
}

inline std::string write_map_text(const std::vector<OrbitSymbol>& symbols) {
    std::string out;
    for (const auto& s : symbols) out += to_string(s) + "\n";
    return out;
}

}  // namespace vtpoly
