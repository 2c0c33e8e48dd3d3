#ifndef LPK_LIE_IO_HPP
#define LPK_LIE_IO_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lpk/liealg.hpp"
#include "lpk/poly_parse.hpp"

namespace lpk {

struct LieLoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Document format: {"dim": n, "basis": [names...],
//   "brackets": [[i, j, "rhs"], ...]} with 1-based i < j and rhs linear
// homogeneous in the basis variables; optional "name", "aliases".
inline LieAlgebra lie_from_json(const nlohmann::json& doc) {
    if (!doc.contains("dim") || !doc["dim"].is_number_unsigned())
        throw LieLoadError("missing or invalid 'dim'");
    std::size_t n = doc["dim"].get<std::size_t>();
    std::vector<std::string> names;
    if (doc.contains("basis")) {
        for (const auto& b : doc["basis"]) names.push_back(b.get<std::string>());
        if (names.size() != n) throw LieLoadError("basis length != dim");
    } else {
        names = default_basis_names(n);
    }
    VarSetPtr vars = VarSet::make(names);
    LieAlgebra::BracketTable table;
    if (doc.contains("brackets")) {
        for (const auto& row : doc["brackets"]) {
            if (!row.is_array() || row.size() != 3) throw LieLoadError("bracket rows are [i, j, rhs]");
            long i = row[0].get<long>(), j = row[1].get<long>();
            if (i < 1 || j < 1 || i > static_cast<long>(n) || j > static_cast<long>(n))
                throw LieLoadError("bracket index out of range: [" + std::to_string(i) + "," + std::to_string(j) + "]");
            if (i >= j) throw LieLoadError("bracket rows require i < j");
            Poly rhs = poly_parse(row[2].get<std::string>(), vars);
            for (const auto& [m, c] : rhs.terms())
                if (m.degree() != 1) throw LieLoadError("bracket rhs must be linear homogeneous: " + row[2].get<std::string>());
            if (!rhs.is_zero()) {
                auto key = std::make_pair(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
                if (table.count(key)) throw LieLoadError("duplicate bracket entry");
                table[key] = rhs;
            }
        }
    }
    LieAlgebra L(vars, std::move(table));
    if (doc.contains("name")) L.name = doc["name"].get<std::string>();
    if (doc.contains("aliases"))
        for (const auto& a : doc["aliases"]) L.aliases.push_back(a.get<std::string>());
    return L;
}

inline LieAlgebra lie_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LieLoadError("cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw LieLoadError(path + ": " + e.what());
    }
    return lie_from_json(doc);
}

inline LieAlgebra lie_loads(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw LieLoadError(e.what());
    }
    return lie_from_json(doc);
}

}  // namespace lpk

#endif
