#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "emsum/errors.hpp"
#include "emsum/polytope.hpp"

namespace emsum {

// Text format: first meaningful line "dim n", then either facet lines
// "facet u_1 ... u_n c" or vertex lines "vertex x_1 ... x_n" (not both).
// Blank lines and '#' comments are ignored.
inline DelzantPolytope parse_polytope(std::istream& in) {
    int n = -1;
    bool have_facets = false, have_vertices = false;
    std::vector<std::pair<LatticeVector, Int>> facets;
    std::vector<LatticeVector> vertices;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;

        auto read_ints = [&](int count, const char* what) {
            LatticeVector v;
            for (int i = 0; i < count; ++i) {
                std::string tok;
                if (!(ls >> tok))
                    throw PolytopeFormatError(std::string("expected ") + std::to_string(count) +
                                                  " integers after '" + what + "'",
                                              lineno);
                Int x;
                if (x.set_str(tok, 10) != 0)
                    throw PolytopeFormatError("'" + tok + "' is not an integer", lineno);
                v.push_back(x);
            }
            std::string extra;
            if (ls >> extra)
                throw PolytopeFormatError("unexpected trailing token '" + extra + "'", lineno);
            return v;
        };

        if (word == "dim") {
            if (n != -1) throw PolytopeFormatError("duplicate 'dim' line", lineno);
            LatticeVector v = read_ints(1, "dim");
            if (v[0] < 1 || v[0] > 3)
                throw PolytopeFormatError("dimension must be 1, 2 or 3", lineno);
            n = static_cast<int>(v[0].get_si());
        } else if (word == "facet") {
            if (n == -1) throw PolytopeFormatError("'facet' before 'dim'", lineno);
            if (have_vertices)
                throw PolytopeFormatError("facet and vertex lines cannot be mixed", lineno);
            have_facets = true;
            LatticeVector v = read_ints(n + 1, "facet");
            Int c = v.back();
            v.pop_back();
            facets.emplace_back(std::move(v), c);
        } else if (word == "vertex") {
            if (n == -1) throw PolytopeFormatError("'vertex' before 'dim'", lineno);
            if (have_facets)
                throw PolytopeFormatError("facet and vertex lines cannot be mixed", lineno);
            have_vertices = true;
            vertices.push_back(read_ints(n, "vertex"));
        } else {
            throw PolytopeFormatError("unknown directive '" + word + "'", lineno);
        }
    }
    if (n == -1) throw PolytopeFormatError("missing 'dim' line", lineno ? lineno : 1);
    if (have_facets) return DelzantPolytope::from_facets(n, std::move(facets));
    if (have_vertices) return DelzantPolytope::from_vertices(n, vertices);
    throw PolytopeFormatError("no facet or vertex lines", lineno ? lineno : 1);
}

inline DelzantPolytope load_polytope(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open polytope file '" + path + "'");
    return parse_polytope(in);
}

}  // namespace emsum
