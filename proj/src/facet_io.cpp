#include "bistellar/facet_io.hpp"

#include <fstream>
#include <sstream>

namespace bistellar {

TriangulatedManifold parse_facet_stream(std::istream& in) {
    std::vector<Simplex> facets;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        std::vector<int> verts;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size() || v <= 0) throw std::invalid_argument(tok);
                verts.push_back(v);
            } catch (const std::exception&) {
                throw Error(Errc::ParseError,
                            "line " + std::to_string(line_no) + ": bad vertex label '" +
                                tok + "'",
                            line_no);
            }
        }
        try {
            facets.emplace_back(verts);
        } catch (const Error& e) {
            throw Error(Errc::ParseError,
                        "line " + std::to_string(line_no) + ": " + e.what(), line_no);
        }
    }
    if (facets.empty()) throw Error(Errc::ParseError, "no facets in input");
    int n = facets.front().dim();
    return TriangulatedManifold::from_facets(facets, n);
}

TriangulatedManifold parse_facet_string(const std::string& text) {
    std::istringstream in(text);
    return parse_facet_stream(in);
}

TriangulatedManifold parse_facet_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
    return parse_facet_stream(in);
}

std::vector<OrientedSimplex> parse_signed_facet_stream(std::istream& in) {
    std::vector<OrientedSimplex> out;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        int sign = +1;
        std::vector<int> verts;
        std::string tok;
        bool first = true;
        while (ls >> tok) {
            if (first && (tok == "-" || tok == "+")) {
                sign = tok == "-" ? -1 : +1;
                first = false;
                continue;
            }
            first = false;
            try {
                std::size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size() || v <= 0) throw std::invalid_argument(tok);
                verts.push_back(v);
            } catch (const std::exception&) {
                throw Error(Errc::ParseError,
                            "line " + std::to_string(line_no) + ": bad vertex label '" +
                                tok + "'",
                            line_no);
            }
        }
        try {
            out.emplace_back(Simplex(verts), sign);
        } catch (const Error& e) {
            throw Error(Errc::ParseError,
                        "line " + std::to_string(line_no) + ": " + e.what(), line_no);
        }
    }
    if (out.empty()) throw Error(Errc::ParseError, "no facets in input");
    return out;
}

std::vector<OrientedSimplex> parse_signed_facet_string(const std::string& text) {
    std::istringstream in(text);
    return parse_signed_facet_stream(in);
}

std::vector<OrientedSimplex> parse_signed_facet_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
    return parse_signed_facet_stream(in);
}

std::string emit_facets(const TriangulatedManifold& K) {
    std::string out;
    for (const auto& of : K.oriented_facets()) {
        const auto& vs = of.simplex.vertices();
        for (std::size_t j = 0; j < vs.size(); ++j) {
            if (j) out += " ";
            out += std::to_string(vs[j]);
        }
        out += "\n";
    }
    return out;
}

}  // namespace bistellar
