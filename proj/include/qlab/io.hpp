// Text formats:
//   quandle table:  "quandle <name> <n>" then n rows of n integers
//   presentation:   "gen <id>...", "rel <i> <j> <k>", "eq <i> <j>" lines
//   cochain:        "cocycle <quandle-name> <q> <n>" then "<x1>..<xn> <value>"
//   diagram:        "sheet <id>", "rel <i> <j> <k>", "tp <b> <m> <t> <+|->"
//   matrix:         "matrix <rows> <cols>" then "<i> <j> <value>" triplets
// Blank lines and lines starting with '#' are ignored on input.
#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qlab/chain.hpp"
#include "qlab/diagram.hpp"
#include "qlab/errors.hpp"
#include "qlab/presentation.hpp"
#include "qlab/quandle.hpp"
#include "qlab/snf.hpp"

namespace qlab {

namespace detail {

inline std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

inline std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

inline int parse_int(const std::string& tok, const std::string& what) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw structural_error("expected an integer for " + what + ", got '" + tok + "'");
    }
}

} // namespace detail

struct RawQuandleFile {
    std::string name;
    Table table; // shape-validated, axioms not yet checked
};

inline RawQuandleFile read_quandle_table(std::istream& in) {
    const auto lines = detail::content_lines(in);
    if (lines.empty()) throw structural_error("empty quandle file");
    const auto header = detail::tokens_of(lines[0]);
    if (header.size() != 3 || header[0] != "quandle")
        throw structural_error("quandle file must start with 'quandle <name> <n>'");
    const std::string name = header[1];
    const int n = detail::parse_int(header[2], "quandle size");
    if (n <= 0) throw structural_error("quandle size must be positive");
    if (lines.size() != static_cast<std::size_t>(n) + 1)
        throw structural_error("quandle table has wrong number of rows");
    Table table;
    for (int i = 0; i < n; ++i) {
        const auto row = detail::tokens_of(lines[static_cast<std::size_t>(i) + 1]);
        if (row.size() != static_cast<std::size_t>(n))
            throw structural_error("quandle table row " + std::to_string(i) + " has wrong length");
        std::vector<int> r;
        for (const auto& tok : row) r.push_back(detail::parse_int(tok, "table entry"));
        table.push_back(std::move(r));
    }
    validate_table_shape(table);
    return {name, table};
}

inline FiniteQuandle read_quandle(std::istream& in) {
    RawQuandleFile raw = read_quandle_table(in);
    return FiniteQuandle(raw.name, raw.table);
}

inline void write_quandle(std::ostream& out, const FiniteQuandle& x) {
    out << "quandle " << x.label() << " " << x.size() << "\n";
    for (int a = 0; a < x.size(); ++a) {
        for (int b = 0; b < x.size(); ++b) out << (b ? " " : "") << x.op(a, b);
        out << "\n";
    }
}

inline QuandlePresentation read_presentation(std::istream& in) {
    QuandlePresentation p;
    auto index_of = [&p](const std::string& id) {
        const int i = p.generator_index(id);
        if (i < 0) throw structural_error("undeclared generator '" + id + "'");
        return i;
    };
    for (const auto& line : detail::content_lines(in)) {
        const auto toks = detail::tokens_of(line);
        if (toks[0] == "gen") {
            for (std::size_t i = 1; i < toks.size(); ++i) p.generators.push_back(toks[i]);
        } else if (toks[0] == "rel") {
            if (toks.size() != 4) throw structural_error("rel line needs three generators");
            p.relations.push_back({index_of(toks[1]), index_of(toks[2]), index_of(toks[3])});
        } else if (toks[0] == "eq") {
            if (toks.size() != 3) throw structural_error("eq line needs two generators");
            p.equalities.push_back({index_of(toks[1]), index_of(toks[2])});
        } else {
            throw structural_error("unknown presentation directive '" + toks[0] + "'");
        }
    }
    p.validate();
    return p;
}

inline void write_presentation(std::ostream& out, const QuandlePresentation& p) {
    if (!p.generators.empty()) {
        out << "gen";
        for (const auto& g : p.generators) out << " " << g;
        out << "\n";
    }
    for (const auto& r : p.relations)
        out << "rel " << p.generators[static_cast<std::size_t>(r[0])] << " "
            << p.generators[static_cast<std::size_t>(r[1])] << " "
            << p.generators[static_cast<std::size_t>(r[2])] << "\n";
    for (const auto& e : p.equalities)
        out << "eq " << p.generators[static_cast<std::size_t>(e.first)] << " "
            << p.generators[static_cast<std::size_t>(e.second)] << "\n";
}

// The quandle is passed to check tuple ranges and the degeneracy condition;
// the header's quandle name must match its label.
inline Cochain read_cochain(std::istream& in, const FiniteQuandle& x) {
    const auto lines = detail::content_lines(in);
    if (lines.empty()) throw structural_error("empty cochain file");
    const auto header = detail::tokens_of(lines[0]);
    if (header.size() != 4 || header[0] != "cocycle")
        throw structural_error("cochain file must start with 'cocycle <quandle-name> <q> <n>'");
    if (header[1] != x.label())
        throw structural_error("cochain is for quandle '" + header[1] + "', expected '" + x.label() + "'");
    const int q = detail::parse_int(header[2], "modulus");
    const int degree = detail::parse_int(header[3], "degree");
    if (q < 2 || degree < 1) throw structural_error("cochain modulus/degree out of range");

    Cochain c = Cochain::zero(degree, q);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto toks = detail::tokens_of(lines[i]);
        if (toks.size() != static_cast<std::size_t>(degree) + 1)
            throw structural_error("cochain value line has wrong length");
        Tuple t;
        for (int j = 0; j < degree; ++j) {
            const int v = detail::parse_int(toks[static_cast<std::size_t>(j)], "tuple entry");
            if (v < 0 || v >= x.size()) throw structural_error("cochain tuple entry outside the quandle");
            t.push_back(v);
        }
        if (is_degenerate(t))
            throw structural_error("cochain value on a degenerate tuple");
        c.set(t, detail::parse_int(toks.back(), "cochain value"));
    }
    return c;
}

inline void write_cochain(std::ostream& out, const Cochain& c, const std::string& quandle_name) {
    out << "cocycle " << quandle_name << " " << c.modulus << " " << c.degree << "\n";
    for (const auto& [t, v] : c.values) {
        for (int e : t) out << e << " ";
        out << v << "\n";
    }
}

inline DiagramDatum read_diagram(std::istream& in, const std::string& name) {
    DiagramDatum d;
    d.name = name;
    auto index_of = [&d](const std::string& id) {
        for (std::size_t i = 0; i < d.sheets.size(); ++i)
            if (d.sheets[i] == id) return static_cast<int>(i);
        throw structural_error("undeclared sheet '" + id + "'");
    };
    for (const auto& line : detail::content_lines(in)) {
        const auto toks = detail::tokens_of(line);
        if (toks[0] == "sheet") {
            if (toks.size() != 2) throw structural_error("sheet line needs one identifier");
            d.sheets.push_back(toks[1]);
        } else if (toks[0] == "rel") {
            if (toks.size() != 4) throw structural_error("rel line needs three sheets");
            d.relations.push_back({index_of(toks[1]), index_of(toks[2]), index_of(toks[3])});
        } else if (toks[0] == "tp") {
            if (toks.size() != 5) throw structural_error("tp line needs three sheets and a sign");
            int sign = 0;
            if (toks[4] == "+") sign = 1;
            else if (toks[4] == "-") sign = -1;
            else throw structural_error("triple point sign must be '+' or '-'");
            d.triple_points.push_back({index_of(toks[1]), index_of(toks[2]), index_of(toks[3]), sign});
        } else {
            throw structural_error("unknown diagram directive '" + toks[0] + "'");
        }
    }
    d.validate();
    return d;
}

inline void write_matrix_triplets(std::ostream& out, const MatZ& m) {
    out << "matrix " << m.rows() << " " << m.cols() << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) out << i << " " << j << " " << m(i, j) << "\n";
}

template <class T>
T load_from_file(const std::string& path, T (*reader)(std::istream&)) {
    std::ifstream in(path);
    if (!in) throw structural_error("cannot open '" + path + "'");
    return reader(in);
}

inline FiniteQuandle load_quandle(const std::string& path) {
    return load_from_file<FiniteQuandle>(path, read_quandle);
}

inline QuandlePresentation load_presentation(const std::string& path) {
    return load_from_file<QuandlePresentation>(path, read_presentation);
}

inline DiagramDatum load_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw structural_error("cannot open '" + path + "'");
    std::string stem = path;
    if (const auto slash = stem.find_last_of('/'); slash != std::string::npos)
        stem = stem.substr(slash + 1);
    if (const auto dot = stem.find_last_of('.'); dot != std::string::npos)
        stem = stem.substr(0, dot);
    return read_diagram(in, stem);
}

inline Cochain load_cochain(const std::string& path, const FiniteQuandle& x) {
    std::ifstream in(path);
    if (!in) throw structural_error("cannot open '" + path + "'");
    return read_cochain(in, x);
}

} // namespace qlab
