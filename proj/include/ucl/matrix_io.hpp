#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ucl/matrix.hpp"

namespace ucl {

// Shared matrix text format: first non-comment line "R C KIND" with KIND in
// {01, VAL, SIGN}, then R lines of C whitespace-separated tokens.  Lines
// starting with '#' are comments and are ignored (leading whitespace allowed).

namespace detail {

inline bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
}

inline std::vector<std::string> read_payload_lines(std::istream& in,
                                                   std::vector<std::string>* comments = nullptr) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (is_comment_or_blank(line)) {
            if (comments && !line.empty() && line.find('#') != std::string::npos)
                comments->push_back(line);
            continue;
        }
        out.push_back(line);
    }
    return out;
}

inline std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

}  // namespace detail

enum class MatrixKind { ZeroOne, Value, SignK };

struct ParsedMatrix {
    MatrixKind kind;
    // exactly one of these is meaningful, per kind
    std::vector<std::vector<std::string>> raw;  // tokens, rows x cols
    std::vector<std::string> comments;          // '#' lines seen before/within
};

inline ParsedMatrix parse_matrix_text(std::istream& in) {
    ParsedMatrix pm;
    auto lines = detail::read_payload_lines(in, &pm.comments);
    if (lines.empty()) throw ParseError("empty matrix file");
    auto head = detail::tokens_of(lines[0]);
    if (head.size() != 3) throw ParseError("matrix header must be 'R C KIND'");
    long rows = 0, cols = 0;
    try {
        rows = std::stol(head[0]);
        cols = std::stol(head[1]);
    } catch (...) {
        throw ParseError("matrix header must be 'R C KIND'");
    }
    if (rows < 1 || cols < 1) throw ParseError("matrix dimensions must be >= 1");
    const std::string& kind = head[2];
    if (kind == "01") pm.kind = MatrixKind::ZeroOne;
    else if (kind == "VAL") pm.kind = MatrixKind::Value;
    else if (kind == "SIGN") pm.kind = MatrixKind::SignK;
    else throw ParseError("unknown matrix kind '" + kind + "'");
    if (static_cast<long>(lines.size()) != rows + 1)
        throw ParseError("expected " + std::to_string(rows) + " data rows, found " +
                         std::to_string(lines.size() - 1));
    for (long r = 1; r <= rows; ++r) {
        auto toks = detail::tokens_of(lines[r]);
        if (static_cast<long>(toks.size()) != cols)
            throw ParseError("row " + std::to_string(r) + " has " + std::to_string(toks.size()) +
                             " tokens, expected " + std::to_string(cols));
        pm.raw.push_back(std::move(toks));
    }
    return pm;
}

inline ZeroOneMatrix to_zero_one(const ParsedMatrix& pm) {
    if (pm.kind != MatrixKind::ZeroOne) throw ParseError("expected a 01 matrix");
    ZeroOneMatrix m(static_cast<int>(pm.raw.size()), static_cast<int>(pm.raw[0].size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const std::string& t = pm.raw[r][c];
            if (t == "0") m.set(r, c, 0);
            else if (t == "1") m.set(r, c, 1);
            else throw ParseError("01 matrix token must be 0 or 1, got '" + t + "'");
        }
    return m;
}

inline ValueMatrix to_value(const ParsedMatrix& pm) {
    if (pm.kind == MatrixKind::SignK) throw ParseError("expected a VAL or 01 matrix");
    ValueMatrix m(static_cast<int>(pm.raw.size()), static_cast<int>(pm.raw[0].size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = parse_rational(pm.raw[r][c]);
    for (const auto& cmt : pm.comments)
        if (cmt.find("squared-values") != std::string::npos) m.squared = true;
    return m;
}

inline SignMatrix to_sign(const ParsedMatrix& pm) {
    if (pm.kind != MatrixKind::SignK) throw ParseError("expected a SIGN matrix");
    SignMatrix m(static_cast<int>(pm.raw.size()), static_cast<int>(pm.raw[0].size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const std::string& t = pm.raw[r][c];
            if (t == "1") m.set(r, c, Sign::One);
            else if (t == "+") m.set(r, c, Sign::Plus);
            else if (t == "-") m.set(r, c, Sign::Minus);
            else throw ParseError("SIGN matrix token must be 1, + or -, got '" + t + "'");
        }
    return m;
}

inline ParsedMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_matrix_text(in);
}

inline void write_matrix(std::ostream& out, const ZeroOneMatrix& m) {
    out << m.rows() << " " << m.cols() << " 01\n";
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) out << (c ? " " : "") << int(m.at(r, c));
        out << "\n";
    }
}

inline void write_matrix(std::ostream& out, const ValueMatrix& m) {
    if (m.squared) out << "# squared-values\n";
    out << m.rows() << " " << m.cols() << " VAL\n";
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) out << (c ? " " : "") << to_string(m.at(r, c));
        out << "\n";
    }
}

inline void write_matrix(std::ostream& out, const SignMatrix& m) {
    out << m.rows() << " " << m.cols() << " SIGN\n";
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) out << (c ? " " : "") << sign_char(m.at(r, c));
        out << "\n";
    }
}

template <class M>
std::string matrix_to_string(const M& m) {
    std::ostringstream ss;
    write_matrix(ss, m);
    return ss.str();
}

}  // namespace ucl
