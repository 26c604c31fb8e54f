#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mcheck/matrix.hpp"

namespace mcheck {

/// Parse failure with 1-based line/column position and the source name.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, int line, int column, const std::string& message);
    const std::string& source() const { return source_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::string source_;
    int line_;
    int column_;
};

/// Reads the matrix text format:
///
///   params n=2 m=3 m'=1 l=2 k=2     (optional first line)
///   x1 x2 x2 | x1                   (one row per line, '|' splits parts)
///   # comment                       ('#' to end of line)
///
/// Without a params line, l and k are inferred per validate(). Throws
/// ParseError with the offending token's position, or std::invalid_argument
/// for validation failures.
ExtendedMatrix parse_matrix(const std::string& text, const std::string& source_name = "<input>");
ExtendedMatrix parse_matrix(std::istream& in, const std::string& source_name = "<input>");
ExtendedMatrix parse_matrix_file(const std::string& path);

/// Canonical text form: params line first, rows in order, single spaces.
/// parse_matrix(serialize(m)) == m, byte for byte on re-serialization.
std::string serialize(const ExtendedMatrix& m);

}  // namespace mcheck
