#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "btinv/matrix.hpp"

namespace btinv::io {

// Text formats. '#' starts a comment that runs to the end of the line.
//
//   DHM 1          BTHM 1          VEC 1         DCM 1
//   n <int>        n1 <int>        n <int>       n <int>
//   re im ...      n2 <int>        re im         re im ...
//                  C_0 rows, blank line, C_1 rows, ...
//
// Entries are "re im" pairs, row-major. Numbers are written in the
// shortest decimal form that reads back to the same double.

/// Malformed input. `line()` is 1-based, 0 when the error is not tied to a line.
class ParseError : public Error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// File cannot be opened or written.
class IoError : public Error {
public:
    using Error::Error;
};

using AnyMatrix = std::variant<DenseHermitianMatrix, BlockToeplitzMatrix>;

AnyMatrix parse_matrix(std::istream& in, const std::string& source = "<input>");
std::vector<Complex> parse_vector(std::istream& in, const std::string& source = "<input>");
ComplexMatrix parse_general(std::istream& in, const std::string& source = "<input>");

void write_matrix(std::ostream& out, const DenseHermitianMatrix& m);
void write_matrix(std::ostream& out, const BlockToeplitzMatrix& m);
void write_vector(std::ostream& out, std::span<const Complex> v);
/// General complex square matrix, tagged DCM.
void write_general(std::ostream& out, const ComplexMatrix& m);

AnyMatrix read_matrix(const std::filesystem::path& path);
std::vector<Complex> read_vector(const std::filesystem::path& path);
ComplexMatrix read_general(const std::filesystem::path& path);

/// Opens `path` for writing and hands the stream to `write`; IoError on failure.
template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& write);

/// Shortest round-trip decimal representation.
std::string format_double(double x);

}  // namespace btinv::io

#include <fstream>

template <class Writer>
void btinv::io::write_file(const std::filesystem::path& path, Writer&& write) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    write(out);
    out.flush();
    if (!out) {
        throw IoError("error while writing " + path.string());
    }
}
