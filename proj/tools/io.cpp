#include "io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace btinv::io {

namespace {

struct Token {
    std::string text;
    std::size_t line;
};

class Tokenizer {
public:
    Tokenizer(std::istream& in, std::string source) : source_(std::move(source)) {
        std::string line;
        std::size_t number = 0;
        while (std::getline(in, line)) {
            ++number;
            if (const auto hash = line.find('#'); hash != std::string::npos) {
                line.erase(hash);
            }
            std::istringstream words(line);
            std::string word;
            while (words >> word) {
                tokens_.push_back({word, number});
            }
        }
        last_line_ = number;
    }

    bool done() const { return pos_ == tokens_.size(); }

    const Token& next(const char* expecting) {
        if (done()) {
            fail(last_line_, std::string("unexpected end of input, expected ") + expecting);
        }
        return tokens_[pos_++];
    }

    void expect_header(const std::string& tag) {
        const Token& t = next("format tag");
        if (t.text != tag) {
            fail(t.line, "expected format tag '" + tag + "', found '" + t.text + "'");
        }
        const Token& v = next("format version");
        if (v.text != "1") {
            fail(v.line, "unsupported " + tag + " version '" + v.text + "'");
        }
    }

    std::size_t keyed_size(const std::string& key) {
        const Token& k = next(key.c_str());
        if (k.text != key) {
            fail(k.line, "expected '" + key + "', found '" + k.text + "'");
        }
        const Token& v = next("a positive integer");
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(v.text.data(), v.text.data() + v.text.size(), value);
        if (ec != std::errc{} || ptr != v.text.data() + v.text.size() || value == 0) {
            fail(v.line, "'" + key + "' must be a positive integer, found '" + v.text + "'");
        }
        return value;
    }

    // Returns the value and the line it came from.
    std::pair<Complex, std::size_t> complex_entry() {
        const Token& re = next("real part");
        const Token& im = next("imaginary part");
        return {{number(re), number(im)}, re.line};
    }

    void expect_end() {
        if (!done()) {
            fail(tokens_[pos_].line, "trailing data '" + tokens_[pos_].text + "'");
        }
    }

    [[noreturn]] void fail(std::size_t line, const std::string& message) const {
        throw ParseError(source_, line, message);
    }

private:
    double number(const Token& t) const {
        double value = 0.0;
        const char* first = t.text.data();
        const char* last = first + t.text.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) {
            fail(t.line, "malformed number '" + t.text + "'");
        }
        if (!std::isfinite(value)) {
            fail(t.line, "non-finite entry '" + t.text + "'");
        }
        return value;
    }

    std::string source_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t last_line_ = 0;
};

std::string pair_name(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Reads an n x n block of entries, remembering each entry's line.
ComplexMatrix read_square(Tokenizer& tok, std::size_t n, std::vector<std::size_t>& lines) {
    ComplexMatrix m(n, n);
    lines.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto [z, line] = tok.complex_entry();
            m(i, j) = z;
            lines[i * n + j] = line;
        }
    }
    return m;
}

void check_hermitian(const Tokenizer& tok, const ComplexMatrix& m, const std::vector<std::size_t>& lines,
                     const std::string& what) {
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (m(i, i).imag() != 0.0) {
            tok.fail(lines[i * n + i], what + " diagonal entry " + pair_name(i, i) + " is not real");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m(i, j) != std::conj(m(j, i))) {
                tok.fail(lines[j * n + i], what + " entries " + pair_name(i, j) + " and " + pair_name(j, i) +
                                               " are not complex conjugates");
            }
        }
    }
}

void write_entries(std::ostream& out, const ComplexMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j != 0) {
                out << ' ';
            }
            out << format_double(m(i, j).real()) << ' ' << format_double(m(i, j).imag());
        }
        out << '\n';
    }
}

std::ifstream open(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    return in;
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& message)
    : Error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + message), line_(line) {}

AnyMatrix parse_matrix(std::istream& in, const std::string& source) {
    Tokenizer tok(in, source);
    const Token& tag = tok.next("format tag");
    const std::string kind = tag.text;
    if (kind != "DHM" && kind != "BTHM") {
        tok.fail(tag.line, "expected format tag 'DHM' or 'BTHM', found '" + kind + "'");
    }
    const Token& version = tok.next("format version");
    if (version.text != "1") {
        tok.fail(version.line, "unsupported " + kind + " version '" + version.text + "'");
    }
    std::vector<std::size_t> lines;
    if (kind == "DHM") {
        const std::size_t n = tok.keyed_size("n");
        ComplexMatrix m = read_square(tok, n, lines);
        tok.expect_end();
        check_hermitian(tok, m, lines, "DHM");
        return DenseHermitianMatrix(std::move(m));
    }
    const std::size_t n1 = tok.keyed_size("n1");
    const std::size_t n2 = tok.keyed_size("n2");
    std::vector<ComplexMatrix> blocks;
    for (std::size_t t = 0; t < n2; ++t) {
        std::vector<std::size_t> block_lines;
        blocks.push_back(read_square(tok, n1, block_lines));
        if (t == 0) {
            lines = std::move(block_lines);
        }
    }
    tok.expect_end();
    check_hermitian(tok, blocks[0], lines, "BTHM C_0");
    return BlockToeplitzMatrix(n1, std::move(blocks));
}

std::vector<Complex> parse_vector(std::istream& in, const std::string& source) {
    Tokenizer tok(in, source);
    tok.expect_header("VEC");
    const std::size_t n = tok.keyed_size("n");
    std::vector<Complex> v(n);
    for (auto& z : v) {
        z = tok.complex_entry().first;
    }
    tok.expect_end();
    return v;
}

ComplexMatrix parse_general(std::istream& in, const std::string& source) {
    Tokenizer tok(in, source);
    tok.expect_header("DCM");
    const std::size_t n = tok.keyed_size("n");
    std::vector<std::size_t> lines;
    ComplexMatrix m = read_square(tok, n, lines);
    tok.expect_end();
    return m;
}

void write_matrix(std::ostream& out, const DenseHermitianMatrix& m) {
    out << "DHM 1\n" << "n " << m.order() << '\n';
    write_entries(out, m.entries());
}

void write_matrix(std::ostream& out, const BlockToeplitzMatrix& m) {
    out << "BTHM 1\n" << "n1 " << m.block_order() << '\n' << "n2 " << m.block_count() << '\n';
    for (std::size_t t = 0; t < m.block_count(); ++t) {
        out << "\n# C_" << t << '\n';
        write_entries(out, m.block(t));
    }
}

void write_vector(std::ostream& out, std::span<const Complex> v) {
    out << "VEC 1\n" << "n " << v.size() << '\n';
    for (const Complex& z : v) {
        out << format_double(z.real()) << ' ' << format_double(z.imag()) << '\n';
    }
}

void write_general(std::ostream& out, const ComplexMatrix& m) {
    out << "DCM 1\n" << "n " << m.rows() << '\n';
    write_entries(out, m);
}

AnyMatrix read_matrix(const std::filesystem::path& path) {
    std::ifstream in = open(path);
    return parse_matrix(in, path.string());
}

std::vector<Complex> read_vector(const std::filesystem::path& path) {
    std::ifstream in = open(path);
    return parse_vector(in, path.string());
}

ComplexMatrix read_general(const std::filesystem::path& path) {
    std::ifstream in = open(path);
    return parse_general(in, path.string());
}

std::string format_double(double x) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

}  // namespace btinv::io
