#include "ca2d/io.hpp"

#include <cctype>
#include <fstream>
#include <random>
#include <sstream>

#include "ca2d/error.hpp"

namespace ca2d {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view data) : data_(data) {}

    std::size_t pos() const noexcept { return pos_; }
    bool done() const noexcept { return pos_ >= data_.size(); }
    char peek() const noexcept { return data_[pos_]; }
    char take() noexcept { return data_[pos_++]; }
    std::size_t remaining() const noexcept { return data_.size() - pos_; }

    // Whitespace and '#' comments up to end of line.
    void skip_space() {
        while (!done()) {
            const char ch = peek();
            if (ch == '#') {
                while (!done() && peek() != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::uint64_t read_uint(const char* what) {
        skip_space();
        if (done()) throw ParseError(pos_, std::string("unexpected end of data reading ") + what);
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError(pos_, std::string("expected ") + what);
        }
        std::uint64_t v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(take() - '0');
            if (v > (std::uint64_t{1} << 40)) throw ParseError(pos_, std::string(what) + " too large");
        }
        return v;
    }

private:
    std::string_view data_;
    std::size_t pos_ = 0;
};

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t base_offset) {
    std::vector<std::uint64_t> out;
    Cursor cur(line);
    while (true) {
        while (!cur.done() && std::isspace(static_cast<unsigned char>(cur.peek()))) cur.take();
        if (cur.done()) break;
        if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            throw ParseError(base_offset + cur.pos(), "expected a decimal number");
        }
        try {
            out.push_back(cur.read_uint("number"));
        } catch (const ParseError& e) {
            throw ParseError(base_offset + e.offset(), "number too large");
        }
    }
    return out;
}

}  // namespace

Grid parse_pbm(std::string_view data) {
    Cursor cur(data);
    if (cur.remaining() < 2 || cur.take() != 'P') throw ParseError(0, "missing PBM magic number");
    const char kind = cur.take();
    if (kind != '1' && kind != '4') throw ParseError(1, std::string("unsupported PBM variant P") + kind);

    const std::uint64_t width = cur.read_uint("width");
    const std::size_t width_end = cur.pos();
    const std::uint64_t height = cur.read_uint("height");
    if (width == 0 || height == 0) throw ParseError(width_end, "image dimensions must be positive");
    if (width * height > kMaxImageCells) {
        throw ParseError(cur.pos(), "image of " + std::to_string(width) + "x" + std::to_string(height) +
                                        " exceeds the size limit");
    }
    Grid g(static_cast<int>(height), static_cast<int>(width));

    if (kind == '1') {
        for (std::uint64_t r = 0; r < height; ++r) {
            for (std::uint64_t c = 0; c < width; ++c) {
                cur.skip_space();
                if (cur.done()) {
                    throw ParseError(cur.pos(), "truncated pixel data: got " + std::to_string(r * width + c) +
                                                    " of " + std::to_string(width * height) + " pixels");
                }
                const char ch = cur.take();
                if (ch != '0' && ch != '1') throw ParseError(cur.pos() - 1, "pixel must be 0 or 1");
                if (ch == '1') g.set(static_cast<int>(r), static_cast<int>(c), true);
            }
        }
        cur.skip_space();
        if (!cur.done()) throw ParseError(cur.pos(), "data beyond the declared " + std::to_string(width) + "x" +
                                                         std::to_string(height) + " pixels");
        return g;
    }

    // P4: exactly one whitespace byte, then packed rows, MSB first.
    if (cur.done() || !std::isspace(static_cast<unsigned char>(cur.peek()))) {
        throw ParseError(cur.pos(), "expected whitespace before raster");
    }
    cur.take();
    const std::uint64_t row_bytes = (width + 7) / 8;
    if (cur.remaining() < row_bytes * height) {
        throw ParseError(data.size(), "truncated raster: need " + std::to_string(row_bytes * height) +
                                          " bytes, have " + std::to_string(cur.remaining()));
    }
    for (std::uint64_t r = 0; r < height; ++r) {
        for (std::uint64_t byte = 0; byte < row_bytes; ++byte) {
            const auto v = static_cast<unsigned char>(cur.take());
            for (int bit = 0; bit < 8; ++bit) {
                const std::uint64_t c = byte * 8 + bit;
                if (c >= width) break;
                if (v & (0x80u >> bit)) g.set(static_cast<int>(r), static_cast<int>(c), true);
            }
        }
    }
    if (!cur.done()) throw ParseError(cur.pos(), "data beyond the declared raster");
    return g;
}

std::string format_pbm(const Grid& g, ImageFormat format) {
    std::string out = (format == ImageFormat::p1 ? "P1\n" : "P4\n");
    out += std::to_string(g.cols()) + " " + std::to_string(g.rows()) + "\n";
    if (format == ImageFormat::p1) {
        for (int r = 0; r < g.rows(); ++r) {
            for (int c = 0; c < g.cols(); ++c) {
                if (c) out += ' ';
                out += g.get(r, c) ? '1' : '0';
            }
            out += '\n';
        }
        return out;
    }
    for (int r = 0; r < g.rows(); ++r) {
        for (int c0 = 0; c0 < g.cols(); c0 += 8) {
            unsigned char v = 0;
            for (int bit = 0; bit < 8 && c0 + bit < g.cols(); ++bit) {
                if (g.get(r, c0 + bit)) v |= static_cast<unsigned char>(0x80u >> bit);
            }
            out += static_cast<char>(v);
        }
    }
    return out;
}

Grid read_image(const std::string& path) { return parse_pbm(read_file(path)); }

void write_image(const Grid& g, const std::string& path, ImageFormat format) {
    write_file(path, format_pbm(g, format));
}

std::string format_matrix(const BitMatrix& mat) {
    std::string out = std::to_string(mat.rows()) + " " + std::to_string(mat.cols()) + "\n";
    out.reserve(out.size() + std::size_t(mat.rows()) * (mat.cols() + 1));
    for (int r = 0; r < mat.rows(); ++r) {
        for (int c = 0; c < mat.cols(); ++c) out += mat.get(r, c) ? '1' : '0';
        out += '\n';
    }
    return out;
}

BitMatrix parse_matrix(std::string_view text) {
    Cursor cur(text);
    const auto rows = cur.read_uint("row count");
    const auto cols = cur.read_uint("column count");
    if (rows == 0 || cols == 0) throw ParseError(cur.pos(), "matrix dimensions must be positive");
    if (rows * cols > kMaxImageCells) throw ParseError(cur.pos(), "matrix exceeds the size limit");
    BitMatrix mat(static_cast<int>(rows), static_cast<int>(cols));
    for (std::uint64_t r = 0; r < rows; ++r) {
        cur.skip_space();
        for (std::uint64_t c = 0; c < cols; ++c) {
            if (cur.done()) throw ParseError(cur.pos(), "truncated matrix at row " + std::to_string(r + 1));
            const char ch = cur.take();
            if (ch != '0' && ch != '1') throw ParseError(cur.pos() - 1, "matrix entry must be 0 or 1");
            if (ch == '1') mat.set(static_cast<int>(r), static_cast<int>(c), true);
        }
        if (!cur.done() && !std::isspace(static_cast<unsigned char>(cur.peek()))) {
            throw ParseError(cur.pos(), "row " + std::to_string(r + 1) + " is longer than " + std::to_string(cols));
        }
    }
    cur.skip_space();
    if (!cur.done()) throw ParseError(cur.pos(), "data beyond the declared matrix");
    return mat;
}

std::string format_dependency_map(const DependencyMap& deps) {
    std::string out;
    for (int i = 0; i < deps.cells(); ++i) {
        bool first = true;
        for (int j : deps.at(i)) {
            if (!first) out += ' ';
            out += std::to_string(j + 1);
            first = false;
        }
        out += '\n';
    }
    return out;
}

DependencyMap parse_dependency_map(std::string_view text, int m, int n) {
    DependencyMap deps(m, n);
    auto lines = split_lines(text);
    // A trailing newline does not start another line; a missing final newline
    // is accepted.
    if (static_cast<int>(lines.size()) != deps.cells()) {
        throw ParseError(text.size(), "dependency map has " + std::to_string(lines.size()) + " lines, expected " +
                                          std::to_string(deps.cells()));
    }
    std::size_t offset = 0;
    for (int i = 0; i < deps.cells(); ++i) {
        std::vector<int> sources;
        for (auto v : parse_numbers(lines[i], offset)) {
            if (v < 1 || v > static_cast<std::uint64_t>(deps.cells())) {
                throw ParseError(offset, "index " + std::to_string(v) + " on line " + std::to_string(i + 1) +
                                             " outside 1.." + std::to_string(deps.cells()));
            }
            sources.push_back(static_cast<int>(v) - 1);
        }
        try {
            deps.assign(i, std::move(sources));
        } catch (const Error& e) {
            throw ParseError(offset, std::string(e.what()) + " on line " + std::to_string(i + 1));
        }
        offset += lines[i].size() + 1;
    }
    return deps;
}

HybridSpec parse_hybrid_rules(std::string_view text) {
    std::vector<std::vector<unsigned>> rows;
    std::size_t offset = 0;
    for (auto line : split_lines(text)) {
        const auto numbers = parse_numbers(line, offset);
        if (!numbers.empty()) {
            std::vector<unsigned> row;
            for (auto v : numbers) {
                if (v >= RuleCode::kCount) throw ParseError(offset, "rule " + std::to_string(v) + " outside 0..511");
                row.push_back(static_cast<unsigned>(v));
            }
            if (!rows.empty() && row.size() != rows.front().size()) {
                throw ParseError(offset, "rules file row has " + std::to_string(row.size()) + " entries, expected " +
                                             std::to_string(rows.front().size()));
            }
            rows.push_back(std::move(row));
        }
        offset += line.size() + 1;
    }
    if (rows.empty()) throw ParseError(0, "rules file is empty");
    return HybridSpec::from_rows(rows);
}

Grid random_grid(int m, int n, double density, std::uint64_t seed) {
    if (!(density >= 0.0 && density <= 1.0)) throw Error(Errc::invalid_argument, "density must lie in [0, 1]");
    Grid g(m, n);
    std::mt19937_64 engine(seed);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) {
            const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
            if (u < density) g.set(r, c, true);
        }
    }
    return g;
}

std::string render_ascii(const Grid& g, int max_cols) {
    int block = 1;
    if (max_cols > 0 && g.cols() > max_cols) block = (g.cols() + max_cols - 1) / max_cols;
    std::string out;
    for (int r0 = 0; r0 < g.rows(); r0 += block) {
        for (int c0 = 0; c0 < g.cols(); c0 += block) {
            bool any = false;
            for (int r = r0; r < r0 + block && !any; ++r) {
                for (int c = c0; c < c0 + block; ++c) {
                    if (g.get(r, c)) {
                        any = true;
                        break;
                    }
                }
            }
            out += any ? '#' : '.';
        }
        out += '\n';
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io_error, "cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw Error(Errc::io_error, "error reading '" + path + "'");
    return ss.str();
}

void write_file(const std::string& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io_error, "cannot open '" + path + "' for writing");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw Error(Errc::io_error, "error writing '" + path + "'");
}

}  // namespace ca2d
