#pragma once

#include <stdexcept>
#include <string>

namespace ca2d {

enum class Errc {
    invalid_argument = 1,
    dimension_mismatch,
    parse_error,
    io_error,
    limit_exceeded,
};

// All failures in the core surface as ca2d::Error; the C layer maps the code
// onto its status enum.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Raised by the image and text parsers. offset is the byte position where
// parsing stopped.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error(Errc::parse_error, what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace ca2d
