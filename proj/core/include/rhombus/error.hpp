#pragma once

#include <stdexcept>
#include <string>

namespace rhombus {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line)
        : Error("parse error at line " + std::to_string(line) + ": " + msg), line(line) {}
    std::size_t line;
};

struct DuplicatePointError : Error {
    DuplicatePointError(std::size_t first, std::size_t second)
        : Error("duplicate point: entry " + std::to_string(second) + " repeats entry " +
                std::to_string(first)),
          first(first), second(second) {}
    std::size_t first, second;
};

struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error("division by zero in exact field arithmetic") {}
};

struct LengthMismatchError : Error {
    explicit LengthMismatchError(const std::string& msg) : Error(msg) {}
};

struct DegenerateAnchorError : Error {
    explicit DegenerateAnchorError(const std::string& msg) : Error(msg) {}
};

struct NonCongruentError : Error {
    explicit NonCongruentError(const std::string& msg) : Error(msg) {}
};

struct ConflictingAnchorError : Error {
    explicit ConflictingAnchorError(int index)
        : Error("conflicting colors anchored at point " + std::to_string(index)), index(index) {}
    int index;
};

struct IndexRangeError : Error {
    explicit IndexRangeError(const std::string& msg) : Error(msg) {}
};

struct SizeLimitError : Error {
    explicit SizeLimitError(const std::string& msg) : Error(msg) {}
};

struct InitialSystemSatError : Error {
    InitialSystemSatError() : Error("initial system is satisfiable; nothing to reduce") {}
};

}  // namespace rhombus
