#pragma once

#include <stdexcept>
#include <string>

namespace onsager {

// Base of every error raised by the library. `kind()` is a stable short tag
// used in JSON reports.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define ONSAGER_DEFINE_ERROR(Name)                                     \
    class Name : public Error {                                        \
    public:                                                            \
        explicit Name(const std::string& what) : Error(#Name, what) {} \
    }

ONSAGER_DEFINE_ERROR(DivisionByZero);
ONSAGER_DEFINE_ERROR(PoleAtPoint);
ONSAGER_DEFINE_ERROR(ParseError);
ONSAGER_DEFINE_ERROR(IndexOutOfRange);
ONSAGER_DEFINE_ERROR(WindowOverflow);
ONSAGER_DEFINE_ERROR(MixedWindows);
ONSAGER_DEFINE_ERROR(NotInACE);
ONSAGER_DEFINE_ERROR(BadIndex);
ONSAGER_DEFINE_ERROR(PoleAtOne);
ONSAGER_DEFINE_ERROR(NonVanishingXi);
ONSAGER_DEFINE_ERROR(UnknownFamily);
ONSAGER_DEFINE_ERROR(UnknownParameter);
ONSAGER_DEFINE_ERROR(NonAffineIndex);

#undef ONSAGER_DEFINE_ERROR

// Parser diagnostic with a 1-based source position.
class SyntaxError : public Error {
public:
    SyntaxError(int line, int col, std::string expected)
        : Error("SyntaxError", "line " + std::to_string(line) + ", column " +
                                   std::to_string(col) + ": expected " + expected),
          line_(line),
          col_(col),
          expected_(std::move(expected)) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return col_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    int line_;
    int col_;
    std::string expected_;
};

}  // namespace onsager
