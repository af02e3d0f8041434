#ifndef DGRE_SYMBOL_HPP
#define DGRE_SYMBOL_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dgre {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (graph files, SOPF text, mutation scripts).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Returns true if id can name a node: nonempty, no whitespace, none of
// `( ) , { } + . #`, and not the reserved word EMPTY.
bool is_valid_symbol(std::string_view id);

// A node name. Also the alphabet symbol of the regular expression.
class Symbol {
public:
    explicit Symbol(std::string id);

    const std::string& str() const { return id_; }
    std::size_t size() const { return id_.size(); }

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
        return a.id_.compare(b.id_) <=> 0;
    }
    friend std::ostream& operator<<(std::ostream& os, const Symbol& s) { return os << s.id_; }

private:
    std::string id_;
};

} // namespace dgre

template<>
struct std::hash<dgre::Symbol> {
    std::size_t operator()(const dgre::Symbol& s) const noexcept {
        return std::hash<std::string>{}(s.str());
    }
};

#endif
