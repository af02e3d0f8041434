#include "dgre/symbol.hpp"

#include <cctype>

namespace dgre {

bool is_valid_symbol(std::string_view id) {
    if (id.empty() || id == "EMPTY") return false;
    for (char c : id) {
        if (std::isspace(static_cast<unsigned char>(c))) return false;
        switch (c) {
        case '(': case ')': case ',': case '{': case '}':
        case '+': case '.': case '#':
            return false;
        default:
            break;
        }
    }
    return true;
}

Symbol::Symbol(std::string id) : id_(std::move(id)) {
    if (!is_valid_symbol(id_)) throw Error("invalid symbol '" + id_ + "'");
}

} // namespace dgre
