#include "explog/parse_error.hpp"

namespace explog {

namespace {

std::string compose(std::size_t position, const std::vector<std::string>& expected, const std::string& found) {
    std::string msg = "syntax error at position " + std::to_string(position);
    if (!expected.empty()) {
        msg += ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
            msg += expected[i];
        }
        msg += ", found " + found;
    } else {
        msg += ": unexpected character " + found;
    }
    return msg;
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, std::string found)
    : std::runtime_error(compose(position, expected, found)),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

std::string ParseError::diagram(const std::string& source) const {
    return "  " + source + "\n  " + std::string(position_, ' ') + "^";
}

}  // namespace explog
