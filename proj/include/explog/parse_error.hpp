#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace explog {

/// Malformed input text. `position` is the 0-based character offset of the
/// offending token; `expected` lists what the grammar allowed there.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, std::vector<std::string> expected, std::string found);

    std::size_t position() const { return position_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& found() const { return found_; }

    /// Two-line caret diagram pointing at `position` within `source`.
    std::string diagram(const std::string& source) const;

private:
    std::size_t position_;
    std::vector<std::string> expected_;
    std::string found_;
};

}  // namespace explog
