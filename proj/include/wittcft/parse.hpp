#pragma once

// Text forms accepted on the command line: ring names, polynomial literals in
// t such as "1-5t+6t^2", Witt vectors "P" or "(P)/(Q)", and integer lists.

#include <cstddef>
#include <string>
#include <vector>

#include "wittcft/wittring.hpp"

namespace wittcft {

/// A parse failure with the offending byte range [begin, end) of the input.
class ParseError : public Error {
public:
    ParseError(const std::string& input, std::size_t begin, std::size_t end, const std::string& message);

    std::size_t begin() const noexcept { return begin_; }
    std::size_t end() const noexcept { return end_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t begin_, end_;
    std::string message_;
};

/// "Z", "Q", "mod:n", "F:p" or "cyc:n".
RingSpec parse_ring(const std::string& text);
Polynomial parse_polynomial(const std::string& text, const RingSpec& spec);
WittVector parse_witt(const std::string& text, const RingSpec& spec);
/// "3,5,7"; an empty string gives an empty list.
std::vector<i64> parse_int_list(const std::string& text);
i64 parse_int(const std::string& text);

} // namespace wittcft
