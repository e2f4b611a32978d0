#pragma once

#include "arrcohom/arrangement.hpp"
#include "arrcohom/toric.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace arrcohom {

// Parse failure carrying the 1-based source line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

// Text format: '#' starts a comment, blank lines are skipped. First payload
// line is "dim n"; each further line is one hyperplane, n rational normal
// entries followed by the rational offset ("p" or "p/q"). Hyperplanes are
// labeled H1, H2, ... in file order.
Arrangement parse_arrangement(std::istream& in);
Arrangement load_arrangement(const std::string& path);

// Same shape with header "torus n"; each line is n integer exponents and one
// rational offset b, cutting {x : x^a = e^{2 pi i b}}.
ToricArrangement parse_toric(std::istream& in);
ToricArrangement load_toric(const std::string& path);

std::string serialize(const Arrangement& a);
std::string serialize(const ToricArrangement& t);

}  // namespace arrcohom
