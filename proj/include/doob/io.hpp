// Text formats:
//   pc1   line 1: "pc1 m=<m> n=<n> k=<k>", then 4^(2m+n) colors (base 10,
//         whitespace separated) in canonical vertex order.
//   code1 line 1: "code1 m=<m> n=<n>", then the sorted canonical indices of
//         the codewords.
// Lines starting with '#' are comments and are ignored by the parsers.
// Writers go through a temp file + rename so outputs are atomic.
#pragma once

#include <string>

#include "doob/eqpart.hpp"

namespace doob {

Coloring read_pc1(const std::string& path);
void write_pc1(const std::string& path, const Coloring& c,
               const std::string& header_comment = "");

Code read_code1(const std::string& path);
void write_code1(const std::string& path, const Code& c,
                 const std::string& header_comment = "");

// Parses "a b; c d" row-major quotient matrices (CLI syntax).
QuotientMatrix parse_quotient(const std::string& text);

} // namespace doob
