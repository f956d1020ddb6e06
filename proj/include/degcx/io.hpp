#pragma once

#include <string>

#include "degcx/complex.hpp"
#include "degcx/ideal.hpp"

#include "json.hpp"

namespace degcx {

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& what_arg)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ": " + what_arg),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Ideal text form, one ideal per line:
//   n=8; x1*x2, x2*x3^2
// Monomials are '*'-separated factors xK or xK^E with E >= 1 and 1-based
// variable indices; whitespace is insignificant. `0` is the zero ideal and
// `1` the unit ideal. Lines that are blank or start with '#' are skipped
// by the file reader.
MonomialIdeal parse_ideal(const std::string& text, int line_number = 1);
std::vector<MonomialIdeal> parse_ideal_lines(const std::string& text);
std::string print_ideal(const MonomialIdeal& ideal);

// Complex JSON form (all vertex indices 1-based, facets in canonical order):
//   {"facets":[[2,4],[1,3]],"kind":"proper","n":8}
nlohmann::json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const nlohmann::json& j);

// Macaulay2 constructor expression for the complex, against the ring
// QQ[x_1..x_n]: facets as squarefree monomials. The irrelevant complex is
// the facet list {1_S}; the void complex is the Stanley-Reisner complex of
// the unit monomial ideal.
std::string complex_to_m2(const SimplicialComplex& c);

std::vector<int> parse_int_list(const std::string& text);  // "0,2,-1" style

}  // namespace degcx
