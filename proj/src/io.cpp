#include "degcx/io.hpp"

#include <cctype>
#include <sstream>

namespace degcx {

namespace {

// Single-line cursor with 1-based column reporting.
struct Cursor {
  const std::string& s;
  int line;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(line, static_cast<int>(pos) + 1, msg);
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  int integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail("expected an integer");
    return std::stoi(s.substr(start, pos - start));
  }
};

ExponentVector parse_monomial(Cursor& cur, int n) {
  std::vector<int> e(n, 0);
  for (;;) {
    if (cur.peek() != 'x') cur.fail("expected a factor xK or xK^E");
    ++cur.pos;
    int var = cur.integer();
    if (var < 1 || var > n) cur.fail("variable index out of range");
    int exp = 1;
    if (cur.peek() == '^') {
      ++cur.pos;
      exp = cur.integer();
      if (exp < 1) cur.fail("exponent must be at least 1");
    }
    e[var - 1] += exp;
    if (cur.peek() != '*') break;
    ++cur.pos;
  }
  return ExponentVector(std::move(e));
}

}  // namespace

MonomialIdeal parse_ideal(const std::string& text, int line_number) {
  Cursor cur{text, line_number};
  if (cur.peek() != 'n') cur.fail("expected 'n=<count>;'");
  ++cur.pos;
  cur.expect('=');
  int n = cur.integer();
  if (n < 1 || n > kMaxVars) cur.fail("variable count out of range");
  cur.expect(';');

  if (cur.peek() == '0') {
    ++cur.pos;
    if (!cur.done()) cur.fail("trailing input after the zero ideal");
    return MonomialIdeal::zero(n);
  }
  if (cur.peek() == '1') {
    ++cur.pos;
    if (!cur.done()) cur.fail("trailing input after the unit ideal");
    return MonomialIdeal::unit(n);
  }

  std::vector<ExponentVector> gens;
  for (;;) {
    gens.push_back(parse_monomial(cur, n));
    if (cur.peek() != ',') break;
    ++cur.pos;
  }
  if (!cur.done()) cur.fail("trailing input after the generator list");
  return MonomialIdeal(n, std::move(gens));
}

std::vector<MonomialIdeal> parse_ideal_lines(const std::string& text) {
  std::vector<MonomialIdeal> out;
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  int n = -1;
  while (std::getline(in, line)) {
    ++line_number;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    MonomialIdeal ideal = parse_ideal(line, line_number);
    if (n >= 0 && ideal.vars() != n)
      throw ParseError(line_number, 1, "variable count differs from the earlier lines");
    n = ideal.vars();
    out.push_back(std::move(ideal));
  }
  return out;
}

std::string print_ideal(const MonomialIdeal& ideal) {
  std::ostringstream out;
  out << "n=" << ideal.vars() << "; ";
  if (ideal.is_zero()) {
    out << "0";
    return out.str();
  }
  if (ideal.is_unit()) {
    out << "1";
    return out.str();
  }
  bool first_gen = true;
  for (const auto& g : ideal.generators()) {
    if (!first_gen) out << ", ";
    first_gen = false;
    bool first_factor = true;
    for (int i = 0; i < ideal.vars(); ++i) {
      if (g[i] == 0) continue;
      if (!first_factor) out << "*";
      first_factor = false;
      out << "x" << (i + 1);
      if (g[i] > 1) out << "^" << g[i];
    }
  }
  return out.str();
}

nlohmann::json complex_to_json(const SimplicialComplex& c) {
  nlohmann::json j;
  j["n"] = c.vars();
  switch (c.kind()) {
    case ComplexKind::Void:
      j["kind"] = "void";
      break;
    case ComplexKind::Irrelevant:
      j["kind"] = "irrelevant";
      break;
    case ComplexKind::Proper:
      j["kind"] = "proper";
      break;
  }
  nlohmann::json facets = nlohmann::json::array();
  for (VertexSet f : c.facets()) {
    nlohmann::json facet = nlohmann::json::array();
    for (int v : set_to_list(f)) facet.push_back(v + 1);
    facets.push_back(std::move(facet));
  }
  j["facets"] = std::move(facets);
  return j;
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  if (n < 0 || n > kMaxVars) throw std::invalid_argument("variable count out of range");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "void") return SimplicialComplex::void_complex(n);
  if (kind == "irrelevant") return SimplicialComplex::irrelevant_complex(n);
  if (kind != "proper") throw std::invalid_argument("unknown complex kind");
  std::vector<VertexSet> facets;
  for (const auto& facet : j.at("facets")) {
    VertexSet f = 0;
    for (const auto& v : facet) {
      int idx = v.get<int>();
      if (idx < 1 || idx > n) throw std::invalid_argument("vertex index out of range");
      f |= VertexSet(1) << (idx - 1);
    }
    facets.push_back(f);
  }
  SimplicialComplex c = SimplicialComplex::from_facets(n, std::move(facets));
  if (!c.is_proper()) throw std::invalid_argument("facet list does not describe a proper complex");
  return c;
}

std::string complex_to_m2(const SimplicialComplex& c) {
  if (c.is_void()) return "simplicialComplex monomialIdeal 1_S";
  if (c.is_irrelevant()) return "simplicialComplex {1_S}";
  std::ostringstream out;
  out << "simplicialComplex {";
  bool first = true;
  for (VertexSet f : c.facets()) {
    if (!first) out << ", ";
    first = false;
    bool inner_first = true;
    for (int v : set_to_list(f)) {
      if (!inner_first) out << "*";
      inner_first = false;
      out << "x_" << (v + 1);
    }
  }
  out << "}";
  return out.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    std::size_t idx = 0;
    int value = 0;
    try {
      value = std::stoi(item, &idx);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer list entry: '" + item + "'");
    }
    while (idx < item.size() && std::isspace(static_cast<unsigned char>(item[idx]))) ++idx;
    if (idx != item.size())
      throw std::invalid_argument("bad integer list entry: '" + item + "'");
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace degcx
