#include "polydec/textio.hpp"

#include <cctype>
#include <sstream>

namespace polydec {

namespace {

[[noreturn]] void parse_fail(const std::string& text, size_t pos, const std::string& what) {
  fail(Errc::ParseError, what + " at position " + std::to_string(pos) + " in \"" + text + "\"");
}

struct PolyParser {
  const std::string& text;
  Field field;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  uint64_t parse_uint() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      parse_fail(text, pos, "expected a number");
    uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<uint64_t>(text[pos] - '0');
      if (v > (1ull << 40)) parse_fail(text, pos, "number too large");
      ++pos;
    }
    return v;
  }

  // factor := INT | VAR ['^' INT] | '(' poly ')'
  BiPoly parse_factor() {
    skip_ws();
    if (pos >= text.size()) parse_fail(text, pos, "unexpected end of input");
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      uint64_t v = parse_uint();
      return BiPoly::from_x(UniPoly::constant(field->from_int(static_cast<int64_t>(v))));
    }
    if (c == '(') {
      ++pos;
      BiPoly inner = parse_sum();
      if (!eat(')')) parse_fail(text, pos, "expected ')'");
      return inner;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos;
      uint64_t e = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        e = parse_uint();
        if (e > 4096) parse_fail(text, pos, "exponent too large");
      }
      if (c == 'z') {
        require(field->k() > 1, Errc::CoefficientOutOfField,
                "coefficient uses z but the field is prime");
        FieldElement g = field->gen().pow(e);
        return BiPoly::from_x(UniPoly::constant(g));
      }
      UniPoly mono = UniPoly::monomial(field, static_cast<int>(e), field->one());
      return c == 'x' ? BiPoly::from_x(mono) : BiPoly::from_y(mono);
    }
    parse_fail(text, pos, "unexpected character");
  }

  // term := factor ('*' factor)*  (also allows juxtaposition like "2x")
  BiPoly parse_term() {
    BiPoly acc = parse_factor();
    while (true) {
      skip_ws();
      if (pos >= text.size()) break;
      char c = text[pos];
      if (c == '*') {
        ++pos;
        acc = acc * parse_factor();
      } else if (c == 'x' || c == 'y' || c == 'z' || c == '(') {
        acc = acc * parse_factor();
      } else {
        break;
      }
    }
    return acc;
  }

  BiPoly parse_sum() {
    BiPoly acc = BiPoly::zero(field);
    bool negate = false;
    skip_ws();
    if (eat('-')) negate = true;
    while (true) {
      BiPoly t = parse_term();
      acc = negate ? acc - t : acc + t;
      skip_ws();
      if (eat('+')) {
        negate = false;
      } else if (eat('-')) {
        negate = true;
      } else {
        break;
      }
    }
    return acc;
  }

  BiPoly parse_all() {
    BiPoly r = parse_sum();
    skip_ws();
    if (pos != text.size()) parse_fail(text, pos, "trailing input");
    return r;
  }
};

}  // namespace

Field parse_field(const std::string& spec) {
  size_t caret = spec.find('^');
  size_t slash = spec.find('/');
  auto to_u32 = [&](const std::string& s) -> uint32_t {
    require(!s.empty(), Errc::ParseError, "empty number in field spec \"" + spec + "\"");
    uint64_t v = 0;
    for (char c : s) {
      require(std::isdigit(static_cast<unsigned char>(c)), Errc::ParseError,
              "bad field spec \"" + spec + "\"");
      v = v * 10 + static_cast<uint64_t>(c - '0');
      require(v < (1ull << 31), Errc::ParseError, "field spec number too large");
    }
    return static_cast<uint32_t>(v);
  };

  if (caret == std::string::npos) {
    require(slash == std::string::npos, Errc::ParseError,
            "modulus given without an extension degree");
    return FiniteField::get(to_u32(spec), 1);
  }
  uint32_t p = to_u32(spec.substr(0, caret));
  if (slash == std::string::npos) {
    return FiniteField::get(p, to_u32(spec.substr(caret + 1)));
  }
  uint32_t k = to_u32(spec.substr(caret + 1, slash - caret - 1));
  std::string mod_text = spec.substr(slash + 1);

  Field prime = FiniteField::get(p, 1);
  // parse the modulus as a polynomial in z over GF(p): reuse the poly parser
  // with z mapped to the x slot
  std::string as_x;
  for (char c : mod_text) as_x.push_back(c == 'z' ? 'x' : c);
  PolyParser parser{as_x, prime};
  BiPoly parsed = parser.parse_all();
  require(parsed.is_zero() || parsed.deg_y() == 0, Errc::ParseError,
          "modulus must be univariate in z");
  std::vector<FieldElement> mc;
  for (const auto& row : parsed.rows()) mc.push_back(row.coeff(0));
  UniPoly mod(prime, std::move(mc));
  require(!mod.is_zero() && mod.degree() == static_cast<int>(k), Errc::DegreeMismatch,
          "modulus degree does not match the extension degree");
  std::vector<uint32_t> coeffs;
  for (const auto& c : mod.coeffs()) coeffs.push_back(c.coords()[0]);
  return FiniteField::get(p, k, &coeffs);
}

UniPoly parse_poly(const std::string& text, Field field) {
  PolyParser parser{text, field};
  BiPoly parsed = parser.parse_all();
  if (parsed.is_zero()) return UniPoly::zero(field);
  require(parsed.deg_y() == 0, Errc::ParseError, "unexpected variable y in a univariate polynomial");
  std::vector<FieldElement> coeffs;
  for (const auto& row : parsed.rows()) coeffs.push_back(row.coeff(0));
  return UniPoly(field, std::move(coeffs));
}

BiPoly parse_bipoly(const std::string& text, Field field) {
  PolyParser parser{text, field};
  return parser.parse_all();
}

std::vector<int> parse_cycles(const std::string& text, int n) {
  std::vector<std::vector<int>> cycles;
  size_t pos = 0;
  int maxpt = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    if (text[pos] != '(') parse_fail(text, pos, "expected '('");
    ++pos;
    std::vector<int> cyc;
    while (true) {
      while (pos < text.size() &&
             (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
        ++pos;
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        parse_fail(text, pos, "expected a point or ')'");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      require(v >= 1, Errc::ParseError, "points are 1-based");
      cyc.push_back(v);
      maxpt = std::max(maxpt, v);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  if (n == 0) n = maxpt;
  require(maxpt <= n, Errc::ParseError, "cycle mentions a point beyond n");
  std::vector<int> perm(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i] - 1, to = cyc[(i + 1) % cyc.size()] - 1;
      require(!seen[from], Errc::ParseError, "point repeated across cycles");
      seen[from] = true;
      perm[from] = to;
    }
  }
  return perm;
}

std::string format_block_1based(const Block& b) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < b.members.size(); ++i) {
    if (i) os << ",";
    os << b.members[i] + 1;
  }
  os << "}";
  return os.str();
}

}  // namespace polydec
