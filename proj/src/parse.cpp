#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "wrzero/model.hpp"

namespace wrzero {

namespace {

// Recursive-descent parser over the equation grammar
//   line  := "dx" INT "/dt" "=" poly
//   poly  := ("+"|"-")? term (("+"|"-") term)*
//   term  := coeff? ("*"? mono)*          (at least one of coeff, mono)
//   mono  := "x" INT ("^" INT)?
//   coeff := INT | DECIMAL | INT "/" INT
// Statements are separated by newlines or ';'.
class SystemParser {
 public:
  explicit SystemParser(std::string_view text) : text_(text) {}

  PolySystem parse(std::vector<std::string>* warnings) {
    while (!at_end()) {
      skip_blank();
      if (at_end()) break;
      parse_line();
    }
    return assemble(warnings);
  }

 private:
  struct Term {
    Rational coeff;
    std::map<int, int> exponents;  // variable index (1-based) -> power
    int line;
    int column;
  };

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::vector<std::pair<int, std::vector<Term>>> equations_;  // (variable, terms)

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, col_);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  // Whitespace within a statement (newlines are statement separators).
  void skip_space() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
  }

  void skip_blank() {
    while (!at_end() &&
           (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n' || peek() == ';')) {
      advance();
    }
  }

  void expect(char c, const std::string& what) {
    if (peek() != c) fail("expected " + what);
    advance();
  }

  long parse_uint() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += advance();
    try {
      return std::stol(digits);
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }

  Rational parse_coeff() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += advance();
    if (peek() == '.') {
      advance();
      std::string frac;
      while (std::isdigit(static_cast<unsigned char>(peek()))) frac += advance();
      if (digits.empty() && frac.empty()) fail("malformed decimal");
      return rational_from_string((digits.empty() ? "0" : digits) + "." + frac);
    }
    if (digits.empty()) fail("expected coefficient");
    if (peek() == '/') {
      advance();
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      std::string den;
      while (std::isdigit(static_cast<unsigned char>(peek()))) den += advance();
      return rational_from_string(digits + "/" + den);
    }
    return rational_from_string(digits);
  }

  void parse_line() {
    skip_space();
    expect('d', "'dx<k>/dt'");
    expect('x', "'dx<k>/dt'");
    const long var = parse_uint();
    if (var < 1) fail("variable index must be at least 1");
    expect('/', "'/dt'");
    expect('d', "'/dt'");
    expect('t', "'/dt'");
    skip_space();
    expect('=', "'='");
    skip_space();

    std::vector<Term> terms;
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = advance() == '-' ? -1 : 1;
      skip_space();
    }
    while (true) {
      terms.push_back(parse_term(sign));
      skip_space();
      if (peek() == '+' || peek() == '-') {
        sign = advance() == '-' ? -1 : 1;
        skip_space();
        continue;
      }
      break;
    }
    if (!at_end() && peek() != '\n' && peek() != ';') fail("unexpected character in equation");
    equations_.emplace_back(static_cast<int>(var), std::move(terms));
  }

  Term parse_term(int sign) {
    Term term{Rational(sign), {}, line_, col_};
    bool has_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      term.coeff *= parse_coeff();
      has_factor = true;
      skip_space();
    }
    while (true) {
      if (peek() == '*') {
        advance();
        skip_space();
        if (peek() != 'x') fail("expected monomial after '*'");
      }
      if (peek() != 'x') break;
      advance();
      const long var = parse_uint();
      if (var < 1) fail("variable index must be at least 1");
      int power = 1;
      if (peek() == '^') {
        advance();
        const long p = parse_uint();
        if (peek() == '.') fail("exponent must be an integer");
        power = static_cast<int>(p);
      }
      term.exponents[static_cast<int>(var)] += power;
      has_factor = true;
      skip_space();
    }
    if (!has_factor) fail("expected term");
    return term;
  }

  PolySystem assemble(std::vector<std::string>* warnings) const {
    if (equations_.empty()) throw ParseError("empty system", line_, col_);
    const int n = static_cast<int>(equations_.size());

    std::vector<bool> defined(n, false);
    for (const auto& [var, terms] : equations_) {
      if (var > n || defined[var - 1]) {
        throw ParseError("equations must define dx1/dt through dx" + std::to_string(n) +
                             "/dt exactly once",
                         1, 1);
      }
      defined[var - 1] = true;
    }

    std::map<std::vector<int>, RatVector> merged;
    for (const auto& [var, terms] : equations_) {
      for (const Term& term : terms) {
        std::vector<int> key(n, 0);
        for (const auto& [index, power] : term.exponents) {
          if (index > n) {
            throw ParseError("variable x" + std::to_string(index) + " exceeds system size " +
                                 std::to_string(n),
                             term.line, term.column);
          }
          key[index - 1] += power;
        }
        auto it = merged.emplace(std::move(key), RatVector::Zero(n)).first;
        it->second(var - 1) += term.coeff;
      }
    }

    std::vector<Vertex> sources;
    std::vector<RatVector> columns;
    for (const auto& [key, w] : merged) {
      bool nonzero = false;
      for (Eigen::Index r = 0; r < w.size(); ++r) nonzero |= w(r) != 0;
      Vertex y(n);
      for (int i = 0; i < n; ++i) y(i) = key[i];
      if (!nonzero) {
        if (warnings) {
          warnings->push_back("monomial " + monomial_name(y) + " cancels out; dropped");
        }
        continue;
      }
      sources.push_back(std::move(y));
      columns.push_back(w);
    }
    if (sources.empty()) throw ParseError("empty system after merging", 1, 1);

    RatMatrix net(n, static_cast<Eigen::Index>(columns.size()));
    for (size_t c = 0; c < columns.size(); ++c) net.col(static_cast<Eigen::Index>(c)) = columns[c];
    return make_poly_system(n, std::move(sources), std::move(net));
  }
};

// Coefficient with sign folded in, e.g. " - 55/2*" or " + ".
std::string render_coeff(const Rational& value, bool first, bool with_monomial) {
  const Rational magnitude = abs(value);
  std::string out;
  if (first) {
    if (value < 0) out += "-";
  } else {
    out += value < 0 ? " - " : " + ";
  }
  if (magnitude != 1 || !with_monomial) {
    out += to_string(magnitude);
    if (with_monomial) out += "*";
  }
  return out;
}

}  // namespace

PolySystem parse_system(std::string_view text, std::vector<std::string>* warnings) {
  return SystemParser(text).parse(warnings);
}

std::string render_system(const PolySystem& sys) {
  std::ostringstream out;
  for (int row = 0; row < sys.n; ++row) {
    out << "dx" << row + 1 << "/dt = ";
    bool first = true;
    for (size_t col = 0; col < sys.sources.size(); ++col) {
      const Rational& c = sys.net(row, static_cast<Eigen::Index>(col));
      if (c == 0) continue;
      const std::string mono = monomial_name(sys.sources[col]);
      const bool constant = mono == "1";
      out << render_coeff(c, first, !constant);
      if (!constant) out << mono;
      first = false;
    }
    if (first) out << "0";
    out << "\n";
  }
  return out.str();
}

}  // namespace wrzero
