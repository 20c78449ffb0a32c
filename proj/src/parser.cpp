#include "phipoly/parser.hpp"

#include <cctype>

#include "phipoly/error.hpp"

namespace phipoly {

namespace {

constexpr long kMaxExponent = 1000000;

class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  char take() {
    skip_ws();
    return text_[pos_++];
  }

  std::size_t offset() {
    skip_ws();
    return pos_;
  }

  // Unsigned decimal integer.
  Int integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) throw parse_error("expected a number", start);
    return Int(text_.substr(start, pos_ - start));
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

long exponent(Scanner& sc) {
  std::size_t at = sc.offset();
  Int e = sc.integer();
  if (e > kMaxExponent) throw parse_error("exponent exceeds 10^6", at);
  return e.get_si();
}

}  // namespace

IntPolynomial parse_polynomial(const std::string& text) {
  Scanner sc(text);
  std::vector<Int> coeffs;
  auto add = [&coeffs](long power, const Int& c) {
    if (coeffs.size() <= static_cast<std::size_t>(power)) {
      coeffs.resize(static_cast<std::size_t>(power) + 1, Int(0));
    }
    coeffs[static_cast<std::size_t>(power)] += c;
  };

  if (sc.done()) throw parse_error("empty polynomial", 0);
  bool first = true;
  while (!sc.done()) {
    int sign = 1;
    if (sc.peek() == '+' || sc.peek() == '-') {
      if (sc.take() == '-') sign = -1;
    } else if (!first) {
      throw parse_error("expected '+' or '-'", sc.offset());
    }
    if (sc.done()) throw parse_error("dangling operator", sc.offset());

    Int coeff(sign);
    bool saw_number = false;
    bool saw_star = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      coeff = sign * sc.integer();
      saw_number = true;
      if (sc.peek() == '*') {
        sc.take();
        saw_star = true;
      }
    }
    long power = 0;
    if (sc.peek() == 'x' || sc.peek() == 'X') {
      sc.take();
      power = 1;
      if (sc.peek() == '^') {
        sc.take();
        power = exponent(sc);
      }
    } else if (saw_star) {
      throw parse_error("expected 'x' after '*'", sc.offset());
    } else if (!saw_number) {
      throw parse_error("expected a coefficient or 'x'", sc.offset());
    }
    add(power, coeff);
    first = false;
  }
  return IntPolynomial(std::move(coeffs));
}

std::string poly_to_string(const IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const Int& c = f.coefficient(static_cast<std::size_t>(i));
    if (c == 0) continue;
    Int a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    if (i == 0) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

IntPolynomial parse_coefficient_list(const std::string& text) {
  std::vector<Int> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t a = item.find_first_not_of(" \t");
    std::size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos) {
      throw parse_error("empty coefficient entry", pos);
    }
    item = item.substr(a, b - a + 1);
    try {
      coeffs.emplace_back(item);
    } catch (const std::invalid_argument&) {
      throw parse_error("bad integer '" + item + "'", pos);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (coeffs.empty()) throw parse_error("empty coefficient list", 0);
  return IntPolynomial(std::move(coeffs));
}

namespace {

Rat parse_rational(const std::string& item, std::size_t at) {
  std::size_t slash = item.find('/');
  Int num, den(1);
  try {
    if (slash == std::string::npos) {
      num = Int(item);
    } else {
      num = Int(item.substr(0, slash));
      den = Int(item.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw parse_error("bad rational '" + item + "'", at);
  }
  if (den == 0) throw parse_error("zero denominator in '" + item + "'", at);
  return make_rat(num, den);
}

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string::npos ? next : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

std::vector<ExtendedValue> parse_valuation_list(const std::string& text,
                                                int rank) {
  if (rank < 1) throw domain_error("rank must be at least 1");
  char sep = ';';
  if (rank == 1 && text.find(';') == std::string::npos) sep = ',';
  std::vector<ExtendedValue> out;
  for (const std::string& raw : split(text, sep)) {
    std::string entry = trimmed(raw);
    if (entry.empty()) throw parse_error("empty valuation entry", 0);
    if (entry == "inf" || entry == "INF" || entry == "Inf") {
      out.push_back(ExtendedValue::infinity());
      continue;
    }
    std::vector<std::string> comps = split(entry, ',');
    if (static_cast<int>(comps.size()) != rank) {
      throw parse_error("expected " + std::to_string(rank) +
                            " components in '" + entry + "'",
                        0);
    }
    std::vector<Rat> vec;
    vec.reserve(comps.size());
    for (const std::string& c : comps) {
      std::string item = trimmed(c);
      if (item.empty()) throw parse_error("empty component in '" + entry + "'", 0);
      vec.push_back(parse_rational(item, 0));
    }
    out.push_back(ExtendedValue::finite(ValueVec(std::move(vec))));
  }
  if (out.empty()) throw parse_error("empty valuation list", 0);
  return out;
}

ValueGroup parse_group(const std::string& text) {
  if (text == "z" || text == "Z") return ValueGroup::integers();
  const std::string prefix = "zlex:";
  if (text.rfind(prefix, 0) == 0) {
    std::string num = text.substr(prefix.size());
    int rank = 0;
    try {
      rank = std::stoi(num);
    } catch (const std::exception&) {
      throw domain_error("bad group rank '" + num + "'");
    }
    if (rank < 2 || rank > 8) {
      throw domain_error("group rank must be between 2 and 8");
    }
    return ValueGroup::lex_vectors(rank);
  }
  throw domain_error("unknown value group '" + text + "'; use z or zlex:R");
}

}  // namespace phipoly
