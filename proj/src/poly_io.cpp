#include "conoff/poly_io.hpp"

#include "conoff/errors.hpp"

#include <cctype>

namespace conoff {

nlohmann::json to_json(const MultiPoly& p, const MonomialOrder& ord) {
  nlohmann::json j;
  j["vars"] = p.ring().names();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.sorted_terms(ord)) {
    terms.push_back({{"exp", m}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  j["terms"] = std::move(terms);
  return j;
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  try {
    Ring ring(j.at("vars").get<std::vector<std::string>>());
    MultiPoly p(ring);
    for (const auto& t : j.at("terms")) {
      auto exp = t.at("exp").get<Monomial>();
      if (exp.size() != ring.size()) throw ParseError("exponent vector length does not match vars");
      const BigInteger den(t.value("den", std::string("1")), 10);
      if (den == 0) throw ParseError("zero denominator in polynomial JSON");
      BigRational c(BigInteger(t.at("num").get<std::string>(), 10), den);
      c.canonicalize();
      p.add_term(exp, c);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad integer in polynomial JSON: ") + e.what());
  }
}

std::string to_pretty(const MultiPoly& p, const MonomialOrder& ord) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.sorted_terms(ord)) {
    const bool negative = c < 0;
    const BigRational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    first = false;
    std::string vars;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!vars.empty()) vars += " ";
      vars += p.ring().name(i);
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    if (vars.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += vars;
    } else {
      out += to_string(mag) + " " + vars;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Ring& ring) : s_(text), ring_(ring) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_factor() {
    skip_space();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  MultiPoly expr() {
    MultiPoly acc(ring_);
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = power();
    while (true) {
      if (peek('*') && !(pos_ + 1 < s_.size() && s_[pos_ + 1] == '*')) {
        ++pos_;
        acc = acc * power();
      } else if (peek('/')) {
        ++pos_;
        const MultiPoly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= 1 / d.terms().begin()->second;
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  MultiPoly power() {
    MultiPoly base = atom();
    skip_space();
    bool has_exp = false;
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      has_exp = true;
    } else if (pos_ + 1 < s_.size() && s_[pos_] == '*' && s_[pos_ + 1] == '*') {
      pos_ += 2;
      has_exp = true;
    }
    if (!has_exp) return base;
    skip_space();
    bool paren = false;
    if (pos_ < s_.size() && s_[pos_] == '(') {
      paren = true;
      ++pos_;
      skip_space();
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 4) fail("expected small integer exponent");
    const unsigned e = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
    if (paren) {
      if (!peek(')')) fail("expected ')'");
      ++pos_;
    }
    return pow(base, e);
  }

  MultiPoly atom() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '-' || c == '+') {
      ++pos_;
      MultiPoly inner = power();
      return c == '-' ? -inner : inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MultiPoly::constant(ring_, BigRational(BigInteger(s_.substr(start, pos_ - start), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (!ring_.contains(name)) throw VarError("unknown variable '" + name + "' in '" + s_ + "'");
      return MultiPoly::variable(ring_, name);
    }
    fail("unexpected character");
  }

  std::string s_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const Ring& ring) { return Parser(text, ring).parse(); }

}  // namespace conoff
