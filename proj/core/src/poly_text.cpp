#include <cctype>

#include "cpf/error.hpp"
#include "cpf/laurent_poly.hpp"

namespace cpf {

namespace {

std::string monomial_text(const Ring& ring, const LaurentPoly::Exponents& e) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.specs()[k].name;
    if (e[k] != 1) out += '^' + std::to_string(e[k]);
  }
  return out;
}

std::string term_text(const std::string& mono, const GaussianRational& c) {
  if (mono.empty()) return c.to_string();
  if (c.is_one()) return mono;
  if (c == GaussianRational(-1)) return "-" + mono;
  return c.to_string() + "*" + mono;
}

// Tokens: numbers, identifiers and single punctuation characters.
struct Token {
  enum Kind { kNumber, kIdent, kPunct, kEnd } kind;
  std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < s.size()) {
    const char c = s[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = k;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::kNumber, std::string(s.substr(k, j - k))});
      k = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = k;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::kIdent, std::string(s.substr(k, j - k))});
      k = j;
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      out.push_back({Token::kPunct, std::string(1, c)});
      ++k;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in polynomial text");
    }
  }
  out.push_back({Token::kEnd, ""});
  return out;
}

class Parser {
 public:
  Parser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), toks_(tokenize(text)) {}

  LaurentPoly parse() {
    if (toks_.front().kind == Token::kEnd) throw ParseError("empty polynomial text");
    LaurentPoly sum(ring_);
    bool negate = false;
    if (punct("-")) {
      negate = true;
      ++pos_;
    } else if (punct("+")) {
      ++pos_;
    }
    for (;;) {
      LaurentPoly t = term();
      sum += negate ? -t : t;
      if (punct("+")) {
        negate = false;
      } else if (punct("-")) {
        negate = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (toks_[pos_].kind != Token::kEnd) fail("trailing input");
    return sum;
  }

 private:
  bool punct(const char* p) const { return toks_[pos_].kind == Token::kPunct && toks_[pos_].text == p; }
  bool punct_at(std::size_t at, const char* p) const {
    return at < toks_.size() && toks_[at].kind == Token::kPunct && toks_[at].text == p;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " near token '" + toks_[pos_].text + "'");
  }
  void expect(const char* p) {
    if (!punct(p)) fail(std::string("expected '") + p + "'");
    ++pos_;
  }

  mpq_class unsigned_rational() {
    if (toks_[pos_].kind != Token::kNumber) fail("expected number");
    mpq_class q(toks_[pos_++].text);
    if (punct("/")) {
      ++pos_;
      if (toks_[pos_].kind != Token::kNumber) fail("expected denominator");
      mpz_class den(toks_[pos_++].text);
      if (den == 0) fail("zero denominator");
      q /= den;
    }
    return q;
  }

  mpq_class paren_rational() {
    expect("(");
    bool neg = false;
    if (punct("-")) {
      neg = true;
      ++pos_;
    }
    mpq_class q = unsigned_rational();
    expect(")");
    return neg ? mpq_class(-q) : q;
  }

  LaurentPoly term() {
    LaurentPoly t = factor();
    while (punct("*")) {
      ++pos_;
      t = t * factor();
    }
    return t;
  }

  LaurentPoly factor() {
    const Token& tok = toks_[pos_];
    if (tok.kind == Token::kNumber) {
      return LaurentPoly::constant(ring_, GaussianRational(unsigned_rational()));
    }
    if (punct("(")) {
      mpq_class re = paren_rational();
      // "(p/q)+(r/s)i" is one coefficient
      if (punct("+") && punct_at(pos_ + 1, "(")) {
        ++pos_;
        mpq_class im = paren_rational();
        if (toks_[pos_].kind != Token::kIdent || toks_[pos_].text != "i") fail("expected 'i'");
        ++pos_;
        return LaurentPoly::constant(ring_, GaussianRational(re, im));
      }
      return LaurentPoly::constant(ring_, GaussianRational(re));
    }
    if (tok.kind == Token::kIdent) {
      ++pos_;
      if (tok.text == "i") return LaurentPoly::constant(ring_, GaussianRational::i());
      auto v = ring_->find(tok.text);
      if (!v) throw ParseError("unknown variable '" + tok.text + "'");
      int exponent = 1;
      if (punct("^")) {
        ++pos_;
        bool neg = false;
        if (punct("-")) {
          neg = true;
          ++pos_;
        }
        if (toks_[pos_].kind != Token::kNumber) fail("expected exponent");
        try {
          exponent = std::stoi(toks_[pos_++].text);
        } catch (const std::exception&) {
          throw ParseError("exponent out of range");
        }
        if (neg) exponent = -exponent;
      }
      try {
        return LaurentPoly::variable(ring_, *v, exponent);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(e.what());
      }
    }
    fail("expected a factor");
  }

  RingPtr ring_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const std::string mono = monomial_text(*ring_, it->exponents);
    const GaussianRational& c = it->coef;
    if (out.empty()) {
      out = term_text(mono, c);
    } else if (c.is_real() && sgn(c.re()) < 0) {
      out += " - " + term_text(mono, -c);
    } else {
      out += " + " + term_text(mono, c);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::parse(RingPtr ring, std::string_view text) {
  return Parser(std::move(ring), text).parse();
}

}  // namespace cpf
