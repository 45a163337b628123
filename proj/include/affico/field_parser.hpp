#pragma once

// Recursive-descent parser for field literals:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' ['-' | '+'] INT)?
//   atom   := INT | 'tau' | '(' expr ')' | 'sqrt' '(' expr ')'
//
// 'sqrt' is only accepted by parse_ext_expr, and its argument must equal
// the workspace radicand. Unary minus binds looser than '^'.

#include <affico/ext_number.hpp>
#include <affico/golden.hpp>

#include <array>
#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace affico {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

template <typename Value, typename Lift>
class FieldParser {
 public:
  FieldParser(std::string_view text, Lift lift, std::optional<Radicand> radicand)
      : s_(text), lift_(std::move(lift)), radicand_(std::move(radicand)) {}

  Value parse() {
    skip();
    if (at_end()) throw ParseError("empty expression", pos_);
    Value v = expr();
    skip();
    if (!at_end()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return v;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (!at_end() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      if (at_end()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }
  bool accept_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
    pos_ = end;
    return true;
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Value d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        v /= d;
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Value power() {
    Value base = atom();
    if (!accept('^')) return base;
    skip();
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    skip();
    const std::size_t at = pos_;
    mpz_class e = integer();
    if (!e.fits_slong_p() || abs(e) > 4096) throw ParseError("exponent out of range", at);
    long n = e.get_si();
    if (neg) n = -n;
    if (n < 0 && base.is_zero()) throw ParseError("division by zero", at);
    return pow(base, n);
  }

  Value atom() {
    skip();
    if (at_end()) throw ParseError("unexpected end of expression", pos_);
    const std::size_t at = pos_;
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) return lift_(GoldenNumber(Rational(integer())));
    if (accept('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    if (accept_word("tau")) return lift_(GoldenNumber::tau());
    if (accept_word("sqrt")) {
      if (!radicand_) throw ParseError("sqrt is not allowed here", at);
      expect('(');
      Value arg = expr();
      expect(')');
      if (!(arg == lift_(radicand_->value()))) throw ParseError("sqrt argument differs from radicand", at);
      return root();
    }
    throw ParseError(std::string("unexpected '") + s_[pos_] + "'", at);
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  static Value pow(Value base, long n) {
    Value r = one_like(base);
    Value b = n < 0 ? one_like(base) / base : base;
    unsigned long m = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    while (m) {
      if (m & 1U) r *= b;
      m >>= 1U;
      if (m) b *= b;
    }
    return r;
  }

  static Value one_like(const Value& v) {
    if constexpr (std::is_same_v<Value, ExtNumber>)
      return ExtNumber(GoldenNumber(1), v.radicand());
    else
      return Value(1);
  }

  Value root() {
    if constexpr (std::is_same_v<Value, ExtNumber>)
      return ExtNumber::root(*radicand_);
    else
      throw ParseError("sqrt is not allowed here", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Lift lift_;
  std::optional<Radicand> radicand_;
};

}  // namespace detail

/// Parses an element of Q(tau).
inline GoldenNumber parse_field_expr(std::string_view text) {
  auto lift = [](GoldenNumber g) { return g; };
  return detail::FieldParser<GoldenNumber, decltype(lift)>(text, lift, std::nullopt).parse();
}

/// Parses an element of Q(tau)(sqrt k); literals without sqrt lift into k.
inline ExtNumber parse_ext_expr(std::string_view text, const Radicand& k) {
  auto lift = [k](GoldenNumber g) { return ExtNumber(std::move(g), k); };
  return detail::FieldParser<ExtNumber, decltype(lift)>(text, lift, k).parse();
}

/// Splits "x,y,z" and parses each component with parse_ext_expr. Error
/// positions are relative to the whole line.
inline std::array<ExtNumber, 3> parse_triple(std::string_view line, const Radicand& k) {
  std::array<ExtNumber, 3> out;
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t comma = line.find(',', start);
    if (i < 2 && comma == std::string_view::npos)
      throw ParseError("expected 3 comma-separated components", line.size());
    if (i == 2 && comma != std::string_view::npos) throw ParseError("too many components", comma);
    std::string_view part = line.substr(start, i < 2 ? comma - start : std::string_view::npos);
    try {
      out[i] = parse_ext_expr(part, k);
    } catch (const ParseError& e) {
      throw ParseError(std::string("component ") + std::to_string(i + 1) + ": " + e.what(),
                       start + e.position());
    }
    start = comma + 1;
  }
  return out;
}

}  // namespace affico
