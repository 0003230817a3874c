#include "gegenmetric/linear_form.hpp"

#include "gegenmetric/errors.hpp"

#include <algorithm>
#include <cctype>

namespace gegenmetric {

LinearForm LinearForm::parameter(const std::string& name, RatFunc coefficient) {
  LinearForm f;
  if (!coefficient.is_zero()) f.terms_.emplace(name, std::move(coefficient));
  return f;
}

RatFunc LinearForm::coefficient(const std::string& name) const {
  auto it = terms_.find(name);
  return it == terms_.end() ? RatFunc() : it->second;
}

LinearForm LinearForm::operator-() const {
  LinearForm r = *this;
  r.constant_ = -r.constant_;
  for (auto& [name, c] : r.terms_) c = -c;
  return r;
}

LinearForm& LinearForm::operator+=(const LinearForm& y) {
  constant_ += y.constant_;
  for (const auto& [name, c] : y.terms_) {
    auto [it, inserted] = terms_.emplace(name, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& y) { return *this += -y; }

LinearForm& LinearForm::operator*=(const RatFunc& s) {
  if (s.is_zero()) return *this = LinearForm();
  constant_ *= s;
  for (auto& [name, c] : terms_) c *= s;
  return *this;
}

LinearForm& LinearForm::operator/=(const RatFunc& s) {
  if (s.is_zero()) throw DivisionByZeroError("division by zero rational function");
  constant_ /= s;
  for (auto& [name, c] : terms_) c /= s;
  return *this;
}

Rational LinearForm::evaluate(const Rational& a0,
                              const std::map<std::string, Rational>& values) const {
  Rational acc = constant_(a0);
  for (const auto& [name, c] : terms_) {
    auto it = values.find(name);
    if (it != values.end()) acc += c(a0) * it->second;
  }
  return acc;
}

std::string LinearForm::to_string(const std::string& var) const {
  std::string out;
  const auto append = [&out](std::string term) {
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  };
  if (!constant_.is_zero() || terms_.empty()) append(constant_.to_string(var));
  for (const auto& [name, c] : terms_) {
    if (c == RatFunc(1)) {
      append(name);
    } else if (c == RatFunc(-1)) {
      append("-" + name);
    } else {
      std::string coef = c.to_string(var);
      // A bare multi-term polynomial needs parentheses before "*name".
      if (c.den() == RatPoly::constant(Rational(1)) && c.num().degree() > 0 &&
          coef.find_first_of("+-", 1) != std::string::npos) {
        coef = "(" + coef + ")";
      }
      append(coef + "*" + name);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& allowed, const std::string& var)
      : text_(text), allowed_(allowed), var_(var) {}

  LinearForm parse() {
    LinearForm f = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw PreconditionError("cannot parse expression '" + std::string(text_) + "' at offset " +
                            std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LinearForm expression() {
    LinearForm acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  LinearForm term() {
    LinearForm acc = unary();
    for (;;) {
      if (accept('*')) {
        LinearForm rhs = unary();
        if (acc.is_constant()) {
          acc = rhs * acc.constant();
        } else if (rhs.is_constant()) {
          acc *= rhs.constant();
        } else {
          fail("product of two parameter-dependent factors");
        }
      } else if (accept('/')) {
        LinearForm rhs = unary();
        if (!rhs.is_constant()) fail("division by a parameter-dependent factor");
        if (rhs.constant().is_zero()) fail("division by zero");
        acc /= rhs.constant();
      } else {
        return acc;
      }
    }
  }

  LinearForm unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  LinearForm power() {
    LinearForm base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a non-negative integer");
    const int exponent = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (base.is_constant()) return base.constant().pow(exponent);
    if (exponent == 1) return base;
    if (exponent == 0) return LinearForm(RatFunc(1));
    fail("nonlinear power of a parameter");
  }

  LinearForm primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LinearForm inner = expression();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        ++pos_;
      }
      return LinearForm(parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (name == var_) return LinearForm(RatFunc::variable());
      if (!allowed_.empty() &&
          std::find(allowed_.begin(), allowed_.end(), name) == allowed_.end()) {
        fail("unknown parameter '" + name + "'");
      }
      return LinearForm::parameter(name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& allowed_;
  const std::string& var_;
  std::size_t pos_ = 0;
};

}  // namespace

LinearForm parse_linear_form(std::string_view text, const std::vector<std::string>& allowed,
                             const std::string& var) {
  return Parser(text, allowed, var).parse();
}

RatFunc parse_rat_func(std::string_view text, const std::string& var) {
  static const std::vector<std::string> kNone;
  LinearForm f = parse_linear_form(text, kNone, var);
  if (!f.is_constant()) {
    throw PreconditionError("expression '" + std::string(text) + "' contains free parameters");
  }
  return f.constant();
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

}  // namespace gegenmetric
