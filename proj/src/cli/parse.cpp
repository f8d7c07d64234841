#include "pencil/cli/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <vector>

namespace pencil::cli {

namespace {

using algebra::FieldElement;
using algebra::FieldPtr;
using algebra::Rational;
using forms::Exponent3;

constexpr int kMaxExponent = 1000;

// Polynomial in up to three variables, not necessarily homogeneous.
using Poly = std::map<Exponent3, FieldElement>;

void add_into(Poly& acc, const Exponent3& e, const FieldElement& c) {
  auto [it, inserted] = acc.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  } else if (c.is_zero()) {
    acc.erase(it);
  }
}

Poly add(const Poly& a, const Poly& b, bool negate) {
  Poly out = a;
  for (const auto& [e, c] : b) add_into(out, e, negate ? -c : c);
  return out;
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) add_into(out, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  }
  return out;
}

class Parser {
 public:
  Parser(const std::string& src, FieldPtr field, std::vector<std::string> variables)
      : src_(src), field_(std::move(field)), variables_(std::move(variables)) {}

  Poly parse() {
    skip_space();
    if (pos_ == src_.size()) fail("empty expression");
    Poly p = expr();
    skip_space();
    if (pos_ != src_.size()) fail(std::string("unexpected '") + src_[pos_] + "'");
    return p;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    int line = 1, column = 1;
    for (std::size_t i = 0; i < at && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what, line, column);
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly constant(const FieldElement& c) {
    Poly p;
    add_into(p, {0, 0, 0}, c);
    return p;
  }

  Poly expr() {
    Poly acc = term();
    while (true) {
      if (accept('+')) {
        acc = add(acc, term(), false);
      } else if (accept('-')) {
        acc = add(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (accept('*')) acc = multiply(acc, unary());
    return acc;
  }

  Poly unary() {
    if (accept('-')) return add(Poly{}, unary(), true);
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    if (pos_ == src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      fail("expected a nonnegative integer exponent");
    }
    const std::string digits = integer();
    if (digits.size() > 4 || std::stoi(digits) > kMaxExponent) fail_at("exponent " + digits + " is too large", start);
    Poly out = constant(FieldElement(field_, 1));
    for (int i = std::stoi(digits); i > 0; --i) out = multiply(out, base);
    return out;
  }

  std::string integer() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  Poly atom() {
    skip_space();
    if (pos_ == src_.size()) fail("unexpected end of expression");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value{algebra::Integer(integer())};
      if (accept('/')) {
        skip_space();
        const std::size_t at = pos_;
        const std::string den = integer();
        if (den.empty()) fail("expected a denominator");
        const algebra::Integer d(den);
        if (d == 0) fail_at("division by zero", at);
        value /= Rational(d);
      }
      return constant(FieldElement(field_, value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name = src_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (variables_[i] == name) {
          Exponent3 e{0, 0, 0};
          e[i] = 1;
          Poly p;
          add_into(p, e, FieldElement(field_, 1));
          return p;
        }
      }
      if (!field_->is_rationals() && name == field_->generator_name()) {
        return constant(FieldElement::generator(field_));
      }
      fail_at("unknown identifier '" + name + "'", start);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& src_;
  FieldPtr field_;
  std::vector<std::string> variables_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

forms::Form parse_form(const std::string& src, const algebra::FieldPtr& field) {
  Parser parser(src, field, {"x", "y", "z"});
  const Poly p = parser.parse();
  if (p.empty()) throw InputError("expression is the zero polynomial");
  std::vector<int> degrees;
  for (const auto& [e, c] : p) {
    const int d = e[0] + e[1] + e[2];
    if (std::find(degrees.begin(), degrees.end(), d) == degrees.end()) degrees.push_back(d);
  }
  if (degrees.size() > 1) {
    std::sort(degrees.rbegin(), degrees.rend());
    throw InputError("not homogeneous: degrees " + std::to_string(degrees[0]) + " and " + std::to_string(degrees[1]));
  }
  forms::Form f(field, degrees[0]);
  for (const auto& [e, c] : p) f.add_term(e, c);
  return f;
}

algebra::FieldPtr parse_extension(const std::string& src, int max_degree) {
  const auto colon = src.find(':');
  if (colon == std::string::npos) throw ParseError("expected 'name: minimal polynomial'", 1, 1);
  std::string name = src.substr(0, colon);
  name.erase(0, name.find_first_not_of(" \t"));
  name.erase(name.find_last_not_of(" \t") + 1);
  const bool valid = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') &&
                     std::all_of(name.begin(), name.end(),
                                 [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
  if (!valid) throw ParseError("invalid generator name '" + name + "'", 1, 1);
  if (name == "x" || name == "y" || name == "z") throw ParseError("generator name '" + name + "' is reserved", 1, 1);

  const std::string body = src.substr(colon + 1);
  Parser parser(body, algebra::NumberField::rationals(), {name});
  const Poly p = parser.parse();
  int degree = 0;
  for (const auto& [e, c] : p) degree = std::max(degree, e[0]);
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1, Rational(0));
  for (const auto& [e, c] : p) {
    const Rational r = c.rational_value();
    if (r.get_den() != 1) throw InputError("minimal polynomial of " + name + " must have integer coefficients");
    coeffs[static_cast<std::size_t>(e[0])] = r;
  }
  if (degree < 1) throw InputError("minimal polynomial of " + name + " must have positive degree");
  if (coeffs.back() != 1) throw InputError("minimal polynomial of " + name + " must be monic");
  try {
    return algebra::NumberField::create(name, coeffs, max_degree);
  } catch (const AlgebraError& e) {
    throw InputError(e.what());
  }
}

}  // namespace pencil::cli
