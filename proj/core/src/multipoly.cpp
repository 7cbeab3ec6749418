#include "detideal/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace detideal {

Monomial Monomial::variable(int index, int power) {
  if (index < 0 || index >= kMaxVariables) throw std::out_of_range("variable index out of range");
  if (power < 0 || power > 255) throw std::out_of_range("exponent out of range");
  Monomial m;
  m.exp[static_cast<std::size_t>(index)] = static_cast<uint8_t>(power);
  m.degree = static_cast<uint16_t>(power);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned(a.exp[i]) + unsigned(b.exp[i]);
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    r.exp[i] = static_cast<uint8_t>(e);
  }
  r.degree = static_cast<uint16_t>(a.degree + b.degree);
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exp[i] = static_cast<uint8_t>(a.exp[i] - b.exp[i]);
  r.degree = static_cast<uint16_t>(a.degree - b.degree);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  uint16_t d = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exp[i] = std::max(a.exp[i], b.exp[i]);
    d = static_cast<uint16_t>(d + r.exp[i]);
  }
  r.degree = d;
  return r;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) noexcept {
  if (order == MonomialOrder::Lex) {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
    }
    return 0;
  }
  if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

MultiPoly::MultiPoly(int nvars, MonomialOrder order) : nvars_(nvars), order_(order) {
  if (nvars < 1 || nvars > kMaxVariables) throw std::invalid_argument("unsupported number of variables");
}

MultiPoly::MultiPoly(int nvars, MonomialOrder order, std::vector<Term> terms)
    : MultiPoly(nvars, order) {
  terms_ = std::move(terms);
  normalize_terms();
}

void MultiPoly::normalize_terms() {
  std::sort(terms_.begin(), terms_.end(),
            [this](const Term& a, const Term& b) { return compare(a.mono, b.mono, order_) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

MultiPoly MultiPoly::constant(int nvars, MonomialOrder order, Integer value) {
  MultiPoly p(nvars, order);
  if (!value.is_zero()) p.terms_.push_back({Monomial::one(), std::move(value)});
  return p;
}

MultiPoly MultiPoly::variable(int nvars, MonomialOrder order, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
  MultiPoly p(nvars, order);
  p.terms_.push_back({Monomial::variable(index), Integer(1)});
  return p;
}

MultiPoly MultiPoly::from_univariate(const ZPoly& p) {
  MultiPoly r(1, MonomialOrder::DegRevLex);
  for (int i = p.degree(); i >= 0; --i) {
    const Integer& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (!c.is_zero()) r.terms_.push_back({Monomial::variable(0, i), c});
  }
  return r;
}

int MultiPoly::total_degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, int(t.mono.degree));
  return d;
}

ZPoly MultiPoly::to_univariate() const {
  if (nvars_ != 1) throw std::invalid_argument("polynomial is not univariate");
  if (terms_.empty()) return ZPoly();
  std::vector<Integer> c(static_cast<std::size_t>(terms_.front().mono.exp[0]) + 1, Integer(0));
  for (const auto& t : terms_) c[t.mono.exp[0]] = t.coeff;
  return ZPoly(std::move(c));
}

MultiPoly MultiPoly::with_order(MonomialOrder order) const {
  MultiPoly r(nvars_, order);
  r.terms_ = terms_;
  r.normalize_terms();
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge two descending term lists: a + sign*b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract,
                              MonomialOrder order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare(a[i].mono, b[j].mono, order);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? -b[j].coeff : b[j].coeff});
      ++j;
    } else {
      Integer s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, subtract ? -b[j].coeff : b[j].coeff});
  return out;
}

void check_compatible(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars() || a.order() != b.order()) {
    throw std::invalid_argument("polynomials belong to different rings");
  }
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_compatible(*this, rhs);
  terms_ = merge_terms(terms_, rhs.terms_, false, order_);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_compatible(*this, rhs);
  terms_ = merge_terms(terms_, rhs.terms_, true, order_);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Integer& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_compatible(a, b);
  MultiPoly r(a.nvars_, a.order_);
  if (a.is_zero() || b.is_zero()) return r;
  if (b.size() == 1) return a.times_term(b.lc(), b.lm());
  if (a.size() == 1) return b.times_term(a.lc(), a.lm());
  r.terms_.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) r.terms_.push_back({s.mono * t.mono, s.coeff * t.coeff});
  }
  r.normalize_terms();
  return r;
}

MultiPoly MultiPoly::times_term(const Integer& c, const Monomial& m) const {
  MultiPoly r(nvars_, order_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order of terms.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

void MultiPoly::subtract_multiple(const Integer& c, const Monomial& m, const MultiPoly& h) {
  if (c.is_zero() || h.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + h.terms_.size());
  std::size_t i = 0, j = 0;
  const auto& ht = h.terms_;
  Monomial hm;
  bool have_hm = false;
  while (i < terms_.size() || j < ht.size()) {
    if (j < ht.size() && !have_hm) {
      hm = ht[j].mono * m;
      have_hm = true;
    }
    int cmp;
    if (i >= terms_.size()) {
      cmp = -1;
    } else if (j >= ht.size()) {
      cmp = 1;
    } else {
      cmp = compare(terms_[i].mono, hm, order_);
    }
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back({hm, -(ht[j].coeff * c)});
      ++j;
      have_hm = false;
    } else {
      Integer s = terms_[i].coeff - ht[j].coeff * c;
      if (!s.is_zero()) out.push_back({hm, std::move(s)});
      ++i;
      ++j;
      have_hm = false;
    }
  }
  terms_ = std::move(out);
}

Integer MultiPoly::eval(std::span<const Integer> point) const {
  if (static_cast<int>(point.size()) != nvars_) {
    throw std::invalid_argument("evaluation point arity does not match the number of variables");
  }
  Integer acc(0);
  for (const auto& t : terms_) {
    Integer v = t.coeff;
    for (int i = 0; i < nvars_; ++i) {
      unsigned e = t.mono.exp[static_cast<std::size_t>(i)];
      if (e) v *= Integer::pow(point[static_cast<std::size_t>(i)], e);
    }
    acc += v;
  }
  return acc;
}

std::vector<std::string> default_variable_names(int nvars) {
  if (nvars == 1) return {"x"};
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  std::vector<std::string> fallback;
  if (names.empty()) {
    fallback = default_variable_names(nvars_);
    names = fallback;
  }
  if (static_cast<int>(names.size()) < nvars_) throw std::invalid_argument("not enough variable names");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      unsigned e = t.mono.exp[static_cast<std::size_t>(i)];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += names[static_cast<std::size_t>(i)];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    Integer mag = t.coeff.abs();
    out += render_term(mag.to_string(), mag.is_one(), mono, first, t.coeff.sign() < 0);
    first = false;
  }
  return out;
}

int compare(const MultiPoly& a, const MultiPoly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare(a.terms_[i].mono, b.terms_[i].mono, a.order_);
    if (c != 0) return c;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

Integer eval_poly(const MultiPoly& p, std::span<const Integer> point) { return p.eval(point); }

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::span<const std::string> names, MonomialOrder order)
      : s_(text), names_(names), order_(order), nvars_(static_cast<int>(names.size())) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at column " + std::to_string(pos_) + ": " + what +
                                " in \"" + std::string(s_) + "\"");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                 std::isdigit(static_cast<unsigned char>(c))) {
        acc *= unary();
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      MultiPoly r = MultiPoly::constant(nvars_, order_, Integer(1));
      for (int i = 0; i < e; ++i) r *= base;
      return r;
    }
    return base;
  }

  MultiPoly atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MultiPoly::constant(nvars_, order_, Integer(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view id = s_.substr(start, pos_ - start);
      for (int i = 0; i < nvars_; ++i) {
        if (names_[static_cast<std::size_t>(i)] == id) return MultiPoly::variable(nvars_, order_, i);
      }
      fail("unknown variable '" + std::string(id) + "'");
    }
    fail("expected a number, variable or '('");
  }

  std::string_view s_;
  std::span<const std::string> names_;
  MonomialOrder order_;
  int nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_polynomial(std::string_view text, std::span<const std::string> names, MonomialOrder order) {
  if (names.empty()) throw std::invalid_argument("parse_polynomial needs at least one variable name");
  return PolyParser(text, names, order).parse();
}

ZPoly parse_univariate(std::string_view text, std::string_view var) {
  std::vector<std::string> names{std::string(var)};
  return parse_polynomial(text, names).to_univariate();
}

}  // namespace detideal
