#include "mds/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace mds::poly {

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVariables) throw PreconditionError("too many variables for a monomial");
}

Monomial::Monomial(std::size_t nvars, const std::vector<unsigned>& exponents) : Monomial(nvars) {
  if (exponents.size() != nvars) throw DimensionMismatch("monomial: exponent count differs from variable count");
  for (std::size_t i = 0; i < nvars; ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw DimensionMismatch("monomial: variable index out of range");
  if (e > 0xFFFF) throw PreconditionError("monomial: exponent too large");
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = static_cast<std::uint16_t>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < nvars_; ++i) {
    unsigned e = unsigned(exp_[i]) + other.exp_[i];
    if (e > 0xFFFF) throw PreconditionError("monomial: exponent overflow");
    m.exp_[i] = static_cast<std::uint16_t>(e);
  }
  m.degree_ = degree_ + other.degree_;
  return m;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial m = other;
  for (std::size_t i = 0; i < nvars_; ++i) m.exp_[i] = static_cast<std::uint16_t>(other.exp_[i] - exp_[i]);
  m.degree_ = other.degree_ - degree_;
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    m.exp_[i] = std::max(exp_[i], other.exp_[i]);
    m.degree_ += m.exp_[i];
  }
  return m;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial m(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    m.exp_[i] = std::min(exp_[i], other.exp_[i]);
    m.degree_ += m.exp_[i];
  }
  return m;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] && other.exp_[i]) return false;
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i]) s.push_back(i);
  return s;
}

bool Monomial::operator==(const Monomial& other) const {
  return nvars_ == other.nvars_ && degree_ == other.degree_ && exp_ == other.exp_;
}

bool Monomial::operator<(const Monomial& other) const { return exp_ < other.exp_; }

TermOrder::TermOrder(std::size_t nvars) : perm_(nvars) { std::iota(perm_.begin(), perm_.end(), 0); }

TermOrder::TermOrder(std::vector<std::size_t> permutation) : perm_(std::move(permutation)) {
  std::vector<std::size_t> check = perm_;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != i) throw PreconditionError("term order: not a permutation");
}

bool TermOrder::greater(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (std::size_t k = perm_.size(); k-- > 0;) {
    std::size_t v = perm_[k];
    if (a[v] != b[v]) return a[v] < b[v];
  }
  return false;
}

namespace {

bool default_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (std::size_t k = a.num_vars(); k-- > 0;)
    if (a[k] != b[k]) return a[k] < b[k];
  return false;
}

struct DefaultGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return default_greater(a, b); }
};

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rat& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  Polynomial p(nvars);
  p.terms_.push_back({Monomial::variable(nvars, index), Rat(1)});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::map<Monomial, Rat, DefaultGreater> acc;
  for (auto& t : terms) {
    if (t.monomial.num_vars() != nvars) throw DimensionMismatch("polynomial: monomial in wrong ring");
    acc[t.monomial] += t.coeff;
  }
  Polynomial p(nvars);
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw DimensionMismatch("polynomial sum: different rings");
  Polynomial r(nvars_);
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && default_greater(terms_[i].monomial, o.terms_[j].monomial))) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || default_greater(o.terms_[j].monomial, terms_[i].monomial)) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rat c = terms_[i].coeff + o.terms_[j].coeff;
      if (c != 0) r.terms_.push_back({terms_[i].monomial, c});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(Rat(-1)); }

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw DimensionMismatch("polynomial product: different rings");
  std::vector<Term> all;
  all.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) all.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
  return from_terms(nvars_, std::move(all));
}

Polynomial Polynomial::scaled(const Rat& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times(const Monomial& m) const {
  Polynomial r(nvars_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.monomial = t.monomial * m;
  return r;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
  if (point.size() != nvars_) throw DimensionMismatch("evaluate: point of wrong length");
  Rat total = 0;
  for (const auto& t : terms_) {
    Rat v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < t.monomial[i]; ++e) v *= point[i];
    total += v;
  }
  return total;
}

Polynomial Polynomial::substitute_zero(const std::vector<std::size_t>& vars) const {
  Polynomial r(nvars_);
  for (const auto& t : terms_) {
    bool vanishes = false;
    for (auto v : vars)
      if (t.monomial[v] > 0) {
        vanishes = true;
        break;
      }
    if (!vanishes) r.terms_.push_back(t);
  }
  return r;
}

Polynomial Polynomial::substitute(const std::vector<std::size_t>& vars, const std::vector<Rat>& values) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Term u = t;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      unsigned e = u.monomial[vars[k]];
      for (unsigned i = 0; i < e; ++i) u.coeff *= values[k];
      u.monomial.set(vars[k], 0);
    }
    out.push_back(std::move(u));
  }
  return from_terms(nvars_, std::move(out));
}

Polynomial Polynomial::remap(std::size_t new_nvars, const std::vector<std::size_t>& map) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Monomial m(new_nvars);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.monomial[i] > 0) {
        if (map[i] >= new_nvars) throw PreconditionError("remap: occurring variable is not mapped");
        m.set(map[i], m[map[i]] + t.monomial[i]);
      }
    out.push_back({m, t.coeff});
  }
  return from_terms(new_nvars, std::move(out));
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial(nvars_);
  Monomial g = terms_[0].monomial;
  for (const auto& t : terms_) g = g.gcd(t.monomial);
  return g;
}

Polynomial Polynomial::divided_by(const Monomial& m) const {
  Polynomial r(nvars_);
  for (const auto& t : terms_) {
    if (!m.divides(t.monomial)) throw PreconditionError("divided_by: monomial does not divide every term");
    r.terms_.push_back({m.quotient_of(t.monomial), t.coeff});
  }
  // Division by a monomial preserves the relative order within a degree but
  // may reorder across degrees for reverse lexicographic ties; re-sort.
  return from_terms(nvars_, std::move(r.terms_));
}

std::vector<std::size_t> Polynomial::variables() const {
  std::vector<bool> seen(nvars_, false);
  for (const auto& t : terms_)
    for (auto v : t.monomial.support()) seen[v] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(1 / terms_[0].coeff);
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].monomial == o.terms_[i].monomial) || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& names) : s_(text), names_(names) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Polynomial expr() {
    Polynomial acc(names_.size());
    bool first = true;
    while (true) {
      skip();
      int sgn = 1;
      if (peek('+') || peek('-')) {
        sgn = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = sgn < 0 ? acc - t : acc + t;
      first = false;
      if (!(peek('+') || peek('-'))) break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial p = power();
    while (peek('*')) {
      ++pos_;
      p = p * power();
    }
    return p;
  }

  Polynomial power() {
    Polynomial b = base();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      Polynomial r = Polynomial::constant(names_.size(), Rat(1));
      for (unsigned long i = 0; i < e; ++i) r = r * b;
      return r;
    }
    return b;
  }

  Polynomial base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Rat value(Int(std::string(s_.substr(start, pos_ - start))));
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (ds == pos_) fail("expected denominator");
        Int den(std::string(s_.substr(ds, pos_ - ds)));
        if (den == 0) fail("zero denominator");
        value /= Rat(den);
      }
      return Polynomial::constant(names_.size(), value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return Polynomial::variable(names_.size(), i);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& var_names) {
  if (var_names.size() > kMaxVariables) throw PreconditionError("too many variables");
  return Parser(text, var_names).parse();
}

std::string to_string(const Monomial& m, const std::vector<std::string>& var_names) {
  std::string s;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += var_names.at(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& var_names) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rat c = t.coeff;
    if (first) {
      if (c < 0) s += '-';
    } else {
      s += c < 0 ? " - " : " + ";
    }
    Rat a = abs(c);
    bool unit = t.monomial.is_one();
    if (a != 1 || unit) {
      s += a.get_str();
      if (!unit) s += '*';
    }
    if (!unit) s += to_string(t.monomial, var_names);
    first = false;
  }
  return s;
}

}  // namespace mds::poly
