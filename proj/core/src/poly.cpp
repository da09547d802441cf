#include "ringlab/poly.hpp"

#include <cctype>
#include <sstream>

#include "ringlab/errors.hpp"
#include "ringlab/integer.hpp"

namespace ringlab {

Poly::Coeff inverse_mod(Poly::Coeff k, Poly::Coeff p) {
  long long a = k % p, m = p, x0 = 1, x1 = 0;
  if (a == 0) throw DomainError("zero has no inverse mod " + std::to_string(p));
  while (m != 0) {
    long long q = a / m;
    long long t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  long long r = x0 % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<Poly::Coeff>(r);
}

Poly::Poly(Coeff p) : p_(p) {}

Poly::Poly(Coeff p, std::vector<Coeff> ascending) : p_(p), c_(std::move(ascending)) {
  for (auto& c : c_) c %= p_;
  trim();
}

Poly Poly::from_signed(Coeff p, const std::vector<long long>& ascending) {
  std::vector<Coeff> c;
  c.reserve(ascending.size());
  for (long long v : ascending) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    c.push_back(static_cast<Coeff>(r));
  }
  return Poly(p, std::move(c));
}

Poly Poly::constant(Coeff p, long long c) { return from_signed(p, {c}); }

Poly Poly::monomial(Coeff p, std::size_t degree, Coeff c) {
  std::vector<Coeff> v(degree + 1, 0);
  v[degree] = c;
  return Poly(p, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  if (p_ != o.p_) {
    throw RingMismatch("polynomials over F" + std::to_string(p_) + " and F" +
                       std::to_string(o.p_));
  }
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(inverse_mod(lead(), p_));
}

Poly Poly::scaled(Coeff k) const {
  Poly r(p_);
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    r.c_[i] = static_cast<Coeff>((std::uint64_t{c_[i]} * k) % p_);
  }
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.c_) c = c == 0 ? 0 : p_ - c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    c_[i] = static_cast<Coeff>((std::uint64_t{c_[i]} + o.c_[i]) % p_);
  }
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    c_[i] = static_cast<Coeff>((std::uint64_t{c_[i]} + p_ - o.c_[i]) % p_);
  }
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly r(a.p_);
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % a.p_;
    }
  }
  r.c_.assign(acc.begin(), acc.end());
  r.trim();
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  a.check_same(b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const auto p = a.p_;
  Poly rem = a;
  Poly quot(p);
  if (rem.degree() < b.degree()) return {quot, rem};
  quot.c_.assign(static_cast<std::size_t>(rem.degree() - b.degree() + 1), 0);
  const auto inv = inverse_mod(b.lead(), p);
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
    const auto k = static_cast<Poly::Coeff>((std::uint64_t{rem.lead()} * inv) % p);
    quot.c_[shift] = k;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      auto& slot = rem.c_[shift + j];
      slot = static_cast<Poly::Coeff>((slot + p - (std::uint64_t{k} * b.c_[j]) % p) % p);
    }
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i > 0) {
      if (c_[i] != 1) os << '*';
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

Poly Poly::parse(Coeff p, std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw SyntaxError("empty polynomial literal");
  Poly result(p);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw SyntaxError("bad polynomial '" + std::string(text) + "': " + why);
  };
  while (i < s.size()) {
    long long sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail("expected '+' or '-'");
    }
    long long coeff = 1;
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      coeff = std::stoll(s.substr(i, j - i)) % static_cast<long long>(p);
      have_coeff = true;
      i = j;
    }
    std::size_t degree = 0;
    if (i < s.size() && s[i] == '*') {
      if (!have_coeff) fail("dangling '*'");
      ++i;
      if (i >= s.size() || s[i] != 'x') fail("expected 'x' after '*'");
    }
    if (i < s.size() && s[i] == 'x') {
      ++i;
      degree = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail("expected exponent");
        degree = std::stoull(s.substr(i, j - i));
        i = j;
      }
    } else if (!have_coeff) {
      fail("expected a term");
    }
    const long long c = ((sign * coeff) % static_cast<long long>(p) + p) % p;
    result += monomial(p, degree, 1).scaled(static_cast<Coeff>(c));
  }
  return result;
}

std::uint64_t Poly::index() const {
  std::uint64_t idx = 0;
  for (std::size_t i = c_.size(); i-- > 0;) idx = idx * p_ + c_[i];
  return idx;
}

Poly Poly::from_index(Coeff p, std::uint64_t index) {
  std::vector<Coeff> c;
  while (index != 0) {
    c.push_back(static_cast<Coeff>(index % p));
    index /= p;
  }
  return Poly(p, std::move(c));
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  s = s.substr(b, e - b);
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw SyntaxError("bad integer literal '" + std::string(text) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw SyntaxError("bad integer literal '" + std::string(text) + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace ringlab
