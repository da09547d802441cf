#include "ringlab/domain.hpp"

#include <algorithm>

#include "ringlab/errors.hpp"

namespace ringlab {

// ---------------------------------------------------------------- integers

std::pair<Integer, Integer> IntegerDomain::divmod(const Integer& a, const Integer& b) const {
  if (sgn(b) == 0) throw DomainError("integer division by zero");
  Integer m = abs(b);
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  Integer q = (a - r) / b;
  return {q, r};
}

bool IntegerDomain::divides(const Integer& d, const Integer& a) const {
  if (sgn(d) == 0) return sgn(a) == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

Integer IntegerDomain::exact_div(const Integer& a, const Integer& d) const {
  if (sgn(d) == 0) {
    if (sgn(a) == 0) return 0;
    throw DomainError("exact division of " + a.get_str() + " by 0");
  }
  if (!divides(d, a)) {
    throw DomainError(d.get_str() + " does not divide " + a.get_str());
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

std::vector<std::pair<Integer, unsigned>> IntegerDomain::factor(const Integer& a) const {
  if (sgn(a) == 0) throw ZeroElement("cannot factor 0");
  std::vector<std::pair<Integer, unsigned>> out;
  Integer n = abs(a);
  for (Integer d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<Integer> IntegerDomain::sample(long long bound) const {
  std::vector<Integer> out;
  for (long long v = -bound; v <= bound; ++v) out.push_back(from_int(v));
  return out;
}

Integer IntegerDomain::from_json(const nlohmann::json& j) const {
  if (j.is_number_integer()) return from_int(j.get<long long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw SyntaxError("expected an integer, got " + j.dump());
}

// ------------------------------------------------------------- polynomials

PolyDomain::PolyDomain(Poly::Coeff p) : p_(p) {
  if (!is_prime(p)) throw DomainError("F_p[x] requires p prime, got " + std::to_string(p));
}

Poly PolyDomain::unit_part(const Poly& a) const {
  if (a.is_zero()) return one();
  return Poly::constant(p_, a.lead());
}

Poly PolyDomain::unit_inverse(const Poly& u) const {
  if (u.degree() != 0) throw DomainError(u.to_string() + " is not a unit of " + name());
  return Poly::constant(p_, inverse_mod(u.lead(), p_));
}

std::pair<Poly, Poly> PolyDomain::divmod(const Poly& a, const Poly& b) const {
  return ringlab::divmod(a, b);
}

bool PolyDomain::divides(const Poly& d, const Poly& a) const {
  if (d.is_zero()) return a.is_zero();
  return ringlab::divmod(a, d).second.is_zero();
}

Poly PolyDomain::exact_div(const Poly& a, const Poly& d) const {
  if (d.is_zero()) {
    if (a.is_zero()) return zero();
    throw DomainError("exact division of " + a.to_string() + " by 0");
  }
  auto [q, r] = ringlab::divmod(a, d);
  if (!r.is_zero()) throw DomainError(d.to_string() + " does not divide " + a.to_string());
  return q;
}

std::vector<Poly> PolyDomain::units() const {
  std::vector<Poly> out;
  for (Poly::Coeff c = 1; c < p_; ++c) out.push_back(Poly::constant(p_, c));
  return out;
}

std::vector<std::pair<Poly, unsigned>> PolyDomain::factor(const Poly& a) const {
  if (a.is_zero()) throw ZeroElement("cannot factor 0");
  std::vector<std::pair<Poly, unsigned>> out;
  Poly n = a.monic();
  // Monic trial divisors in increasing degree; the first divisor found at a
  // given degree is irreducible since all smaller factors are already gone.
  for (int deg = 1; 2 * deg <= n.degree(); ++deg) {
    std::uint64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= p_;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly d = Poly::from_index(p_, low) + Poly::monomial(p_, static_cast<std::size_t>(deg));
      unsigned e = 0;
      while (n.degree() >= d.degree()) {
        auto [q, r] = ringlab::divmod(n, d);
        if (!r.is_zero()) break;
        n = q;
        ++e;
      }
      if (e > 0) out.emplace_back(d, e);
      if (2 * deg > n.degree()) break;
    }
  }
  if (n.degree() >= 1) {
    bool merged = false;
    for (auto& [q, e] : out) {
      if (q == n) {
        ++e;
        merged = true;
      }
    }
    if (!merged) out.emplace_back(n, 1);
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    if (l.first.degree() != r.first.degree()) return l.first.degree() < r.first.degree();
    return l.first.index() < r.first.index();
  });
  return out;
}

std::vector<Poly> PolyDomain::sample(int max_degree) const {
  std::uint64_t count = 1;
  for (int i = 0; i <= max_degree; ++i) count *= p_;
  std::vector<Poly> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(Poly::from_index(p_, i));
  return out;
}

nlohmann::json PolyDomain::to_json(const Poly& a) const {
  auto arr = nlohmann::json::array();
  for (auto c : a.coeffs()) arr.push_back(c);
  return arr;
}

Poly PolyDomain::from_json(const nlohmann::json& j) const {
  if (j.is_array()) {
    std::vector<long long> c;
    for (const auto& v : j) {
      if (!v.is_number_integer()) throw SyntaxError("coefficient must be an integer: " + v.dump());
      c.push_back(v.get<long long>());
    }
    return Poly::from_signed(p_, c);
  }
  if (j.is_number_integer()) return Poly::constant(p_, j.get<long long>());
  if (j.is_string()) return Poly::parse(p_, j.get<std::string>());
  throw SyntaxError("expected a polynomial, got " + j.dump());
}

}  // namespace ringlab
