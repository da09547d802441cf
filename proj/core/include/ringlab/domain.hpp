#pragma once

// Euclidean-domain adapters for the two concrete domains the library
// computes in: the integers and F_p[x]. Generic algorithms (gcd, witnesses,
// matrix reduction) are written against the EuclideanDomain concept below.

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/integer.hpp"
#include "ringlab/poly.hpp"

namespace ringlab {

template <class D>
concept EuclideanDomain = requires(const D& d, const typename D::value_type& a) {
  typename D::value_type;
  { d.zero() } -> std::same_as<typename D::value_type>;
  { d.one() } -> std::same_as<typename D::value_type>;
  { d.add(a, a) } -> std::same_as<typename D::value_type>;
  { d.sub(a, a) } -> std::same_as<typename D::value_type>;
  { d.mul(a, a) } -> std::same_as<typename D::value_type>;
  { d.neg(a) } -> std::same_as<typename D::value_type>;
  { d.is_zero(a) } -> std::same_as<bool>;
  { d.is_unit(a) } -> std::same_as<bool>;
  { d.normalize(a) } -> std::same_as<typename D::value_type>;
  { d.unit_part(a) } -> std::same_as<typename D::value_type>;
  { d.unit_inverse(a) } -> std::same_as<typename D::value_type>;
  { d.divmod(a, a) } -> std::same_as<std::pair<typename D::value_type, typename D::value_type>>;
  { d.size_less(a, a) } -> std::same_as<bool>;
  { d.to_string(a) } -> std::same_as<std::string>;
};

class IntegerDomain {
 public:
  using value_type = Integer;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return Integer(static_cast<long>(v)); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_unit(const value_type& a) const { return abs(a) == 1; }
  /// Non-negative associate.
  value_type normalize(const value_type& a) const { return abs(a); }
  /// u with a = u * normalize(a); 1 for zero.
  value_type unit_part(const value_type& a) const { return sgn(a) < 0 ? -1 : 1; }
  value_type unit_inverse(const value_type& u) const { return u; }

  /// Remainder in [0, |b|).
  std::pair<value_type, value_type> divmod(const value_type& a, const value_type& b) const;
  value_type rem(const value_type& a, const value_type& m) const { return divmod(a, m).second; }
  bool divides(const value_type& d, const value_type& a) const;
  /// Throws DomainError unless d divides a.
  value_type exact_div(const value_type& a, const value_type& d) const;
  bool size_less(const value_type& a, const value_type& b) const { return abs(a) < abs(b); }

  /// Units {1, -1}.
  std::vector<value_type> units() const { return {1, -1}; }
  /// Prime factorization of a nonzero value (normalized primes, ascending).
  std::vector<std::pair<value_type, unsigned>> factor(const value_type& a) const;
  /// All of [-bound, bound], ascending.
  std::vector<value_type> sample(long long bound) const;
  /// i-th element of the enumeration 0, 1, 2, ... of the naturals.
  value_type nth(std::uint64_t i) const { return Integer(static_cast<unsigned long>(i)); }

  std::string to_string(const value_type& a) const { return a.get_str(); }
  nlohmann::json to_json(const value_type& a) const { return a.get_str(); }
  value_type from_json(const nlohmann::json& j) const;
  value_type parse(std::string_view text) const { return parse_integer(text); }
  std::string name() const { return "Z"; }

  friend bool operator==(const IntegerDomain&, const IntegerDomain&) = default;
};

class PolyDomain {
 public:
  using value_type = Poly;

  /// p must be prime (DomainError otherwise).
  explicit PolyDomain(Poly::Coeff p);

  Poly::Coeff modulus() const { return p_; }

  value_type zero() const { return Poly(p_); }
  value_type one() const { return Poly::constant(p_, 1); }
  value_type from_int(long long v) const { return Poly::constant(p_, v); }
  value_type x() const { return Poly::monomial(p_, 1); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }

  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool is_unit(const value_type& a) const { return a.degree() == 0; }
  /// Monic associate (zero stays zero).
  value_type normalize(const value_type& a) const { return a.monic(); }
  value_type unit_part(const value_type& a) const;
  value_type unit_inverse(const value_type& u) const;

  std::pair<value_type, value_type> divmod(const value_type& a, const value_type& b) const;
  value_type rem(const value_type& a, const value_type& m) const { return divmod(a, m).second; }
  bool divides(const value_type& d, const value_type& a) const;
  value_type exact_div(const value_type& a, const value_type& d) const;
  bool size_less(const value_type& a, const value_type& b) const {
    return a.degree() < b.degree();
  }

  /// Nonzero constants 1..p-1.
  std::vector<value_type> units() const;
  /// Monic irreducible factorization of a nonzero value, by trial division.
  std::vector<std::pair<value_type, unsigned>> factor(const value_type& a) const;
  /// Every polynomial of degree <= max_degree, in dense-index order.
  std::vector<value_type> sample(int max_degree) const;
  /// i-th polynomial in dense-index order (0, 1, ..., p-1, x, x+1, ...).
  value_type nth(std::uint64_t i) const { return Poly::from_index(p_, i); }

  std::string to_string(const value_type& a) const { return a.to_string(); }
  /// Ascending coefficient array.
  nlohmann::json to_json(const value_type& a) const;
  /// Accepts a coefficient array, an integer, or a "c0 + c1*x" string.
  value_type from_json(const nlohmann::json& j) const;
  value_type parse(std::string_view text) const { return Poly::parse(p_, text); }
  std::string name() const { return "F" + std::to_string(p_) + "[x]"; }

  friend bool operator==(const PolyDomain&, const PolyDomain&) = default;

 private:
  Poly::Coeff p_;
};

static_assert(EuclideanDomain<IntegerDomain>);
static_assert(EuclideanDomain<PolyDomain>);

}  // namespace ringlab
