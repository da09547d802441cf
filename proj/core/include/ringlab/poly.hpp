#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ringlab {

/// Univariate polynomial over the prime field F_p.
///
/// Coefficients are stored in ascending order with no trailing zeros, so the
/// zero polynomial is the empty sequence. Every polynomial carries its
/// modulus; mixing moduli throws RingMismatch.
class Poly {
 public:
  using Coeff = std::uint32_t;

  Poly() = default;
  explicit Poly(Coeff p);
  Poly(Coeff p, std::vector<Coeff> ascending);
  /// Accepts signed coefficients, reduced into [0, p).
  static Poly from_signed(Coeff p, const std::vector<long long>& ascending);
  static Poly constant(Coeff p, long long c);
  static Poly monomial(Coeff p, std::size_t degree, Coeff c = 1);

  Coeff modulus() const noexcept { return p_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  const std::vector<Coeff>& coeffs() const noexcept { return c_; }
  Coeff coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Coeff lead() const noexcept { return c_.empty() ? 0 : c_.back(); }

  Poly monic() const;
  Poly scaled(Coeff k) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Euclidean division; divisor must be nonzero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

  /// "x^2 + 2*x + 1" style; "0" for zero.
  std::string to_string() const;
  /// Parses "c0 + c1*x + ..." or any sum of terms "c*x^k", "x", "-x^2", ...
  static Poly parse(Coeff p, std::string_view text);

  /// Dense index c0 + c1 p + c2 p^2 + ..., used to enumerate F_p[x].
  std::uint64_t index() const;
  static Poly from_index(Coeff p, std::uint64_t index);

 private:
  void trim();
  void check_same(const Poly& o) const;

  Coeff p_ = 2;
  std::vector<Coeff> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Multiplicative inverse in F_p; k must be nonzero mod p.
Poly::Coeff inverse_mod(Poly::Coeff k, Poly::Coeff p);

}  // namespace ringlab
