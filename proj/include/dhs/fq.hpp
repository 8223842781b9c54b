#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dhs {

using i64 = std::int64_t;

bool is_prime(i64 p);

/// Canonical residue of a (possibly negative) integer mod m > 0.
inline i64 mod_canon(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 pow_mod(i64 a, i64 e, i64 p);
i64 inv_mod(i64 a, i64 p);

/// Binomial coefficient C(m, n) mod p, computed digitwise in base p.
/// Negative upper argument follows the reflection C(m, n) = (-1)^n C(n-m-1, n).
/// Total for n >= 0; throws on n < 0 or p not prime.
i64 lucas_binom(i64 m, i64 n, i64 p);

/// Multinomial coefficient (sum parts)! / prod(parts!) mod p, as a product of
/// Lucas binomials over the prefix sums. All parts must be >= 0.
i64 multinomial_mod(std::span<const i64> parts, i64 p);

/// Theorem-level operations require p > 3; call this at their entry points.
void require_odd_characteristic_gt3(i64 p, const std::string& what);

/// A finite field F_q, q = p^n with n <= 3, with multiplication tables built
/// once at construction. Elements are indices in [0, q): the base-p digit
/// vector of the index gives the coefficients of the residue polynomial.
/// For n > 1 the modulus is a fixed Conway-style irreducible polynomial so
/// representations are reproducible across runs and platforms.
class GaloisField {
public:
  static const GaloisField& get(i64 q);  // cached by q
  explicit GaloisField(i64 q);

  i64 p() const { return p_; }
  i64 degree() const { return n_; }
  i64 q() const { return q_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;
  int one() const { return 1; }

  /// Embedding of the prime field: canonical residue -> element index.
  int from_residue(i64 r) const { return static_cast<int>(mod_canon(r, p_)); }

private:
  i64 p_, n_, q_;
  std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace dhs
