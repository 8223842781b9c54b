#include "dhs/fq.hpp"

#include <array>
#include <map>
#include <mutex>

namespace dhs {

bool is_prime(i64 p) {
  if (p < 2) return false;
  for (i64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

i64 pow_mod(i64 a, i64 e, i64 p) {
  a = mod_canon(a, p);
  i64 r = 1 % p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

i64 inv_mod(i64 a, i64 p) {
  a = mod_canon(a, p);
  if (a == 0) throw std::domain_error("inv_mod: zero is not invertible");
  return pow_mod(a, p - 2, p);
}

namespace {

// C(a, b) mod p for base-p digits 0 <= a, b < p.
i64 small_binom_mod(i64 a, i64 b, i64 p) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  i64 num = 1, den = 1;
  for (i64 i = 0; i < b; ++i) {
    num = num * ((a - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  return num * inv_mod(den, p) % p;
}

}  // namespace

i64 lucas_binom(i64 m, i64 n, i64 p) {
  if (n < 0) throw std::invalid_argument("lucas_binom: n must be >= 0");
  if (!is_prime(p)) throw std::invalid_argument("lucas_binom: p must be prime");
  if (m < 0) {
    i64 r = lucas_binom(n - m - 1, n, p);
    return (n % 2 == 0) ? r : mod_canon(-r, p);
  }
  if (n > m) return 0;
  i64 r = 1;
  while (n > 0 || m > 0) {
    i64 md = m % p, nd = n % p;
    if (nd > md) return 0;
    r = r * small_binom_mod(md, nd, p) % p;
    m /= p;
    n /= p;
  }
  return r;
}

i64 multinomial_mod(std::span<const i64> parts, i64 p) {
  i64 total = 0, r = 1 % p;
  for (i64 part : parts) {
    if (part < 0) throw std::invalid_argument("multinomial_mod: parts must be >= 0");
    total += part;
    r = r * lucas_binom(total, part, p) % p;
    if (r == 0) return 0;
  }
  return r;
}

void require_odd_characteristic_gt3(i64 p, const std::string& what) {
  if (!is_prime(p)) throw std::invalid_argument(what + ": p must be prime");
  if (p <= 3)
    throw std::invalid_argument(what + ": requires p > 3 (the p = 2, 3 cases are excluded by hypothesis)");
}

namespace {

// Conway polynomials x^n + c_{n-1} x^{n-1} + ... + c_0 for the small extension
// fields in use; stored as (q, [c_0 .. c_{n-1}]).
struct ConwayEntry {
  i64 q;
  std::array<i64, 3> low;  // c_0, c_1, c_2 (unused tail zero)
  int n;
};

constexpr ConwayEntry kConway[] = {
    {4, {1, 1, 0}, 2},    // x^2 + x + 1 over F_2
    {8, {1, 1, 0}, 3},    // x^3 + x + 1 over F_2
    {9, {2, 2, 0}, 2},    // x^2 + 2x + 2 over F_3
    {16, {1, 1, 0}, 4},   // x^4 + x + 1 over F_2 (degree 4: handled below)
    {25, {2, 4, 0}, 2},   // x^2 + 4x + 2 over F_5
    {27, {1, 2, 0}, 3},   // x^3 + 2x + 1 over F_3
};

std::pair<i64, i64> factor_prime_power(i64 q) {
  for (i64 p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      i64 n = 0, m = q;
      while (m % p == 0) { m /= p; ++n; }
      if (m != 1 || !is_prime(p)) break;
      return {p, n};
    }
  }
  if (is_prime(q)) return {q, 1};
  throw std::invalid_argument("GaloisField: q must be a prime power");
}

std::vector<i64> digits_of(i64 v, i64 p, i64 n) {
  std::vector<i64> d(n);
  for (i64 i = 0; i < n; ++i) { d[i] = v % p; v /= p; }
  return d;
}

i64 pack_digits(const std::vector<i64>& d, i64 p) {
  i64 v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

}  // namespace

GaloisField::GaloisField(i64 q) {
  auto [p, n] = factor_prime_power(q);
  p_ = p;
  n_ = n;
  q_ = q;
  if (q > 512) throw std::invalid_argument("GaloisField: table-backed fields capped at q <= 512");

  std::vector<i64> modulus;  // c_0 .. c_{n-1}
  if (n > 1) {
    bool found = false;
    for (const auto& e : kConway) {
      if (e.q == q) {
        modulus.assign(e.low.begin(), e.low.begin() + std::min<int>(e.n, 3));
        modulus.resize(n, 0);
        if (q == 16) modulus = {1, 1, 0, 0};
        found = true;
        break;
      }
    }
    if (!found)
      throw std::invalid_argument("GaloisField: no modulus table entry for q=" + std::to_string(q));
  }

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, -1);

  for (i64 a = 0; a < q; ++a) {
    auto da = digits_of(a, p, n);
    std::vector<i64> dn(n);
    for (i64 i = 0; i < n; ++i) dn[i] = mod_canon(-da[i], p);
    neg_[a] = static_cast<int>(pack_digits(dn, p));
    for (i64 b = 0; b < q; ++b) {
      auto db = digits_of(b, p, n);
      std::vector<i64> ds(n);
      for (i64 i = 0; i < n; ++i) ds[i] = (da[i] + db[i]) % p;
      add_[a * q + b] = static_cast<int>(pack_digits(ds, p));

      // product of residue polynomials reduced by the modulus
      std::vector<i64> prod(2 * n - 1, 0);
      for (i64 i = 0; i < n; ++i)
        for (i64 j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (i64 k = 2 * n - 2; k >= n; --k) {
        i64 c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (i64 i = 0; i < n; ++i)
          prod[k - n + i] = mod_canon(prod[k - n + i] - c * modulus[i], p);
      }
      prod.resize(n);
      mul_[a * q + b] = static_cast<int>(pack_digits(prod, p));
    }
  }
  for (i64 a = 1; a < q; ++a)
    for (i64 b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<int>(b);
}

int GaloisField::inv(int a) const {
  if (a == 0) throw std::domain_error("GaloisField::inv: zero is not invertible");
  return inv_[a];
}

const GaloisField& GaloisField::get(i64 q) {
  static std::map<i64, GaloisField> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, GaloisField(q)).first;
  return it->second;
}

}  // namespace dhs
