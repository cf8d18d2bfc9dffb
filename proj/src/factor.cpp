#include "surd/factor.hpp"

#include <algorithm>
#include <numeric>

#include "surd/errors.hpp"

namespace surd {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Deterministic Miller-Rabin witness set for 64-bit inputs.
constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin(u64 n, u64 a) {
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Pollard rho with Floyd cycle detection; n must be an odd composite.
u64 pollard_rho(u64 n) {
  for (u64 c = 1;; ++c) {
    const auto step = [n, c](u64 v) {
      return static_cast<u64>((u128(v) * v + c) % n);
    };
    u64 x = 2, y = step(2), d = 1;
    while (d == 1) {
      d = std::gcd(x > y ? x - y : y - x, n);
      if (d != 1) break;
      x = step(x);
      y = step(step(y));
      if (x == y) {
        d = n;  // cycle closed without a factor; try the next polynomial
        break;
      }
    }
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::vector<u64>& primes) {
  while ((n & 1) == 0) {
    primes.push_back(2);
    n >>= 1;
  }
  // Trial division strips desk-scale inputs entirely; rho handles the
  // occasional large semiprime cofactor.
  for (u64 p = 3; p < (1u << 20) && p * p <= n; p += 2) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  while (n > 1) {
    if (is_prime(n)) {
      primes.push_back(n);
      return;
    }
    u64 d = pollard_rho(n);
    if (!is_prime(d)) {
      std::vector<u64> sub;
      factor_into(d, sub);
      primes.insert(primes.end(), sub.begin(), sub.end());
    } else {
      primes.push_back(d);
    }
    n /= d;
  }
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {u64(2), u64(3), u64(5), u64(7), u64(11), u64(13)}) {
    if (n % p == 0) return n == p;
  }
  for (u64 a : kWitnesses) {
    if (a % n == 0) continue;
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

std::vector<PrimePower> factor(u64 n) {
  if (n == 0) throw DomainError("cannot factor zero");
  std::vector<u64> primes;
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> result;
  for (u64 p : primes) {
    if (!result.empty() && result.back().prime == p) {
      ++result.back().exponent;
    } else {
      result.push_back({p, 1});
    }
  }
  return result;
}

std::vector<PrimePower> factor(const Int& n) {
  if (n <= 0) throw DomainError("cannot factor a non-positive integer");
  if (mpz_sizeinbase(n.backend().data(), 2) > 64) {
    throw ResourceError("integer exceeds 64 bits; refusing to factor");
  }
  return factor(n.convert_to<u64>());
}

}  // namespace surd
