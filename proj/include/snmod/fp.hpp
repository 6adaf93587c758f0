#ifndef SNMOD_FP_HPP
#define SNMOD_FP_HPP

#include <cstdint>

#include "snmod/errors.hpp"

namespace snmod {

// Scalar arithmetic in GF(p) for prime p <= 2^31. Values are kept reduced.
namespace fp {

inline bool is_prime(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void check_prime(uint32_t p) {
  if (!is_prime(p)) throw domain_error("modulus " + std::to_string(p) + " is not prime");
}

inline uint32_t add(uint32_t a, uint32_t b, uint32_t p) {
  uint64_t s = uint64_t(a) + b;
  return s >= p ? uint32_t(s - p) : uint32_t(s);
}

inline uint32_t sub(uint32_t a, uint32_t b, uint32_t p) {
  return a >= b ? a - b : uint32_t(uint64_t(a) + p - b);
}

inline uint32_t neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

inline uint32_t mul(uint32_t a, uint32_t b, uint32_t p) {
  return uint32_t((uint64_t(a) * b) % p);
}

inline uint32_t pow(uint32_t a, uint64_t e, uint32_t p) {
  uint64_t r = 1, base = a % p;
  while (e) {
    if (e & 1) r = (r * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return uint32_t(r);
}

// p prime, a != 0 mod p
inline uint32_t inv(uint32_t a, uint32_t p) {
  if (a % p == 0) throw domain_error("division by zero in GF(p)");
  return pow(a % p, p - 2, p);
}

inline uint32_t reduce_int(long long v, uint32_t p) {
  long long r = v % (long long)p;
  if (r < 0) r += p;
  return uint32_t(r);
}

} // namespace fp

// An element of GF(p) carrying its modulus; used at API boundaries where a
// bare residue would be ambiguous.
struct Fp {
  uint32_t value = 0;
  uint32_t p = 2;

  Fp() = default;
  Fp(uint32_t v, uint32_t modulus) : value(v % modulus), p(modulus) {}

  Fp operator+(Fp o) const { return Fp(fp::add(value, o.value, p), p); }
  Fp operator-(Fp o) const { return Fp(fp::sub(value, o.value, p), p); }
  Fp operator*(Fp o) const { return Fp(fp::mul(value, o.value, p), p); }
  Fp inverse() const { return Fp(fp::inv(value, p), p); }
  bool operator==(const Fp& o) const { return value == o.value && p == o.p; }
};

// Deterministic pseudo-random stream (splitmix64). All randomized searches in
// the library draw from this so that runs with equal seeds are reproducible.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }

 private:
  uint64_t state_;
};

} // namespace snmod

#endif
