#include "ot/bound.hpp"

#include <cmath>

#include "ot/error.hpp"

namespace ot {

std::string BoundValue::render() const {
  switch (kind) {
    case Kind::Exact:
      return value.get_str();
    case Kind::PowerOfTwo:
      return "2^" + exponent.get_str();
    case Kind::Tower:
      return "twr_" + std::to_string(height) + "(O(" +
             std::to_string(target) + "))";
  }
  return "";
}

BoundValue guarantee_threshold(unsigned long d, unsigned long n,
                               unsigned long bit_cap) {
  require(d >= 1, ErrorCode::InvalidInput, "dimension must be positive");
  require(n >= d + 1, ErrorCode::InvalidInput,
          "target must exceed the dimension");

  if (d == 1) {
    BoundValue b;
    b.kind = BoundValue::Kind::Exact;
    b.value = Integer(n - 1) * (n - 1) + 1;
    return b;
  }

  BoundValue m = guarantee_threshold(d - 1, n - 1, bit_cap);
  BoundValue tower;
  tower.kind = BoundValue::Kind::Tower;
  tower.height = static_cast<unsigned>(d);
  tower.target = n;

  const Integer four_d2 = Integer(4) * d * d;

  if (m.kind == BoundValue::Kind::Exact) {
    const Integer& mv = m.value;  // >= 2 here
    // E = ceil(4 d^2 M log2 M) = bit length of M^(4 d^2 M) unless M is a
    // power of two, where the product is already an integer.
    if (mpz_popcount(mv.get_mpz_t()) == 1) {
      Integer e(mpz_sizeinbase(mv.get_mpz_t(), 2) - 1);
      Integer big_e = four_d2 * mv * e;
      if (big_e <= Integer(bit_cap)) {
        BoundValue b;
        b.kind = BoundValue::Kind::PowerOfTwo;
        b.exponent = big_e;
        return b;
      }
      return tower;
    }
    Integer k = four_d2 * mv;
    double est_bits = mpz_get_d(k.get_mpz_t()) *
                      std::log2(mpz_get_d(mv.get_mpz_t()));
    if (!k.fits_ulong_p() || est_bits > 8.0 * static_cast<double>(bit_cap))
      return tower;
    Integer pow;
    mpz_pow_ui(pow.get_mpz_t(), mv.get_mpz_t(), k.get_ui());
    Integer e(mpz_sizeinbase(pow.get_mpz_t(), 2));
    if (e > Integer(bit_cap)) return tower;
    BoundValue b;
    b.kind = BoundValue::Kind::PowerOfTwo;
    b.exponent = e;
    return b;
  }

  if (m.kind == BoundValue::Kind::PowerOfTwo) {
    // M = 2^e, so 4 d^2 M log2 M = 4 d^2 e 2^e exactly.
    const Integer& e = m.exponent;
    if (e <= Integer(64)) {
      Integer two_e;
      mpz_ui_pow_ui(two_e.get_mpz_t(), 2, e.get_ui());
      Integer big_e = four_d2 * e * two_e;
      if (big_e <= Integer(bit_cap)) {
        BoundValue b;
        b.kind = BoundValue::Kind::PowerOfTwo;
        b.exponent = big_e;
        return b;
      }
    }
    return tower;
  }

  return tower;
}

namespace {

// floor(log2 x) for x >= 1
Integer floor_log2(const Integer& x) {
  return Integer(mpz_sizeinbase(x.get_mpz_t(), 2) - 1);
}

}  // namespace

std::optional<int> compare(const BoundValue& a, const BoundValue& b) {
  using K = BoundValue::Kind;
  if (a.kind == K::Exact && b.kind == K::Exact)
    return cmp(a.value, b.value);
  if (a.kind == K::PowerOfTwo && b.kind == K::PowerOfTwo)
    return cmp(a.exponent, b.exponent);
  if (a.kind == K::Exact && b.kind == K::PowerOfTwo) {
    // a vs 2^E: compare floor(log2 a) against E, with the power-of-two
    // boundary handled exactly.
    Integer fl = floor_log2(a.value);
    if (fl < b.exponent) return -1;
    if (fl > b.exponent) return 1;
    return mpz_popcount(a.value.get_mpz_t()) == 1 ? 0 : 1;
  }
  if (a.kind == K::PowerOfTwo && b.kind == K::Exact) {
    auto r = compare(b, a);
    if (!r) return std::nullopt;
    return -*r;
  }
  if (a.kind == K::Tower && b.kind == K::Tower) {
    if (a.height != b.height) return a.height < b.height ? -1 : 1;
    if (a.target != b.target) return a.target < b.target ? -1 : 1;
    return 0;
  }
  // A tower form only arises past the caps, so it dominates any value the
  // other representations can hold.
  if (a.kind == K::Tower) return 1;
  if (b.kind == K::Tower) return -1;
  return std::nullopt;
}

}  // namespace ot
