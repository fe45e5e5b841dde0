#ifndef UTAUT_FIELD_HPP
#define UTAUT_FIELD_HPP

#include <cstdint>
#include <vector>

#include "utaut/errors.hpp"

namespace utaut {

/// Encoded element of F_{p^m}: the integer sum c_0 + c_1*p + ... + c_{m-1}*p^{m-1}
/// for the coefficient vector (c_0, ..., c_{m-1}) in powers of theta.
/// 0 encodes the additive identity, 1 the multiplicative identity.
using fe = int;

inline constexpr std::int64_t kDefaultFieldCap = std::int64_t{1} << 16;

/// Exact arithmetic in F_{p^m} = F_p[theta]/(f), with f the lexicographically
/// smallest monic irreducible polynomial of degree m (coefficients compared
/// low-degree-first). For m = 1 the modulus is x and theta is unused.
class FieldCtx {
public:
  FieldCtx(int p, int m, std::int64_t order_cap = kDefaultFieldCap);

  int p() const { return p_; }
  int m() const { return m_; }
  std::int64_t order() const { return q_; }

  /// Monic modulus as coefficient list, low degree first, length m+1.
  const std::vector<int>& modulus() const { return modulus_; }

  fe zero() const { return 0; }
  fe one() const { return 1; }
  /// theta = (0,1,0,...); for m = 1 returns 1 so theta^0 stays well defined.
  fe theta() const { return m_ > 1 ? p_ : 1; }

  fe add(fe a, fe b) const;
  fe sub(fe a, fe b) const;
  fe neg(fe a) const;
  fe mul(fe a, fe b) const;
  fe inv(fe a) const; // extended Euclid on polynomials; throws DivisionByZero
  fe pow(fe a, std::int64_t e) const;

  std::vector<int> coeffs(fe a) const;
  fe from_coeffs(const std::vector<int>& c) const;

  bool operator==(const FieldCtx& o) const { return p_ == o.p_ && m_ == o.m_; }

private:
  void check(fe a) const;

  int p_;
  int m_;
  std::int64_t q_;
  std::vector<int> modulus_;
};

namespace fieldpoly {
// Polynomial helpers over F_p, low-degree-first coefficient vectors.
// Exposed for the irreducibility oracle in tests.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p);
bool is_irreducible(const std::vector<int>& f, int p);
} // namespace fieldpoly

} // namespace utaut

#endif
