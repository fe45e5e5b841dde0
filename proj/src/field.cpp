#include "utaut/field.hpp"

#include <algorithm>

namespace utaut {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<std::int64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int degree(const std::vector<int>& a) {
  for (int d = static_cast<int>(a.size()) - 1; d >= 0; --d)
    if (a[d] != 0) return d;
  return -1; // zero polynomial
}

} // namespace

namespace fieldpoly {

std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
  int db = degree(b);
  int lead_inv = 1;
  // b is monic everywhere we call this, but handle a general leading coefficient.
  for (int x = 1; x < p; ++x)
    if (b[db] * x % p == 1) { lead_inv = x; break; }
  for (int da = degree(a); da >= db; da = degree(a)) {
    int f = a[da] * lead_inv % p;
    for (int i = 0; i <= db; ++i) {
      a[da - db + i] = ((a[da - db + i] - f * b[i]) % p + p) % p;
    }
  }
  return a;
}

bool is_irreducible(const std::vector<int>& f, int p) {
  int df = degree(f);
  if (df < 1) return false;
  if (df == 1) return true;
  // Trial division by every monic polynomial of degree 1..df/2.
  for (int d = 1; 2 * d <= df; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t c = 0; c < count; ++c) {
      std::vector<int> g(d + 1, 0);
      std::int64_t v = c;
      for (int i = 0; i < d; ++i) { g[i] = static_cast<int>(v % p); v /= p; }
      g[d] = 1;
      if (degree(poly_mod(f, g, p)) < 0) return false;
    }
  }
  return true;
}

} // namespace fieldpoly

FieldCtx::FieldCtx(int p, int m, std::int64_t order_cap) : p_(p), m_(m) {
  if (!is_prime(p)) throw Error(Err::NotPrime, "p = " + std::to_string(p) + " is not prime");
  if (m < 1) throw Error(Err::BadParams, "extension degree must be positive");
  q_ = 1;
  for (int i = 0; i < m; ++i) {
    q_ *= p;
    if (q_ > order_cap)
      throw Error(Err::DegreeTooLarge, "p^m exceeds the field order cap");
  }
  if (m == 1) {
    modulus_ = {0, 1}; // x
    return;
  }
  // Lexicographically smallest monic irreducible of degree m, comparing
  // coefficient vectors low-degree-first: the constant term is the most
  // significant digit of the enumeration counter.
  std::int64_t count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (std::int64_t c = 0; c < count; ++c) {
    std::vector<int> f(m + 1, 0);
    std::int64_t v = c;
    for (int i = m - 1; i >= 0; --i) { f[i] = static_cast<int>(v % p); v /= p; }
    f[m] = 1;
    if (fieldpoly::is_irreducible(f, p)) {
      modulus_ = f;
      return;
    }
  }
  throw Error(Err::BadParams, "no irreducible polynomial found"); // unreachable
}

void FieldCtx::check(fe a) const {
  if (a < 0 || a >= q_)
    throw Error(Err::ContextMismatch, "field element out of range for this context");
}

fe FieldCtx::add(fe a, fe b) const {
  check(a);
  check(b);
  if (m_ == 1) return (a + b) % p_;
  fe r = 0;
  std::int64_t place = 1;
  for (int i = 0; i < m_; ++i) {
    r += static_cast<fe>(place) * ((a % p_ + b % p_) % p_);
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

fe FieldCtx::neg(fe a) const {
  check(a);
  if (m_ == 1) return (p_ - a) % p_;
  fe r = 0;
  std::int64_t place = 1;
  for (int i = 0; i < m_; ++i) {
    r += static_cast<fe>(place) * ((p_ - a % p_) % p_);
    a /= p_;
    place *= p_;
  }
  return r;
}

fe FieldCtx::sub(fe a, fe b) const { return add(a, neg(b)); }

fe FieldCtx::mul(fe a, fe b) const {
  check(a);
  check(b);
  if (m_ == 1) return static_cast<fe>(static_cast<std::int64_t>(a) * b % p_);
  std::vector<int> ca = coeffs(a), cb = coeffs(b);
  std::vector<int> prod(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i) {
    if (ca[i] == 0) continue;
    for (int j = 0; j < m_; ++j)
      prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  }
  prod = fieldpoly::poly_mod(std::move(prod), modulus_, p_);
  prod.resize(m_, 0);
  return from_coeffs(prod);
}

fe FieldCtx::inv(fe a) const {
  check(a);
  if (a == 0) throw Error(Err::DivisionByZero, "inverse of zero");
  if (m_ == 1) {
    // Extended Euclid on integers.
    int t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      int quot = r / nr;
      int tmp = t - quot * nt;
      t = nt; nt = tmp;
      tmp = r - quot * nr;
      r = nr; nr = tmp;
    }
    return (t % p_ + p_) % p_;
  }
  // Extended Euclid on polynomials: find u with u*a = 1 (mod modulus).
  const int p = p_;
  auto deg = [](const std::vector<int>& v) {
    for (int d = static_cast<int>(v.size()) - 1; d >= 0; --d)
      if (v[d] != 0) return d;
    return -1;
  };
  auto int_inv = [p](int c) {
    for (int x = 1; x < p; ++x)
      if (c * x % p == 1) return x;
    return 0;
  };
  auto divmod = [&](std::vector<int> num, const std::vector<int>& den,
                    std::vector<int>& quot) {
    int dd = deg(den);
    int li = int_inv(den[dd]);
    quot.assign(std::max<size_t>(num.size(), 1), 0);
    for (int dn = deg(num); dn >= dd; dn = deg(num)) {
      int f = num[dn] * li % p;
      quot[dn - dd] = f;
      for (int i = 0; i <= dd; ++i)
        num[dn - dd + i] = ((num[dn - dd + i] - f * den[i]) % p + p) % p;
    }
    return num;
  };
  auto mul_poly = [&](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> r(x.size() + y.size(), 0);
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (size_t j = 0; j < y.size(); ++j)
        r[i + j] = (r[i + j] + x[i] * y[j]) % p;
    }
    return r;
  };
  auto sub_poly = [&](std::vector<int> x, const std::vector<int>& y) {
    if (x.size() < y.size()) x.resize(y.size(), 0);
    for (size_t i = 0; i < y.size(); ++i) x[i] = ((x[i] - y[i]) % p + p) % p;
    return x;
  };

  std::vector<int> r0 = modulus_, r1 = coeffs(a);
  std::vector<int> t0 = {0}, t1 = {1};
  while (deg(r1) > 0) {
    std::vector<int> q;
    std::vector<int> r2 = divmod(r0, r1, q);
    std::vector<int> t2 = sub_poly(t0, mul_poly(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // a is invertible mod an irreducible modulus, so r1 is a nonzero constant.
  int c_inv = int_inv(r1[0]);
  std::vector<int> u = fieldpoly::poly_mod(std::move(t1), modulus_, p);
  u.resize(m_, 0);
  for (int& x : u) x = x * c_inv % p;
  return from_coeffs(u);
}

fe FieldCtx::pow(fe a, std::int64_t e) const {
  check(a);
  if (e < 0) return pow(inv(a), -e);
  fe r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::vector<int> FieldCtx::coeffs(fe a) const {
  check(a);
  std::vector<int> c(m_);
  for (int i = 0; i < m_; ++i) { c[i] = a % p_; a /= p_; }
  return c;
}

fe FieldCtx::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) != m_)
    throw Error(Err::ContextMismatch, "coefficient vector has wrong length");
  fe r = 0;
  std::int64_t place = 1;
  for (int i = 0; i < m_; ++i) {
    if (c[i] < 0 || c[i] >= p_)
      throw Error(Err::ContextMismatch, "coefficient out of range");
    r += static_cast<fe>(place) * c[i];
    place *= p_;
  }
  return r;
}

} // namespace utaut
