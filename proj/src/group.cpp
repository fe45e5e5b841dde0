#include "utaut/group.hpp"

#include <algorithm>
#include <queue>

namespace utaut {

GroupCtx::GroupCtx(FieldCtx field, int n, int k, std::uint64_t order_cap)
    : field_(std::move(field)), n_(n), k_(k) {
  if (n < 3) throw Error(Err::BadParams, "n must be at least 3");
  if (k < 2 || k > n) throw Error(Err::BadParams, "k must satisfy 2 <= k <= n");
  for (int d = 1; d <= k_ - 1; ++d)
    for (int j = 1; j + d <= n_; ++j)
      positions_.push_back({j + d, j});
  const std::uint64_t q = static_cast<std::uint64_t>(field_.order());
  order_ = 1;
  for (size_t i = 0; i < positions_.size(); ++i) {
    if (order_ > order_cap / q)
      throw Error(Err::OrderCapExceeded, "group order exceeds the configured cap");
    order_ *= q;
  }
  pos_lut_.assign(static_cast<size_t>(n_) * n_, -1);
  for (size_t idx = 0; idx < positions_.size(); ++idx)
    pos_lut_[(positions_[idx].i - 1) * n_ + (positions_[idx].j - 1)] = static_cast<int>(idx);
}

int GroupCtx::pos_index(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_ || j >= i) return -1;
  return pos_lut_[(i - 1) * n_ + (j - 1)];
}

void GroupCtx::check(const Elt& a) const {
  if (a.size() != positions_.size())
    throw Error(Err::ContextMismatch, "element does not belong to this group context");
}

bool GroupCtx::is_identity(const Elt& a) const {
  check(a);
  return std::all_of(a.begin(), a.end(), [](fe x) { return x == 0; });
}

Elt GroupCtx::transvection(int i, int j, fe alpha, bool* truncated) const {
  if (truncated) *truncated = false;
  if (i < 1 || i > n_ || j < 1 || j >= i)
    throw Error(Err::BadParams, "invalid transvection position");
  Elt e = identity();
  int idx = pos_index(i, j);
  if (idx < 0) {
    // Distance >= k: the transvection lies in gamma_k, trivial in the quotient.
    if (truncated) *truncated = true;
    return e;
  }
  field_.coeffs(alpha); // range check
  e[idx] = alpha;
  return e;
}

Elt GroupCtx::multiply(const Elt& a, const Elt& b) const {
  check(a);
  check(b);
  const FieldCtx& F = field_;
  Elt c(positions_.size());
  for (size_t idx = 0; idx < positions_.size(); ++idx) {
    int i = positions_[idx].i, j = positions_[idx].j;
    fe s = F.add(a[idx], b[idx]);
    for (int l = j + 1; l < i; ++l) {
      int il = pos_index(i, l), lj = pos_index(l, j);
      if (il < 0 || lj < 0) continue; // entry is zero in the normal form
      if (a[il] == 0 || b[lj] == 0) continue;
      s = F.add(s, F.mul(a[il], b[lj]));
    }
    c[idx] = s;
  }
  return c;
}

Elt GroupCtx::inverse(const Elt& a) const {
  check(a);
  const FieldCtx& F = field_;
  // a = I + N; a^-1 = I + sum_{s>=1} (-N)^s, truncated to the band.
  Elt minus_n(a.size());
  for (size_t idx = 0; idx < a.size(); ++idx) minus_n[idx] = F.neg(a[idx]);
  // Pure nilpotent band product (no identity part).
  auto nilprod = [&](const Elt& x, const Elt& y) {
    Elt r(x.size(), 0);
    for (size_t idx = 0; idx < positions_.size(); ++idx) {
      int i = positions_[idx].i, j = positions_[idx].j;
      fe s = 0;
      for (int l = j + 1; l < i; ++l) {
        int il = pos_index(i, l), lj = pos_index(l, j);
        if (il < 0 || lj < 0) continue;
        if (x[il] == 0 || y[lj] == 0) continue;
        s = F.add(s, F.mul(x[il], y[lj]));
      }
      r[idx] = s;
    }
    return r;
  };
  Elt total = minus_n;
  Elt power = minus_n;
  for (int s = 2; s <= k_ - 1; ++s) {
    power = nilprod(power, minus_n);
    for (size_t idx = 0; idx < total.size(); ++idx)
      total[idx] = F.add(total[idx], power[idx]);
  }
  return total;
}

Elt GroupCtx::commutator(const Elt& a, const Elt& b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

Elt GroupCtx::conjugate(const Elt& x, const Elt& g) const {
  return multiply(multiply(inverse(g), x), g);
}

std::uint64_t GroupCtx::encode(const Elt& a) const {
  check(a);
  const std::uint64_t q = static_cast<std::uint64_t>(field_.order());
  std::uint64_t v = 0;
  for (size_t idx = a.size(); idx-- > 0;) v = v * q + static_cast<std::uint64_t>(a[idx]);
  return v;
}

Elt GroupCtx::decode(std::uint64_t index) const {
  if (index >= order_) throw Error(Err::IndexOutOfRange, "element index out of range");
  const std::uint64_t q = static_cast<std::uint64_t>(field_.order());
  Elt a(positions_.size());
  for (size_t idx = 0; idx < a.size(); ++idx) {
    a[idx] = static_cast<fe>(index % q);
    index /= q;
  }
  return a;
}

Elt GroupCtx::generator(int idx) const {
  const int m = field_.m();
  if (idx < 0 || idx >= num_generators())
    throw Error(Err::IndexOutOfRange, "generator index out of range");
  int i = idx / m + 1;
  int l = idx % m;
  return transvection(i + 1, i, field_.pow(field_.theta(), l));
}

std::vector<std::uint64_t> GroupCtx::center() const {
  std::vector<Elt> gens;
  for (int g = 0; g < num_generators(); ++g) gens.push_back(generator(g));
  std::vector<std::uint64_t> z;
  for (std::uint64_t idx = 0; idx < order_; ++idx) {
    Elt x = decode(idx);
    bool central = true;
    for (const Elt& g : gens) {
      if (multiply(x, g) != multiply(g, x)) { central = false; break; }
    }
    if (central) z.push_back(idx);
  }
  return z;
}

std::vector<std::uint64_t> GroupCtx::subgroup_closure(const std::vector<std::uint64_t>& seed) const {
  std::vector<bool> in(order_, false);
  std::vector<std::uint64_t> members = {0};
  in[0] = true;
  std::queue<std::uint64_t> work;
  for (std::uint64_t s : seed) {
    if (!in[s]) { in[s] = true; members.push_back(s); work.push(s); }
  }
  std::vector<Elt> seed_elts;
  for (std::uint64_t s : seed) seed_elts.push_back(decode(s));
  while (!work.empty()) {
    Elt x = decode(work.front());
    work.pop();
    // Products with all seeds and inverses suffice to close the subgroup.
    Elt xi = inverse(x);
    std::uint64_t xi_idx = encode(xi);
    if (!in[xi_idx]) { in[xi_idx] = true; members.push_back(xi_idx); work.push(xi_idx); }
    for (const Elt& s : seed_elts) {
      std::uint64_t y = encode(multiply(x, s));
      if (!in[y]) { in[y] = true; members.push_back(y); work.push(y); }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::vector<std::uint64_t>> GroupCtx::lower_central_series() const {
  std::vector<std::vector<std::uint64_t>> series;
  std::vector<std::uint64_t> cur(order_);
  for (std::uint64_t i = 0; i < order_; ++i) cur[i] = i;
  series.push_back(cur);
  while (cur.size() > 1) {
    std::vector<std::uint64_t> comms;
    for (std::uint64_t a : cur) {
      Elt ea = decode(a);
      for (std::uint64_t g = 0; g < order_; ++g) {
        std::uint64_t c = encode(commutator(ea, decode(g)));
        if (c != 0) comms.push_back(c);
      }
    }
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    cur = subgroup_closure(comms);
    series.push_back(cur);
  }
  return series;
}

DenseCtx::DenseCtx(const GroupCtx& ctx) : ctx_(&ctx) {
  const std::uint32_t order = static_cast<std::uint32_t>(ctx.order());
  elems_.reserve(order);
  for (std::uint32_t i = 0; i < order; ++i) elems_.push_back(ctx.decode(i));
  inv_.resize(order);
  for (std::uint32_t i = 0; i < order; ++i)
    inv_[i] = static_cast<std::uint32_t>(ctx.encode(ctx.inverse(elems_[i])));
  const int ng = ctx.num_generators();
  gen_idx_.resize(ng);
  rmul_gen_.resize(ng);
  conj_gen_.resize(ng);
  conj_geninv_.resize(ng);
  for (int g = 0; g < ng; ++g) {
    Elt ge = ctx.generator(g);
    Elt gi = ctx.inverse(ge);
    gen_idx_[g] = static_cast<std::uint32_t>(ctx.encode(ge));
    rmul_gen_[g].resize(order);
    conj_gen_[g].resize(order);
    conj_geninv_[g].resize(order);
    for (std::uint32_t x = 0; x < order; ++x) {
      const Elt& ex = elems_[x];
      rmul_gen_[g][x] = static_cast<std::uint32_t>(ctx.encode(ctx.multiply(ex, ge)));
      conj_gen_[g][x] =
          static_cast<std::uint32_t>(ctx.encode(ctx.multiply(ctx.multiply(gi, ex), ge)));
      conj_geninv_[g][x] =
          static_cast<std::uint32_t>(ctx.encode(ctx.multiply(ctx.multiply(ge, ex), gi)));
    }
  }
}

} // namespace utaut
