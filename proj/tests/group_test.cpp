#include <doctest.h>

#include <algorithm>
#include <random>

#include "utaut/group.hpp"

using namespace utaut;

namespace {

// Full n x n lower-unitriangular matrix oracle: multiply exactly, then read
// back only the band entries. The coset representative has zeros beyond the
// band, so truncation of the full product is the quotient law.
using Mat = std::vector<std::vector<fe>>;

Mat lift(const GroupCtx& ctx, const Elt& a) {
  int n = ctx.n();
  Mat m(n, std::vector<fe>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (std::size_t idx = 0; idx < ctx.positions().size(); ++idx)
    m[ctx.positions()[idx].i - 1][ctx.positions()[idx].j - 1] = a[idx];
  return m;
}

Elt truncate(const GroupCtx& ctx, const Mat& m) {
  Elt a = ctx.identity();
  for (std::size_t idx = 0; idx < ctx.positions().size(); ++idx)
    a[idx] = m[ctx.positions()[idx].i - 1][ctx.positions()[idx].j - 1];
  return a;
}

Mat matmul(const FieldCtx& F, const Mat& x, const Mat& y) {
  int n = static_cast<int>(x.size());
  Mat r(n, std::vector<fe>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      fe s = 0;
      for (int l = 0; l < n; ++l) s = F.add(s, F.mul(x[i][l], y[l][j]));
      r[i][j] = s;
    }
  return r;
}

Elt oracle_mul(const GroupCtx& ctx, const Elt& a, const Elt& b) {
  return truncate(ctx, matmul(ctx.field(), lift(ctx, a), lift(ctx, b)));
}

} // namespace

TEST_CASE("context parameters and orders") {
  CHECK(GroupCtx(FieldCtx(2, 1), 3, 3).order() == 8);
  CHECK(GroupCtx(FieldCtx(2, 2), 3, 3).order() == 64); // Burnside's order-p^6 group at p=2
  CHECK(GroupCtx(FieldCtx(2, 1), 4, 3).order() == 32); // p^(2n-3)
  CHECK_THROWS_AS(GroupCtx(FieldCtx(2, 1), 2, 2), Error);
  CHECK_THROWS_AS(GroupCtx(FieldCtx(2, 1), 4, 5), Error);
  CHECK_THROWS_AS(GroupCtx(FieldCtx(2, 1), 40, 40), Error); // order cap

  GroupCtx g(FieldCtx(2, 1), 3, 3);
  // positions ordered by distance then column: (2,1),(3,2),(3,1)
  CHECK(g.positions() == std::vector<Pos>{{2, 1}, {3, 2}, {3, 1}});
}

TEST_CASE("transvections") {
  GroupCtx g(FieldCtx(2, 1), 3, 3);
  CHECK(g.is_identity(g.transvection(2, 1, 0)));
  CHECK(g.transvection(3, 1, 1) == Elt{0, 0, 1});

  GroupCtx g43(FieldCtx(2, 1), 4, 3);
  bool truncated = false;
  CHECK(g43.is_identity(g43.transvection(4, 1, 1, &truncated)));
  CHECK(truncated);
}

TEST_CASE("multiplication against the full matrix oracle") {
  for (auto [p, m, n, k] : {std::tuple{2, 1, 3, 3}, {2, 2, 3, 3}, {3, 1, 4, 3},
                            {2, 1, 4, 4}, {2, 1, 5, 3}}) {
    GroupCtx g(FieldCtx(p, m), n, k);
    std::mt19937 rng(12345);
    std::uniform_int_distribution<std::uint64_t> pick(0, g.order() - 1);
    int trials = g.order() <= 64 ? 0 : 200;
    if (g.order() <= 64) {
      for (std::uint64_t a = 0; a < g.order(); ++a)
        for (std::uint64_t b = 0; b < g.order(); ++b)
          CHECK(g.multiply(g.decode(a), g.decode(b)) == oracle_mul(g, g.decode(a), g.decode(b)));
    }
    for (int t = 0; t < trials; ++t) {
      Elt a = g.decode(pick(rng)), b = g.decode(pick(rng));
      CHECK(g.multiply(a, b) == oracle_mul(g, a, b));
    }
  }
}

TEST_CASE("non-commutativity shows up exactly in the long coordinate") {
  GroupCtx g(FieldCtx(2, 1), 3, 3);
  Elt ab = g.multiply(g.transvection(3, 2, 1), g.transvection(2, 1, 1));
  Elt ba = g.multiply(g.transvection(2, 1, 1), g.transvection(3, 2, 1));
  CHECK(ab[0] == ba[0]);
  CHECK(ab[1] == ba[1]);
  CHECK(ab[2] != ba[2]); // coordinate (3,1)
}

TEST_CASE("inverse") {
  GroupCtx g(FieldCtx(2, 2), 3, 3);
  CHECK(g.is_identity(g.inverse(g.identity())));
  GroupCtx g9(FieldCtx(3, 1), 4, 3);
  CHECK(g9.inverse(g9.transvection(2, 1, 2)) == g9.transvection(2, 1, 1));
  for (std::uint64_t a = 0; a < g.order(); ++a)
    CHECK(g.is_identity(g.multiply(g.decode(a), g.inverse(g.decode(a)))));
  for (std::uint64_t a = 0; a < g9.order(); ++a)
    CHECK(g9.is_identity(g9.multiply(g9.decode(a), g9.inverse(g9.decode(a)))));
}

TEST_CASE("commutator relation table") {
  // [t_ik(a), t_mj(b)] = t_ij(ab) if k=m; t_mk(-ab) if i=j; 1 otherwise.
  for (auto [p, m, n, k] : {std::tuple{2, 1, 4, 4}, {3, 1, 4, 4}, {2, 2, 3, 3}, {3, 2, 3, 3}}) {
    GroupCtx g(FieldCtx(p, m), n, k);
    const FieldCtx& F = g.field();
    auto& P = g.positions();
    for (const Pos& x : P)
      for (const Pos& y : P)
        for (fe a = 1; a < F.order(); ++a)
          for (fe b = 1; b < F.order(); ++b) {
            Elt c = g.commutator(g.transvection(x.i, x.j, a), g.transvection(y.i, y.j, b));
            Elt want;
            bool tr = false;
            if (x.j == y.i)
              want = g.transvection(x.i, y.j, F.mul(a, b), &tr);
            else if (x.i == y.j)
              want = g.transvection(y.i, x.j, F.neg(F.mul(a, b)), &tr);
            else
              want = g.identity();
            CHECK(c == want);
          }
  }
}

TEST_CASE("specific commutators from the relation table") {
  GroupCtx g(FieldCtx(2, 1), 3, 3);
  Elt t21 = g.transvection(2, 1, 1), t32 = g.transvection(3, 2, 1);
  CHECK(g.commutator(t21, t21) == g.identity());
  CHECK(g.commutator(t21, t32) == g.transvection(3, 1, 1)); // -1 = 1 at p = 2
  CHECK(g.commutator(t32, t21) == g.transvection(3, 1, 1));
}

TEST_CASE("conjugation formulas") {
  GroupCtx g(FieldCtx(3, 1), 4, 3);
  const FieldCtx& F = g.field();
  // (t_{2,1}(s))^g = t_{2,1}(s) t_{3,1}(-alpha_2 s) with alpha_2 = g's (3,2) entry
  for (fe s = 1; s < 3; ++s)
    for (std::uint64_t gi = 0; gi < g.order(); ++gi) {
      Elt e = g.decode(gi);
      fe alpha2 = e[g.pos_index(3, 2)];
      Elt want = g.multiply(g.transvection(2, 1, s),
                            g.transvection(3, 1, F.neg(F.mul(alpha2, s))));
      CHECK(g.conjugate(g.transvection(2, 1, s), e) == want);
    }
}

TEST_CASE("central elements are fixed under conjugation") {
  GroupCtx g(FieldCtx(2, 2), 3, 3);
  for (std::uint64_t z : g.center())
    for (std::uint64_t gi = 0; gi < g.order(); ++gi)
      CHECK(g.conjugate(g.decode(z), g.decode(gi)) == g.decode(z));
}

TEST_CASE("encode/decode bijection") {
  GroupCtx g(FieldCtx(2, 1), 4, 3);
  CHECK(g.encode(g.identity()) == 0);
  CHECK(g.order() == 32);
  for (std::uint64_t i = 0; i < g.order(); ++i) CHECK(g.encode(g.decode(i)) == i);
  CHECK_THROWS_AS(g.decode(32), Error);
}

TEST_CASE("center matches the band span") {
  // Z = span of positions (j+k-1, j), order q^(n-k+1).
  for (auto [p, m, n, k] : {std::tuple{2, 1, 3, 3}, {2, 1, 4, 3}, {2, 2, 3, 3},
                            {2, 1, 4, 4}, {3, 1, 4, 3}}) {
    GroupCtx g(FieldCtx(p, m), n, k);
    auto z = g.center();
    std::uint64_t expected = 1;
    for (int j = 1; j <= n - k + 1; ++j) expected *= g.field().order();
    CHECK(z.size() == expected);
    // every central element is supported on distance k-1 only
    for (std::uint64_t zi : z) {
      Elt e = g.decode(zi);
      for (std::size_t idx = 0; idx < g.positions().size(); ++idx)
        if (g.positions()[idx].i - g.positions()[idx].j < k - 1) CHECK(e[idx] == 0);
    }
  }
  GroupCtx ab(FieldCtx(3, 1), 4, 2);
  CHECK(ab.center().size() == ab.order()); // k = 2 is abelian
}

TEST_CASE("lower central series is the band filtration") {
  GroupCtx g(FieldCtx(2, 1), 3, 3);
  auto series = g.lower_central_series();
  REQUIRE(series.size() == 3);
  CHECK(series[0].size() == 8);
  CHECK(series[1] == std::vector<std::uint64_t>{g.encode(g.identity()),
                                                g.encode(g.transvection(3, 1, 1))});
  CHECK(series[2].size() == 1);

  GroupCtx ab(FieldCtx(3, 1), 4, 2);
  CHECK(ab.lower_central_series().size() == 2); // abelian

  for (auto [p, m, n, k] : {std::tuple{2, 2, 3, 3}, {2, 1, 5, 3}, {2, 1, 4, 4}}) {
    GroupCtx gg(FieldCtx(p, m), n, k);
    auto s = gg.lower_central_series();
    CHECK(static_cast<int>(s.size()) == k); // class k-1
    for (int depth = 0; depth < static_cast<int>(s.size()); ++depth) {
      // gamma_{depth+1} = elements supported on distance >= depth+1
      std::uint64_t expected = 1;
      for (const Pos& pos : gg.positions())
        if (pos.i - pos.j >= depth + 1) expected *= gg.field().order();
      CHECK(s[depth].size() == expected);
    }
  }
}

TEST_CASE("standard generators generate the group") {
  for (auto [p, m, n, k] : {std::tuple{2, 2, 3, 3}, {3, 1, 4, 3}, {2, 1, 4, 4}}) {
    GroupCtx g(FieldCtx(p, m), n, k);
    std::vector<std::uint64_t> gens;
    for (int i = 0; i < g.num_generators(); ++i) gens.push_back(g.encode(g.generator(i)));
    CHECK(g.subgroup_closure(gens).size() == g.order());
  }
}

TEST_CASE("normal-form reconstruction from ordered transvections") {
  GroupCtx g(FieldCtx(2, 2), 3, 3);
  for (std::uint64_t i = 0; i < g.order(); ++i) {
    Elt e = g.decode(i);
    Elt prod = g.identity();
    for (std::size_t idx = 0; idx < g.positions().size(); ++idx)
      prod = g.multiply(prod, g.transvection(g.positions()[idx].i, g.positions()[idx].j, e[idx]));
    CHECK(prod == e);
  }
}

TEST_CASE("coordinate projection realizes the quotient onto Gamma_{n,k-1}") {
  GroupCtx g(FieldCtx(2, 1), 4, 4);
  GroupCtx h(FieldCtx(2, 1), 4, 3);
  auto project = [&](const Elt& e) {
    Elt r = h.identity();
    for (std::size_t idx = 0; idx < h.positions().size(); ++idx)
      r[idx] = e[g.pos_index(h.positions()[idx].i, h.positions()[idx].j)];
    return r;
  };
  // surjective homomorphism
  std::vector<bool> hit(h.order(), false);
  for (std::uint64_t a = 0; a < g.order(); ++a) {
    hit[h.encode(project(g.decode(a)))] = true;
    for (std::uint64_t b = 0; b < g.order(); ++b)
      CHECK(project(g.multiply(g.decode(a), g.decode(b))) ==
            h.multiply(project(g.decode(a)), project(g.decode(b))));
  }
  CHECK(std::all_of(hit.begin(), hit.end(), [](bool x) { return x; }));
  // kernel = computed gamma_{k-1}
  auto series = g.lower_central_series();
  std::vector<std::uint64_t> kernel;
  for (std::uint64_t a = 0; a < g.order(); ++a)
    if (h.is_identity(project(g.decode(a)))) kernel.push_back(a);
  CHECK(kernel == series[2]); // gamma_3
}

TEST_CASE("associativity, sampled and exhaustive") {
  GroupCtx small(FieldCtx(2, 1), 4, 3); // order 32: exhaustive
  for (std::uint64_t a = 0; a < small.order(); ++a)
    for (std::uint64_t b = 0; b < small.order(); ++b)
      for (std::uint64_t c = 0; c < small.order(); ++c)
        CHECK(small.multiply(small.multiply(small.decode(a), small.decode(b)), small.decode(c)) ==
              small.multiply(small.decode(a), small.multiply(small.decode(b), small.decode(c))));

  GroupCtx big(FieldCtx(2, 2), 4, 3); // order 1024: sampled
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(0, big.order() - 1);
  for (int t = 0; t < 2000; ++t) {
    Elt a = big.decode(pick(rng)), b = big.decode(pick(rng)), c = big.decode(pick(rng));
    CHECK(big.multiply(big.multiply(a, b), c) == big.multiply(a, big.multiply(b, c)));
  }
}

TEST_CASE("dense caches agree with element ops") {
  GroupCtx g(FieldCtx(2, 2), 3, 3);
  DenseCtx dense(g);
  for (std::uint32_t a = 0; a < dense.size(); ++a) {
    CHECK(dense.elem(a) == g.decode(a));
    CHECK(dense.inv(a) == g.encode(g.inverse(g.decode(a))));
    for (int gi = 0; gi < g.num_generators(); ++gi) {
      CHECK(dense.rmul_gen(a, gi) == g.encode(g.multiply(g.decode(a), g.generator(gi))));
      CHECK(dense.conj_gen(a, gi, false) ==
            g.encode(g.conjugate(g.decode(a), g.generator(gi))));
      CHECK(dense.conj_gen(a, gi, true) ==
            g.encode(g.conjugate(g.decode(a), g.inverse(g.generator(gi)))));
    }
  }
}
