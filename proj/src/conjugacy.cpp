#include "utaut/conjugacy.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace utaut {

ClassTable build_class_table(const DenseCtx& dense) {
  const std::uint32_t order = dense.size();
  const int ng = dense.group().num_generators();
  ClassTable t;
  t.class_id.assign(order, -1);
  t.witness.assign(order, {0, 0});
  for (std::uint32_t seed = 0; seed < order; ++seed) {
    if (t.class_id[seed] >= 0) continue;
    std::int32_t id = static_cast<std::int32_t>(t.representatives.size());
    t.representatives.push_back(seed);
    t.class_id[seed] = id;
    t.witness[seed] = {seed, ClassTable::Witness::kRoot};
    std::uint64_t size = 1;
    std::queue<std::uint32_t> work;
    work.push(seed);
    while (!work.empty()) {
      std::uint32_t x = work.front();
      work.pop();
      for (int g = 0; g < ng; ++g) {
        for (int s = 0; s < 2; ++s) {
          std::uint32_t y = dense.conj_gen(x, g, s == 1);
          if (t.class_id[y] >= 0) continue;
          t.class_id[y] = id;
          t.witness[y] = {x, static_cast<std::int16_t>(s == 0 ? g + 1 : -(g + 1))};
          ++size;
          work.push(y);
        }
      }
    }
    t.class_sizes.push_back(size);
  }
  return t;
}

namespace {

// Product of witness generators along the path seed -> x, so that
// seed^(result) = x.
Elt path_conjugator(const DenseCtx& dense, const ClassTable& table, std::uint32_t x) {
  const GroupCtx& ctx = dense.group();
  std::vector<std::int16_t> gens;
  std::uint32_t cur = x;
  while (table.witness[cur].gen != ClassTable::Witness::kRoot) {
    gens.push_back(table.witness[cur].gen);
    cur = table.witness[cur].parent;
  }
  Elt w = ctx.identity();
  // Path runs root -> x, so apply outermost (earliest) generators first.
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    int g = std::abs(*it) - 1;
    Elt ge = ctx.generator(g);
    if (*it < 0) ge = ctx.inverse(ge);
    w = ctx.multiply(w, ge);
  }
  return w;
}

} // namespace

std::optional<Elt> find_conjugator(const DenseCtx& dense, const ClassTable& table,
                                   const Elt& x, const Elt& y) {
  const GroupCtx& ctx = dense.group();
  std::uint32_t xi = static_cast<std::uint32_t>(ctx.encode(x));
  std::uint32_t yi = static_cast<std::uint32_t>(ctx.encode(y));
  if (table.class_id[xi] != table.class_id[yi]) return std::nullopt;
  Elt wx = path_conjugator(dense, table, xi);
  Elt wy = path_conjugator(dense, table, yi);
  Elt g = ctx.multiply(ctx.inverse(wx), wy);
  // seed^wx = x and seed^wy = y, hence x^(wx^-1 wy) = y. Verified regardless.
  if (ctx.conjugate(x, g) != y)
    throw Error(Err::NotConjugate, "internal: witness reconstruction failed");
  return g;
}

bool is_camina(const DenseCtx& dense, const ClassTable& table, bool* degenerate) {
  const GroupCtx& ctx = dense.group();
  auto series = ctx.lower_central_series();
  const std::vector<std::uint64_t>& gamma2 = series.size() > 1 ? series[1] : series[0];
  if (degenerate) *degenerate = (gamma2.size() == 1);
  if (gamma2.size() == 1) return true;
  std::vector<bool> in_gamma2(dense.size(), false);
  for (std::uint64_t g : gamma2) in_gamma2[g] = true;
  for (std::uint32_t x = 0; x < dense.size(); ++x) {
    if (in_gamma2[x]) continue;
    // class(x) must equal the coset x * gamma_2 as a set.
    if (table.class_sizes[table.class_id[x]] != gamma2.size()) return false;
    std::int32_t id = table.class_id[x];
    for (std::uint64_t z : gamma2) {
      std::uint32_t xz = dense.mul(x, static_cast<std::uint32_t>(z));
      if (table.class_id[xz] != id) return false;
    }
  }
  return true;
}

} // namespace utaut
