#include "utaut/morphism.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_set>

namespace utaut {

bool Automorphism::is_identity() const {
  for (std::uint32_t i = 0; i < table.size(); ++i)
    if (table[i] != i) return false;
  return true;
}

ExtendResult extend_genmap(const DenseCtx& dense, const GenMap& gm) {
  const GroupCtx& ctx = dense.group();
  const int ng = ctx.num_generators();
  if (static_cast<int>(gm.images.size()) != ng)
    throw Error(Err::BadParams, "generator map has wrong size");
  std::vector<std::uint32_t> img_idx(ng);
  for (int g = 0; g < ng; ++g)
    img_idx[g] = static_cast<std::uint32_t>(ctx.encode(gm.images[g]));
  return extend_genmap(dense, img_idx);
}

ExtendResult extend_genmap(const DenseCtx& dense, const std::vector<std::uint32_t>& img_idx) {
  const std::uint32_t order = dense.size();
  const int ng = dense.group().num_generators();
  if (static_cast<int>(img_idx.size()) != ng)
    throw Error(Err::BadParams, "generator map has wrong size");

  constexpr std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> table(order, kUnset);
  table[0] = 0;
  std::vector<std::uint32_t> bfs_order;
  bfs_order.reserve(order);
  bfs_order.push_back(0);
  for (std::size_t head = 0; head < bfs_order.size(); ++head) {
    std::uint32_t x = bfs_order[head];
    for (int g = 0; g < ng; ++g) {
      std::uint32_t y = dense.rmul_gen(x, g);
      std::uint32_t phi_y = dense.mul(table[x], img_idx[g]);
      if (table[y] == kUnset) {
        table[y] = phi_y;
        bfs_order.push_back(y);
      } else if (table[y] != phi_y) {
        return {ExtendStatus::NotHomomorphism, std::nullopt};
      }
    }
  }
  // The standard generators generate the whole group.
  if (bfs_order.size() != order)
    throw Error(Err::BadParams, "internal: generators failed to generate the group");

  std::vector<bool> seen(order, false);
  for (std::uint32_t v : table) {
    if (seen[v]) return {ExtendStatus::NotBijective, std::nullopt};
    seen[v] = true;
  }
  return {ExtendStatus::Ok, Automorphism{std::move(table)}};
}

Automorphism inner_automorphism(const DenseCtx& dense, const Elt& g) {
  const GroupCtx& ctx = dense.group();
  std::uint32_t gi = static_cast<std::uint32_t>(ctx.encode(g));
  Automorphism a;
  a.table.resize(dense.size());
  for (std::uint32_t x = 0; x < dense.size(); ++x) a.table[x] = dense.conj(x, gi);
  return a;
}

std::vector<Automorphism> inner_set(const DenseCtx& dense) {
  std::set<std::vector<std::uint32_t>> tables;
  for (std::uint32_t g = 0; g < dense.size(); ++g) {
    std::vector<std::uint32_t> t(dense.size());
    for (std::uint32_t x = 0; x < dense.size(); ++x) t[x] = dense.conj(x, g);
    tables.insert(std::move(t));
  }
  std::vector<Automorphism> out;
  out.reserve(tables.size());
  for (auto& t : tables) out.push_back(Automorphism{t});
  return out;
}

GenMap genmap_of(const DenseCtx& dense, const Automorphism& a) {
  const GroupCtx& ctx = dense.group();
  GenMap gm;
  for (int g = 0; g < ctx.num_generators(); ++g)
    gm.images.push_back(ctx.decode(a.table[dense.gen_index(g)]));
  return gm;
}

bool is_class_preserving(const Automorphism& a, const ClassTable& table) {
  for (std::uint32_t x = 0; x < a.table.size(); ++x)
    if (table.class_id[a.table[x]] != table.class_id[x]) return false;
  return true;
}

bool is_central(const DenseCtx& dense, const Automorphism& a) {
  const GroupCtx& ctx = dense.group();
  std::vector<bool> central(dense.size(), false);
  for (std::uint64_t z : ctx.center()) central[z] = true;
  for (std::uint32_t x = 0; x < dense.size(); ++x) {
    // phi(x) * x^-1 must lie in the center.
    if (!central[dense.mul(a.table[x], dense.inv(x))]) return false;
  }
  return true;
}

bool is_normal_automorphism(const DenseCtx& dense, const Automorphism& a,
                            const ClassTable& table) {
  const GroupCtx& ctx = dense.group();
  // The normal closure of x depends only on its class; check once per class.
  for (std::size_t c = 0; c < table.class_count(); ++c) {
    std::vector<std::uint64_t> members;
    for (std::uint32_t x = 0; x < dense.size(); ++x)
      if (table.class_id[x] == static_cast<std::int32_t>(c)) members.push_back(x);
    std::vector<std::uint64_t> closure_set = ctx.subgroup_closure(members);
    std::vector<bool> in(dense.size(), false);
    for (std::uint64_t e : closure_set) in[e] = true;
    for (std::uint64_t e : closure_set)
      if (!in[a.table[static_cast<std::uint32_t>(e)]]) return false;
  }
  return true;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  if (a.table.size() != b.table.size())
    throw Error(Err::ContextMismatch, "composing automorphisms of different groups");
  Automorphism c;
  c.table.resize(a.table.size());
  for (std::uint32_t x = 0; x < a.table.size(); ++x) c.table[x] = b.table[a.table[x]];
  return c;
}

Automorphism invert(const Automorphism& a) {
  Automorphism c;
  c.table.resize(a.table.size());
  for (std::uint32_t x = 0; x < a.table.size(); ++x) c.table[a.table[x]] = x;
  return c;
}

std::vector<Automorphism> closure(const std::vector<Automorphism>& gens, std::size_t cap) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Automorphism> members;
  std::queue<std::size_t> work;
  auto push = [&](Automorphism a) {
    if (seen.insert(a.table).second) {
      members.push_back(std::move(a));
      if (members.size() > cap)
        throw Error(Err::ClosureCapExceeded, "closure exceeds the configured cap");
      work.push(members.size() - 1);
    }
  };
  std::size_t n = gens.empty() ? 0 : gens[0].table.size();
  Automorphism id;
  id.table.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) id.table[i] = i;
  if (n) push(id);
  for (const auto& g : gens) push(g);
  while (!work.empty()) {
    std::size_t i = work.front();
    work.pop();
    // Finite set: closing under products with the generators suffices.
    for (const auto& g : gens) {
      push(compose(members[i], g));
      push(compose(g, members[i]));
    }
  }
  std::vector<Automorphism> out(members);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace utaut
