#include "utaut/enumerate.hpp"

#include <algorithm>
#include <thread>

namespace utaut {

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > ~std::uint64_t{0} / base)
      throw Error(Err::OrderCapExceeded, "integer power overflow");
    r *= base;
  }
  return r;
}

CandidateSpace::CandidateSpace(const DenseCtx& dense, const ClassTable& table,
                               std::uint64_t cap) {
  const int ng = dense.group().num_generators();
  class_members_.resize(ng);
  for (std::uint32_t x = 0; x < dense.size(); ++x) {
    for (int g = 0; g < ng; ++g)
      if (table.class_id[x] == table.class_id[dense.gen_index(g)])
        class_members_[g].push_back(x);
  }
  count_ = 1;
  for (const auto& cls : class_members_) {
    if (count_ > cap / cls.size())
      throw Error(Err::CandidateCapExceeded, "candidate space exceeds the configured cap");
    count_ *= cls.size();
  }
}

std::vector<std::uint32_t> CandidateSpace::candidate(std::uint64_t index) const {
  std::vector<std::uint32_t> images(class_members_.size());
  // First generator outermost (most significant digit).
  for (std::size_t g = class_members_.size(); g-- > 0;) {
    std::uint64_t radix = class_members_[g].size();
    images[g] = class_members_[g][index % radix];
    index /= radix;
  }
  return images;
}

namespace {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::vector<Automorphism> sorted_unique(std::vector<Automorphism> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

} // namespace

AutcResult enumerate_autc_brute(const DenseCtx& dense, const ClassTable& table,
                                const EnumOptions& opts) {
  CandidateSpace space(dense, table, opts.candidate_cap);
  const std::uint64_t total = space.count();
  const int nthreads = std::min<std::uint64_t>(resolve_threads(opts.threads), total);

  struct Partial {
    std::uint64_t cb = 0;
    std::vector<Automorphism> autc;
  };
  std::vector<Partial> partials(nthreads);
  auto worker = [&](int t) {
    std::uint64_t begin = total * t / nthreads;
    std::uint64_t end = total * (t + 1) / nthreads;
    Partial& out = partials[t];
    for (std::uint64_t c = begin; c < end; ++c) {
      ExtendResult r = extend_genmap(dense, space.candidate(c));
      if (r.status != ExtendStatus::Ok) continue;
      ++out.cb;
      if (is_class_preserving(*r.aut, table)) out.autc.push_back(std::move(*r.aut));
    }
  };
  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  AutcResult res;
  res.method = "brute";
  res.candidate_count = total;
  for (auto& p : partials) {
    res.cb_count += p.cb;
    for (auto& a : p.autc) res.autc.push_back(std::move(a));
  }
  res.autc = sorted_unique(std::move(res.autc));
  res.inn = inner_set(dense);
  return res;
}

Automorphism autc_from_params(const DenseCtx& dense, const ClassTable& table,
                              const AutcParams& params) {
  const GroupCtx& ctx = dense.group();
  const FieldCtx& F = ctx.field();
  const int n = ctx.n(), m = F.m();
  if (ctx.k() != 3) throw Error(Err::BadParams, "parametrization requires k = 3");
  if (static_cast<int>(params.a.size()) != std::max(n - 3, 0) ||
      static_cast<int>(params.b.size()) != m || static_cast<int>(params.c.size()) != m)
    throw Error(Err::BadParams, "parameter vector lengths must be (n-3, m, m)");

  // x_i^(l) for i = 2..n-1 and y_i^(l) for i = 1..n-2:
  //   x_2^(l) = b_l,     x_{i+2}^(l) = a_i * theta^l   (i = 1..n-3)
  //   y_{n-2}^(l) = c_l, y_i^(l)     = a_i * theta^l   (i = 1..n-3)
  auto x_param = [&](int i, int l) -> fe {
    if (i == 2) return params.b[l];
    return F.mul(params.a[i - 3], F.pow(F.theta(), l));
  };
  auto y_param = [&](int i, int l) -> fe {
    if (i == n - 2) return params.c[l];
    return F.mul(params.a[i - 1], F.pow(F.theta(), l));
  };

  GenMap gm;
  for (int i = 1; i <= n - 1; ++i) {
    for (int l = 0; l < m; ++l) {
      Elt img = ctx.transvection(i + 1, i, F.pow(F.theta(), l));
      if (i >= 2) img = ctx.multiply(img, ctx.transvection(i + 1, i - 1, x_param(i, l)));
      if (i <= n - 2) img = ctx.multiply(img, ctx.transvection(i + 2, i, F.neg(y_param(i, l))));
      gm.images.push_back(std::move(img));
    }
  }
  ExtendResult r = extend_genmap(dense, gm);
  if (r.status != ExtendStatus::Ok || !is_class_preserving(*r.aut, table))
    throw Error(Err::ExtensionFailed,
                "parametrized map failed certification (would falsify the k = 3 parametrization)");
  return std::move(*r.aut);
}

std::vector<Automorphism> autc_param_image(const DenseCtx& dense, const ClassTable& table) {
  const GroupCtx& ctx = dense.group();
  const FieldCtx& F = ctx.field();
  const int n = ctx.n(), m = F.m();
  const std::uint64_t q = static_cast<std::uint64_t>(F.order());
  const int nparams = (n - 3) + 2 * m;
  const std::uint64_t total = ipow(q, nparams);
  std::vector<Automorphism> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    AutcParams params;
    std::uint64_t v = idx;
    for (int i = 0; i < n - 3; ++i) { params.a.push_back(static_cast<fe>(v % q)); v /= q; }
    for (int i = 0; i < m; ++i) { params.b.push_back(static_cast<fe>(v % q)); v /= q; }
    for (int i = 0; i < m; ++i) { params.c.push_back(static_cast<fe>(v % q)); v /= q; }
    out.push_back(autc_from_params(dense, table, params));
  }
  return sorted_unique(std::move(out));
}

namespace {

Automorphism certified_extend(const DenseCtx& dense, const ClassTable& table,
                              const GenMap& gm, const char* what) {
  ExtendResult r = extend_genmap(dense, gm);
  if (r.status != ExtendStatus::Ok || !is_class_preserving(*r.aut, table))
    throw Error(Err::ExtensionFailed, std::string(what) + " failed certification");
  return std::move(*r.aut);
}

GenMap identity_genmap(const GroupCtx& ctx) {
  GenMap gm;
  for (int g = 0; g < ctx.num_generators(); ++g) gm.images.push_back(ctx.generator(g));
  return gm;
}

} // namespace

BurnsideSets burnside_generators(const DenseCtx& dense, const ClassTable& table,
                                 std::size_t closure_cap) {
  const GroupCtx& ctx = dense.group();
  const FieldCtx& F = ctx.field();
  const int n = ctx.n(), m = F.m();
  if (ctx.k() != 3) throw Error(Err::BadParams, "construction requires k = 3");

  BurnsideSets out;
  for (int k = 0; k < m; ++k) {
    for (int l = 0; l < m; ++l) {
      fe tkl = F.pow(F.theta(), k + l);
      // phi^{k,l}: t_{3,2}(theta^k) -> t_{3,2}(theta^k) t_{3,1}(theta^(k+l))
      GenMap phi = identity_genmap(ctx);
      int gi = 1 * m + k; // generator t_{3,2}(theta^k)
      phi.images[gi] = ctx.multiply(phi.images[gi], ctx.transvection(3, 1, tkl));
      out.a1_gens.push_back(certified_extend(dense, table, phi, "phi^{k,l}"));
      // psi^{k,l}: t_{n-1,n-2}(theta^k) -> t_{n-1,n-2}(theta^k) t_{n,n-2}(-theta^(k+l))
      GenMap psi = identity_genmap(ctx);
      gi = (n - 3) * m + k; // generator t_{n-1,n-2}(theta^k)
      psi.images[gi] = ctx.multiply(psi.images[gi], ctx.transvection(n, n - 2, F.neg(tkl)));
      out.a2_gens.push_back(certified_extend(dense, table, psi, "psi^{k,l}"));
    }
  }
  for (int j = 2; j <= n - 2; ++j)
    for (int l = 0; l < m; ++l)
      out.finn_gens.push_back(
          inner_automorphism(dense, ctx.transvection(j + 1, j, F.pow(F.theta(), l))));

  out.a1 = closure(out.a1_gens, closure_cap);
  out.a2 = closure(out.a2_gens, closure_cap);
  out.finn = out.finn_gens.empty() ? std::vector<Automorphism>{}
                                   : closure(out.finn_gens, closure_cap);
  return out;
}

Automorphism construct_thm27(const DenseCtx& dense, const ClassTable& table, fe c,
                             Thm27Certificate* cert) {
  const GroupCtx& ctx = dense.group();
  const FieldCtx& F = ctx.field();
  const int k = ctx.k();
  if (F.m() < 2)
    throw Error(Err::PrimeFieldRejected, "the construction needs a non-prime field (m >= 2)");
  if (k < 3) throw Error(Err::BadParams, "the construction needs k >= 3");
  if (c == 0) throw Error(Err::BadC, "c must be nonzero");

  GenMap gm = identity_genmap(ctx);
  int gi = (k - 2) * F.m(); // generator t_{k,k-1}(theta^0)
  gm.images[gi] = ctx.multiply(gm.images[gi], ctx.transvection(k, 1, c));
  ExtendResult r = extend_genmap(dense, gm);
  if (r.status != ExtendStatus::Ok)
    throw Error(Err::ExtensionFailed, "explicit non-inner map failed to extend");
  Automorphism psi = std::move(*r.aut);

  Thm27Certificate local;
  Thm27Certificate& crt = cert ? *cert : local;
  crt.central = is_central(dense, psi);

  // Class preservation with an explicit conjugator for every element:
  // psi(g) = g t_{k,1}(beta); h = t_{k-1,1}(beta / alpha_{k-1}) when the
  // t_{k,k-1} coordinate alpha_{k-1} is nonzero, h = 1 otherwise.
  const int pos_kk1 = ctx.pos_index(k, k - 1);
  const int pos_k1 = ctx.pos_index(k, 1);
  crt.class_preserving = true;
  for (std::uint32_t g = 0; g < dense.size(); ++g) {
    const Elt& eg = dense.elem(g);
    std::uint32_t pg = psi.table[g];
    fe alpha = eg[pos_kk1];
    if (alpha == 0) {
      if (pg != g) { crt.class_preserving = false; break; }
      ++crt.witnesses_verified;
      continue;
    }
    Elt diff = ctx.multiply(dense.elem(pg), ctx.inverse(eg));
    bool central_shift = true;
    for (std::size_t idx = 0; idx < diff.size(); ++idx)
      if (diff[idx] != 0 && static_cast<int>(idx) != pos_k1) { central_shift = false; break; }
    if (!central_shift) { crt.class_preserving = false; break; }
    fe beta = diff[pos_k1];
    Elt h = ctx.transvection(k - 1, 1, F.mul(beta, F.inv(alpha)));
    if (ctx.encode(ctx.conjugate(eg, h)) != pg) { crt.class_preserving = false; break; }
    ++crt.witnesses_verified;
  }

  // Non-inner: the table differs from conjugation by every group element.
  crt.non_inner = true;
  for (std::uint32_t g = 0; g < dense.size() && crt.non_inner; ++g) {
    bool same = true;
    for (std::uint32_t x = 0; x < dense.size(); ++x) {
      if (psi.table[x] != dense.conj(x, g)) { same = false; break; }
    }
    if (same) crt.non_inner = false;
  }

  if (!crt.ok())
    throw Error(Err::ExtensionFailed, "explicit non-inner map failed certification");
  return psi;
}

Verdict verify_theorem_a(const DenseCtx& dense, const ClassTable& table,
                         const EnumOptions& opts) {
  const GroupCtx& ctx = dense.group();
  if (ctx.field().m() != 1)
    throw Error(Err::BadParams, "prime-field verification requires m = 1");
  AutcResult res = enumerate_autc_brute(dense, table, opts);
  Verdict v;
  v.pass = (res.autc == res.inn);
  v.notes.push_back("autc_order=" + std::to_string(res.autc.size()));
  v.notes.push_back("inn_order=" + std::to_string(res.inn.size()));
  v.notes.push_back(v.pass ? "Aut_c equals Inn" : "Aut_c differs from Inn");
  return v;
}

bool is_elementary_abelian(const std::vector<Automorphism>& set,
                           const std::vector<Automorphism>& gens, int p) {
  for (const auto& a : set) {
    Automorphism power = a;
    for (int i = 1; i < p; ++i) power = compose(power, a);
    if (!power.is_identity()) return false;
    for (const auto& g : gens)
      if (compose(a, g) != compose(g, a)) return false;
  }
  return true;
}

Verdict verify_theorem_b(const DenseCtx& dense, const ClassTable& table,
                         const EnumOptions& opts) {
  const GroupCtx& ctx = dense.group();
  const FieldCtx& F = ctx.field();
  if (ctx.k() != 3) throw Error(Err::BadParams, "verification requires k = 3");
  const int n = ctx.n(), m = F.m(), p = F.p();

  Verdict v;
  v.pass = true;
  auto require = [&v](bool ok, const std::string& note) {
    v.notes.push_back((ok ? "ok: " : "FAIL: ") + note);
    v.pass = v.pass && ok;
  };

  AutcResult brute = enumerate_autc_brute(dense, table, opts);
  std::vector<Automorphism> params = autc_param_image(dense, table);
  BurnsideSets sets = burnside_generators(dense, table, opts.closure_cap);

  std::vector<Automorphism> gen_gens;
  for (auto* src : {&sets.a1_gens, &sets.a2_gens}) gen_gens.insert(gen_gens.end(), src->begin(), src->end());
  // Inn is generated by conjugation by the standard generators.
  for (int g = 0; g < ctx.num_generators(); ++g)
    gen_gens.push_back(inner_automorphism(dense, ctx.generator(g)));
  std::vector<Automorphism> generated = closure(gen_gens, opts.closure_cap);

  const std::uint64_t formula_autc = ipow(p, static_cast<std::uint64_t>(m) * (2 * m + n - 3));
  const std::uint64_t formula_outc = ipow(p, 2 * static_cast<std::uint64_t>(m) * (m - 1));
  const std::uint64_t formula_inn = ipow(p, static_cast<std::uint64_t>(m) * (n - 1));

  require(brute.autc.size() == formula_autc,
          "brute |Aut_c| = " + std::to_string(brute.autc.size()) + " vs formula " +
              std::to_string(formula_autc));
  require(params == brute.autc, "parametrization image equals brute-force set");
  require(generated == brute.autc, "closure(A1 u A2 u Inn) equals brute-force set");
  require(sets.a1.size() == ipow(p, static_cast<std::uint64_t>(m) * m), "|A1| = p^(m^2)");
  require(sets.a2.size() == ipow(p, static_cast<std::uint64_t>(m) * m), "|A2| = p^(m^2)");
  require(brute.inn.size() == formula_inn, "|Inn| = p^(m(n-1))");
  require(brute.outc_order() == formula_outc,
          "|Out_c| = " + std::to_string(brute.outc_order()) + " vs formula " +
              std::to_string(formula_outc));
  require(is_elementary_abelian(brute.autc, gen_gens, p),
          "Aut_c is elementary abelian of exponent p");
  return v;
}

} // namespace utaut
