#ifndef UTAUT_ENUMERATE_HPP
#define UTAUT_ENUMERATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "utaut/conjugacy.hpp"
#include "utaut/morphism.hpp"

namespace utaut {

inline constexpr std::uint64_t kDefaultCandidateCap = std::uint64_t{1} << 24;

struct EnumOptions {
  std::uint64_t candidate_cap = kDefaultCandidateCap;
  std::size_t closure_cap = kDefaultClosureCap;
  int threads = 0; // 0 = hardware concurrency
};

/// p^e with overflow guard (orders here always fit in 64 bits at desk scale).
std::uint64_t ipow(std::uint64_t base, std::uint64_t exp);

/// The free parameters of the k = 3 class-preserving parametrization:
/// a_i = x_{i+2}^(0) (i = 1..n-3), b_l = x_2^(l), c_l = y_{n-2}^(l).
struct AutcParams {
  std::vector<fe> a; // length n-3
  std::vector<fe> b; // length m
  std::vector<fe> c; // length m
};

struct AutcResult {
  std::vector<Automorphism> autc; // sorted
  std::vector<Automorphism> inn;  // sorted
  std::uint64_t candidate_count = 0;
  std::uint64_t cb_count = 0; // candidates that extend to automorphisms
  std::string method;

  std::uint64_t outc_order() const { return autc.size() / inn.size(); }
};

/// Cartesian product of each standard generator's conjugacy class, in
/// lexicographic order (first generator outermost), materialized lazily by
/// candidate index. Throws CandidateCapExceeded.
struct CandidateSpace {
  CandidateSpace(const DenseCtx& dense, const ClassTable& table,
                 std::uint64_t cap = kDefaultCandidateCap);
  std::uint64_t count() const { return count_; }
  std::vector<std::uint32_t> candidate(std::uint64_t index) const;

private:
  std::vector<std::vector<std::uint32_t>> class_members_; // per generator, ascending
  std::uint64_t count_;
};

/// Exhaustive Aut_c: every basis-conjugating candidate, extended and filtered
/// through the class-preserving predicate. Any class-preserving map is
/// basis-conjugating on the standard generators, so the space is exhaustive.
AutcResult enumerate_autc_brute(const DenseCtx& dense, const ClassTable& table,
                                const EnumOptions& opts = {});

/// The structured map of the k = 3 parametrization; certified class
/// preserving. A failure here would falsify the parametrization and is
/// surfaced as ExtensionFailed.
Automorphism autc_from_params(const DenseCtx& dense, const ClassTable& table,
                              const AutcParams& params);

/// Image of autc_from_params over all (p^m)^(2m+n-3) parameter tuples, sorted.
std::vector<Automorphism> autc_param_image(const DenseCtx& dense, const ClassTable& table);

struct BurnsideSets {
  std::vector<Automorphism> a1;   // closure of the phi^{k,l} maps, order p^(m^2)
  std::vector<Automorphism> a2;   // closure of the psi^{k,l} maps, order p^(m^2)
  std::vector<Automorphism> finn; // closure of the middle-generator conjugations
  std::vector<Automorphism> a1_gens, a2_gens, finn_gens;
};

/// The explicit generating automorphisms of Aut_c for k = 3: phi^{k,l} moves
/// t_{3,2}(theta^k) by t_{3,1}(theta^(k+l)), psi^{k,l} moves
/// t_{n-1,n-2}(theta^k) by t_{n,n-2}(-theta^(k+l)), plus the inner
/// automorphisms by the middle generators. Each certified class preserving.
BurnsideSets burnside_generators(const DenseCtx& dense, const ClassTable& table,
                                 std::size_t closure_cap = kDefaultClosureCap);

struct Thm27Certificate {
  bool central = false;
  bool class_preserving = false;
  bool non_inner = false;
  std::uint64_t witnesses_verified = 0; // one conjugator per group element
  bool ok() const { return central && class_preserving && non_inner; }
};

/// The explicit non-inner class-preserving automorphism over a non-prime
/// field: t_{k,k-1}(1) picks up the central factor t_{k,1}(c), every other
/// standard generator is fixed. Certified central, class preserving with an
/// explicit conjugator per element, and non-inner.
Automorphism construct_thm27(const DenseCtx& dense, const ClassTable& table, fe c,
                             Thm27Certificate* cert = nullptr);

struct Verdict {
  bool pass = false;
  std::vector<std::string> notes;
};

/// Prime-field case: Aut_c must equal Inn.
Verdict verify_theorem_a(const DenseCtx& dense, const ClassTable& table,
                         const EnumOptions& opts = {});

/// k = 3 case: brute force, parametrization image, and generated closure must
/// agree, match p^(m(2m+n-3)), give Out_c of order p^(2m(m-1)), and form an
/// elementary abelian p-group.
Verdict verify_theorem_b(const DenseCtx& dense, const ClassTable& table,
                         const EnumOptions& opts = {});

/// Order-p plus commuting-with-generators check; gens must generate the set.
bool is_elementary_abelian(const std::vector<Automorphism>& set,
                           const std::vector<Automorphism>& gens, int p);

} // namespace utaut

#endif
