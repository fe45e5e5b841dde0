#ifndef UTAUT_MORPHISM_HPP
#define UTAUT_MORPHISM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "utaut/conjugacy.hpp"
#include "utaut/group.hpp"

namespace utaut {

inline constexpr std::size_t kDefaultClosureCap = std::size_t{1} << 20;

/// Images of the standard generators, indexed like GroupCtx::generator.
struct GenMap {
  std::vector<Elt> images;
};

/// A certified automorphism as a full permutation of element indices.
/// Equality is table equality; the normal form makes this exact.
struct Automorphism {
  std::vector<std::uint32_t> table;

  std::uint32_t operator()(std::uint32_t x) const { return table[x]; }
  bool is_identity() const;
  bool operator==(const Automorphism&) const = default;
  bool operator<(const Automorphism& o) const { return table < o.table; }
};

enum class ExtendStatus { Ok, NotHomomorphism, NotBijective };

struct ExtendResult {
  ExtendStatus status;
  std::optional<Automorphism> aut; // set iff status == Ok
};

/// Defines phi on all elements by BFS from the identity along first-discovery
/// edges, checking phi(g*s) = phi(g)*phi(s) for every (element, generator)
/// pair on the way. Every pair is either an assignment or a check, so a clean
/// pass is an unconditional homomorphism certificate.
ExtendResult extend_genmap(const DenseCtx& dense, const GenMap& gm);
/// Same, with generator images given as element indices (hot-loop form).
ExtendResult extend_genmap(const DenseCtx& dense, const std::vector<std::uint32_t>& images);

Automorphism inner_automorphism(const DenseCtx& dense, const Elt& g);

/// All distinct conjugation tables, sorted. The kernel of g -> inner(g) is the
/// center, so the count is |G| / |Z(G)|.
std::vector<Automorphism> inner_set(const DenseCtx& dense);

GenMap genmap_of(const DenseCtx& dense, const Automorphism& a);

bool is_class_preserving(const Automorphism& a, const ClassTable& table);
bool is_central(const DenseCtx& dense, const Automorphism& a);
/// True iff a maps the normal closure of every element onto itself; every
/// normal subgroup is a join of such closures, so this decides normality.
bool is_normal_automorphism(const DenseCtx& dense, const Automorphism& a,
                            const ClassTable& table);

/// compose(a, b) applies a first, then b; compose(inner(g), inner(h)) = inner(g*h).
Automorphism compose(const Automorphism& a, const Automorphism& b);
Automorphism invert(const Automorphism& a);

/// Subgroup of Aut generated by gens, as a sorted table list.
std::vector<Automorphism> closure(const std::vector<Automorphism>& gens,
                                  std::size_t cap = kDefaultClosureCap);

} // namespace utaut

#endif
