#ifndef UTAUT_GROUP_HPP
#define UTAUT_GROUP_HPP

#include <cstdint>
#include <vector>

#include "utaut/field.hpp"

namespace utaut {

inline constexpr std::uint64_t kDefaultOrderCap = std::uint64_t{1} << 24;

struct Pos {
  int i;
  int j;
  bool operator==(const Pos&) const = default;
};

/// Normal form of a coset of gamma_k: one encoded field value per band position.
using Elt = std::vector<fe>;

/// The quotient Gamma_{n,k} = UT_n(F_{p^m}) / gamma_k, elements as truncated
/// lower-unitriangular band matrices. Band positions (i,j), 1 <= j < i <= n,
/// i-j <= k-1, ordered by diagonal distance then by column.
class GroupCtx {
public:
  GroupCtx(FieldCtx field, int n, int k, std::uint64_t order_cap = kDefaultOrderCap);

  const FieldCtx& field() const { return field_; }
  int n() const { return n_; }
  int k() const { return k_; }
  std::uint64_t order() const { return order_; }

  const std::vector<Pos>& positions() const { return positions_; }
  int pos_index(int i, int j) const; // -1 if outside the band

  Elt identity() const { return Elt(positions_.size(), 0); }
  bool is_identity(const Elt& a) const;

  /// Single nonzero coordinate alpha at (i,j). A position with i-j >= k is
  /// trivial in the quotient: returns the identity and sets *truncated.
  Elt transvection(int i, int j, fe alpha, bool* truncated = nullptr) const;

  Elt multiply(const Elt& a, const Elt& b) const;
  Elt inverse(const Elt& a) const;                  // truncated Neumann series
  Elt commutator(const Elt& a, const Elt& b) const; // a^-1 b^-1 a b
  Elt conjugate(const Elt& x, const Elt& g) const;  // g^-1 x g

  std::uint64_t encode(const Elt& a) const;
  Elt decode(std::uint64_t index) const;

  /// Standard generators t_{i+1,i}(theta^l), i = 1..n-1, l = 0..m-1,
  /// in index order (i-1)*m + l.
  int num_generators() const { return (n_ - 1) * field_.m(); }
  Elt generator(int idx) const;

  /// Center by brute force (elements commuting with all generators), as a
  /// sorted list of element indices.
  std::vector<std::uint64_t> center() const;

  /// gamma_1 > gamma_2 > ... > gamma_k = {1}, each a sorted index list,
  /// computed by commutator closure.
  std::vector<std::vector<std::uint64_t>> lower_central_series() const;

  /// Subgroup generated by the given elements (BFS product closure),
  /// sorted index list.
  std::vector<std::uint64_t> subgroup_closure(const std::vector<std::uint64_t>& seed) const;

  bool same_ctx(const GroupCtx& o) const {
    return field_ == o.field_ && n_ == o.n_ && k_ == o.k_;
  }

private:
  void check(const Elt& a) const;

  FieldCtx field_;
  int n_;
  int k_;
  std::uint64_t order_;
  std::vector<Pos> positions_;
  std::vector<int> pos_lut_; // (i-1)*n + (j-1) -> position index or -1
};

/// Element-indexed caches for exhaustive computations over one group:
/// every element decoded, inverse indices, and right multiplication by the
/// standard generators and their inverses.
class DenseCtx {
public:
  explicit DenseCtx(const GroupCtx& ctx);

  const GroupCtx& group() const { return *ctx_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(elems_.size()); }
  const Elt& elem(std::uint32_t idx) const { return elems_[idx]; }
  std::uint32_t inv(std::uint32_t idx) const { return inv_[idx]; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(ctx_->encode(ctx_->multiply(elems_[a], elems_[b])));
  }
  /// x * generator(g); g in [0, num_generators).
  std::uint32_t rmul_gen(std::uint32_t x, int g) const { return rmul_gen_[g][x]; }
  /// Conjugation x^g = g^-1 x g by element index.
  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const {
    return mul(mul(inv_[g], x), g);
  }
  /// Conjugation by generator g or, with inverse_gen, by its inverse.
  std::uint32_t conj_gen(std::uint32_t x, int g, bool inverse_gen) const {
    return inverse_gen ? conj_geninv_[g][x] : conj_gen_[g][x];
  }

  std::uint32_t gen_index(int g) const { return gen_idx_[g]; }

private:
  const GroupCtx* ctx_;
  std::vector<Elt> elems_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> gen_idx_;
  std::vector<std::vector<std::uint32_t>> rmul_gen_;
  std::vector<std::vector<std::uint32_t>> conj_gen_;    // x -> gen^-1 x gen
  std::vector<std::vector<std::uint32_t>> conj_geninv_; // x -> gen x gen^-1
};

} // namespace utaut

#endif
