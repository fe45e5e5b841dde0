#ifndef UTAUT_CONJUGACY_HPP
#define UTAUT_CONJUGACY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "utaut/group.hpp"

namespace utaut {

/// Conjugacy classes of a whole group. class_id is assigned by ascending
/// minimal element index, so ids and representatives are deterministic.
struct ClassTable {
  struct Witness {
    std::uint32_t parent; // element this one was discovered from
    std::int16_t gen;     // generator index, negative-1-based for inverse; -32768 = root
    static constexpr std::int16_t kRoot = -32768;
  };

  std::vector<std::int32_t> class_id;     // per element index
  std::vector<std::uint32_t> representatives; // one per class (the BFS seed)
  std::vector<std::uint64_t> class_sizes;
  std::vector<Witness> witness;

  std::size_t class_count() const { return representatives.size(); }
};

ClassTable build_class_table(const DenseCtx& dense);

/// Conjugator g with x^g = y, reconstructed from BFS witnesses and verified
/// before return. nullopt when x and y are not conjugate.
std::optional<Elt> find_conjugator(const DenseCtx& dense, const ClassTable& table,
                                   const Elt& x, const Elt& y);

/// Camina check: class(x) = x * gamma_2 for every x outside gamma_2.
/// Vacuously true when gamma_2 is trivial; *degenerate reports that case.
bool is_camina(const DenseCtx& dense, const ClassTable& table, bool* degenerate = nullptr);

} // namespace utaut

#endif
