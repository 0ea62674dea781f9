#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "compositions/bigcount.hpp"
#include "compositions/errors.hpp"

namespace compositions {

/// An ordered sequence of positive parts together with their sum.
struct Composition {
  std::vector<Index> parts;
  Index total = 0;

  bool operator==(const Composition&) const = default;
};

/// Builds a Composition from its parts, validating that the list is nonempty
/// and every part is >= 1.
Composition make_composition(std::vector<Index> parts);

/// Residue class r (mod m) with the standing assumption 0 < r <= m.
/// Coprimality of (r, m) is not required here; normalize_mod_class reduces.
class ModClass {
 public:
  ModClass(Index r, Index m);

  Index residue() const { return r_; }
  Index modulus() const { return m_; }

  bool operator==(const ModClass&) const = default;

 private:
  Index r_;
  Index m_;
};

/// Inclusive part-size window [lo, hi]; hi absent means unbounded above.
struct SizeBounds {
  Index lo = 1;
  std::optional<Index> hi;

  bool operator==(const SizeBounds&) const = default;
};

SizeBounds make_size_bounds(Index lo, std::optional<Index> hi);

/// Declarative restriction on admissible parts, plus an optional exact part
/// count. Immutable after construction.
class PartConstraint {
 public:
  enum class Kind { All, Residue, Size };

  static PartConstraint all();
  static PartConstraint residue_class(Index r, Index m);
  static PartConstraint size_range(Index lo, std::optional<Index> hi = std::nullopt);

  PartConstraint with_exact_parts(Index k) const;

  Kind kind() const { return kind_; }
  const ModClass& mod_class() const { return *mod_; }
  const SizeBounds& bounds() const { return bounds_; }
  std::optional<Index> exact_parts() const { return exact_parts_; }

 private:
  PartConstraint() = default;

  Kind kind_ = Kind::All;
  std::optional<ModClass> mod_;
  SizeBounds bounds_{};
  std::optional<Index> exact_parts_;
};

struct ReducedModClass {
  ModClass cls;
  Index n;
};

/// Divides (r, m, n) through by d = gcd(r, m). Returns nullopt — the
/// zero-marker — when d does not divide n: every part would be a multiple of
/// d, so no composition of n exists and the count is 0.
std::optional<ReducedModClass> normalize_mod_class(Index r, Index m, Index n);

/// Part-level admissibility; ignores exact_parts.
bool admits_part(const PartConstraint& c, Index a);

/// True iff comp sums to n, every part is admissible, and the part count
/// matches exact_parts when set.
bool validate_composition(const PartConstraint& c, const Composition& comp, Index n);

/// Ceiling on index arguments accepted by the counting routines. Counts are
/// unbounded bignums; the ceiling only guards against runaway inputs.
Index index_ceiling();
void set_index_ceiling(Index ceiling);

/// Throws OutOfRangeError unless 1 <= n <= index_ceiling().
void check_index(Index n, const char* what = "n");

Index gcd_index(Index a, Index b);

}  // namespace compositions
