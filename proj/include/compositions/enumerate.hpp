#pragma once

#include <functional>
#include <span>
#include <vector>

#include "compositions/bigcount.hpp"
#include "compositions/core.hpp"

namespace compositions {

/// Hard cap on the number of compositions an enumeration may yield before
/// aborting with BudgetExceededError.
struct EnumerationBudget {
  std::uint64_t max_items = 10'000'000;
};

/// Visitor over yielded compositions. Receives the parts of one composition;
/// return false to stop the stream early.
using CompositionVisitor = std::function<bool(std::span<const Index>)>;

/// Opaque part predicate for oracle experiments outside the three first-class
/// constraint families.
using PartPredicate = std::function<bool(Index)>;

/// Yields every composition of n satisfying c exactly once, in decreasing
/// lexicographic order on the part sequence (larger part sorts earlier at the
/// first difference).
void for_each_composition(Index n, const PartConstraint& c,
                          const EnumerationBudget& budget,
                          const CompositionVisitor& visit);

/// Predicate-driven variant: parts are the a in [1, n] with admit(a) true.
/// Slower than the constraint form (linear candidate scans).
void for_each_composition(Index n, const PartPredicate& admit,
                          std::optional<Index> exact_parts,
                          const EnumerationBudget& budget,
                          const CompositionVisitor& visit);

std::vector<Composition> list_compositions(Index n, const PartConstraint& c,
                                           const EnumerationBudget& budget = {});

/// Ground-truth count. OpenMP kernel: fans the first-part branches out across
/// threads; no compositions are materialized.
BigCount count_by_enumeration(Index n, const PartConstraint& c,
                              const EnumerationBudget& budget = {});

/// Serial reference for the parallel kernel.
BigCount count_by_enumeration_serial(Index n, const PartConstraint& c,
                                     const EnumerationBudget& budget = {});

}  // namespace compositions
