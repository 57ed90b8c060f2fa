#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairdiv/lp.hpp"
#include "fairdiv/measure.hpp"
#include "fairdiv/procedures.hpp"

namespace fairdiv {

struct ProportionalityVerdict {
  std::vector<Rational> values;
  Rational share;
  bool pass;
};

ProportionalityVerdict proportionality_check(const Allocation& a, const std::vector<ValueMeasure1D>& measures);

struct Envy {
  std::size_t who, of;
  Rational own, other;
};

struct EnvyVerdict {
  /// matrix[i][j] = v_i(piece of j)
  std::vector<std::vector<Rational>> matrix;
  std::vector<Envy> envies;
  bool pass() const { return envies.empty(); }
};

EnvyVerdict envy_check(const Allocation& a, const std::vector<ValueMeasure1D>& measures);

enum class DominanceKind { strict_for_all, pareto_improvement, none };
std::string to_string(DominanceKind k);

struct DominanceVerdict {
  DominanceKind kind;
  std::vector<Rational> deltas;
};

/// Classifies candidate - incumbent value deltas.
DominanceVerdict classify_deltas(std::vector<Rational> deltas);
DominanceVerdict dominates(const Allocation& candidate, const Allocation& incumbent,
                           const std::vector<ValueMeasure1D>& measures);

/// Common refinement of every measure's breakpoints and the allocation's
/// critical points.
struct CellDecomposition {
  std::vector<Rational> breakpoints;
  /// values[i][k] = v_i(cell k)
  std::vector<std::vector<Rational>> values;
  /// owner[k]: player holding cell k, if a single player holds all of it
  std::vector<std::optional<std::size_t>> owner;

  std::size_t cells() const { return breakpoints.size() - 1; }
  Rational lo(std::size_t k) const { return breakpoints[k]; }
  Rational hi(std::size_t k) const { return breakpoints[k + 1]; }
};

/// extra: further points to refine at.
CellDecomposition decompose(const std::vector<ValueMeasure1D>& measures, const Allocation* a,
                            const std::vector<Rational>& extra = {});

/// Allocation giving player i a left-aligned share fractions[i][k] of each cell.
Allocation materialize(const CellDecomposition& cd, const std::vector<std::vector<Rational>>& fractions);

enum class ParetoClass { unrestricted, contiguous };
std::string to_string(ParetoClass c);
ParetoClass pareto_class_from_string(const std::string& s);

enum class ParetoStatus { strongly_po, weakly_po_not_strongly, not_weakly_po };
std::string to_string(ParetoStatus s);

struct ParetoVerdict {
  ParetoStatus status;
  std::optional<Allocation> witness;
  std::optional<DominanceVerdict> witness_dominance;
  /// unrestricted class: LP optima of the weak and strong tests
  std::optional<Rational> weak_optimum, strong_optimum;
  /// contiguous class: false, the search only covers a grid
  bool complete;
  std::vector<std::string> notes;
};

/// unrestricted: exact LP on the cell decomposition (atoms rejected).
/// contiguous: search over orderings and nondecreasing cut vectors on the
/// breakpoint grid, each gap split into 2^(grid_refine + 1) parts.
ParetoVerdict pareto_optimal(const Allocation& a, const std::vector<ValueMeasure1D>& measures, ParetoClass cls,
                             int grid_refine = 0);

}  // namespace fairdiv
