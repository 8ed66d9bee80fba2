#pragma once

#include <vector>

#include "tamehall/rep.hpp"

namespace tamehall {

/// Reflection functor at a sink: the new space at `sink` is the kernel of
/// the sum of incoming maps; arrows at `sink` are reversed.
Rep reflect_plus(const Rep& m, int sink);
/// Reflection functor at a source: the new space is the cokernel of the
/// stacked outgoing maps.
Rep reflect_minus(const Rep& m, int source);

/// reflect_plus along a word of sinks, first letter first.
Rep reflect_plus_word(const Rep& m, const std::vector<int>& word);

/// Auslander-Reiten translate as the composite of sink reflections along
/// the admissible sink order; the result lives on the same quiver.
Rep tau(const Rep& m);
/// Inverse translate: source reflections along the reversed order.
Rep tau_inv(const Rep& m);

/// tau^{-k} P(j) with dimension vector x. Throws InvalidInput when x is not
/// the dimension vector of a preprojective indecomposable.
Rep build_preprojective(QuiverPtr q, const Field& f, const DimVector& x);
/// tau^{k} I(j) with dimension vector x.
Rep build_preinjective(QuiverPtr q, const Field& f, const DimVector& x);
/// Preprojective or preinjective indecomposable of a real root with nonzero
/// defect; on Dynkin quivers every positive root.
Rep build_indecomposable(QuiverPtr q, const Field& f, const DimVector& x);

}  // namespace tamehall
