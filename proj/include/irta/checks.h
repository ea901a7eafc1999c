#pragma once

#include "irta/automaton.h"

#include <cstddef>
#include <utility>
#include <vector>

namespace irta {

struct IntegerResetReport {
	/// Indices into Automaton::edges of resetting edges whose guard is not a
	/// single integer point.
	std::vector<std::size_t> offending_edges;

	bool ok() const noexcept { return offending_edges.empty(); }
};

/// An automaton is integer-reset when every resetting edge is guarded by a
/// point [c,c] (or by Empty, which never fires).
IntegerResetReport check_integer_reset(const Automaton &a);

struct DeterminismReport {
	/// Pairs (i, j), i < j, of edges sharing source and letter with
	/// overlapping guards.
	std::vector<std::pair<std::size_t, std::size_t>> conflicts;

	bool ok() const noexcept { return conflicts.empty(); }
};

DeterminismReport check_deterministic(const Automaton &a);

/// Throws Error(NotIRTA) naming the first offending edge.
void require_integer_reset(const Automaton &a);
/// Throws Error(NotDeterministic) naming the first conflict.
void require_deterministic(const Automaton &a);

} // namespace irta
