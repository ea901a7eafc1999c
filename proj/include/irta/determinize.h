#pragma once

#include "irta/automaton.h"
#include "irta/region.h"

#include <string>
#include <string_view>
#include <vector>

namespace irta {

struct SubsetPair {
	std::string location;
	OffsetClass offset;

	friend bool operator==(const SubsetPair &, const SubsetPair &) = default;
	friend auto operator<=>(const SubsetPair &, const SubsetPair &) = default;
};

/// Sorted, duplicate-free set of (location, offset class) pairs.
using SubsetState = std::vector<SubsetPair>;

void canonicalize(SubsetState &q);
/// "{(S,0),(S,1+)}"
std::string to_string(const SubsetState &q);

struct SubsetSuccessor {
	SubsetState state; ///< empty: no edge
	bool reset = false;
};

/// Successor of q on `letter` when n lies in region r (a region of the
/// automaton's K). n is reset when some enabled edge resets at a positive
/// integer; at n = 0 a reset changes nothing and is left out.
/// Throws NotIRTA unless `a` is integer-reset.
SubsetSuccessor successor_subset(const SubsetState &q, std::string_view letter, const Region &r,
                                 const Automaton &a);

struct DeterminizeOptions {
	/// Merge adjacent regions sharing target and reset flag into one guard.
	bool merge_guards = true;
	std::string clock_name = "n";
};

struct Determinization {
	Automaton automaton;
	/// states[i] is the subset behind automaton.locations[i] ("S<i+1>").
	std::vector<SubsetState> states;
};

/// Offset-class subset construction. States are numbered S1, S2, ... in
/// breadth-first discovery order; letters follow the alphabet order and
/// regions follow the line. Throws NotIRTA.
Determinization determinize(const Automaton &a, const DeterminizeOptions &options = {});

} // namespace irta
