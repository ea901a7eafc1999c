#pragma once

#include "irta/automaton.h"
#include "irta/region.h"
#include "irta/semantics.h"

#include <cstdint>
#include <optional>

namespace irta {

/// Adds a fresh non-accepting sink so that every (location, letter, clock
/// value) enables exactly one edge. Throws NotDeterministic.
Automaton complete(const Automaton &d);

/// complete(d) with the accepting set inverted. Throws NotDeterministic.
Automaton complement(const Automaton &d);

/// Synchronized product of two automata over the same alphabet. Each side
/// keeps its own clock; a word is accepted when both sides accept it.
class Product {
public:
	/// Throws AlphabetMismatch unless both alphabets hold the same letters.
	Product(Automaton left, Automaton right);

	const Automaton &left() const noexcept { return left_.automaton(); }
	const Automaton &right() const noexcept { return right_.automaton(); }

	bool accepts(const TimedWord &w) const;

private:
	Simulator left_;
	Simulator right_;
};

Product product(const Automaton &a, const Automaton &b);

/// Joint region of two integer-reset clocks. Both clocks share their
/// fractional part, so integer classes plus one fractional flag suffice. An
/// integer class of K+1 stands for "above K".
struct ProductRegion {
	std::int64_t int_a = 0;
	std::int64_t int_b = 0;
	bool frac_positive = false;

	friend bool operator==(const ProductRegion &, const ProductRegion &) = default;
	friend auto operator<=>(const ProductRegion &, const ProductRegion &) = default;
};

/// Region of a clock given its integer class and the shared fractional flag.
Region clock_region(std::int64_t int_class, bool frac_positive, std::int64_t max_const);

/// Requires frac(xa) == frac(xb).
ProductRegion region_of_pair(const Rational &xa, const Rational &xb, std::int64_t max_a, std::int64_t max_b);

/// The next region reached by letting time elapse.
ProductRegion delay_successor(const ProductRegion &r, std::int64_t max_a, std::int64_t max_b);

struct EmptinessResult {
	bool empty = true;
	/// Accepted word when nonempty; always confirmed by the simulator.
	std::optional<TimedWord> witness;
};

/// Region-graph reachability. Throws NotIRTA.
EmptinessResult is_empty(const Automaton &a);
EmptinessResult is_empty(const Product &p);

struct InclusionResult {
	bool holds = true;
	/// Word accepted by a and rejected by b when inclusion fails.
	std::optional<TimedWord> counterexample;
};

/// L(a) included in L(b), via emptiness of a x complement(determinize(b)).
/// Throws NotIRTA or AlphabetMismatch.
InclusionResult includes(const Automaton &a, const Automaton &b);

bool equivalent(const Automaton &a, const Automaton &b);

} // namespace irta
