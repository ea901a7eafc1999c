#pragma once

#include "irta/automaton.h"
#include "irta/rational.h"

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace irta {

/// A concrete configuration. clock == current time - last_reset.
struct Config {
	std::string location;
	Rational clock;
	Rational last_reset;

	friend bool operator==(const Config &a, const Config &b) {
		return a.location == b.location && a.clock == b.clock;
	}
	friend auto operator<=>(const Config &a, const Config &b) {
		if (auto c = a.location <=> b.location; c != 0)
			return c;
		return a.clock <=> b.clock;
	}
};

/// Sorted, duplicate-free set of configurations at one instant.
struct ConfigSet {
	std::vector<Config> configs;
	Rational time;

	bool empty() const noexcept { return configs.empty(); }
	bool contains(std::string_view location, const Rational &clock) const;
};

/// Every clock shares the fractional part of the current time. Holds after
/// every step of an integer-reset automaton.
bool shares_fractional_part(const ConfigSet &cs);

struct Move {
	std::string target;
	bool reset;
};

/// Exact simulator for a (possibly nondeterministic) automaton. Holds its
/// own copy of the automaton with edges indexed by (location, letter).
class Simulator {
public:
	explicit Simulator(Automaton a);

	const Automaton &automaton() const noexcept { return automaton_; }

	ConfigSet initial() const;
	/// Throws TimeRegression when t precedes cs.time and UnknownLetter for a
	/// letter outside the alphabet.
	ConfigSet step(const ConfigSet &cs, std::string_view letter, const Rational &t) const;
	bool accepting(const ConfigSet &cs) const;

	/// Edges on `letter` from `location` enabled at clock value v.
	std::vector<Move> moves(std::string_view location, std::string_view letter, const Rational &v) const;

	/// Folds step over the word; on_step sees the set after every event.
	ConfigSet run(const TimedWord &w, const std::function<void(const ConfigSet &)> &on_step = {}) const;
	bool accepts(const TimedWord &w) const { return accepting(run(w)); }

private:
	std::size_t letter_or_throw(std::string_view letter) const;

	Automaton automaton_;
	std::unordered_map<std::string, std::size_t> location_ids_;
	std::unordered_map<std::string, std::size_t> letter_ids_;
	std::vector<std::vector<std::size_t>> table_; // [location * |alphabet| + letter] -> edge ids
};

ConfigSet initial_configs(const Automaton &a);
ConfigSet step_configs(const Automaton &a, const ConfigSet &cs, std::string_view letter, const Rational &t);
bool member(const Automaton &a, const TimedWord &w);

} // namespace irta
