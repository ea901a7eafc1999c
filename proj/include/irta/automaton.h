#pragma once

#include "irta/guard.h"
#include "irta/rational.h"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace irta {

struct Edge {
	std::string src;
	std::string dst;
	std::string letter;
	Guard guard;
	bool reset = false;

	friend bool operator==(const Edge &, const Edge &) = default;
};

/// Single-clock timed automaton over finite timed words. Acceptance is by the
/// location reached after the last event.
struct Automaton {
	std::string name;
	std::vector<std::string> alphabet;
	std::string clock = "x";
	std::vector<std::string> locations;
	std::string initial;
	std::set<std::string> accepting;
	std::vector<Edge> edges;

	/// Largest finite guard endpoint over all edges (K); 0 without edges.
	std::int64_t max_constant() const;

	bool has_location(std::string_view id) const;
	bool has_letter(std::string_view letter) const;
	bool is_accepting(std::string_view id) const { return accepting.count(std::string(id)) != 0; }
	std::optional<std::size_t> location_index(std::string_view id) const;
	std::optional<std::size_t> letter_index(std::string_view letter) const;
};

/// Structural equality; edge order is irrelevant.
bool operator==(const Automaton &a, const Automaton &b);

/// Edges ordered by (src position, letter position, guard lower bound, ...).
std::vector<Edge> canonical_edges(const Automaton &a);

struct ValidationIssue {
	std::optional<std::size_t> edge;
	std::string message;
};

struct ValidationReport {
	std::vector<ValidationIssue> issues;

	bool ok() const noexcept { return issues.empty(); }
};

ValidationReport validate_wellformed(const Automaton &a);

struct TimedEvent {
	std::string letter;
	Rational time;

	friend bool operator==(const TimedEvent &, const TimedEvent &) = default;
};

/// Finite timed word with non-decreasing timestamps. Construction throws
/// NonMonotoneTimeError naming the first offending event; with `strict`,
/// equal adjacent timestamps are rejected as well.
class TimedWord {
public:
	TimedWord() = default;
	explicit TimedWord(std::vector<TimedEvent> events, bool strict = false);

	const std::vector<TimedEvent> &events() const noexcept { return events_; }
	std::size_t size() const noexcept { return events_.size(); }
	bool empty() const noexcept { return events_.empty(); }

	friend bool operator==(const TimedWord &, const TimedWord &) = default;

private:
	std::vector<TimedEvent> events_;
};

} // namespace irta
