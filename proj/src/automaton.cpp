#include "irta/automaton.h"

#include "irta/errors.h"

#include <algorithm>
#include <tuple>

namespace irta {

std::int64_t Automaton::max_constant() const {
	std::int64_t k = 0;
	for (const auto &e : edges)
		k = std::max(k, e.guard.max_constant());
	return k;
}

bool Automaton::has_location(std::string_view id) const { return location_index(id).has_value(); }

bool Automaton::has_letter(std::string_view letter) const { return letter_index(letter).has_value(); }

std::optional<std::size_t> Automaton::location_index(std::string_view id) const {
	auto it = std::find(locations.begin(), locations.end(), id);
	if (it == locations.end())
		return std::nullopt;
	return static_cast<std::size_t>(it - locations.begin());
}

std::optional<std::size_t> Automaton::letter_index(std::string_view letter) const {
	auto it = std::find(alphabet.begin(), alphabet.end(), letter);
	if (it == alphabet.end())
		return std::nullopt;
	return static_cast<std::size_t>(it - alphabet.begin());
}

std::vector<Edge> canonical_edges(const Automaton &a) {
	auto key = [&a](const Edge &e) {
		auto src = a.location_index(e.src).value_or(a.locations.size());
		auto letter = a.letter_index(e.letter).value_or(a.alphabet.size());
		const Guard &g = e.guard;
		// closed lower bounds first; unbounded upper ends last
		return std::make_tuple(src, letter, e.src, e.letter, g.is_empty(), g.lower(), !g.lower_closed(),
		                       g.upper().has_value() ? *g.upper() : INT64_MAX, g.upper_closed(),
		                       a.location_index(e.dst).value_or(a.locations.size()), e.dst, e.reset);
	};
	std::vector<Edge> edges = a.edges;
	std::stable_sort(edges.begin(), edges.end(),
	                 [&key](const Edge &x, const Edge &y) { return key(x) < key(y); });
	return edges;
}

bool operator==(const Automaton &a, const Automaton &b) {
	if (std::tie(a.name, a.alphabet, a.clock, a.locations, a.initial, a.accepting) !=
	    std::tie(b.name, b.alphabet, b.clock, b.locations, b.initial, b.accepting))
		return false;
	return canonical_edges(a) == canonical_edges(b);
}

ValidationReport validate_wellformed(const Automaton &a) {
	ValidationReport report;
	auto issue = [&report](std::optional<std::size_t> edge, std::string message) {
		report.issues.push_back({edge, std::move(message)});
	};

	if (a.clock.empty())
		issue(std::nullopt, "missing clock name");
	if (a.initial.empty())
		issue(std::nullopt, "missing initial");
	else if (!a.has_location(a.initial))
		issue(std::nullopt, "missing initial: '" + a.initial + "' is not a declared location");

	std::set<std::string> seen;
	for (const auto &l : a.locations)
		if (!seen.insert(l).second)
			issue(std::nullopt, "duplicate location '" + l + "'");
	seen.clear();
	for (const auto &s : a.alphabet)
		if (!seen.insert(s).second)
			issue(std::nullopt, "duplicate letter '" + s + "'");

	for (const auto &l : a.accepting)
		if (!a.has_location(l))
			issue(std::nullopt, "accepting location '" + l + "' is not declared");

	for (std::size_t i = 0; i < a.edges.size(); ++i) {
		const Edge &e = a.edges[i];
		std::string where = "edge " + std::to_string(i) + " (" + e.src + " -> " + e.dst + " : " + e.letter + ")";
		if (!a.has_location(e.src))
			issue(i, where + ": unknown source location '" + e.src + "'");
		if (!a.has_location(e.dst))
			issue(i, where + ": unknown target location '" + e.dst + "'");
		if (!a.has_letter(e.letter))
			issue(i, where + ": unknown letter '" + e.letter + "'");
	}
	return report;
}

TimedWord::TimedWord(std::vector<TimedEvent> events, bool strict) : events_(std::move(events)) {
	for (std::size_t i = 1; i < events_.size(); ++i) {
		const Rational &prev = events_[i - 1].time;
		const Rational &cur = events_[i].time;
		if (cur < prev || (strict && cur == prev))
			throw NonMonotoneTimeError(i, "timestamp " + cur.to_string() + " at index " + std::to_string(i) +
			                                  (strict ? " is not after " : " is before ") + prev.to_string());
	}
}

} // namespace irta
