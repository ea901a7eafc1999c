#include "irta/semantics.h"

#include "irta/errors.h"

#include <algorithm>
#include <unordered_map>

namespace irta {

bool ConfigSet::contains(std::string_view location, const Rational &clock) const {
	return std::any_of(configs.begin(), configs.end(),
	                   [&](const Config &c) { return c.location == location && c.clock == clock; });
}

bool shares_fractional_part(const ConfigSet &cs) {
	Rational f = cs.time.frac();
	return std::all_of(cs.configs.begin(), cs.configs.end(),
	                   [&f](const Config &c) { return c.clock.frac() == f; });
}

namespace {

void canonicalize(std::vector<Config> &configs) {
	std::sort(configs.begin(), configs.end());
	configs.erase(std::unique(configs.begin(), configs.end()), configs.end());
}

} // namespace

Simulator::Simulator(Automaton a) : automaton_(std::move(a)) {
	for (std::size_t i = 0; i < automaton_.locations.size(); ++i)
		location_ids_.emplace(automaton_.locations[i], i);
	for (std::size_t i = 0; i < automaton_.alphabet.size(); ++i)
		letter_ids_.emplace(automaton_.alphabet[i], i);

	const std::size_t letters = automaton_.alphabet.size();
	table_.assign(automaton_.locations.size() * letters, {});
	for (std::size_t i = 0; i < automaton_.edges.size(); ++i) {
		const Edge &e = automaton_.edges[i];
		auto src = location_ids_.find(e.src);
		auto letter = letter_ids_.find(e.letter);
		if (src == location_ids_.end() || letter == letter_ids_.end())
			continue; // malformed edge; validate_wellformed reports it
		table_[src->second * letters + letter->second].push_back(i);
	}
}

std::size_t Simulator::letter_or_throw(std::string_view letter) const {
	auto it = letter_ids_.find(std::string(letter));
	if (it == letter_ids_.end())
		throw Error(ErrorCode::UnknownLetter,
		            "letter '" + std::string(letter) + "' is not in the alphabet of '" + automaton_.name + "'");
	return it->second;
}

ConfigSet Simulator::initial() const {
	ConfigSet cs;
	cs.configs.push_back(Config{automaton_.initial, Rational(0), Rational(0)});
	return cs;
}

std::vector<Move> Simulator::moves(std::string_view location, std::string_view letter, const Rational &v) const {
	std::vector<Move> out;
	auto letter_id = letter_or_throw(letter);
	auto loc = location_ids_.find(std::string(location));
	if (loc == location_ids_.end())
		return out;
	for (std::size_t id : table_[loc->second * automaton_.alphabet.size() + letter_id]) {
		const Edge &e = automaton_.edges[id];
		if (e.guard.contains(v))
			out.push_back(Move{e.dst, e.reset});
	}
	return out;
}

ConfigSet Simulator::step(const ConfigSet &cs, std::string_view letter, const Rational &t) const {
	if (t < cs.time)
		throw Error(ErrorCode::TimeRegression,
		            "event at time " + t.to_string() + " precedes current time " + cs.time.to_string());
	letter_or_throw(letter);

	ConfigSet next;
	next.time = t;
	for (const Config &c : cs.configs) {
		Rational clock = t - c.last_reset;
		for (Move &m : moves(c.location, letter, clock)) {
			if (m.reset)
				next.configs.push_back(Config{std::move(m.target), Rational(0), t});
			else
				next.configs.push_back(Config{std::move(m.target), clock, c.last_reset});
		}
	}
	canonicalize(next.configs);
	return next;
}

bool Simulator::accepting(const ConfigSet &cs) const {
	return std::any_of(cs.configs.begin(), cs.configs.end(),
	                   [this](const Config &c) { return automaton_.is_accepting(c.location); });
}

ConfigSet Simulator::run(const TimedWord &w, const std::function<void(const ConfigSet &)> &on_step) const {
	ConfigSet cs = initial();
	for (const TimedEvent &ev : w.events()) {
		cs = step(cs, ev.letter, ev.time);
		if (on_step)
			on_step(cs);
	}
	return cs;
}

ConfigSet initial_configs(const Automaton &a) { return Simulator(a).initial(); }

ConfigSet step_configs(const Automaton &a, const ConfigSet &cs, std::string_view letter, const Rational &t) {
	return Simulator(a).step(cs, letter, t);
}

bool member(const Automaton &a, const TimedWord &w) { return Simulator(a).accepts(w); }

} // namespace irta
