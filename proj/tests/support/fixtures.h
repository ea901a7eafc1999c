#pragma once

// Shared test fixtures: the two drawn automata and a random IRTA generator.

#include "irta/automaton.h"
#include "irta/determinize.h"
#include "irta/io.h"

#include <cstdint>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace irta::testing {

inline std::string read_data(const std::string &name) {
	std::ifstream in(std::string(IRTA_TEST_DATA) + "/" + name, std::ios::binary);
	if (!in)
		throw std::runtime_error("missing test data " + name);
	std::ostringstream os;
	os << in.rdbuf();
	return os.str();
}

inline std::string data_path(const std::string &name) { return std::string(IRTA_TEST_DATA) + "/" + name; }

/// A built in code (not parsed): d1..d5 on one location S.
inline Automaton figure_a() {
	Automaton a;
	a.name = "A";
	a.alphabet = {"b", "c", "e"};
	a.clock = "x";
	a.locations = {"S"};
	a.initial = "S";
	a.accepting = {"S"};
	a.edges = {
	    {"S", "S", "b", Guard::point(1), true},      // d1
	    {"S", "S", "b", Guard::at_least(1), false},  // d2
	    {"S", "S", "c", Guard::point(1), true},      // d3
	    {"S", "S", "c", Guard::greater_than(1), false}, // d4
	    {"S", "S", "e", Guard::at_least(1), false},  // d5
	};
	return a;
}

inline Automaton figure_a_prime() { return parse_automaton(read_data("Aprime.irta")); }

/// A with the edge at `index` removed (1-based d-number).
inline Automaton figure_a_without(std::size_t d) {
	Automaton a = figure_a();
	a.edges.erase(a.edges.begin() + static_cast<std::ptrdiff_t>(d - 1));
	a.name = "A_without_d" + std::to_string(d);
	return a;
}

inline SubsetState subset(std::initializer_list<std::pair<const char *, int>> pairs, std::int64_t k = 1) {
	SubsetState q;
	for (auto [loc, d] : pairs)
		q.push_back({loc, d < 0 ? OffsetClass::above(k) : OffsetClass::exact(d)});
	canonicalize(q);
	return q;
}

/// S1..S7 as listed for the drawing; -1 stands for the saturated class 1+.
inline std::vector<SubsetState> listed_states() {
	return {
	    subset({{"S", 0}}),
	    subset({{"S", 0}, {"S", 1}}),
	    subset({{"S", 1}}),
	    subset({{"S", 0}, {"S", 1}, {"S", -1}}),
	    subset({{"S", 0}, {"S", -1}}),
	    subset({{"S", 1}, {"S", -1}}),
	    subset({{"S", -1}}),
	};
}

struct RandomAutomatonParams {
	std::size_t max_locations = 4;
	std::int64_t max_const = 2;
	std::size_t max_edges = 10;
	std::vector<std::string> alphabet{"a", "b"};
};

inline std::uint64_t pick(std::mt19937_64 &rng, std::uint64_t n) { return rng() % n; }

inline Guard random_guard(std::mt19937_64 &rng, std::int64_t k) {
	auto c = [&] { return static_cast<std::int64_t>(pick(rng, static_cast<std::uint64_t>(k + 1))); };
	switch (pick(rng, 8)) {
	case 0: return Guard::point(c());
	case 1: return Guard::at_least(c());
	case 2: return Guard::greater_than(c());
	case 3: return Guard::interval(0, true, c(), false);
	case 4: return Guard::interval(0, true, c(), true);
	case 5: {
		auto lo = c(), hi = c();
		return Guard::interval(std::min(lo, hi), pick(rng, 2) == 0, std::max(lo, hi), pick(rng, 2) == 0);
	}
	case 6: return Guard::always();
	default: return Guard::point(c());
	}
}

/// Random single-clock IRTA: resets only on point guards.
inline Automaton random_irta(std::mt19937_64 &rng, const RandomAutomatonParams &p = {}, const std::string &name = "R") {
	Automaton a;
	a.name = name;
	a.alphabet = p.alphabet;
	a.clock = "x";
	std::size_t n = 1 + pick(rng, p.max_locations);
	for (std::size_t i = 0; i < n; ++i)
		a.locations.push_back("l" + std::to_string(i));
	a.initial = a.locations[0];
	for (const auto &l : a.locations)
		if (pick(rng, 2) == 0)
			a.accepting.insert(l);
	std::int64_t k = static_cast<std::int64_t>(pick(rng, static_cast<std::uint64_t>(p.max_const + 1)));
	std::size_t m = pick(rng, p.max_edges + 1);
	for (std::size_t i = 0; i < m; ++i) {
		Edge e;
		e.src = a.locations[pick(rng, n)];
		e.dst = a.locations[pick(rng, n)];
		e.letter = a.alphabet[pick(rng, a.alphabet.size())];
		e.guard = random_guard(rng, k);
		e.reset = e.guard.is_point() && pick(rng, 2) == 0;
		a.edges.push_back(e);
	}
	return a;
}

} // namespace irta::testing

#include "irta/region.h"

#include <map>
#include <tuple>

namespace irta::testing {

/// (source, letter, region index) -> (target, reset) over atomic regions of K.
using AtomicRelation = std::map<std::tuple<std::string, std::string, std::size_t>, std::pair<std::string, bool>>;

/// Expands every guard into the atomic regions it covers. A reset on the
/// point n = 0 is recorded as no reset since it leaves every value unchanged.
inline AtomicRelation atomic_relation(const Automaton &a, std::int64_t k) {
	AtomicRelation rel;
	for (const Edge &e : a.edges)
		for (const Region &r : atomic_regions(k))
			if (holds_on(e.guard, r)) {
				bool reset = e.reset && !(r.kind() == Region::Kind::Point && r.constant() == 0);
				auto [it, inserted] = rel.emplace(std::make_tuple(e.src, e.letter, r.index()), std::make_pair(e.dst, reset));
				if (!inserted)
					throw std::runtime_error("nondeterministic slot at " + e.src + " on " + e.letter);
			}
	return rel;
}

struct RelationDiff {
	std::string src;
	std::string letter;
	std::size_t region;
	std::string expected; ///< "dst" or "dst,reset"; "-" when absent
	std::string actual;
};

inline std::vector<RelationDiff> diff_relations(const AtomicRelation &expected, const AtomicRelation &actual) {
	auto show = [](const AtomicRelation &rel, const AtomicRelation::key_type &key) -> std::string {
		auto it = rel.find(key);
		if (it == rel.end())
			return "-";
		return it->second.first + (it->second.second ? ",reset" : "");
	};
	std::set<AtomicRelation::key_type> keys;
	for (auto &[k, v] : expected)
		keys.insert(k);
	for (auto &[k, v] : actual)
		keys.insert(k);
	std::vector<RelationDiff> out;
	for (const auto &key : keys) {
		auto e = show(expected, key), a = show(actual, key);
		if (e != a)
			out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), e, a});
	}
	return out;
}

} // namespace irta::testing
