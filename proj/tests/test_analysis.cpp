#include "irta/analysis.h"
#include "irta/checks.h"
#include "irta/determinize.h"
#include "irta/errors.h"
#include "irta/fuzz.h"
#include "irta/io.h"
#include "irta/semantics.h"

#include "support/fixtures.h"

#include <doctest.h>

#include <random>

using namespace irta;
using irta::testing::figure_a;
using irta::testing::figure_a_prime;
using irta::testing::figure_a_without;

namespace {

TimedWord word(const char *text) { return parse_timed_word(text); }

std::vector<TimedWord> sample_words(const std::vector<std::string> &alphabet, std::size_t count, std::uint64_t seed,
                                    std::int64_t max_time = 5) {
	FuzzParams params;
	params.max_time = max_time;
	std::mt19937_64 rng(seed);
	std::vector<TimedWord> out;
	for (std::size_t i = 0; i < count; ++i)
		out.push_back(random_timed_word(rng, alphabet, params));
	return out;
}

ErrorCode code_of(auto &&fn) {
	try {
		fn();
	} catch (const Error &e) {
		return e.code();
	}
	return ErrorCode::Internal;
}

} // namespace

TEST_CASE("complete adds a sink for the missing slots") {
	Automaton ap = figure_a_prime();
	Automaton c = complete(ap);
	REQUIRE(c.has_location("sink"));
	CHECK_FALSE(c.is_accepting("sink"));
	CHECK(c.locations.size() == ap.locations.size() + 1);
	CHECK(check_deterministic(c).ok());

	auto moves = Simulator(c).moves("S1", "b", Rational(1, 2));
	REQUIRE(moves.size() == 1);
	CHECK(moves[0].target == "sink");
	CHECK_FALSE(moves[0].reset);

	// totality: every (location, letter, value) enables exactly one edge
	Simulator sim(c);
	std::mt19937_64 rng(5);
	for (int i = 0; i < 1000; ++i) {
		Rational v(static_cast<std::int64_t>(rng() % 25), static_cast<std::int64_t>(1 + rng() % 4));
		for (const auto &l : c.locations)
			for (const auto &s : c.alphabet)
				CHECK(sim.moves(l, s, v).size() == 1);
	}
}

TEST_CASE("complete keeps existing edges") {
	Automaton ap = figure_a_prime();
	Automaton c = complete(ap);
	for (const Edge &e : ap.edges)
		CHECK(std::find(c.edges.begin(), c.edges.end(), e) != c.edges.end());
	for (const Edge &e : c.edges)
		if (e.dst == "sink")
			CHECK_FALSE(e.reset);
}

TEST_CASE("complete on an edgeless automaton") {
	Automaton a;
	a.name = "idle";
	a.alphabet = {"a", "b"};
	a.locations = {"q"};
	a.initial = "q";
	a.accepting = {"q"};
	Automaton c = complete(a);
	CHECK(c.locations.size() == 2);
	Simulator sim(c);
	for (const char *s : {"a", "b"}) {
		auto m = sim.moves("q", s, Rational(3));
		REQUIRE(m.size() == 1);
		CHECK(m[0].target == "sink");
	}
	CHECK(member(c, TimedWord{}));
	CHECK_FALSE(member(c, word("a@0")));
}

TEST_CASE("complete avoids taking an existing name") {
	Automaton a;
	a.alphabet = {"a"};
	a.locations = {"sink"};
	a.initial = "sink";
	Automaton c = complete(a);
	CHECK(c.locations.size() == 2);
	CHECK(c.has_location("sink_"));
}

TEST_CASE("complete and complement reject nondeterministic input") {
	CHECK(code_of([] { complete(figure_a()); }) == ErrorCode::NotDeterministic);
	CHECK(code_of([] { complement(figure_a()); }) == ErrorCode::NotDeterministic);
}

TEST_CASE("complement flips membership") {
	Automaton ap = figure_a_prime();
	Automaton co = complement(ap);
	CHECK_FALSE(member(co, TimedWord{}));
	Automaton coco = complement(co);
	for (const auto &w : sample_words(ap.alphabet, 1000, 11)) {
		bool in = member(ap, w);
		CHECK(member(co, w) == !in);
		CHECK(member(coco, w) == in);
	}
}

TEST_CASE("product is the conjunction") {
	Automaton a = figure_a(), ap = figure_a_prime();
	CHECK(product(a, ap).accepts(word("b@1")));
	Product empty_side = product(a, complement(ap));
	Product self = product(ap, ap);
	Product mixed = product(figure_a_without(2), ap);
	for (const auto &w : sample_words(a.alphabet, 10000, 12)) {
		CHECK_FALSE(empty_side.accepts(w));
		CHECK(self.accepts(w) == member(ap, w));
		CHECK(mixed.accepts(w) == (member(figure_a_without(2), w) && member(ap, w)));
	}
}

TEST_CASE("product rejects different alphabets") {
	Automaton b = figure_a();
	b.alphabet = {"b", "c"};
	CHECK(code_of([&] { product(figure_a(), b); }) == ErrorCode::AlphabetMismatch);
	CHECK(code_of([&] { includes(figure_a(), b); }) == ErrorCode::AlphabetMismatch);
	// same letters in another order is fine
	Automaton c = figure_a();
	c.alphabet = {"e", "c", "b"};
	CHECK_NOTHROW(product(figure_a(), c));
}

TEST_CASE("region_of_pair and delay_successor") {
	CHECK(region_of_pair(Rational(0), Rational(0), 1, 1) == ProductRegion{0, 0, false});
	CHECK(region_of_pair(Rational(3, 2), Rational(1, 2), 2, 1) == ProductRegion{1, 0, true});
	CHECK(region_of_pair(Rational(7, 2), Rational(1, 2), 1, 2) == ProductRegion{2, 0, true});
	CHECK(code_of([] { region_of_pair(Rational(1, 2), Rational(1, 3), 1, 1); }) == ErrorCode::Internal);

	CHECK(delay_successor({0, 0, false}, 1, 1) == ProductRegion{0, 0, true});
	CHECK(delay_successor({0, 0, true}, 1, 1) == ProductRegion{1, 1, false});
	CHECK(delay_successor({1, 0, false}, 1, 1) == ProductRegion{2, 0, true});
	CHECK(delay_successor({2, 2, true}, 1, 1) == ProductRegion{2, 2, false});
}

TEST_CASE("delay_successor agrees with sampled time elapse") {
	std::mt19937_64 rng(21);
	for (int i = 0; i < 10000; ++i) {
		const std::int64_t ka = static_cast<std::int64_t>(rng() % 3), kb = static_cast<std::int64_t>(rng() % 3);
		const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % 4);
		const std::int64_t frac = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q));
		Rational xa(static_cast<std::int64_t>(rng() % 5) * q + frac, q);
		Rational xb(static_cast<std::int64_t>(rng() % 5) * q + frac, q);
		ProductRegion r = region_of_pair(xa, xb, ka, kb);
		ProductRegion next = delay_successor(r, ka, kb);
		// smallest elapse that leaves r: to the next integer, or a half step off it
		Rational step = xa.is_integer() ? Rational(1, 2 * q) : Rational(xa.den() - xa.num() % xa.den(), xa.den());
		ProductRegion sampled = region_of_pair(xa + step, xb + step, ka, kb);
		CHECK(next == sampled);
	}
}

TEST_CASE("is_empty examples") {
	auto ra = is_empty(figure_a());
	CHECK_FALSE(ra.empty);
	REQUIRE(ra.witness);
	CHECK(member(figure_a(), *ra.witness));

	Automaton a = figure_a();
	auto r = is_empty(product(a, complement(determinize(a).automaton)));
	CHECK(r.empty);
	CHECK_FALSE(r.witness);

	Automaton dead;
	dead.alphabet = {"a"};
	dead.locations = {"q0", "q1"};
	dead.initial = "q0";
	dead.accepting = {"q1"};
	dead.edges = {{"q0", "q1", "a", Guard::empty(), false}};
	CHECK(is_empty(dead).empty);
}

TEST_CASE("is_empty needs a delay to find the word") {
	// accepts only words with an a strictly between 1 and 2 after a reset at 1
	Automaton a = parse_automaton(R"(
alphabet a b
locations p q r
init p
accepting r
edge p -> q : b [x == 1] reset x
edge q -> r : a [x > 1 & x < 2]
)");
	auto res = is_empty(a);
	REQUIRE_FALSE(res.empty);
	CHECK(member(a, *res.witness));
	CHECK(res.witness->size() == 2);
}

TEST_CASE("is_empty rejects non-IRTA input") {
	Automaton a = figure_a();
	a.edges[1].reset = true;
	CHECK(code_of([&] { is_empty(a); }) == ErrorCode::NotIRTA);
}

TEST_CASE("includes and equivalent on the figure") {
	Automaton a = figure_a(), ap = figure_a_prime();
	CHECK(includes(a, ap).holds);
	CHECK(includes(ap, a).holds);
	CHECK(equivalent(a, determinize(a).automaton));
	CHECK(equivalent(a, a));

	auto r = includes(a, figure_a_without(2));
	REQUIRE_FALSE(r.holds);
	REQUIRE(r.counterexample);
	CHECK(member(a, *r.counterexample));
	CHECK_FALSE(member(figure_a_without(2), *r.counterexample));
	CHECK(includes(figure_a_without(2), a).holds);

	CHECK_FALSE(equivalent(a, figure_a_without(5)));
}

TEST_CASE("emptiness agrees with fuzzing on random IRTA") {
	std::mt19937_64 rng(99);
	int empties = 0;
	for (int i = 0; i < 150; ++i) {
		Automaton a = irta::testing::random_irta(rng);
		auto res = is_empty(a);
		if (!res.empty) {
			REQUIRE(res.witness);
			CHECK(member(a, *res.witness));
			continue;
		}
		++empties;
		Simulator sim(a);
		for (const auto &w : sample_words(a.alphabet, 2000, 1000 + static_cast<std::uint64_t>(i), 6))
			CHECK_FALSE(sim.accepts(w));
	}
	CHECK(empties > 0);
}

TEST_CASE("inclusion counterexamples re-verify on random pairs") {
	std::mt19937_64 rng(7);
	for (int i = 0; i < 100; ++i) {
		Automaton a = irta::testing::random_irta(rng, {}, "A");
		Automaton b = irta::testing::random_irta(rng, {}, "B");
		auto r = includes(a, b);
		if (!r.holds) {
			CHECK(member(a, *r.counterexample));
			CHECK_FALSE(member(b, *r.counterexample));
		} else {
			Simulator sa(a), sb(b);
			for (const auto &w : sample_words(a.alphabet, 500, static_cast<std::uint64_t>(i), 6))
				CHECK((!sa.accepts(w) || sb.accepts(w)));
		}
	}
}
