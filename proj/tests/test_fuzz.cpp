#include "irta/determinize.h"
#include "irta/errors.h"
#include "irta/fuzz.h"
#include "irta/semantics.h"

#include "support/fixtures.h"

#include <doctest.h>

#include <algorithm>

using namespace irta;
using irta::testing::figure_a;
using irta::testing::figure_a_without;

namespace {

FuzzParams figure_params(std::size_t count) {
	FuzzParams p;
	p.seed = 42;
	p.count = count;
	p.max_len = 8;
	p.max_time = 5;
	p.denominators = {1, 2, 3, 4};
	return p;
}

} // namespace

TEST_CASE("random words respect the parameters") {
	FuzzParams p = figure_params(0);
	p.denominators = {3};
	std::mt19937_64 rng(1);
	std::size_t longest = 0;
	for (int i = 0; i < 5000; ++i) {
		TimedWord w = random_timed_word(rng, {"a", "b"}, p);
		CHECK(w.size() <= p.max_len);
		longest = std::max(longest, w.size());
		Rational prev(0);
		for (const auto &ev : w.events()) {
			CHECK((ev.letter == "a" || ev.letter == "b"));
			CHECK(ev.time <= Rational(p.max_time));
			CHECK(3 % ev.time.den() == 0);
			CHECK(prev <= ev.time);
			prev = ev.time;
		}
	}
	CHECK(longest == p.max_len);
}

TEST_CASE("word streams are independent of thread layout") {
	auto r1 = word_stream(42, 7), r2 = word_stream(42, 7), r3 = word_stream(42, 8);
	CHECK(r1() == r2());
	CHECK(word_stream(42, 7)() != r3());
}

TEST_CASE("A against its determinization") {
	Automaton a = figure_a();
	auto report = fuzz_equivalence(a, determinize(a).automaton, figure_params(10000));
	CHECK(report.tried == 10000);
	CHECK(report.mismatches.empty());
	CHECK(report.invariant_checks > 0);
	CHECK(report.invariant_violations == 0);
}

TEST_CASE("A against A without d5") {
	Automaton a = figure_a(), b = figure_a_without(5);
	auto report = fuzz_equivalence(a, b, figure_params(10000));
	REQUIRE_FALSE(report.mismatches.empty());
	bool has_e = false;
	for (const auto &m : report.mismatches) {
		CHECK(m.verdict_a != m.verdict_b);
		CHECK(member(a, m.word) == m.verdict_a);
		CHECK(member(b, m.word) == m.verdict_b);
		for (const auto &ev : m.word.events())
			has_e = has_e || ev.letter == "e";
	}
	CHECK(has_e);
}

TEST_CASE("zero count") {
	auto report = fuzz_equivalence(figure_a(), figure_a(), figure_params(0));
	CHECK(report.tried == 0);
	CHECK(report.mismatches.empty());
	CHECK(report.invariant_checks == 0);
}

TEST_CASE("reports are reproducible") {
	Automaton a = figure_a(), b = figure_a_without(2);
	auto r1 = fuzz_equivalence(a, b, figure_params(3000));
	auto r2 = fuzz_equivalence(a, b, figure_params(3000));
	CHECK(format_report(r1) == format_report(r2));
	CHECK_FALSE(r1.mismatches.empty());
	FuzzParams other = figure_params(3000);
	other.seed = 43;
	CHECK(format_report(fuzz_equivalence(a, b, other)) != format_report(r1));
	auto sorted = r1.mismatches;
	CHECK(std::is_sorted(sorted.begin(), sorted.end(), [](const FuzzMismatch &x, const FuzzMismatch &y) {
		return format_timed_word(x.word) < format_timed_word(y.word);
	}));
}

TEST_CASE("fuzz rejects different alphabets") {
	Automaton b = figure_a();
	b.alphabet = {"b"};
	try {
		fuzz_equivalence(figure_a(), b, figure_params(10));
		FAIL("expected AlphabetMismatch");
	} catch (const Error &e) {
		CHECK(e.code() == ErrorCode::AlphabetMismatch);
	}
}
