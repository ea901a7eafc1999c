#include "irta/fuzz.h"

#include "irta/errors.h"
#include "irta/io.h"
#include "irta/semantics.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

namespace irta {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
	x += 0x9e3779b97f4a7c15ULL;
	x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
	x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
	return x ^ (x >> 31);
}

std::uint64_t below(std::mt19937_64 &rng, std::uint64_t bound) { return rng() % bound; }

} // namespace

std::mt19937_64 word_stream(std::uint64_t seed, std::size_t index) {
	return std::mt19937_64(splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(index)));
}

TimedWord random_timed_word(std::mt19937_64 &rng, const std::vector<std::string> &alphabet,
                            const FuzzParams &params) {
	std::size_t len = below(rng, params.max_len + 1);
	if (alphabet.empty() || params.denominators.empty())
		len = 0;
	std::vector<std::string> letters;
	std::vector<Rational> times;
	for (std::size_t i = 0; i < len; ++i) {
		letters.push_back(alphabet[below(rng, alphabet.size())]);
		std::int64_t q = params.denominators[below(rng, params.denominators.size())];
		std::int64_t p = static_cast<std::int64_t>(below(rng, static_cast<std::uint64_t>(params.max_time * q + 1)));
		times.emplace_back(p, q);
	}
	std::sort(times.begin(), times.end());
	std::vector<TimedEvent> events;
	for (std::size_t i = 0; i < len; ++i)
		events.push_back(TimedEvent{letters[i], times[i]});
	return TimedWord(std::move(events));
}

FuzzReport fuzz_equivalence(const Automaton &a, const Automaton &b, const FuzzParams &params) {
	std::set<std::string> sa(a.alphabet.begin(), a.alphabet.end());
	std::set<std::string> sb(b.alphabet.begin(), b.alphabet.end());
	if (sa != sb)
		throw Error(ErrorCode::AlphabetMismatch, "alphabets of '" + a.name + "' and '" + b.name + "' differ");
	for (auto q : params.denominators)
		if (q <= 0)
			throw Error(ErrorCode::ZeroDenominator, "fuzz denominators must be positive");

	const Simulator sim_a(a);
	const Simulator sim_b(b);

	struct Partial {
		std::vector<FuzzMismatch> mismatches;
		std::size_t checks = 0;
		std::size_t violations = 0;
	};

	const std::size_t workers =
	    std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), params.count / 256 + 1));
	std::vector<Partial> partials(workers);

	auto work = [&](std::size_t w) {
		Partial &out = partials[w];
		auto observe = [&out](const ConfigSet &cs) {
			++out.checks;
			if (!shares_fractional_part(cs))
				++out.violations;
		};
		for (std::size_t i = w; i < params.count; i += workers) {
			auto rng = word_stream(params.seed, i);
			TimedWord word = random_timed_word(rng, a.alphabet, params);
			bool va = sim_a.accepting(sim_a.run(word, observe));
			bool vb = sim_b.accepting(sim_b.run(word, observe));
			if (va != vb)
				out.mismatches.push_back(FuzzMismatch{std::move(word), va, vb});
		}
	};

	if (workers == 1) {
		work(0);
	} else {
		std::vector<std::thread> threads;
		for (std::size_t w = 0; w < workers; ++w)
			threads.emplace_back(work, w);
		for (auto &t : threads)
			t.join();
	}

	FuzzReport report;
	report.params = params;
	report.tried = params.count;
	for (auto &p : partials) {
		report.invariant_checks += p.checks;
		report.invariant_violations += p.violations;
		for (auto &m : p.mismatches)
			report.mismatches.push_back(std::move(m));
	}
	std::sort(report.mismatches.begin(), report.mismatches.end(), [](const FuzzMismatch &x, const FuzzMismatch &y) {
		auto kx = format_timed_word(x.word);
		auto ky = format_timed_word(y.word);
		return std::tie(kx, x.verdict_a, x.verdict_b) < std::tie(ky, y.verdict_a, y.verdict_b);
	});
	return report;
}

std::string format_report(const FuzzReport &r) {
	std::ostringstream os;
	os << "seed " << r.params.seed << " count " << r.params.count << " max-len " << r.params.max_len
	   << " max-time " << r.params.max_time << " denoms ";
	for (std::size_t i = 0; i < r.params.denominators.size(); ++i)
		os << (i ? "," : "") << r.params.denominators[i];
	os << '\n';
	os << "tried " << r.tried << '\n';
	os << "mismatches " << r.mismatches.size() << '\n';
	for (const auto &m : r.mismatches)
		os << (m.verdict_a ? "accept" : "reject") << ' ' << (m.verdict_b ? "accept" : "reject") << ' '
		   << format_timed_word(m.word) << '\n';
	os << "invariant " << r.invariant_checks - r.invariant_violations << '/' << r.invariant_checks << '\n';
	return os.str();
}

} // namespace irta
