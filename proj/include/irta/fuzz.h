#pragma once

#include "irta/automaton.h"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace irta {

struct FuzzParams {
	std::uint64_t seed = 0;
	std::size_t count = 1000;
	std::size_t max_len = 8;
	std::int64_t max_time = 5;
	std::vector<std::int64_t> denominators{1, 2, 3, 4};
};

struct FuzzMismatch {
	TimedWord word;
	bool verdict_a;
	bool verdict_b;
};

struct FuzzReport {
	FuzzParams params;
	std::size_t tried = 0;
	/// Sorted by printed word.
	std::vector<FuzzMismatch> mismatches;
	/// Simulator steps checked for the shared-fractional-part invariant.
	std::size_t invariant_checks = 0;
	std::size_t invariant_violations = 0;
};

/// Random word: length uniform in [0, max_len], letters uniform over the
/// alphabet, sorted timestamps p/q with q drawn from the denominators and
/// p/q <= max_time. Uses only the raw 64-bit engine output, so the words
/// are identical on every platform.
TimedWord random_timed_word(std::mt19937_64 &rng, const std::vector<std::string> &alphabet,
                            const FuzzParams &params);

/// Independent generator for word number `index` of a run seeded by `seed`.
std::mt19937_64 word_stream(std::uint64_t seed, std::size_t index);

/// Compares membership of `count` random words in a and b. Throws
/// AlphabetMismatch.
FuzzReport fuzz_equivalence(const Automaton &a, const Automaton &b, const FuzzParams &params);

std::string format_report(const FuzzReport &r);

} // namespace irta
