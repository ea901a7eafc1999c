#include "irta/checks.h"

#include "irta/errors.h"

#include <algorithm>
#include <map>
#include <string>

namespace irta {

IntegerResetReport check_integer_reset(const Automaton &a) {
	IntegerResetReport report;
	for (std::size_t i = 0; i < a.edges.size(); ++i) {
		const Edge &e = a.edges[i];
		if (e.reset && !e.guard.is_empty() && !e.guard.is_point())
			report.offending_edges.push_back(i);
	}
	return report;
}

DeterminismReport check_deterministic(const Automaton &a) {
	DeterminismReport report;
	std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> groups;
	for (std::size_t i = 0; i < a.edges.size(); ++i)
		groups[{a.edges[i].src, a.edges[i].letter}].push_back(i);

	for (const auto &[key, ids] : groups)
		for (std::size_t p = 0; p < ids.size(); ++p)
			for (std::size_t q = p + 1; q < ids.size(); ++q)
				if (a.edges[ids[p]].guard.intersects(a.edges[ids[q]].guard))
					report.conflicts.emplace_back(ids[p], ids[q]);
	std::sort(report.conflicts.begin(), report.conflicts.end());
	return report;
}

void require_integer_reset(const Automaton &a) {
	auto report = check_integer_reset(a);
	if (report.ok())
		return;
	const Edge &e = a.edges[report.offending_edges.front()];
	throw Error(ErrorCode::NotIRTA, "automaton '" + a.name + "' is not integer-reset: edge " + e.src + " -> " +
	                                    e.dst + " : " + e.letter + " resets on " + e.guard.to_string());
}

void require_deterministic(const Automaton &a) {
	auto report = check_deterministic(a);
	if (report.ok())
		return;
	const Edge &e = a.edges[report.conflicts.front().first];
	const Edge &f = a.edges[report.conflicts.front().second];
	throw Error(ErrorCode::NotDeterministic, "automaton '" + a.name + "' is not deterministic: from " + e.src +
	                                             " on " + e.letter + ", guards " + e.guard.to_string() + " and " +
	                                             f.guard.to_string() + " overlap");
}

} // namespace irta
