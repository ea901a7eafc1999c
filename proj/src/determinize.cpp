#include "irta/determinize.h"

#include "irta/checks.h"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

namespace irta {

void canonicalize(SubsetState &q) {
	std::sort(q.begin(), q.end());
	q.erase(std::unique(q.begin(), q.end()), q.end());
}

std::string to_string(const SubsetState &q) {
	std::string s = "{";
	for (std::size_t i = 0; i < q.size(); ++i) {
		if (i)
			s += ",";
		s += "(" + q[i].location + "," + q[i].offset.to_string() + ")";
	}
	return s + "}";
}

namespace {

class SubsetBuilder {
public:
	explicit SubsetBuilder(const Automaton &a) : a_(a), k_(a.max_constant()) {
		for (std::size_t i = 0; i < a.edges.size(); ++i)
			outgoing_[{a.edges[i].src, a.edges[i].letter}].push_back(i);
	}

	std::int64_t max_constant() const noexcept { return k_; }

	SubsetSuccessor successor(const SubsetState &q, std::string_view letter, const Region &r) const {
		struct Fired {
			const Edge *edge;
			OffsetClass offset;
		};
		std::vector<Fired> fired;
		bool reset = false;
		for (const SubsetPair &p : q) {
			auto it = outgoing_.find({p.location, std::string(letter)});
			if (it == outgoing_.end())
				continue;
			for (std::size_t id : it->second) {
				const Edge &e = a_.edges[id];
				auto shifted = shift_guard_to_n(e.guard, p.offset, k_);
				if (std::find(shifted.begin(), shifted.end(), r) == shifted.end())
					continue;
				fired.push_back({&e, p.offset});
				reset = reset || e.reset;
			}
		}
		// Integer-reset guards are points, so a reset fires only when r is
		// Point(c). Restarting n at c == 0 is a no-op.
		std::int64_t c = r.kind() == Region::Kind::Point ? r.constant() : 0;
		if (c == 0)
			reset = false;

		SubsetSuccessor out;
		out.reset = reset;
		for (const Fired &f : fired) {
			if (f.edge->reset)
				out.state.push_back({f.edge->dst, OffsetClass::exact(0)});
			else if (reset)
				out.state.push_back({f.edge->dst, f.offset.shifted(c, k_)});
			else
				out.state.push_back({f.edge->dst, f.offset});
		}
		canonicalize(out.state);
		return out;
	}

private:
	const Automaton &a_;
	std::int64_t k_;
	std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> outgoing_;
};

} // namespace

SubsetSuccessor successor_subset(const SubsetState &q, std::string_view letter, const Region &r,
                                 const Automaton &a) {
	require_integer_reset(a);
	return SubsetBuilder(a).successor(q, letter, r);
}

Determinization determinize(const Automaton &a, const DeterminizeOptions &options) {
	require_integer_reset(a);
	SubsetBuilder builder(a);
	const auto regions = atomic_regions(builder.max_constant());

	Determinization out;
	Automaton &d = out.automaton;
	d.name = a.name.empty() ? "det" : a.name + "_det";
	d.alphabet = a.alphabet;
	d.clock = options.clock_name;

	std::map<SubsetState, std::size_t> ids;
	auto intern = [&](const SubsetState &q) {
		auto [it, inserted] = ids.emplace(q, out.states.size());
		if (inserted) {
			out.states.push_back(q);
			d.locations.push_back("S" + std::to_string(out.states.size()));
		}
		return it->second;
	};

	intern(SubsetState{{a.initial, OffsetClass::exact(0)}});
	using Target = std::pair<std::size_t, bool>;
	for (std::size_t i = 0; i < out.states.size(); ++i) {
		for (const std::string &letter : a.alphabet) {
			std::vector<std::pair<Region, Target>> rows;
			for (const Region &r : regions) {
				// copy: intern() may grow out.states
				SubsetState q = out.states[i];
				auto succ = builder.successor(q, letter, r);
				if (succ.state.empty())
					continue;
				rows.emplace_back(r, Target{intern(succ.state), succ.reset});
			}

			std::vector<std::pair<Guard, Target>> guarded;
			if (options.merge_guards) {
				guarded = merge_adjacent(rows);
			} else {
				for (const auto &[r, t] : rows)
					guarded.emplace_back(r.to_guard(), t);
			}
			for (const auto &[g, t] : guarded)
				d.edges.push_back(Edge{d.locations[i], d.locations[t.first], letter, g, t.second});
		}
	}

	d.initial = d.locations.front();
	for (std::size_t i = 0; i < out.states.size(); ++i) {
		bool acc = std::any_of(out.states[i].begin(), out.states[i].end(),
		                       [&a](const SubsetPair &p) { return a.is_accepting(p.location); });
		if (acc)
			d.accepting.insert(d.locations[i]);
	}
	return out;
}

} // namespace irta
