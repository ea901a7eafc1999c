#include "irta/analysis.h"

#include "irta/checks.h"
#include "irta/determinize.h"
#include "irta/errors.h"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>

namespace irta {

Automaton complete(const Automaton &d) {
	require_deterministic(d);
	const std::int64_t k = d.max_constant();
	const auto regions = atomic_regions(k);

	Automaton out = d;
	std::string sink = "sink";
	while (out.has_location(sink))
		sink += "_";
	out.locations.push_back(sink);

	for (const std::string &loc : d.locations) {
		for (const std::string &letter : d.alphabet) {
			std::vector<std::pair<Region, int>> gaps;
			for (const Region &r : regions) {
				bool covered = std::any_of(d.edges.begin(), d.edges.end(), [&](const Edge &e) {
					return e.src == loc && e.letter == letter && holds_on(e.guard, r);
				});
				if (!covered)
					gaps.emplace_back(r, 0);
			}
			for (const auto &[g, unused] : merge_adjacent(gaps))
				out.edges.push_back(Edge{loc, sink, letter, g, false});
		}
	}
	for (const std::string &letter : d.alphabet)
		out.edges.push_back(Edge{sink, sink, letter, Guard::always(), false});
	return out;
}

Automaton complement(const Automaton &d) {
	Automaton out = complete(d);
	std::set<std::string> flipped;
	for (const auto &l : out.locations)
		if (!out.is_accepting(l))
			flipped.insert(l);
	out.accepting = std::move(flipped);
	if (!out.name.empty())
		out.name += "_co";
	return out;
}

namespace {

void require_same_alphabet(const Automaton &a, const Automaton &b) {
	std::set<std::string> sa(a.alphabet.begin(), a.alphabet.end());
	std::set<std::string> sb(b.alphabet.begin(), b.alphabet.end());
	if (sa != sb)
		throw Error(ErrorCode::AlphabetMismatch,
		            "alphabets of '" + a.name + "' and '" + b.name + "' differ");
}

struct PairConfig {
	std::string loc_a;
	Rational reset_a;
	std::string loc_b;
	Rational reset_b;

	friend bool operator==(const PairConfig &, const PairConfig &) = default;
	friend auto operator<=>(const PairConfig &, const PairConfig &) = default;
};

} // namespace

Product::Product(Automaton left, Automaton right) : left_(std::move(left)), right_(std::move(right)) {
	require_same_alphabet(left_.automaton(), right_.automaton());
}

bool Product::accepts(const TimedWord &w) const {
	std::vector<PairConfig> current{{left().initial, Rational(0), right().initial, Rational(0)}};
	Rational now(0);
	for (const TimedEvent &ev : w.events()) {
		if (ev.time < now)
			throw Error(ErrorCode::TimeRegression, "event at time " + ev.time.to_string() + " precedes " +
			                                           now.to_string());
		std::vector<PairConfig> next;
		for (const PairConfig &c : current) {
			auto ma = left_.moves(c.loc_a, ev.letter, ev.time - c.reset_a);
			if (ma.empty())
				continue;
			auto mb = right_.moves(c.loc_b, ev.letter, ev.time - c.reset_b);
			for (const Move &x : ma)
				for (const Move &y : mb)
					next.push_back(PairConfig{x.target, x.reset ? ev.time : c.reset_a, y.target,
					                          y.reset ? ev.time : c.reset_b});
		}
		std::sort(next.begin(), next.end());
		next.erase(std::unique(next.begin(), next.end()), next.end());
		current = std::move(next);
		now = ev.time;
	}
	return std::any_of(current.begin(), current.end(), [this](const PairConfig &c) {
		return left().is_accepting(c.loc_a) && right().is_accepting(c.loc_b);
	});
}

Product product(const Automaton &a, const Automaton &b) { return Product(a, b); }

Region clock_region(std::int64_t int_class, bool frac_positive, std::int64_t max_const) {
	if (int_class > max_const || (int_class == max_const && frac_positive))
		return Region::above(max_const);
	return frac_positive ? Region::open_unit(int_class) : Region::point(int_class);
}

namespace {

std::int64_t integer_class(const Rational &x, std::int64_t max_const) {
	if (x > Rational(max_const))
		return max_const + 1;
	return x.floor();
}

std::int64_t advance_to_positive(std::int64_t cls, std::int64_t max_const) {
	return cls >= max_const ? max_const + 1 : cls;
}

std::int64_t advance_to_zero(std::int64_t cls, std::int64_t max_const) {
	return cls > max_const ? cls : cls + 1;
}

} // namespace

ProductRegion region_of_pair(const Rational &xa, const Rational &xb, std::int64_t max_a, std::int64_t max_b) {
	if (xa.frac() != xb.frac())
		throw Error(ErrorCode::Internal, "clocks " + xa.to_string() + " and " + xb.to_string() +
		                                     " do not share their fractional part");
	return ProductRegion{integer_class(xa, max_a), integer_class(xb, max_b), !xa.is_integer()};
}

ProductRegion delay_successor(const ProductRegion &r, std::int64_t max_a, std::int64_t max_b) {
	if (!r.frac_positive)
		return ProductRegion{advance_to_positive(r.int_a, max_a), advance_to_positive(r.int_b, max_b), true};
	return ProductRegion{advance_to_zero(r.int_a, max_a), advance_to_zero(r.int_b, max_b), false};
}

namespace {

struct Node {
	std::size_t loc_a;
	std::size_t loc_b;
	ProductRegion region;

	friend auto operator<=>(const Node &, const Node &) = default;
	friend bool operator==(const Node &, const Node &) = default;
};

struct IndexedEdge {
	std::size_t dst;
	Guard guard;
	bool reset;
};

/// Edges per [location][letter], with letters taken in `alphabet` order.
class EdgeIndex {
public:
	EdgeIndex(const Automaton &a, const std::vector<std::string> &alphabet) : a_(a) {
		table_.assign(a.locations.size(), std::vector<std::vector<IndexedEdge>>(alphabet.size()));
		for (const Edge &e : a.edges) {
			auto src = a.location_index(e.src);
			auto dst = a.location_index(e.dst);
			auto it = std::find(alphabet.begin(), alphabet.end(), e.letter);
			if (!src || !dst || it == alphabet.end())
				throw Error(ErrorCode::Internal, "malformed edge in '" + a.name + "'");
			table_[*src][static_cast<std::size_t>(it - alphabet.begin())].push_back({*dst, e.guard, e.reset});
		}
		for (std::size_t i = 0; i < a.locations.size(); ++i)
			accepting_.push_back(a.is_accepting(a.locations[i]));
		auto init = a.location_index(a.initial);
		if (!init)
			throw Error(ErrorCode::Internal, "automaton '" + a.name + "' has no valid initial location");
		initial_ = *init;
	}

	const std::vector<IndexedEdge> &out(std::size_t loc, std::size_t letter) const { return table_[loc][letter]; }
	bool accepting(std::size_t loc) const { return accepting_[loc]; }
	std::size_t initial() const { return initial_; }
	std::int64_t max_constant() const { return a_.max_constant(); }

private:
	const Automaton &a_;
	std::vector<std::vector<std::vector<IndexedEdge>>> table_;
	std::vector<bool> accepting_;
	std::size_t initial_ = 0;
};

/// Breadth-first search over region nodes of one automaton or of a product.
class RegionGraph {
public:
	RegionGraph(const Automaton &a, const Automaton *b)
	    : alphabet_(a.alphabet), a_(a, alphabet_), ka_(a.max_constant()) {
		if (b) {
			b_.emplace(*b, alphabet_);
			kb_ = b->max_constant();
		}
	}

	EmptinessResult search() {
		Node start{a_.initial(), b_ ? b_->initial() : 0, ProductRegion{}};
		parent_.emplace(start, Parent{start, std::nullopt});
		std::deque<Node> queue{start};
		while (!queue.empty()) {
			Node n = queue.front();
			queue.pop_front();
			if (accepting(n))
				return EmptinessResult{false, witness(n)};
			auto visit = [&](const Node &m, std::optional<std::size_t> letter) {
				if (parent_.emplace(m, Parent{n, letter}).second)
					queue.push_back(m);
			};
			visit(delay(n), std::nullopt);
			for (std::size_t letter = 0; letter < alphabet_.size(); ++letter)
				for (const Node &m : discrete(n, letter))
					visit(m, letter);
		}
		return EmptinessResult{true, std::nullopt};
	}

private:
	struct Parent {
		Node prev;
		std::optional<std::size_t> letter; ///< nullopt: time delay
	};

	bool accepting(const Node &n) const {
		return a_.accepting(n.loc_a) && (!b_ || b_->accepting(n.loc_b));
	}

	Node delay(const Node &n) const {
		Node m = n;
		m.region = delay_successor(n.region, ka_, kb_);
		if (!b_)
			m.region.int_b = 0;
		return m;
	}

	std::int64_t after_edge(const IndexedEdge &e, std::int64_t cls, bool frac_positive) const {
		if (!e.reset)
			return cls;
		if (frac_positive)
			throw Error(ErrorCode::Internal, "reset at a non-integer clock value");
		return 0;
	}

	std::vector<Node> discrete(const Node &n, std::size_t letter) const {
		std::vector<Node> out;
		const bool frac = n.region.frac_positive;
		Region ra = clock_region(n.region.int_a, frac, ka_);
		for (const IndexedEdge &ea : a_.out(n.loc_a, letter)) {
			if (!holds_on(ea.guard, ra))
				continue;
			std::int64_t cls_a = after_edge(ea, n.region.int_a, frac);
			if (!b_) {
				out.push_back(Node{ea.dst, 0, ProductRegion{cls_a, 0, frac}});
				continue;
			}
			Region rb = clock_region(n.region.int_b, frac, kb_);
			for (const IndexedEdge &eb : b_->out(n.loc_b, letter)) {
				if (!holds_on(eb.guard, rb))
					continue;
				out.push_back(Node{ea.dst, eb.dst, ProductRegion{cls_a, after_edge(eb, n.region.int_b, frac), frac}});
			}
		}
		return out;
	}

	TimedWord witness(const Node &target) const {
		std::vector<std::pair<Node, std::optional<std::size_t>>> path; // (node before step, step)
		Node cur = target;
		while (true) {
			const Parent &p = parent_.at(cur);
			if (p.prev == cur && !p.letter)
				break;
			path.emplace_back(p.prev, p.letter);
			cur = p.prev;
		}
		std::reverse(path.begin(), path.end());

		// integer timestamps while the fractional part is zero, +1/2 inside
		// open unit intervals
		std::vector<TimedEvent> events;
		std::int64_t whole = 0;
		bool half = false;
		for (const auto &[prev, letter] : path) {
			if (!letter) {
				if (half)
					++whole;
				half = !half;
				continue;
			}
			Rational now = half ? Rational(2 * whole + 1, 2) : Rational(whole);
			events.push_back(TimedEvent{alphabet_[*letter], now});
		}
		return TimedWord(std::move(events));
	}

	std::vector<std::string> alphabet_;
	EdgeIndex a_;
	std::optional<EdgeIndex> b_;
	std::int64_t ka_;
	std::int64_t kb_ = 0;
	std::map<Node, Parent> parent_;
};

} // namespace

EmptinessResult is_empty(const Automaton &a) {
	require_integer_reset(a);
	auto result = RegionGraph(a, nullptr).search();
	if (result.witness && !member(a, *result.witness))
		throw Error(ErrorCode::Internal, "emptiness witness rejected by the simulator");
	return result;
}

EmptinessResult is_empty(const Product &p) {
	require_integer_reset(p.left());
	require_integer_reset(p.right());
	auto result = RegionGraph(p.left(), &p.right()).search();
	if (result.witness && !p.accepts(*result.witness))
		throw Error(ErrorCode::Internal, "product emptiness witness rejected by the simulator");
	return result;
}

InclusionResult includes(const Automaton &a, const Automaton &b) {
	require_integer_reset(a);
	require_same_alphabet(a, b);
	Automaton co_b = complement(determinize(b).automaton);
	auto result = is_empty(Product(a, co_b));
	if (result.empty)
		return InclusionResult{true, std::nullopt};
	const TimedWord &w = *result.witness;
	if (!member(a, w) || member(b, w))
		throw Error(ErrorCode::Internal, "inclusion counterexample failed re-verification");
	return InclusionResult{false, w};
}

bool equivalent(const Automaton &a, const Automaton &b) { return includes(a, b).holds && includes(b, a).holds; }

} // namespace irta
