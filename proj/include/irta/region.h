#pragma once

#include "irta/guard.h"
#include "irta/rational.h"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace irta {

/// One cell of the partition {0}, (0,1), {1}, ..., {K}, (K,inf) of clock
/// values. For AboveK the stored constant is K itself.
class Region {
public:
	enum class Kind { Point, OpenUnit, AboveK };

	static Region point(std::int64_t c) { return Region(Kind::Point, c); }
	static Region open_unit(std::int64_t c) { return Region(Kind::OpenUnit, c); }
	static Region above(std::int64_t max_const) { return Region(Kind::AboveK, max_const); }

	Kind kind() const noexcept { return kind_; }
	std::int64_t constant() const noexcept { return constant_; }

	/// Position in atomic_regions(K) order.
	std::size_t index() const noexcept;
	Guard to_guard() const;
	bool contains(const Rational &v) const { return to_guard().contains(v); }
	/// A representative value inside the region.
	Rational sample() const;

	std::string to_string() const;

	friend bool operator==(const Region &, const Region &) = default;
	friend auto operator<=>(const Region &a, const Region &b) { return a.index() <=> b.index(); }

private:
	Region(Kind kind, std::int64_t c) : kind_(kind), constant_(c) {}

	Kind kind_;
	std::int64_t constant_;
};

/// [Point(0), OpenUnit(0), Point(1), ..., Point(K), AboveK]; length 2K+2.
std::vector<Region> atomic_regions(std::int64_t max_const);

Region region_of(const Rational &v, std::int64_t max_const);

/// Truth of a guard with constants <= K on a region; guards of that kind
/// are constant on every region.
bool holds_on(const Guard &g, const Region &r);

/// Integer offset d = x - n between an original clock and the deterministic
/// clock, saturated to K+ once it exceeds K.
class OffsetClass {
public:
	static OffsetClass exact(std::int64_t d) { return OffsetClass(false, d); }
	static OffsetClass above(std::int64_t max_const) { return OffsetClass(true, max_const); }
	static OffsetClass saturate(std::int64_t d, std::int64_t max_const) {
		return d > max_const ? above(max_const) : exact(d);
	}

	bool is_above() const noexcept { return above_; }
	/// The exact offset, or K for the saturated class.
	std::int64_t value() const noexcept { return value_; }

	/// Offset after n restarts at an integer value c.
	OffsetClass shifted(std::int64_t c, std::int64_t max_const) const {
		return above_ ? *this : saturate(value_ + c, max_const);
	}

	/// "0", "1", ... or "K+" for the saturated class.
	std::string to_string() const;

	friend bool operator==(const OffsetClass &, const OffsetClass &) = default;
	friend auto operator<=>(const OffsetClass &, const OffsetClass &) = default;

private:
	OffsetClass(bool above, std::int64_t value) : above_(above), value_(value) {}

	bool above_;
	std::int64_t value_;
};

/// Regions r of n such that x = n + d satisfies g for every n in r. The
/// guard's constants must not exceed K.
std::vector<Region> shift_guard_to_n(const Guard &g, OffsetClass d, std::int64_t max_const);

/// Merges maximal runs of adjacent regions carrying equal payloads into one
/// interval guard each. Rows must be ordered by region.
template <typename Payload>
std::vector<std::pair<Guard, Payload>>
merge_adjacent(const std::vector<std::pair<Region, Payload>> &rows) {
	std::vector<std::pair<Guard, Payload>> out;
	std::size_t i = 0;
	while (i < rows.size()) {
		std::size_t j = i;
		while (j + 1 < rows.size() && rows[j + 1].first.index() == rows[j].first.index() + 1 &&
		       rows[j + 1].second == rows[i].second)
			++j;
		Guard first = rows[i].first.to_guard();
		Guard last = rows[j].first.to_guard();
		out.emplace_back(Guard::interval(first.lower(), first.lower_closed(), last.upper(),
		                                 last.upper_closed()),
		                 rows[i].second);
		i = j + 1;
	}
	return out;
}

} // namespace irta
