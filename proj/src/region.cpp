#include "irta/region.h"

namespace irta {

std::size_t Region::index() const noexcept {
	switch (kind_) {
	case Kind::Point: return static_cast<std::size_t>(2 * constant_);
	case Kind::OpenUnit: return static_cast<std::size_t>(2 * constant_ + 1);
	case Kind::AboveK: return static_cast<std::size_t>(2 * constant_ + 1);
	}
	return 0;
}

Guard Region::to_guard() const {
	switch (kind_) {
	case Kind::Point: return Guard::point(constant_);
	case Kind::OpenUnit: return Guard::open_unit(constant_);
	case Kind::AboveK: return Guard::greater_than(constant_);
	}
	return Guard::empty();
}

Rational Region::sample() const {
	if (kind_ == Kind::Point)
		return Rational(constant_);
	return Rational(2 * constant_ + 1, 2);
}

std::string Region::to_string() const {
	switch (kind_) {
	case Kind::Point: return "{" + std::to_string(constant_) + "}";
	case Kind::OpenUnit:
		return "(" + std::to_string(constant_) + "," + std::to_string(constant_ + 1) + ")";
	case Kind::AboveK: return "(" + std::to_string(constant_) + ",inf)";
	}
	return "?";
}

std::vector<Region> atomic_regions(std::int64_t max_const) {
	std::vector<Region> out;
	out.reserve(static_cast<std::size_t>(2 * max_const + 2));
	for (std::int64_t c = 0; c < max_const; ++c) {
		out.push_back(Region::point(c));
		out.push_back(Region::open_unit(c));
	}
	out.push_back(Region::point(max_const));
	out.push_back(Region::above(max_const));
	return out;
}

Region region_of(const Rational &v, std::int64_t max_const) {
	std::int64_t c = v.floor();
	if (c > max_const || (c == max_const && !v.is_integer()))
		return Region::above(max_const);
	return v.is_integer() ? Region::point(c) : Region::open_unit(c);
}

bool holds_on(const Guard &g, const Region &r) { return g.contains(r.sample()); }

std::string OffsetClass::to_string() const {
	return above_ ? std::to_string(value_) + "+" : std::to_string(value_);
}

std::vector<Region> shift_guard_to_n(const Guard &g, OffsetClass d, std::int64_t max_const) {
	// x ranges over region + d. Every such set lies inside one region of x
	// (or above K), so a single representative decides the whole region.
	std::vector<Region> out;
	for (const Region &r : atomic_regions(max_const)) {
		Rational offset = d.is_above() ? Rational(max_const + 1) : Rational(d.value());
		if (g.contains(r.sample() + offset))
			out.push_back(r);
	}
	return out;
}

} // namespace irta
