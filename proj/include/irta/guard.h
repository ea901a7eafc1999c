#pragma once

#include "irta/rational.h"

#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace irta {

enum class CompareOp { Eq, Lt, Le, Gt, Ge };

/// One comparison `clock OP constant`.
struct GuardAtom {
	CompareOp op;
	std::int64_t constant;
};

/// Interval constraint on a single clock with integer endpoints.
///
/// Always normalized: an unsatisfiable interval is the canonical Empty guard,
/// an unbounded upper end is open. Two guards denote the same set of clock
/// values iff they compare equal.
class Guard {
public:
	/// The trivial guard [0, inf).
	Guard() = default;

	static Guard empty();
	static Guard always() { return Guard(); }
	static Guard point(std::int64_t c);
	static Guard at_least(std::int64_t c) { return interval(c, true, std::nullopt, false); }
	static Guard greater_than(std::int64_t c) { return interval(c, false, std::nullopt, false); }
	static Guard open_unit(std::int64_t c) { return interval(c, false, c + 1, false); }
	static Guard interval(std::int64_t lower, bool lower_closed, std::optional<std::int64_t> upper,
	                      bool upper_closed);

	bool is_empty() const noexcept { return empty_; }
	bool is_point() const noexcept { return !empty_ && upper_ == lower_ && lower_closed_; }
	bool is_unbounded() const noexcept { return !empty_ && !upper_; }

	std::int64_t lower() const noexcept { return lower_; }
	bool lower_closed() const noexcept { return lower_closed_; }
	std::optional<std::int64_t> upper() const noexcept { return upper_; }
	bool upper_closed() const noexcept { return upper_closed_; }

	bool contains(const Rational &v) const;
	Guard intersect(const Guard &other) const;
	bool intersects(const Guard &other) const { return !intersect(other).is_empty(); }
	/// Largest finite endpoint; 0 for Empty and for [0, inf).
	std::int64_t max_constant() const noexcept;

	/// Interval notation, e.g. "[1,1]", "(0,1)", "(1,inf)", "empty".
	std::string to_string() const;

	friend bool operator==(const Guard &, const Guard &) = default;

private:
	bool empty_ = false;
	std::int64_t lower_ = 0;
	bool lower_closed_ = true;
	std::optional<std::int64_t> upper_;
	bool upper_closed_ = false;
};

/// The unique interval equal to the conjunction of the atoms (Empty if
/// unsatisfiable). Throws NegativeValue for a negative constant.
Guard normalize_guard(std::span<const GuardAtom> atoms);

bool eval_guard(const Guard &g, const Rational &v);

} // namespace irta
