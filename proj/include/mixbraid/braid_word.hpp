#pragma once

#include "mixbraid/permutation.hpp"

#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixbraid {

/// Raised on precondition violations.
class BraidError : public std::invalid_argument
{
  public:
	using std::invalid_argument::invalid_argument;
};

/// Signed Artin generator sigma_index^sign.
struct ArtinGen
{
	int index = 1;
	int sign = 1;

	ArtinGen inverse() const { return {index, -sign}; }
	friend bool operator==(ArtinGen, ArtinGen) = default;
	friend auto operator<=>(ArtinGen, ArtinGen) = default;
};

/// A word in B_N.  The first letter is the bottom-most crossing.
class BraidWord
{
  public:
	BraidWord() = default;

	explicit BraidWord(int strands) : strands_(strands)
	{
		if (strands < 1)
			throw BraidError("a braid needs at least one strand");
	}

	BraidWord(int strands, std::vector<ArtinGen> letters)
	    : BraidWord(strands)
	{
		letters_ = std::move(letters);
		for (auto g : letters_)
			check(g);
	}

	int strands() const { return strands_; }
	std::vector<ArtinGen> const &letters() const { return letters_; }
	std::size_t size() const { return letters_.size(); }
	bool empty() const { return letters_.empty(); }

	friend bool operator==(BraidWord const &, BraidWord const &) = default;

  private:
	void check(ArtinGen g) const
	{
		if (g.sign != 1 && g.sign != -1)
			throw BraidError("generator sign must be +1 or -1");
		if (g.index < 1 || g.index >= strands_)
			throw BraidError("generator s" + std::to_string(g.index) +
			                 " out of range for " + std::to_string(strands_) +
			                 " strands");
	}

	int strands_ = 1;
	std::vector<ArtinGen> letters_;
};

/// Letter-level word builder for code that assembles words in pieces.
inline BraidWord make_word(int strands, std::initializer_list<int> signed_indices)
{
	std::vector<ArtinGen> ls;
	for (int v : signed_indices)
		ls.push_back({v > 0 ? v : -v, v > 0 ? 1 : -1});
	return BraidWord(strands, std::move(ls));
}

inline BraidWord free_reduce(BraidWord const &w)
{
	std::vector<ArtinGen> out;
	out.reserve(w.size());
	for (auto g : w.letters())
	{
		if (!out.empty() && out.back() == g.inverse())
			out.pop_back();
		else
			out.push_back(g);
	}
	return BraidWord(w.strands(), std::move(out));
}

inline BraidWord inverse(BraidWord const &w)
{
	std::vector<ArtinGen> out(w.letters().rbegin(), w.letters().rend());
	for (auto &g : out)
		g.sign = -g.sign;
	return BraidWord(w.strands(), std::move(out));
}

inline BraidWord concat(BraidWord const &bottom, BraidWord const &top)
{
	if (bottom.strands() != top.strands())
		throw BraidError("concat: strand-count mismatch (" +
		                 std::to_string(bottom.strands()) + " vs " +
		                 std::to_string(top.strands()) + ")");
	auto ls = bottom.letters();
	ls.insert(ls.end(), top.letters().begin(), top.letters().end());
	return BraidWord(bottom.strands(), std::move(ls));
}

inline BraidWord concat(std::span<BraidWord const> parts, int strands)
{
	BraidWord r(strands);
	for (auto const &p : parts)
		r = concat(r, p);
	return r;
}

inline Permutation permutation_of(BraidWord const &w)
{
	auto p = Permutation::identity(w.strands());
	for (auto g : w.letters())
		p.swap_values(g.index);
	return p;
}

/// Erases every strand not entering at a position in `kept` (1-based
/// bottom positions) and reindexes the survivors order-preservingly.
/// `kept` must be mapped to itself by the braid's permutation.
inline BraidWord delete_strands(BraidWord const &w, std::set<int> const &kept)
{
	int const n = w.strands();
	for (int p : kept)
		if (p < 1 || p > n)
			throw BraidError("delete_strands: kept position out of range");
	auto perm = permutation_of(w);
	for (int p : kept)
		if (!kept.count(perm(p)))
			throw BraidError("delete_strands: kept strands are not mapped to kept positions");

	// at[q] is the bottom position of the strand currently at position q.
	std::vector<int> at(n + 1);
	for (int q = 1; q <= n; ++q)
		at[q] = q;
	std::vector<ArtinGen> out;
	for (auto g : w.letters())
	{
		int const i = g.index;
		if (kept.count(at[i]) && kept.count(at[i + 1]))
		{
			int rank = 0;
			for (int q = 1; q <= i; ++q)
				rank += kept.count(at[q]) ? 1 : 0;
			out.push_back({rank, g.sign});
		}
		std::swap(at[i], at[i + 1]);
	}
	int const survivors = std::max<int>(1, static_cast<int>(kept.size()));
	return BraidWord(survivors, std::move(out));
}

inline std::set<int> strand_range(int first, int last)
{
	std::set<int> s;
	for (int p = first; p <= last; ++p)
		s.insert(p);
	return s;
}

/// sigma_i -> sigma_{i+offset} on new_strands strands.
inline BraidWord shift_embed(BraidWord const &w, int offset, int new_strands)
{
	if (offset < 0)
		throw BraidError("shift_embed: negative offset");
	if (offset + w.strands() > new_strands)
		throw BraidError("shift_embed: target has too few strands");
	std::vector<ArtinGen> out;
	out.reserve(w.size());
	for (auto g : w.letters())
		out.push_back({g.index + offset, g.sign});
	return BraidWord(new_strands, std::move(out));
}

} // namespace mixbraid
