#pragma once

#include "mixbraid/braid_word.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace mixbraid {

/// Garside left normal form Delta^delta_power * factors[0] * ... * factors[k-1].
///
/// Each factor is a permutation braid, stored by its permutation (same
/// convention as permutation_of).  No factor is the identity or Delta, and
/// every adjacent pair is left-weighted.  Two words are equal in B_N iff
/// their normal forms compare equal.
struct NormalForm
{
	int strands = 1;
	int delta_power = 0;
	std::vector<Permutation> factors;

	friend bool operator==(NormalForm const &, NormalForm const &) = default;
};

namespace detail {

/// Moves crossings from the front of `right` to the back of `left` until the
/// starting set of `right` is contained in the finishing set of `left`.
/// Returns true if anything changed.
inline bool make_left_weighted(Permutation &left, Permutation &right)
{
	bool changed = false;
	int const n = left.size();
	for (bool again = true; again;)
	{
		again = false;
		for (int i = 1; i < n; ++i)
		{
			if (right.starts_with(i) && !left.finishes_with(i))
			{
				left.swap_values(i);
				right.swap_positions(i);
				again = changed = true;
			}
		}
	}
	return changed;
}

/// Conjugation by Delta: sigma_i -> sigma_{N-i}.
inline Permutation flip(Permutation const &p)
{
	int const n = p.size();
	std::vector<int> im(n);
	for (int q = 1; q <= n; ++q)
		im[n - q] = n + 1 - p(q);
	return Permutation(std::move(im));
}

class NormalFormBuilder
{
  public:
	explicit NormalFormBuilder(int strands)
	    : nf_{strands, 0, {}}, delta_(Permutation::reversal(strands))
	{
	}

	void push(ArtinGen g)
	{
		int const n = nf_.strands;
		if (g.sign > 0)
		{
			auto s = Permutation::identity(n);
			s.swap_values(g.index);
			append(std::move(s));
		}
		else
		{
			// x * sigma_i^-1 = Delta^-1 * flip(x) * (Delta sigma_i^-1)
			for (auto &f : nf_.factors)
				f = flip(f);
			--nf_.delta_power;
			auto s = delta_;
			s.swap_values(g.index);
			append(std::move(s));
		}
	}

	NormalForm const &result() const { return nf_; }

  private:
	void append(Permutation s)
	{
		auto &fs = nf_.factors;
		fs.push_back(std::move(s));
		for (std::size_t k = fs.size() - 1; k > 0; --k)
			if (!make_left_weighted(fs[k - 1], fs[k]))
				break;
		// a sweep can leave an identity in the middle only transiently;
		// repeat until every adjacent pair is stable.
		for (bool again = true; again;)
		{
			again = false;
			for (std::size_t k = 0; k + 1 < fs.size(); ++k)
				again = make_left_weighted(fs[k], fs[k + 1]) || again;
		}
		while (!fs.empty() && fs.back().is_identity())
			fs.pop_back();
		std::size_t lead = 0;
		while (lead < fs.size() && fs[lead] == delta_)
			++lead;
		if (lead > 0)
		{
			// Delta^k * Delta^lead * rest: the Delta factors are already in front.
			nf_.delta_power += static_cast<int>(lead);
			fs.erase(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(lead));
		}
	}

	NormalForm nf_;
	Permutation delta_;
};

} // namespace detail

inline NormalForm left_normal_form(BraidWord const &w)
{
	detail::NormalFormBuilder b(w.strands());
	for (auto g : w.letters())
		b.push(g);
	return b.result();
}

/// Expands a normal form back into an Artin word (Delta^k then each factor
/// as a positive word).
inline BraidWord to_word(NormalForm const &nf)
{
	int const n = nf.strands;
	std::vector<ArtinGen> out;
	auto emit_positive = [&](Permutation p, int sign) {
		// peel crossings off the front: p = sigma_i * rest
		std::vector<int> idx;
		while (!p.is_identity())
		{
			for (int i = 1; i < n; ++i)
			{
				if (p.starts_with(i))
				{
					idx.push_back(i);
					p.swap_positions(i);
					break;
				}
			}
		}
		if (sign > 0)
			for (int i : idx)
				out.push_back({i, 1});
		else
			for (auto it = idx.rbegin(); it != idx.rend(); ++it)
				out.push_back({*it, -1});
	};
	auto const delta = Permutation::reversal(n);
	for (int k = 0; k < (nf.delta_power < 0 ? -nf.delta_power : nf.delta_power); ++k)
		emit_positive(delta, nf.delta_power < 0 ? -1 : 1);
	for (auto const &f : nf.factors)
		emit_positive(f, 1);
	return BraidWord(n, std::move(out));
}

inline bool equal(BraidWord const &a, BraidWord const &b)
{
	if (a.strands() != b.strands())
		throw BraidError("equal: strand-count mismatch");
	return left_normal_form(concat(a, inverse(b))) == NormalForm{a.strands(), 0, {}};
}

inline bool is_trivial(BraidWord const &w)
{
	auto nf = left_normal_form(w);
	return nf.delta_power == 0 && nf.factors.empty();
}

/// Exact integer matrices of the unreduced Burau representation at t = -1.
using BurauMatrix = std::vector<std::vector<boost::multiprecision::cpp_int>>;

inline BurauMatrix burau_at_minus_one(BraidWord const &w)
{
	using boost::multiprecision::cpp_int;
	int const n = w.strands();
	BurauMatrix m(n, std::vector<cpp_int>(n, 0));
	for (int i = 0; i < n; ++i)
		m[i][i] = 1;
	// right-multiply by each generator's block: [[2,-1],[1,0]] or its
	// inverse [[0,1],[-1,2]] on rows/cols (i, i+1).
	for (auto g : w.letters())
	{
		int const c = g.index - 1;
		cpp_int const a = g.sign > 0 ? 2 : 0, b = g.sign > 0 ? -1 : 1;
		cpp_int const cc = g.sign > 0 ? 1 : -1, d = g.sign > 0 ? 0 : 2;
		for (int r = 0; r < n; ++r)
		{
			cpp_int const x = m[r][c], y = m[r][c + 1];
			m[r][c] = x * a + y * cc;
			m[r][c + 1] = x * b + y * d;
		}
	}
	return m;
}

/// Necessary condition for equality: false only when the words are provably
/// distinct.
inline bool cross_check(BraidWord const &a, BraidWord const &b)
{
	if (a.strands() != b.strands())
		throw BraidError("cross_check: strand-count mismatch");
	return burau_at_minus_one(a) == burau_at_minus_one(b);
}

} // namespace mixbraid
