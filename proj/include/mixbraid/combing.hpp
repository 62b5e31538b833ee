#pragma once

#include "mixbraid/braid_word.hpp"
#include "mixbraid/mixed_braid.hpp"

#include <vector>

namespace mixbraid {

/// A freely reduced word over a_{1,j}^{+-1}, ..., a_{j-1,j}^{+-1}.
using FreeWord = std::vector<MixedGen>;

/// Artin canonical form of a pure mixed braid: the braid equals
/// factor(m+1) * factor(m+2) * ... * factor(m+n), each factor a word in the
/// free group on the loops of strand j around the strands below it.
class CombedForm
{
  public:
	CombedForm() = default;
	explicit CombedForm(MixedContext ctx) : ctx_(ctx), factors_(ctx.n) {}

	MixedContext const &context() const { return ctx_; }

	FreeWord const &factor(int strand) const { return factors_.at(index(strand)); }
	FreeWord &factor(int strand) { return factors_.at(index(strand)); }

	/// Factors in strand order m+1, ..., m+n.
	std::vector<FreeWord> const &factors() const { return factors_; }

	bool is_identity() const
	{
		for (auto const &f : factors_)
			if (!f.empty())
				return false;
		return true;
	}

	friend bool operator==(CombedForm const &, CombedForm const &) = default;

  private:
	std::size_t index(int strand) const
	{
		if (strand < ctx_.m + 1 || strand > ctx_.strands())
			throw BraidError("combed form has no factor for strand " + std::to_string(strand));
		return static_cast<std::size_t>(strand - ctx_.m - 1);
	}

	MixedContext ctx_;
	std::vector<FreeWord> factors_;
};

inline FreeWord free_reduce(FreeWord const &w)
{
	FreeWord out;
	for (auto const &g : w)
	{
		if (!out.empty() && out.back() == g.inverse())
			out.pop_back();
		else
			out.push_back(g);
	}
	return out;
}

namespace detail {

/// Images of a_{1,N}, ..., a_{N-1,N} under an automorphism of the free
/// subgroup of braids moving only strand N.
class FreeAutomorphism
{
  public:
	explicit FreeAutomorphism(int strands) : top_(strands)
	{
		for (int i = 1; i < strands; ++i)
			images_.push_back({MixedGen::pure(i, strands)});
	}

	FreeWord apply(FreeWord const &w) const
	{
		FreeWord out;
		for (auto const &g : w)
		{
			auto const &im = images_[g.i - 1];
			if (g.sign > 0)
				out.insert(out.end(), im.begin(), im.end());
			else
				for (auto it = im.rbegin(); it != im.rend(); ++it)
					out.push_back(it->inverse());
		}
		return free_reduce(out);
	}

	FreeWord image(int i, int sign) const { return apply({MixedGen::pure(i, top_, sign)}); }

	/// this <- this o (x -> s_k^e x s_k^-e), for k <= N-2.
	void compose_conjugation(int k, int e)
	{
		int const n = top_;
		auto a = [n](int i, int s = 1) { return MixedGen::pure(i, n, s); };
		FreeWord img_k, img_k1;
		if (e > 0)
		{
			img_k = {a(k + 1)};
			img_k1 = {a(k + 1, -1), a(k), a(k + 1)};
		}
		else
		{
			img_k = {a(k), a(k + 1), a(k, -1)};
			img_k1 = {a(k)};
		}
		auto new_k = apply(img_k);
		auto new_k1 = apply(img_k1);
		images_[k - 1] = std::move(new_k);
		images_[k] = std::move(new_k1);
	}

	bool is_identity() const
	{
		for (std::size_t i = 0; i < images_.size(); ++i)
			if (images_[i].size() != 1 || images_[i][0] != MixedGen::pure(static_cast<int>(i) + 1, top_))
				return false;
		return true;
	}

  private:
	int top_;
	std::vector<FreeWord> images_;
};

} // namespace detail

/// Rewrites a braid on j strands in which only strand j moves into the free
/// group on a_{1,j}, ..., a_{j-1,j}.
///
/// Reidemeister-Schreier rewrite relative to the subgroup fixing the last
/// strand's endpoint, with transversal T_c = s_{j-1} ... s_c.  Each letter
/// either extends the tracked B_{j-1} part (acting on the free group by
/// conjugation) or emits a loop a_{c,j}^{+-1} conjugated by that part.
inline FreeWord extract_kernel_word(BraidWord const &kernel, int j)
{
	if (kernel.strands() != j || j < 2)
		throw BraidError("extract_kernel_word: word must live on exactly j >= 2 strands");
	FreeWord u;
	detail::FreeAutomorphism conj(j);
	int c = j; // current position of the strand that started at j
	auto emit = [&](int i, int sign) {
		auto im = conj.image(i, sign);
		u.insert(u.end(), im.begin(), im.end());
	};
	for (auto g : kernel.letters())
	{
		int const i = g.index;
		if (i <= c - 2)
			conj.compose_conjugation(i, g.sign);
		else if (i >= c + 1)
			conj.compose_conjugation(i - 1, g.sign);
		else if (i == c - 1)
		{
			if (g.sign < 0)
				emit(c - 1, -1);
			c = c - 1;
		}
		else
		{
			if (g.sign > 0)
				emit(c, 1);
			c = c + 1;
		}
	}
	if (c != j || !conj.is_identity())
		throw BraidError("extract_kernel_word: braid moves strands other than strand " +
		                 std::to_string(j));
	return free_reduce(u);
}

inline CombedForm comb(BraidWord const &w, MixedContext const &ctx)
{
	if (!is_pure_member(w, ctx))
		throw BraidError("comb: word is not a pure mixed braid");
	CombedForm out(ctx);
	BraidWord current = w;
	for (int j = ctx.strands(); j > ctx.m; --j)
	{
		auto below = delete_strands(current, strand_range(1, j - 1));
		BraidWord lifted(j, below.letters());
		out.factor(j) = extract_kernel_word(concat(inverse(lifted), current), j);
		current = below;
	}
	return out;
}

inline BraidWord combed_to_word(CombedForm const &c)
{
	int const n = c.context().strands();
	std::vector<ArtinGen> ls;
	for (auto const &f : c.factors())
		for (auto const &g : f)
		{
			auto e = expand_pure_gen(g.i, g.j, n, g.sign);
			ls.insert(ls.end(), e.letters().begin(), e.letters().end());
		}
	return BraidWord(n, std::move(ls));
}

inline bool equal_via_combing(BraidWord const &a, BraidWord const &b, MixedContext const &ctx)
{
	return comb(a, ctx) == comb(b, ctx);
}

} // namespace mixbraid
