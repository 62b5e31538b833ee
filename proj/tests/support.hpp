#pragma once

// Random word generators and independent oracles shared by the test suites.

#include "mixbraid/mixbraid.hpp"

#include <random>
#include <set>
#include <vector>

namespace mixbraid::support {

using Rng = std::mt19937_64;

inline int uniform(Rng &rng, int lo, int hi)
{
	return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline int random_sign(Rng &rng) { return uniform(rng, 0, 1) ? 1 : -1; }

inline BraidWord random_artin_word(Rng &rng, int strands, int max_len)
{
	std::vector<ArtinGen> ls;
	if (strands < 2)
		return BraidWord(strands);
	int const len = uniform(rng, 0, max_len);
	for (int k = 0; k < len; ++k)
		ls.push_back({uniform(rng, 1, strands - 1), random_sign(rng)});
	return BraidWord(strands, std::move(ls));
}

/// Random letter of the irredundant alphabet, or a pure generator when
/// `with_pure` is set.
inline MixedGen random_mixed_gen(Rng &rng, MixedContext const &ctx, bool with_pure)
{
	int const kinds = (ctx.n > 1 ? 2 : 1) + (with_pure ? 1 : 0);
	int kind = uniform(rng, 0, kinds - 1);
	if (kind == 1 && ctx.n == 1)
		kind = 2;
	if (kind == 0)
		return MixedGen::loop(uniform(rng, 1, ctx.m), random_sign(rng));
	if (kind == 1)
		return MixedGen::cross(uniform(rng, 1, ctx.n - 1), random_sign(rng));
	int const j = uniform(rng, ctx.m + 1, ctx.strands());
	return MixedGen::pure(uniform(rng, 1, j - 1), j, random_sign(rng));
}

inline MixedWord random_mixed_word(Rng &rng, MixedContext const &ctx, int max_len, bool with_pure = true)
{
	std::vector<MixedGen> ls;
	int const len = uniform(rng, 0, max_len);
	for (int k = 0; k < len; ++k)
		ls.push_back(random_mixed_gen(rng, ctx, with_pure));
	return MixedWord(ctx, std::move(ls));
}

/// Independent strand tracer: walks the letters holding an explicit
/// position -> strand table.  Returns images[p-1] = top position of the
/// strand entering at bottom position p.
inline std::vector<int> trace_strands(BraidWord const &w)
{
	int const n = w.strands();
	std::vector<int> strand_at(n);
	for (int q = 0; q < n; ++q)
		strand_at[q] = q + 1;
	for (auto g : w.letters())
		std::swap(strand_at[g.index - 1], strand_at[g.index]);
	std::vector<int> top(n);
	for (int q = 0; q < n; ++q)
		top[strand_at[q] - 1] = q + 1;
	return top;
}

/// Appends moving crossings so the moving permutation becomes the identity.
inline MixedWord purify(MixedWord w)
{
	auto const &ctx = w.context();
	auto letters = w.letters();
	for (;;)
	{
		auto perm = trace_strands(expand_mixed(MixedWord(ctx, letters)));
		int bad = 0;
		for (int k = 1; k < ctx.n; ++k)
		{
			// first adjacent inversion among the moving top positions
			int from_k = 0, from_k1 = 0;
			for (int p = 1; p <= ctx.strands(); ++p)
			{
				if (perm[p - 1] == ctx.m + k)
					from_k = p;
				if (perm[p - 1] == ctx.m + k + 1)
					from_k1 = p;
			}
			if (from_k > from_k1)
			{
				bad = k;
				break;
			}
		}
		if (!bad)
			break;
		letters.push_back(MixedGen::cross(bad));
	}
	return MixedWord(ctx, std::move(letters));
}

/// Random pure member: a random mixed word (at most max_len letters before
/// purification, total at most max_len + n(n-1)/2 letters).
inline MixedWord random_pure_mixed_word(Rng &rng, MixedContext const &ctx, int max_len)
{
	int const fix = ctx.n * (ctx.n - 1) / 2;
	return purify(random_mixed_word(rng, ctx, std::max(0, max_len - fix)));
}

/// lhs * rhs^-1 of a relation instance, as an Artin word.
inline BraidWord relator(RelationInstance const &r)
{
	return concat(expand_mixed(r.lhs), inverse(expand_mixed(r.rhs)));
}

/// Inserts x * relator * x^-1 at a random position.
inline BraidWord perturb(Rng &rng, BraidWord const &w, BraidWord const &rel, BraidWord const &x)
{
	auto ls = w.letters();
	std::size_t const at = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ls.size())));
	auto ins = concat(concat(x, rel), inverse(x)).letters();
	ls.insert(ls.begin() + static_cast<std::ptrdiff_t>(at), ins.begin(), ins.end());
	return BraidWord(w.strands(), std::move(ls));
}

} // namespace mixbraid::support
