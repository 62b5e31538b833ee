#pragma once

#include "mixbraid/braid_word.hpp"
#include "mixbraid/mixed_braid.hpp"
#include "mixbraid/word_problem.hpp"

namespace mixbraid {

/// The fixed subbraid on the first m strands.
struct FixedBraid
{
	BraidWord braid;
};

/// B acting on the first m strands of B_{m+n}, the moving strands straight.
inline BraidWord embed_fixed(FixedBraid const &b, MixedContext const &ctx)
{
	if (b.braid.strands() != ctx.m)
		throw BraidError("embed_fixed: fixed braid must have m = " + std::to_string(ctx.m) +
		                 " strands");
	return shift_embed(b.braid, 0, ctx.strands());
}

/// A lies in the coset B_{m,n} * B: its first m strands map to themselves
/// and form exactly B once the moving strands are erased.
inline bool is_in_coset(BraidWord const &a, FixedBraid const &b, MixedContext const &ctx)
{
	detail::require_strands(a, ctx, "is_in_coset");
	if (b.braid.strands() != ctx.m)
		throw BraidError("is_in_coset: fixed braid must have m strands");
	auto const p = permutation_of(a);
	for (int q = 1; q <= ctx.m; ++q)
		if (p(q) > ctx.m)
			return false;
	return equal(delete_strands(a, strand_range(1, ctx.m)), b.braid);
}

/// alpha with A = alpha * embed_fixed(B) and alpha in B_{m,n}.
inline BraidWord split(BraidWord const &a, FixedBraid const &b, MixedContext const &ctx)
{
	if (!is_in_coset(a, b, ctx))
		throw BraidError("split: braid is not in the coset of the fixed braid");
	return free_reduce(concat(a, inverse(embed_fixed(b, ctx))));
}

} // namespace mixbraid
