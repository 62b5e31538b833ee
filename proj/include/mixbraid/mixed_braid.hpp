#pragma once

#include "mixbraid/braid_word.hpp"
#include "mixbraid/word_problem.hpp"

#include <string>
#include <vector>

namespace mixbraid {

/// m fixed strands followed by n moving strands; the ambient group is B_{m+n}.
struct MixedContext
{
	int m = 1;
	int n = 1;

	MixedContext() = default;
	MixedContext(int fixed, int moving) : m(fixed), n(moving)
	{
		if (m < 1 || n < 1)
			throw BraidError("mixed context needs m >= 1 and n >= 1");
	}

	int strands() const { return m + n; }
	friend bool operator==(MixedContext, MixedContext) = default;
};

/// Generator of B_{m,n}.
///
///  - Loop  a_i        (i in 1..m), the loop a_{i,m+1};
///  - Cross sigma_k    (k in 1..n-1), the crossing sigma_{m+k} of B_{m+n};
///  - Pure  a_{i,j}    (1 <= i < j, m+1 <= j <= m+n), indices absolute.
struct MixedGen
{
	enum class Kind { Loop, Cross, Pure };

	Kind kind = Kind::Loop;
	int i = 1;
	int j = 0;
	int sign = 1;

	static MixedGen loop(int i, int sign = 1) { return {Kind::Loop, i, 0, sign}; }
	static MixedGen cross(int k, int sign = 1) { return {Kind::Cross, k, 0, sign}; }
	static MixedGen pure(int i, int j, int sign = 1) { return {Kind::Pure, i, j, sign}; }

	MixedGen inverse() const { return {kind, i, j, -sign}; }

	friend bool operator==(MixedGen const &, MixedGen const &) = default;
	friend auto operator<=>(MixedGen const &, MixedGen const &) = default;
};

inline bool is_valid(MixedGen const &g, MixedContext const &ctx)
{
	if (g.sign != 1 && g.sign != -1)
		return false;
	switch (g.kind)
	{
	case MixedGen::Kind::Loop:
		return g.i >= 1 && g.i <= ctx.m;
	case MixedGen::Kind::Cross:
		return g.i >= 1 && g.i <= ctx.n - 1;
	case MixedGen::Kind::Pure:
		return g.i >= 1 && g.i < g.j && g.j >= ctx.m + 1 && g.j <= ctx.m + ctx.n;
	}
	return false;
}

inline std::string describe(MixedGen const &g)
{
	std::string s;
	switch (g.kind)
	{
	case MixedGen::Kind::Loop:
		s = "a" + std::to_string(g.i);
		break;
	case MixedGen::Kind::Cross:
		s = "s" + std::to_string(g.i);
		break;
	case MixedGen::Kind::Pure:
		s = "a[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
		break;
	}
	return g.sign < 0 ? s + "^-1" : s;
}

class MixedWord
{
  public:
	MixedWord() = default;
	explicit MixedWord(MixedContext ctx) : ctx_(ctx) {}
	MixedWord(MixedContext ctx, std::vector<MixedGen> letters)
	    : ctx_(ctx), letters_(std::move(letters))
	{
		for (auto const &g : letters_)
			if (!is_valid(g, ctx_))
				throw BraidError("letter " + describe(g) + " is not valid for m=" +
				                 std::to_string(ctx_.m) + ", n=" + std::to_string(ctx_.n));
	}

	MixedContext const &context() const { return ctx_; }
	std::vector<MixedGen> const &letters() const { return letters_; }
	std::size_t size() const { return letters_.size(); }
	bool empty() const { return letters_.empty(); }

	/// True when only a_i and sigma_k letters occur.
	bool is_irredundant() const
	{
		for (auto const &g : letters_)
			if (g.kind == MixedGen::Kind::Pure)
				return false;
		return true;
	}

	friend bool operator==(MixedWord const &, MixedWord const &) = default;

  private:
	MixedContext ctx_;
	std::vector<MixedGen> letters_;
};

inline MixedWord concat(MixedWord const &a, MixedWord const &b)
{
	if (!(a.context() == b.context()))
		throw BraidError("concat: mixed context mismatch");
	auto ls = a.letters();
	ls.insert(ls.end(), b.letters().begin(), b.letters().end());
	return MixedWord(a.context(), std::move(ls));
}

inline MixedWord inverse(MixedWord const &w)
{
	std::vector<MixedGen> ls;
	for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
		ls.push_back(it->inverse());
	return MixedWord(w.context(), std::move(ls));
}

enum class LoopForm { Conjugate, Commuted };

/// The elementary pure braid a_{i,j} on N strands.
///
/// LoopForm::Conjugate  s_i^-1 ... s_{j-2}^-1 s_{j-1}^2 s_{j-2} ... s_i
/// LoopForm::Commuted   s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1
///
/// The second is the canonical expansion.  A negative sign inverts only the
/// central square.
inline BraidWord expand_pure_gen(int i, int j, int strands, int sign = 1,
                                 LoopForm form = LoopForm::Commuted)
{
	if (i < 1 || i >= j || j > strands)
		throw BraidError("a[" + std::to_string(i) + "," + std::to_string(j) +
		                 "] needs 1 <= i < j <= " + std::to_string(strands));
	if (sign != 1 && sign != -1)
		throw BraidError("sign must be +1 or -1");
	std::vector<ArtinGen> ls;
	if (form == LoopForm::Conjugate)
	{
		for (int k = i; k <= j - 2; ++k)
			ls.push_back({k, -1});
		ls.push_back({j - 1, sign});
		ls.push_back({j - 1, sign});
		for (int k = j - 2; k >= i; --k)
			ls.push_back({k, 1});
	}
	else
	{
		for (int k = j - 1; k > i; --k)
			ls.push_back({k, 1});
		ls.push_back({i, sign});
		ls.push_back({i, sign});
		for (int k = i + 1; k <= j - 1; ++k)
			ls.push_back({k, -1});
	}
	return BraidWord(strands, std::move(ls));
}

inline BraidWord expand(MixedGen const &g, MixedContext const &ctx)
{
	if (!is_valid(g, ctx))
		throw BraidError("letter " + describe(g) + " is not valid in this context");
	int const n = ctx.strands();
	switch (g.kind)
	{
	case MixedGen::Kind::Loop:
		return expand_pure_gen(g.i, ctx.m + 1, n, g.sign);
	case MixedGen::Kind::Cross:
		return BraidWord(n, {{ctx.m + g.i, g.sign}});
	case MixedGen::Kind::Pure:
		return expand_pure_gen(g.i, g.j, n, g.sign);
	}
	return BraidWord(n);
}

inline BraidWord expand_mixed(MixedWord const &w)
{
	std::vector<ArtinGen> ls;
	for (auto const &g : w.letters())
	{
		auto e = expand(g, w.context());
		ls.insert(ls.end(), e.letters().begin(), e.letters().end());
	}
	return BraidWord(w.context().strands(), std::move(ls));
}

/// a_{i,j} for a fixed strand i over the irredundant alphabet:
/// s_{k-1} ... s_1 a_i^sign s_1^-1 ... s_{k-1}^-1 with k = j - m.
inline MixedWord express_aij_irredundant(int i, int j, MixedContext const &ctx, int sign = 1)
{
	if (i < 1 || i > ctx.m || j < ctx.m + 1 || j > ctx.strands())
		throw BraidError("express_aij_irredundant: need 1 <= i <= m < j <= m+n");
	int const k = j - ctx.m;
	std::vector<MixedGen> ls;
	for (int c = k - 1; c >= 1; --c)
		ls.push_back(MixedGen::cross(c));
	ls.push_back(MixedGen::loop(i, sign));
	for (int c = 1; c <= k - 1; ++c)
		ls.push_back(MixedGen::cross(c, -1));
	return MixedWord(ctx, std::move(ls));
}

/// a_{i,j} between two moving strands, written with crossings only.
inline MixedWord express_moving_aij(int i, int j, MixedContext const &ctx, int sign = 1)
{
	if (i < ctx.m + 1 || i >= j || j > ctx.strands())
		throw BraidError("express_moving_aij: need m+1 <= i < j <= m+n");
	int const ri = i - ctx.m, rj = j - ctx.m;
	std::vector<MixedGen> ls;
	for (int c = rj - 1; c > ri; --c)
		ls.push_back(MixedGen::cross(c));
	ls.push_back(MixedGen::cross(ri, sign));
	ls.push_back(MixedGen::cross(ri, sign));
	for (int c = ri + 1; c <= rj - 1; ++c)
		ls.push_back(MixedGen::cross(c, -1));
	return MixedWord(ctx, std::move(ls));
}

/// Rewrites every Pure letter into the irredundant alphabet.
inline MixedWord to_irredundant(MixedWord const &w)
{
	auto const &ctx = w.context();
	std::vector<MixedGen> out;
	for (auto const &g : w.letters())
	{
		if (g.kind != MixedGen::Kind::Pure)
		{
			out.push_back(g);
			continue;
		}
		auto e = g.i <= ctx.m ? express_aij_irredundant(g.i, g.j, ctx, g.sign)
		                      : express_moving_aij(g.i, g.j, ctx, g.sign);
		out.insert(out.end(), e.letters().begin(), e.letters().end());
	}
	return MixedWord(ctx, std::move(out));
}

namespace detail {
inline void require_strands(BraidWord const &w, MixedContext const &ctx, char const *what)
{
	if (w.strands() != ctx.strands())
		throw BraidError(std::string(what) + ": word has " + std::to_string(w.strands()) +
		                 " strands, context needs " + std::to_string(ctx.strands()));
}
} // namespace detail

/// Removing the last n strands leaves the identity braid on the first m.
inline bool is_member(BraidWord const &w, MixedContext const &ctx)
{
	detail::require_strands(w, ctx, "is_member");
	auto const p = permutation_of(w);
	for (int q = 1; q <= ctx.m; ++q)
		if (p(q) != q)
			return false;
	return is_trivial(delete_strands(w, strand_range(1, ctx.m)));
}

inline bool is_pure_member(BraidWord const &w, MixedContext const &ctx)
{
	detail::require_strands(w, ctx, "is_pure_member");
	return permutation_of(w).is_identity() && is_member(w, ctx);
}

/// Image in S_n: the permutation of the moving strands, relabelled to 1..n.
inline Permutation moving_permutation(BraidWord const &w, MixedContext const &ctx)
{
	if (!is_member(w, ctx))
		throw BraidError("moving_permutation: word is not in B_{m,n}");
	auto const p = permutation_of(w);
	std::vector<int> im(ctx.n);
	for (int q = 1; q <= ctx.n; ++q)
		im[q - 1] = p(ctx.m + q) - ctx.m;
	return Permutation(std::move(im));
}

} // namespace mixbraid
