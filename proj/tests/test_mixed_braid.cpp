#include "support.hpp"

#include <gtest/gtest.h>

using namespace mixbraid;
using namespace mixbraid::support;

namespace {
MixedWord mw(MixedContext ctx, std::vector<MixedGen> ls) { return MixedWord(ctx, std::move(ls)); }
auto const L = [](int i, int s = 1) { return MixedGen::loop(i, s); };
auto const S = [](int k, int s = 1) { return MixedGen::cross(k, s); };
} // namespace

TEST(ExpandPureGen, Examples)
{
	EXPECT_EQ(expand_pure_gen(1, 2, 2, 1, LoopForm::Conjugate), make_word(2, {1, 1}));
	EXPECT_EQ(expand_pure_gen(1, 3, 3, 1, LoopForm::Commuted), make_word(3, {2, 1, 1, -2}));
	EXPECT_EQ(expand_pure_gen(1, 3, 3, 1, LoopForm::Conjugate), make_word(3, {-1, 2, 2, 1}));
	EXPECT_TRUE(equal(expand_pure_gen(1, 3, 3, 1, LoopForm::Conjugate), expand_pure_gen(1, 3, 3)));
}

TEST(ExpandPureGen, NegativeSignInvertsSquareOnly)
{
	EXPECT_EQ(expand_pure_gen(1, 3, 3, -1), make_word(3, {2, -1, -1, -2}));
	EXPECT_TRUE(is_trivial(concat(expand_pure_gen(2, 5, 5), expand_pure_gen(2, 5, 5, -1))));
}

TEST(ExpandPureGen, IndexErrors)
{
	EXPECT_THROW(expand_pure_gen(2, 2, 3), BraidError);
	EXPECT_THROW(expand_pure_gen(1, 4, 3), BraidError);
	EXPECT_THROW(expand_pure_gen(0, 2, 3), BraidError);
	EXPECT_THROW(expand_pure_gen(1, 2, 3, 2), BraidError);
}

TEST(ExpandPureGen, FormsAgreeUpToEightStrands)
{
	for (int n = 2; n <= 8; ++n)
		for (int j = 2; j <= n; ++j)
			for (int i = 1; i < j; ++i)
				for (int s : {1, -1})
					ASSERT_TRUE(equal(expand_pure_gen(i, j, n, s, LoopForm::Conjugate),
					                  expand_pure_gen(i, j, n, s, LoopForm::Commuted)))
					    << i << "," << j << " on " << n;
}

TEST(ExpandMixed, Examples)
{
	MixedContext const c22(2, 2);
	EXPECT_EQ(expand_mixed(mw(c22, {L(1)})), make_word(4, {2, 1, 1, -2}));
	EXPECT_EQ(expand_mixed(mw(c22, {S(1)})), make_word(4, {3}));
	MixedContext const c12(1, 2);
	auto w = expand_mixed(mw(c12, {L(1), S(1)}));
	EXPECT_EQ(w, make_word(3, {1, 1, 2}));
	EXPECT_TRUE(is_member(w, c12));
	EXPECT_FALSE(is_pure_member(w, c12));
}

TEST(MixedWord, RejectsInvalidLetters)
{
	MixedContext const c(2, 2);
	EXPECT_THROW(mw(c, {L(3)}), BraidError);
	EXPECT_THROW(mw(c, {S(2)}), BraidError);
	EXPECT_THROW(mw(c, {MixedGen::pure(1, 2)}), BraidError);
	EXPECT_THROW(mw(c, {MixedGen::pure(3, 5)}), BraidError);
	EXPECT_THROW(MixedContext(0, 2), BraidError);
	EXPECT_THROW(MixedContext(2, 0), BraidError);
}

TEST(MixedWord, IrredundantFlag)
{
	MixedContext const c(2, 2);
	EXPECT_TRUE(mw(c, {L(1), S(1, -1)}).is_irredundant());
	EXPECT_FALSE(mw(c, {MixedGen::pure(3, 4)}).is_irredundant());
}

TEST(ExpressIrredundant, Examples)
{
	MixedContext const c23(2, 3);
	EXPECT_EQ(express_aij_irredundant(1, 3, c23), mw(c23, {L(1)}));
	EXPECT_EQ(express_aij_irredundant(1, 4, c23), mw(c23, {S(1), L(1), S(1, -1)}));
	auto w = express_aij_irredundant(2, 5, c23);
	EXPECT_EQ(w, mw(c23, {S(2), S(1), L(2), S(1, -1), S(2, -1)}));
	EXPECT_TRUE(equal(expand_mixed(w), expand_pure_gen(2, 5, 5)));
	EXPECT_THROW(express_aij_irredundant(3, 4, c23), BraidError);
	EXPECT_THROW(express_aij_irredundant(1, 6, c23), BraidError);
}

TEST(ExpressMoving, Examples)
{
	MixedContext const c(2, 4);
	EXPECT_EQ(express_moving_aij(3, 4, c), mw(c, {S(1), S(1)}));
	EXPECT_EQ(express_moving_aij(3, 5, c), mw(c, {S(2), S(1), S(1), S(2, -1)}));
	EXPECT_EQ(express_moving_aij(5, 6, c), mw(c, {S(3), S(3)}));
	EXPECT_THROW(express_moving_aij(2, 4, c), BraidError);
	EXPECT_THROW(express_moving_aij(4, 4, c), BraidError);
}

TEST(ExpressProperties, RoundTripUpToEightStrands)
{
	for (int m = 1; m < 8; ++m)
		for (int n = 1; m + n <= 8; ++n)
		{
			MixedContext const c(m, n);
			for (int j = m + 1; j <= m + n; ++j)
				for (int i = 1; i < j; ++i)
					for (int s : {1, -1})
					{
						auto w = i <= m ? express_aij_irredundant(i, j, c, s) : express_moving_aij(i, j, c, s);
						ASSERT_TRUE(w.is_irredundant());
						ASSERT_TRUE(equal(expand_mixed(w), expand_pure_gen(i, j, m + n, s)))
						    << m << "," << n << " a" << i << "," << j;
					}
		}
}

TEST(ToIrredundant, PreservesElement)
{
	Rng rng(31);
	MixedContext const c(2, 3);
	for (int t = 0; t < 100; ++t)
	{
		auto w = random_mixed_word(rng, c, 10);
		auto r = to_irredundant(w);
		EXPECT_TRUE(r.is_irredundant());
		EXPECT_TRUE(equal(expand_mixed(r), expand_mixed(w)));
	}
}

TEST(IsMember, Examples)
{
	MixedContext const c(2, 2);
	EXPECT_FALSE(is_member(make_word(4, {1}), c));
	// s2 sends bottom 2 to top 3
	EXPECT_EQ(trace_strands(make_word(4, {2}))[1], 3);
	EXPECT_FALSE(is_member(make_word(4, {2}), c));
	EXPECT_THROW(is_member(make_word(3, {1}), c), BraidError);
}

TEST(IsMember, FixedStrandsMustBeTrivialNotJustFixed)
{
	MixedContext const c(2, 1);
	// a12 fixes every strand but braids the fixed strands
	EXPECT_FALSE(is_member(expand_pure_gen(1, 2, 3), c));
	EXPECT_FALSE(is_pure_member(expand_pure_gen(1, 2, 3), c));
}

TEST(IsPureMember, Examples)
{
	MixedContext const c(2, 2);
	EXPECT_TRUE(is_pure_member(expand_pure_gen(1, 3, 4), c));
	EXPECT_FALSE(is_pure_member(make_word(4, {3}), c));
	EXPECT_TRUE(is_pure_member(BraidWord(4), c));
}

TEST(MovingPermutation, Examples)
{
	MixedContext const c2(2, 2);
	EXPECT_EQ(moving_permutation(expand_mixed(mw(c2, {S(1)})), c2).images(), (std::vector<int>{2, 1}));
	EXPECT_TRUE(moving_permutation(expand_pure_gen(1, 3, 4), c2).is_identity());
	MixedContext const c3(1, 3);
	auto w = expand_mixed(mw(c3, {S(1), S(2)}));
	auto full = trace_strands(w);
	std::vector<int> oracle;
	for (int p = 2; p <= 4; ++p)
		oracle.push_back(full[p - 1] - 1);
	EXPECT_EQ(oracle, (std::vector<int>{3, 1, 2}));
	EXPECT_EQ(moving_permutation(w, c3).images(), oracle);
	EXPECT_THROW(moving_permutation(make_word(4, {1}), c3), BraidError);
}

TEST(DegenerateContext, SingleMovingStrand)
{
	MixedContext const c(3, 1);
	Rng rng(32);
	for (int t = 0; t < 50; ++t)
	{
		auto w = random_mixed_word(rng, c, 12);
		auto e = expand_mixed(w);
		EXPECT_TRUE(is_pure_member(e, c));
		EXPECT_EQ(moving_permutation(e, c).size(), 1);
	}
}

// properties

TEST(MixedProperties, ExpansionsAreMembers)
{
	Rng rng(33);
	for (int t = 0; t < 300; ++t)
	{
		MixedContext const c(uniform(rng, 1, 3), uniform(rng, 1, 4));
		auto e = expand_mixed(random_mixed_word(rng, c, 15));
		ASSERT_TRUE(is_member(e, c));
		EXPECT_EQ(is_pure_member(e, c), permutation_of(e).is_identity());
	}
}

TEST(MixedProperties, Closure)
{
	Rng rng(34);
	MixedContext const c(2, 3);
	for (int t = 0; t < 200; ++t)
	{
		auto u = expand_mixed(random_mixed_word(rng, c, 10));
		auto v = expand_mixed(random_mixed_word(rng, c, 10));
		EXPECT_TRUE(is_member(concat(u, v), c));
		auto p = expand_mixed(random_pure_mixed_word(rng, c, 10));
		auto q = expand_mixed(random_pure_mixed_word(rng, c, 10));
		EXPECT_TRUE(is_pure_member(p, c));
		EXPECT_TRUE(is_pure_member(concat(p, q), c));
	}
}

TEST(MixedProperties, MovingPermutationIsHomomorphism)
{
	Rng rng(35);
	MixedContext const c(2, 4);
	for (int t = 0; t < 200; ++t)
	{
		auto u = expand_mixed(random_mixed_word(rng, c, 10));
		auto v = expand_mixed(random_mixed_word(rng, c, 10));
		EXPECT_EQ(moving_permutation(concat(u, v), c),
		          compose(moving_permutation(u, c), moving_permutation(v, c)));
	}
}

TEST(MixedProperties, OneFixedStrandMatchesPureBraidGenerators)
{
	// with m = 1 the a_{1,j} and moving a_{i,j} are exactly the generators of P_{1+n}
	for (int n = 1; n <= 6; ++n)
	{
		int count = 0;
		for (int j = 2; j <= 1 + n; ++j)
			count += j - 1;
		EXPECT_EQ(count, (1 + n) * n / 2);
		EXPECT_EQ(count_generators(1, n), count);
	}
}
