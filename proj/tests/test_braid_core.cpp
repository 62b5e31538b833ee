#include "support.hpp"

#include <gtest/gtest.h>

using namespace mixbraid;
using namespace mixbraid::support;

TEST(FreeReduce, Examples)
{
	EXPECT_EQ(free_reduce(make_word(2, {1, -1})), BraidWord(2));
	EXPECT_EQ(free_reduce(make_word(3, {1, 2})), make_word(3, {1, 2}));
	EXPECT_EQ(free_reduce(make_word(3, {-2, 2, 1, 1, -1})), make_word(3, {1}));
}

TEST(Inverse, Examples)
{
	EXPECT_EQ(inverse(BraidWord(3)), BraidWord(3));
	EXPECT_EQ(inverse(make_word(2, {1})), make_word(2, {-1}));
	EXPECT_EQ(inverse(make_word(3, {1, -2})), make_word(3, {2, -1}));
}

TEST(Concat, Examples)
{
	EXPECT_EQ(concat(make_word(3, {1}), BraidWord(3)), make_word(3, {1}));
	EXPECT_EQ(concat(BraidWord(3), make_word(3, {2})), make_word(3, {2}));
	auto w = concat(make_word(3, {1}), make_word(3, {-1}));
	EXPECT_EQ(w, make_word(3, {1, -1}));
	EXPECT_TRUE(free_reduce(w).empty());
}

TEST(Concat, StrandMismatchThrows)
{
	EXPECT_THROW(concat(make_word(2, {1}), make_word(3, {1})), BraidError);
}

TEST(BraidWord, RejectsBadLetters)
{
	EXPECT_THROW(make_word(3, {3}), BraidError);
	EXPECT_THROW(make_word(3, {0}), BraidError);
	EXPECT_THROW(BraidWord(0), BraidError);
	EXPECT_THROW(BraidWord(3, {{1, 2}}), BraidError);
}

TEST(PermutationOf, SingleCrossing)
{
	EXPECT_EQ(permutation_of(make_word(3, {1})).images(), (std::vector<int>{2, 1, 3}));
}

TEST(PermutationOf, PureGeneratorIsIdentity)
{
	EXPECT_TRUE(permutation_of(expand_pure_gen(1, 3, 3)).is_identity());
}

TEST(PermutationOf, TwoCrossingsMatchTracer)
{
	auto w = make_word(3, {1, 2});
	auto oracle = trace_strands(w);
	EXPECT_EQ(oracle, (std::vector<int>{3, 1, 2}));
	EXPECT_EQ(permutation_of(w).images(), oracle);
}

TEST(PermutationOf, AgreesWithTracerOnRandomWords)
{
	Rng rng(11);
	for (int t = 0; t < 300; ++t)
	{
		auto w = random_artin_word(rng, uniform(rng, 1, 7), 20);
		ASSERT_EQ(permutation_of(w).images(), trace_strands(w)) << format_word(w);
	}
}

TEST(Permutation, RejectsNonBijection)
{
	EXPECT_THROW(Permutation(std::vector<int>{1, 1, 3}), std::invalid_argument);
	EXPECT_THROW(Permutation(std::vector<int>{1, 4, 2}), std::invalid_argument);
}

TEST(DeleteStrands, Examples)
{
	EXPECT_EQ(delete_strands(make_word(4, {3}), {1, 2}), BraidWord(2));
	EXPECT_EQ(delete_strands(make_word(4, {1}), {1, 2}), make_word(2, {1}));
}

TEST(DeleteStrands, ErasingStrandThreeOfA13)
{
	auto a13 = expand_pure_gen(1, 3, 3);
	ASSERT_EQ(a13, make_word(3, {2, 1, 1, -2}));
	// by hand: strand 3 takes part in both s2 letters; the s1 pair joins
	// strands 1 and 2 and survives.
	auto d = delete_strands(a13, {1, 2});
	EXPECT_EQ(d.strands(), 2);
	EXPECT_EQ(d, BraidWord(2));
}

TEST(DeleteStrands, RejectsNonInvariantSet)
{
	EXPECT_THROW(delete_strands(make_word(3, {2}), {1, 2}), BraidError);
	EXPECT_THROW(delete_strands(make_word(3, {1}), {1, 4}), BraidError);
}

TEST(ShiftEmbed, Examples)
{
	EXPECT_EQ(shift_embed(make_word(2, {1}), 0, 5), make_word(5, {1}));
	EXPECT_EQ(shift_embed(make_word(2, {1}), 3, 5), make_word(5, {4}));
	EXPECT_EQ(shift_embed(BraidWord(2), 2, 4), BraidWord(4));
}

TEST(ShiftEmbed, OutOfRangeThrows)
{
	EXPECT_THROW(shift_embed(make_word(2, {1}), 4, 5), BraidError);
	EXPECT_THROW(shift_embed(make_word(2, {1}), -1, 5), BraidError);
}

TEST(ShiftEmbed, IsInjectiveOnSamples)
{
	Rng rng(5);
	for (int t = 0; t < 100; ++t)
	{
		auto a = random_artin_word(rng, 3, 10), b = random_artin_word(rng, 3, 10);
		EXPECT_EQ(equal(a, b), equal(shift_embed(a, 2, 6), shift_embed(b, 2, 6)));
	}
}

// properties

TEST(BraidCoreProperties, FreeReduceIdempotentAndShrinks)
{
	Rng rng(1);
	for (int t = 0; t < 500; ++t)
	{
		auto w = random_artin_word(rng, 4, 30);
		auto r = free_reduce(w);
		EXPECT_EQ(free_reduce(r), r);
		EXPECT_LE(r.size(), w.size());
		EXPECT_EQ(permutation_of(r), permutation_of(w));
		for (std::size_t k = 1; k < r.size(); ++k)
			EXPECT_NE(r.letters()[k], r.letters()[k - 1].inverse());
	}
}

TEST(BraidCoreProperties, PermutationIsHomomorphism)
{
	Rng rng(2);
	for (int t = 0; t < 500; ++t)
	{
		auto u = random_artin_word(rng, 5, 12), v = random_artin_word(rng, 5, 12);
		EXPECT_EQ(permutation_of(concat(u, v)), compose(permutation_of(u), permutation_of(v)));
		EXPECT_EQ(permutation_of(inverse(u)), permutation_of(u).inverse());
	}
}

TEST(BraidCoreProperties, InverseCancels)
{
	Rng rng(3);
	for (int t = 0; t < 300; ++t)
	{
		auto w = random_artin_word(rng, 4, 15);
		EXPECT_TRUE(free_reduce(concat(w, inverse(w))).empty());
		EXPECT_TRUE(is_trivial(concat(inverse(w), w)));
	}
}

TEST(BraidCoreProperties, DeleteStrandsIsHomomorphismOnStabiliser)
{
	Rng rng(4);
	std::set<int> const kept{1, 2, 3};
	int tested = 0;
	while (tested < 300)
	{
		// pure words preserve every subset; mixing in crossings of 4,5 keeps
		// the set {1,2,3} invariant too.
		auto u = concat(expand_mixed(random_pure_mixed_word(rng, MixedContext(3, 2), 10)),
		                make_word(5, {uniform(rng, 0, 1) ? 4 : -4}));
		auto v = random_artin_word(rng, 5, 10);
		if (!std::ranges::all_of(kept, [&](int p) { return kept.count(permutation_of(v)(p)) > 0; }))
			continue;
		++tested;
		auto lhs = delete_strands(concat(u, v), kept);
		auto rhs = concat(delete_strands(u, kept), delete_strands(v, kept));
		EXPECT_TRUE(equal(lhs, rhs));
	}
}

TEST(BraidCoreProperties, DeleteAfterEmbedRecoversWord)
{
	Rng rng(6);
	for (int t = 0; t < 200; ++t)
	{
		int const m = uniform(rng, 1, 3), n = uniform(rng, 2, 4);
		auto w = random_artin_word(rng, n, 12);
		auto e = shift_embed(w, m, m + n);
		EXPECT_EQ(delete_strands(e, strand_range(m + 1, m + n)), w);
		EXPECT_TRUE(delete_strands(e, strand_range(1, m)).empty());
	}
}
