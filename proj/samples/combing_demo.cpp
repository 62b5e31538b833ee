// Combs a pure mixed braid and checks the result against the normal form.

#include "mixbraid/mixbraid.hpp"

#include <iostream>

int main()
{
	using namespace mixbraid;
	MixedContext const ctx(2, 2);

	// a1 s1 a2 s1^-1 a[3,4]^-1 in the irredundant alphabet plus one moving loop
	auto w = parse_mixed_word("a1 s1 a2 s1^-1 a[3,4]^-1", ctx);
	auto braid = expand_mixed(w);
	std::cout << "word:     " << format_word(w) << "\n"
	          << "expanded: " << format_word(braid) << "\n";

	auto combed = comb(braid, ctx);
	for (int j = ctx.m + 1; j <= ctx.strands(); ++j)
		std::cout << "V" << j << ":       " << format_word(combed.factor(j)) << "\n";

	std::cout << "round trip equal: " << std::boolalpha << equal(combed_to_word(combed), braid) << "\n";

	auto nf = left_normal_form(braid);
	std::cout << "delta power " << nf.delta_power << ", " << nf.factors.size() << " factors\n";
	return 0;
}
