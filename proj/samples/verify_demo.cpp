// Verifies the relation catalog for one context and prints a per-family table.

#include "mixbraid/mixbraid.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char **argv)
{
	using namespace mixbraid;
	int const m = argc > 1 ? std::atoi(argv[1]) : 2;
	int const n = argc > 2 ? std::atoi(argv[2]) : 3;
	auto report = verify_all(MixedContext(m, n));
	for (auto const &f : report.families)
		std::cout << f.id << "\t" << f.passed << "/" << f.instances << "\n";
	std::cout << (report.ok() ? "ok" : "FAILED") << "\n";
	return report.ok() ? 0 : 1;
}
