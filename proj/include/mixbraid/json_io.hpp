#pragma once

// JSON documents emitted by the command-line tool.  Field names are part of
// the tool's output contract (see README).

#include "mixbraid/combing.hpp"
#include "mixbraid/presentations.hpp"
#include "mixbraid/word_io.hpp"
#include "mixbraid/word_problem.hpp"

#include "json.hpp"

namespace mixbraid {

using Json = nlohmann::ordered_json;

inline Json to_json(NormalForm const &nf)
{
	Json factors = Json::array();
	for (auto const &f : nf.factors)
		factors.push_back(f.images());
	return Json{{"strands", nf.strands}, {"delta_power", nf.delta_power}, {"factors", factors}};
}

inline Json to_json(CombedForm const &c)
{
	Json factors = Json::array();
	for (int j = c.context().m + 1; j <= c.context().strands(); ++j)
	{
		Json word = Json::array();
		for (auto const &g : c.factor(j))
			word.push_back(Json{{"i", g.i}, {"j", g.j}, {"sign", g.sign}});
		factors.push_back(Json{{"strand", j}, {"word", word}});
	}
	return Json{{"m", c.context().m}, {"n", c.context().n}, {"factors", factors}};
}

namespace detail {
inline Json bindings_json(std::vector<std::pair<std::string, int>> const &b)
{
	Json o = Json::object();
	for (auto const &[k, v] : b)
		o[k] = v;
	return o;
}
} // namespace detail

inline Json to_json(VerificationReport const &r)
{
	Json families = Json::array();
	for (auto const &f : r.families)
	{
		Json failures = Json::array();
		for (auto const &x : f.failures)
			failures.push_back(Json{{"bindings", detail::bindings_json(x.bindings)},
			                        {"lhs", format_word(x.lhs)},
			                        {"rhs", format_word(x.rhs)}});
		Json skipped = Json::array();
		for (auto const &s : f.skipped)
			skipped.push_back(Json{{"bindings", detail::bindings_json(s.bindings)}, {"reason", s.reason}});
		families.push_back(Json{{"id", f.id},
		                        {"summary", find_family(f.id).summary},
		                        {"relations", f.relations},
		                        {"instances", f.instances},
		                        {"passed", f.passed},
		                        {"failed", f.failures.size()},
		                        {"ok", f.ok()},
		                        {"failures", failures},
		                        {"skipped", skipped}});
	}
	return Json{{"m", r.ctx.m},
	            {"n", r.ctx.n},
	            {"ok", r.ok()},
	            {"instances", r.total_instances()},
	            {"failures", r.total_failures()},
	            {"families", families}};
}

} // namespace mixbraid
