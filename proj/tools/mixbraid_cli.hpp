#pragma once

#include "mixbraid/coset_split.hpp"
#include "mixbraid/json_io.hpp"
#include "mixbraid/mixbraid.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace mixbraid::cli {

/// Process exit codes.
enum ExitCode : int { Ok = 0, False = 1, Usage = 2 };

struct Options
{
	std::optional<int> strands;
	std::optional<int> m;
	std::optional<int> n;
	bool json = false;
	bool unicode = false;
	bool mixed = false;
	bool pure = false;
	std::string file;
	std::vector<std::string> words;
	std::string families = "all";
	std::string a_file, b_file;
};

class UsageError : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_file(std::string const &path)
{
	std::ifstream in(path);
	if (!in)
		throw UsageError("cannot read '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

/// Inline words first, then one word per line of --file.
inline std::vector<std::string> word_texts(Options const &o)
{
	auto out = o.words;
	if (!o.file.empty())
		for (auto const &[line, text] : word_lines(read_file(o.file)))
			out.push_back(text);
	if (out.empty())
		throw UsageError("no words given");
	return out;
}

inline MixedContext context(Options const &o)
{
	if (!o.m || !o.n)
		throw UsageError("this command needs --m and --n");
	if (*o.m < 1 || *o.n < 1)
		throw UsageError("--m and --n must be at least 1");
	return MixedContext(*o.m, *o.n);
}

/// Elements of B_N: Artin words under --strands, mixed words (expanded)
/// under --m/--n.
inline BraidWord ambient_word(std::string const &text, Options const &o)
{
	if (o.strands)
	{
		if (o.m || o.n)
			throw UsageError("give either --strands or --m/--n, not both");
		if (*o.strands < 1)
			throw UsageError("--strands must be at least 1");
		return parse_braid_word(text, *o.strands);
	}
	auto ctx = context(o);
	return expand_mixed(parse_mixed_word(text, ctx));
}

/// Elements of B_{m+n} inside a mixed context: Artin words on m+n strands,
/// or mixed words when --mixed is given.
inline BraidWord context_word(std::string const &text, Options const &o, MixedContext const &ctx)
{
	if (o.mixed)
		return expand_mixed(parse_mixed_word(text, ctx));
	return parse_braid_word(text, ctx.strands());
}

inline std::string join(std::vector<int> const &v)
{
	std::string s = "[";
	for (std::size_t k = 0; k < v.size(); ++k)
		s += (k ? ", " : "") + std::to_string(v[k]);
	return s + "]";
}

inline void emit_json(std::ostream &out, Json const &items)
{
	out << (items.size() == 1 ? items[0] : items).dump(2) << "\n";
}

inline int cmd_nf(Options const &o, std::ostream &out)
{
	Json items = Json::array();
	for (auto const &t : word_texts(o))
	{
		auto nf = left_normal_form(ambient_word(t, o));
		if (o.json)
			items.push_back(to_json(nf));
		else
		{
			out << "delta_power: " << nf.delta_power << "\nfactors:";
			for (auto const &f : nf.factors)
				out << " " << join(f.images());
			out << "\n";
		}
	}
	if (o.json)
		emit_json(out, items);
	return Ok;
}

inline int cmd_eq(Options const &o, std::ostream &out)
{
	auto texts = word_texts(o);
	if (texts.size() != 2)
		throw UsageError("eq needs exactly two words");
	auto a = ambient_word(texts[0], o), b = ambient_word(texts[1], o);
	bool const same = equal(a, b);
	if (o.json)
		out << Json{{"equal", same}, {"cross_check", cross_check(a, b)}}.dump(2) << "\n";
	else
		out << (same ? "equal" : "not equal") << "\n";
	return same ? Ok : False;
}

inline int cmd_perm(Options const &o, std::ostream &out)
{
	Json items = Json::array();
	for (auto const &t : word_texts(o))
	{
		auto w = ambient_word(t, o);
		auto p = permutation_of(w);
		Json j{{"permutation", p.images()}};
		std::string moving;
		if (!o.strands)
		{
			auto ctx = context(o);
			auto mp = moving_permutation(w, ctx);
			j["moving"] = mp.images();
			moving = " moving " + join(mp.images());
		}
		if (o.json)
			items.push_back(j);
		else
			out << join(p.images()) << moving << "\n";
	}
	if (o.json)
		emit_json(out, items);
	return Ok;
}

inline int cmd_member(Options const &o, std::ostream &out)
{
	auto ctx = context(o);
	bool all = true;
	Json items = Json::array();
	for (auto const &t : word_texts(o))
	{
		auto w = context_word(t, o, ctx);
		bool const member = is_member(w, ctx);
		bool const pure = member && permutation_of(w).is_identity();
		bool const answer = o.pure ? pure : member;
		all = all && answer;
		if (o.json)
			items.push_back(Json{{"member", member}, {"pure", pure}});
		else
			out << (answer ? (o.pure ? "pure member" : "member") : (o.pure ? "not a pure member" : "not a member"))
			    << "\n";
	}
	if (o.json)
		emit_json(out, items);
	return all ? Ok : False;
}

inline int cmd_comb(Options const &o, std::ostream &out)
{
	auto ctx = context(o);
	Json items = Json::array();
	PrintStyle style{o.unicode};
	for (auto const &t : word_texts(o))
	{
		auto c = comb(context_word(t, o, ctx), ctx);
		if (o.json)
			items.push_back(to_json(c));
		else
			for (int j = ctx.m + 1; j <= ctx.strands(); ++j)
				out << "V" << j << ": " << format_word(c.factor(j), style) << "\n";
	}
	if (o.json)
		emit_json(out, items);
	return Ok;
}

inline int cmd_expand(Options const &o, std::ostream &out)
{
	auto ctx = context(o);
	Json items = Json::array();
	PrintStyle style{o.unicode};
	for (auto const &t : word_texts(o))
	{
		auto w = expand_mixed(parse_mixed_word(t, ctx));
		if (o.json)
			items.push_back(Json{{"strands", w.strands()}, {"word", format_word(w)}});
		else
			out << format_word(w, style) << "\n";
	}
	if (o.json)
		emit_json(out, items);
	return Ok;
}

inline std::string single_word(std::string const &path)
{
	auto lines = word_lines(read_file(path));
	if (lines.size() != 1)
		throw UsageError("'" + path + "' must contain exactly one word");
	return lines[0].second;
}

inline int cmd_split(Options const &o, std::ostream &out)
{
	auto ctx = context(o);
	auto a = context_word(single_word(o.a_file), o, ctx);
	FixedBraid b{parse_braid_word(single_word(o.b_file), ctx.m)};
	if (!is_in_coset(a, b, ctx))
	{
		if (o.json)
			out << Json{{"in_coset", false}}.dump(2) << "\n";
		else
			out << "not in the coset of the fixed braid\n";
		return False;
	}
	auto alpha = split(a, b, ctx);
	if (o.json)
		out << Json{{"in_coset", true}, {"alpha", format_word(alpha)}, {"member", is_member(alpha, ctx)}}.dump(2)
		    << "\n";
	else
		out << format_word(alpha, PrintStyle{o.unicode}) << "\n";
	return Ok;
}

inline int cmd_verify(Options const &o, std::ostream &out)
{
	auto ctx = context(o);
	std::vector<std::string> ids;
	for (auto const &sel : CLI::detail::split(o.families, ','))
	{
		std::vector<std::string> picked;
		try
		{
			picked = select_families(sel);
		}
		catch (BraidError const &e)
		{
			throw UsageError(e.what());
		}
		for (auto const &id : picked)
			if (std::find(ids.begin(), ids.end(), id) == ids.end())
				ids.push_back(id);
	}
	auto report = verify_all(ctx, ids);
	if (o.json)
		out << to_json(report).dump(2) << "\n";
	else
	{
		out << "m=" << ctx.m << " n=" << ctx.n << "\n";
		for (auto const &f : report.families)
		{
			out << "  " << f.id << ": " << f.passed << "/" << f.instances << " instances ("
			    << f.relations << " relations";
			if (!f.skipped.empty())
				out << ", " << f.skipped.size() << " skipped";
			out << ")" << (f.ok() ? "" : "  FAILED") << "\n";
			for (auto const &x : f.failures)
				out << "    fails: " << format_word(x.lhs) << " = " << format_word(x.rhs) << "\n";
		}
		out << (report.ok() ? "all relations hold" : "verification FAILED") << " ("
		    << report.total_instances() << " instances)\n";
	}
	return report.ok() ? Ok : False;
}

inline int cmd_count(Options const &o, std::ostream &out)
{
	auto ctx = context(o);
	auto const gens = count_generators(ctx.m, ctx.n);
	auto const gens_enum = enumerate_generators(ctx.m, ctx.n);
	auto const rels = count_pure_relations(ctx.m, ctx.n);
	auto const rels_enum = enumerate_pure_relations(ctx.m, ctx.n);
	if (o.json)
		out << Json{{"m", ctx.m},
		            {"n", ctx.n},
		            {"generators", gens},
		            {"generators_enumerated", gens_enum},
		            {"pure_relations", rels},
		            {"pure_relations_enumerated", rels_enum}}
		           .dump(2)
		    << "\n";
	else
		out << "generators: " << gens << " (enumerated " << gens_enum << ")\n"
		    << "pure relations: " << rels << " (enumerated " << rels_enum << ")\n";
	return gens == gens_enum ? Ok : False;
}

} // namespace detail

inline int run_command(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Mixed braid groups B_{m,n}: normal forms, membership, combing, presentations"};
	app.require_subcommand(1);
	Options o;

	auto word_opts = [&](CLI::App *c, bool with_words = true) {
		c->add_option("--strands", o.strands, "strand count N (Artin words)");
		c->add_option("--m", o.m, "fixed strands");
		c->add_option("--n", o.n, "moving strands");
		c->add_flag("--json", o.json, "structured output");
		c->add_flag("--unicode", o.unicode, "print sigma glyphs");
		if (with_words)
		{
			c->add_option("-f,--file", o.file, "read words from a file, one per line");
			c->add_option("words", o.words, "words (quote each one)");
		}
	};

	struct Cmd
	{
		char const *name;
		char const *help;
		int (*run)(Options const &, std::ostream &);
	};
	Cmd const cmds[] = {
	    {"nf", "Garside left normal form", detail::cmd_nf},
	    {"eq", "decide equality of two words", detail::cmd_eq},
	    {"perm", "induced permutation (and moving permutation under --m/--n)", detail::cmd_perm},
	    {"member", "membership in B_{m,n}", detail::cmd_member},
	    {"comb", "Artin combed form of a pure mixed braid", detail::cmd_comb},
	    {"expand", "expand a mixed word into an Artin word", detail::cmd_expand},
	    {"split", "decompose A = alpha * B for a fixed braid B", detail::cmd_split},
	    {"verify", "verify the relation catalog", detail::cmd_verify},
	    {"count", "generator and relation counts of P_{m,n}", detail::cmd_count},
	};
	std::vector<std::pair<CLI::App *, Cmd const *>> subs;
	for (auto const &c : cmds)
	{
		auto *sub = app.add_subcommand(c.name, c.help);
		std::string const name = c.name;
		word_opts(sub, name != "split" && name != "verify" && name != "count");
		if (name == "member" || name == "comb" || name == "split")
			sub->add_flag("--mixed", o.mixed, "read words in the mixed alphabet");
		if (name == "member")
			sub->add_flag("--pure", o.pure, "test membership in the pure subgroup");
		if (name == "split")
		{
			sub->add_option("a_file", o.a_file, "file holding A (m+n strands)")->required();
			sub->add_option("b_file", o.b_file, "file holding B (m strands)")->required();
		}
		if (name == "verify")
			sub->add_option("--families", o.families, "comma-separated family ids or groups, or 'all'");
		subs.emplace_back(sub, &c);
	}

	std::vector<char const *> argv{"mixbraid"};
	for (auto const &a : args)
		argv.push_back(a.c_str());
	try
	{
		app.parse(static_cast<int>(argv.size()), argv.data());
	}
	catch (CLI::CallForHelp const &e)
	{
		out << app.help();
		return Ok;
	}
	catch (CLI::CallForAllHelp const &e)
	{
		out << app.help("", CLI::AppFormatMode::All);
		return Ok;
	}
	catch (CLI::ParseError const &e)
	{
		err << "error: " << e.what() << "\n";
		return Usage;
	}

	try
	{
		for (auto const &[sub, c] : subs)
			if (sub->parsed())
				return c->run(o, out);
	}
	catch (ParseError const &e)
	{
		err << "parse error at " << e.what() << "\n";
		return Usage;
	}
	catch (UsageError const &e)
	{
		err << "error: " << e.what() << "\n";
		return Usage;
	}
	catch (TemplateError const &e)
	{
		err << "error: " << e.what() << "\n";
		return Usage;
	}
	catch (BraidError const &e)
	{
		err << "error: " << e.what() << "\n";
		return False;
	}
	return Usage;
}

} // namespace mixbraid::cli
