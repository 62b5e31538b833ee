#pragma once

#include "mixbraid/mixed_braid.hpp"
#include "mixbraid/word_problem.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mixbraid {

// ---------------------------------------------------------------------------
// Relation templates
//
// A family is plain text:
//   variables   "i:1..M j:M+1..M+N"       bound in this order, ranges may use
//                                          M, N and earlier variables
//   condition   "i<j<s | r<i<j<s"          alternatives split by '|', each a
//                                          ','-separated list of comparison
//                                          chains; empty means always
//   lhs, rhs    "a[i,j]^-1 a[r,s] a[i,j]"  letters a[x,y] (pure), a[x] (loop
//                                          a_x), s[x] (crossing); exponent
//                                          ^-1, or a sign variable ^e / ^-e /
//                                          ^f / ^-f ranging over +-1
// Crossing indices are absolute (s[m+1] is the first moving crossing) unless
// the family is marked relabelled, in which case s[1] is the first one.
// ---------------------------------------------------------------------------

struct RelationFamily
{
	std::string id;
	std::string summary;
	std::string variables;
	std::string condition;
	std::string lhs;
	std::string rhs;
	bool relabelled = false;
};

struct RelationInstance
{
	std::string family;
	/// Index and sign variables in binding order (signs last).
	std::vector<std::pair<std::string, int>> bindings;
	MixedWord lhs;
	MixedWord rhs;
};

struct SkippedTuple
{
	std::vector<std::pair<std::string, int>> bindings;
	std::string reason;
};

struct Instantiation
{
	std::vector<RelationInstance> instances;
	/// Distinct index tuples (a relation written with +- counts once).
	std::size_t relations = 0;
	std::vector<SkippedTuple> skipped;
};

class TemplateError : public std::invalid_argument
{
  public:
	using std::invalid_argument::invalid_argument;
};

namespace detail {

using Env = std::map<std::string, int, std::less<>>;

/// Linear index expressions: integers, M, N and variable names joined by + and -.
class ExprParser
{
  public:
	explicit ExprParser(std::string_view s, std::size_t pos = 0) : s_(s), pos_(pos) {}

	int parse(Env const &env)
	{
		int value = term(env);
		for (;;)
		{
			skip_space();
			if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-'))
			{
				char op = s_[pos_++];
				int t = term(env);
				value = op == '+' ? value + t : value - t;
			}
			else
				return value;
		}
	}

	std::size_t pos() const { return pos_; }

  private:
	void skip_space()
	{
		while (pos_ < s_.size() && s_[pos_] == ' ')
			++pos_;
	}

	int term(Env const &env)
	{
		skip_space();
		if (pos_ >= s_.size())
			throw TemplateError("expression ends early in '" + std::string(s_) + "'");
		if (std::isdigit(static_cast<unsigned char>(s_[pos_])))
		{
			int v = 0;
			while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
				v = v * 10 + (s_[pos_++] - '0');
			return v;
		}
		if (std::isalpha(static_cast<unsigned char>(s_[pos_])))
		{
			std::string name(1, s_[pos_++]);
			auto it = env.find(name);
			if (it == env.end())
				throw TemplateError("unbound index '" + name + "' in '" + std::string(s_) + "'");
			return it->second;
		}
		throw TemplateError("unexpected '" + std::string(1, s_[pos_]) + "' in '" +
		                    std::string(s_) + "'");
	}

	std::string_view s_;
	std::size_t pos_;
};

inline int eval(std::string_view expr, Env const &env)
{
	ExprParser p(expr);
	int v = p.parse(env);
	if (p.pos() != expr.size())
		throw TemplateError("trailing text in expression '" + std::string(expr) + "'");
	return v;
}

inline std::vector<std::string> split(std::string_view s, char sep)
{
	std::vector<std::string> out;
	std::string cur;
	for (char c : s)
	{
		if (c == sep)
		{
			out.push_back(cur);
			cur.clear();
		}
		else
			cur += c;
	}
	out.push_back(cur);
	return out;
}

inline std::string trim(std::string_view s)
{
	auto b = s.find_first_not_of(' ');
	if (b == std::string_view::npos)
		return {};
	auto e = s.find_last_not_of(' ');
	return std::string(s.substr(b, e - b + 1));
}

/// A chain like "i<j<r<s" or "k>=j+1".
inline bool holds_chain(std::string_view chain, Env const &env)
{
	static constexpr std::string_view ops[] = {"<=", ">=", "!=", "<", ">", "="};
	std::vector<std::string> operands;
	std::vector<std::string> relations;
	std::size_t start = 0;
	for (std::size_t p = 0; p < chain.size();)
	{
		bool matched = false;
		for (auto op : ops)
		{
			if (chain.substr(p, op.size()) == op)
			{
				operands.push_back(std::string(chain.substr(start, p - start)));
				relations.emplace_back(op);
				p += op.size();
				start = p;
				matched = true;
				break;
			}
		}
		if (!matched)
			++p;
	}
	operands.push_back(std::string(chain.substr(start)));
	if (relations.empty())
		throw TemplateError("condition '" + std::string(chain) + "' has no comparison");
	for (std::size_t k = 0; k < relations.size(); ++k)
	{
		int a = eval(trim(operands[k]), env), b = eval(trim(operands[k + 1]), env);
		auto const &r = relations[k];
		bool ok = r == "<"    ? a < b
		          : r == "<=" ? a <= b
		          : r == ">"  ? a > b
		          : r == ">=" ? a >= b
		          : r == "="  ? a == b
		                      : a != b;
		if (!ok)
			return false;
	}
	return true;
}

inline bool holds(std::string_view condition, Env const &env)
{
	if (trim(condition).empty())
		return true;
	for (auto const &alt : split(condition, '|'))
	{
		bool all = true;
		for (auto const &chain : split(alt, ','))
			if (!holds_chain(trim(chain), env))
			{
				all = false;
				break;
			}
		if (all)
			return true;
	}
	return false;
}

struct VariableRange
{
	std::string name;
	std::string lo, hi;
};

inline std::vector<VariableRange> parse_variables(std::string_view text)
{
	std::vector<VariableRange> out;
	for (auto const &tok : split(text, ' '))
	{
		if (tok.empty())
			continue;
		auto colon = tok.find(':');
		auto dots = tok.find("..");
		if (colon == std::string::npos || dots == std::string::npos || dots < colon)
			throw TemplateError("bad variable range '" + tok + "'");
		out.push_back({tok.substr(0, colon), tok.substr(colon + 1, dots - colon - 1),
		               tok.substr(dots + 2)});
	}
	return out;
}

/// One letter of a relation template, unevaluated.
struct LetterTemplate
{
	char head = 'a';
	std::vector<std::string> indices;
	int fixed_sign = 1;
	char sign_var = 0; // 'e', 'f', or 0
};

inline std::vector<LetterTemplate> parse_letters(std::string_view word)
{
	std::vector<LetterTemplate> out;
	for (auto const &raw : split(word, ' '))
	{
		auto tok = trim(raw);
		if (tok.empty())
			continue;
		LetterTemplate t;
		t.head = tok[0];
		if ((t.head != 'a' && t.head != 's') || tok.size() < 4 || tok[1] != '[')
			throw TemplateError("bad template letter '" + tok + "'");
		auto close = tok.find(']');
		if (close == std::string::npos)
			throw TemplateError("unclosed index list in '" + tok + "'");
		for (auto const &ix : split(tok.substr(2, close - 2), ','))
			t.indices.push_back(trim(ix));
		auto rest = tok.substr(close + 1);
		if (!rest.empty())
		{
			if (rest == "^-1")
				t.fixed_sign = -1;
			else if (rest.size() == 2 && rest[0] == '^' && (rest[1] == 'e' || rest[1] == 'f'))
				t.sign_var = rest[1];
			else if (rest.size() == 3 && rest.substr(0, 2) == "^-" && (rest[2] == 'e' || rest[2] == 'f'))
			{
				t.sign_var = rest[2];
				t.fixed_sign = -1;
			}
			else
				throw TemplateError("bad exponent in '" + tok + "'");
		}
		if ((t.head == 's' && t.indices.size() != 1) || t.indices.size() > 2)
			throw TemplateError("wrong index count in '" + tok + "'");
		out.push_back(std::move(t));
	}
	return out;
}

/// Evaluates a template letter; nullopt with `why` filled when the letter
/// is not a generator of the context.
inline std::optional<MixedGen> build_letter(LetterTemplate const &t, Env const &env,
                                            MixedContext const &ctx, bool relabelled,
                                            std::string &why)
{
	int sign = t.fixed_sign;
	if (t.sign_var)
		sign *= env.at(std::string(1, t.sign_var));
	MixedGen g;
	if (t.head == 's')
	{
		int k = eval(t.indices[0], env);
		g = MixedGen::cross(relabelled ? k : k - ctx.m, sign);
		if (!is_valid(g, ctx))
		{
			why = "s" + std::to_string(k) + " is not a crossing of the moving strands";
			return std::nullopt;
		}
	}
	else if (t.indices.size() == 1)
	{
		int i = eval(t.indices[0], env);
		g = MixedGen::loop(i, sign);
		if (!is_valid(g, ctx))
		{
			why = "a" + std::to_string(i) + " is not a loop generator";
			return std::nullopt;
		}
	}
	else
	{
		int i = eval(t.indices[0], env), j = eval(t.indices[1], env);
		g = MixedGen::pure(i, j, sign);
		if (!is_valid(g, ctx))
		{
			why = "a[" + std::to_string(i) + "," + std::to_string(j) + "] is not a generator";
			return std::nullopt;
		}
	}
	return g;
}

} // namespace detail

/// Every relation family, in catalog order.
inline std::vector<RelationFamily> const &relation_catalog()
{
	static std::vector<RelationFamily> const catalog = {
	    // pure braid relations among the a_{ij}, j > m
	    {"P1", "loops on disjoint or nested strand pairs commute",
	     "i:1..M+N-1 j:M+1..M+N r:1..M+N-1 s:M+1..M+N", "i<j<r<s | r<i<j<s",
	     "a[i,j]^-1 a[r,s] a[i,j]", "a[r,s]"},
	    {"P2", "conjugating a_js by a_ij", "i:1..M+N-1 j:M+1..M+N s:M+1..M+N", "i<j<s",
	     "a[i,j]^-1 a[j,s] a[i,j]", "a[i,s] a[j,s] a[i,s]^-1"},
	    {"P3", "conjugating a_is by a_ij", "i:1..M+N-1 j:M+1..M+N s:M+1..M+N", "i<j<s",
	     "a[i,j]^-1 a[i,s] a[i,j]", "a[i,s] a[j,s] a[i,s] a[j,s]^-1 a[i,s]^-1"},
	    {"P4", "conjugating a_rs by a_ij for interleaved strands",
	     "i:1..M+N-1 j:M+1..M+N r:1..M+N-1 s:M+1..M+N", "i<r<j<s",
	     "a[i,j]^-1 a[r,s] a[i,j]",
	     "a[i,s] a[j,s] a[i,s]^-1 a[j,s]^-1 a[r,s] a[j,s] a[i,s] a[j,s]^-1 a[i,s]^-1"},

	    // mixed relations: crossings acting on loops by conjugation
	    {"M1", "crossing away from both strands commutes with the loop",
	     "i:1..M+N-1 j:M+1..M+N k:M+1..M+N-1", "i<j, k<=i-2 | i<j, i+1<=k<=j-2 | i<j, k>=j+1",
	     "s[k]^-1 a[i,j]^e s[k]", "a[i,j]^e"},
	    {"M2", "crossing just below the inner strand", "i:1..M+N-1 j:M+1..M+N k:M+1..M+N-1",
	     "i<j, k=i-1", "s[k]^-1 a[i,j]^e s[k]", "a[i-1,j]^e"},
	    {"M3", "crossing at the inner strand", "i:1..M+N-1 j:M+1..M+N k:M+1..M+N-1", "i<j, k=i",
	     "s[k]^-1 a[i,j]^e s[k]", "a[i,j] a[i+1,j]^e a[i,j]^-1"},
	    {"M4", "crossing just below the outer strand", "i:1..M+N-1 j:M+1..M+N k:M+1..M+N-1",
	     "i<j, k=j-1", "s[k]^-1 a[i,j]^e s[k]", "a[i,j-1]^e"},
	    {"M5", "crossing at the outer strand", "i:1..M+N-1 j:M+1..M+N k:M+1..M+N-1", "i<j, k=j",
	     "s[k]^-1 a[i,j]^e s[k]", "a[i,j] a[i,j+1]^e a[i,j]^-1"},

	    // relations among the moving crossings
	    {"Sigma1", "distant crossings commute", "i:M+1..M+N-1 j:M+1..M+N-1", "i+1<j",
	     "s[i] s[j]", "s[j] s[i]"},
	    {"Sigma2", "braid relation", "i:M+1..M+N-2", "", "s[i] s[i+1] s[i]",
	     "s[i+1] s[i] s[i+1]"},
	    {"Sigma3", "square of a crossing is the adjacent loop", "i:M+1..M+N-2", "", "s[i] s[i]",
	     "a[i,i+1]"},

	    // reduced families: loops of fixed strands only
	    {"P'1", "nested loops around fixed strands commute",
	     "i:1..M r:1..M j:M+1..M+N s:M+1..M+N", "r<i<j<s", "a[i,j] a[r,s]", "a[r,s] a[i,j]"},
	    {"P'2", "conjugating a_js by a_ij, i fixed", "i:1..M j:M+1..M+N s:M+1..M+N", "i<j<s",
	     "a[i,j]^-1 a[j,s] a[i,j]", "a[i,s] a[j,s] a[i,s]^-1"},
	    {"P'3", "conjugating a_is by a_ij, i fixed", "i:1..M j:M+1..M+N s:M+1..M+N", "i<j<s",
	     "a[i,j]^-1 a[i,s] a[i,j]", "a[i,s] a[j,s] a[i,s] a[j,s]^-1 a[i,s]^-1"},
	    {"P'4", "conjugating a_rs by a_ij, i fixed",
	     "i:1..M r:1..M+N-1 j:M+1..M+N s:M+1..M+N", "i<r<j<s", "a[i,j]^-1 a[r,s] a[i,j]",
	     "a[i,s] a[j,s] a[i,s]^-1 a[j,s]^-1 a[r,s] a[j,s] a[i,s] a[j,s]^-1 a[i,s]^-1"},
	    {"M'1", "distant crossing commutes with a fixed-strand loop",
	     "i:1..M j:M+1..M+N k:M+1..M+N-1", "k<=j-2 | k>=j+1", "s[k]^-1 a[i,j]^e s[k]",
	     "a[i,j]^e"},
	    {"M'2", "loop to strand j is the crossing-conjugate of the loop to j-1",
	     "i:1..M j:M+1..M+N", "", "a[i,j]^e", "s[j-1] a[i,j-1]^e s[j-1]^-1"},
	    {"M'3", "crossing at the outer strand of a fixed-strand loop", "i:1..M j:M+1..M+N", "",
	     "s[j]^-1 a[i,j]^e s[j]", "a[i,j] a[i,j+1]^e a[i,j]^-1"},

	    // presentation on a_{ij} (i fixed) and the moving crossings
	    {"R1", "distant crossing commutes with a fixed-strand loop",
	     "i:1..M j:M+1..M+N k:M+1..M+N-1", "k<=j-2 | k>=j+1", "s[k]^-1 a[i,j]^e s[k]",
	     "a[i,j]^e"},
	    {"R2", "defining conjugation of the loop to strand j", "i:1..M j:M+1..M+N", "",
	     "a[i,j]^e", "s[j-1] a[i,j-1]^e s[j-1]^-1"},
	    {"R3", "crossing at the outer strand of a fixed-strand loop", "i:1..M j:M+1..M+N", "",
	     "s[j]^-1 a[i,j]^e s[j]", "a[i,j] a[i,j+1]^e a[i,j]^-1"},
	    {"R4", "loops of different fixed strands to adjacent moving strands commute",
	     "i:1..M r:1..M j:M+1..M+N", "r<i", "a[i,j]^e a[r,j+1]^f", "a[r,j+1]^f a[i,j]^e"},
	    {"R3-alt", "R3 rewritten as a degree-four relation", "i:1..M j:M+1..M+N", "",
	     "s[j] a[i,j] s[j] a[i,j]^e", "a[i,j]^e s[j] a[i,j] s[j]"},
	    {"R4-alt", "R4 with the outer loop written as a crossing-conjugate",
	     "i:1..M r:1..M j:M+1..M+N", "r<i", "a[i,j]^e s[j] a[r,j]^f s[j]^-1",
	     "s[j] a[r,j]^f s[j]^-1 a[i,j]^e"},

	    // irredundant presentation on a_{i,m+1} and the moving crossings
	    {"I1", "far crossings commute with the loops", "i:1..M k:M+2..M+N-1", "",
	     "s[k]^-1 a[i,M+1]^e s[k]", "a[i,M+1]^e"},
	    {"I2", "degree-four relation between a loop and the first crossing", "i:1..M", "",
	     "a[i,M+1]^e s[M+1] a[i,M+1] s[M+1]", "s[M+1] a[i,M+1] s[M+1] a[i,M+1]^e"},
	    {"I3", "a loop commutes with the crossing-conjugate of a lower loop", "i:1..M r:1..M",
	     "r<i", "a[i,M+1]^e s[M+1] a[r,M+1]^f s[M+1]^-1",
	     "s[M+1] a[r,M+1]^f s[M+1]^-1 a[i,M+1]^e"},
	    {"I3-alt", "I3 with the conjugate written as a loop to strand m+2", "i:1..M r:1..M",
	     "r<i", "a[i,M+1]^e a[r,M+2]^f", "a[r,M+2]^f a[i,M+1]^e"},

	    // final presentation in the relabelled alphabet a_1..a_m, s_1..s_{n-1}
	    {"F1", "distant crossings commute", "k:1..N-1 j:1..N-1", "k+1<j", "s[k] s[j]",
	     "s[j] s[k]", true},
	    {"F2", "braid relation", "k:1..N-1", "", "s[k] s[k+1] s[k]", "s[k+1] s[k] s[k+1]", true},
	    {"F3", "loops commute with crossings above the first", "i:1..M k:2..N-1", "",
	     "a[i] s[k]", "s[k] a[i]", true},
	    {"F4", "degree-four relation between a loop and s1", "i:1..M", "",
	     "a[i] s[1] a[i] s[1]", "s[1] a[i] s[1] a[i]", true},
	    {"F5", "a loop commutes with the s1-conjugate of a lower loop", "i:1..M r:1..M", "r<i",
	     "a[i] s[1] a[r] s[1]^-1", "s[1] a[r] s[1]^-1 a[i]", true},
	};
	return catalog;
}

inline RelationFamily const &find_family(std::string_view id)
{
	for (auto const &f : relation_catalog())
		if (f.id == id)
			return f;
	throw BraidError("unknown relation family '" + std::string(id) + "'");
}

/// Family ids selected by a group name ("P", "M", "Sigma", "P'", "M'", "R",
/// "I", "F", "all") or a single id.
inline std::vector<std::string> select_families(std::string_view selector)
{
	std::vector<std::string> out;
	for (auto const &f : relation_catalog())
	{
		bool pick = selector == "all" || f.id == selector;
		if (!pick && f.id.size() > selector.size() && f.id.substr(0, selector.size()) == selector)
		{
			// group prefix: the remainder must start with a digit
			pick = std::isdigit(static_cast<unsigned char>(f.id[selector.size()])) != 0;
		}
		if (pick)
			out.push_back(f.id);
	}
	if (out.empty())
		throw BraidError("no relation family matches '" + std::string(selector) + "'");
	return out;
}

inline Instantiation instantiate(RelationFamily const &family, MixedContext const &ctx)
{
	using namespace detail;
	auto const vars = parse_variables(family.variables);
	auto const lhs = parse_letters(family.lhs);
	auto const rhs = parse_letters(family.rhs);
	std::vector<char> sign_vars;
	for (auto const *side : {&lhs, &rhs})
		for (auto const &t : *side)
			if (t.sign_var && std::find(sign_vars.begin(), sign_vars.end(), t.sign_var) == sign_vars.end())
				sign_vars.push_back(t.sign_var);
	std::sort(sign_vars.begin(), sign_vars.end());

	Instantiation out;
	Env env{{"M", ctx.m}, {"N", ctx.n}};
	std::vector<std::pair<std::string, int>> bound;

	auto emit = [&]() {
		if (!holds(family.condition, env))
			return;
		std::size_t const combos = std::size_t{1} << sign_vars.size();
		bool counted = false;
		for (std::size_t mask = 0; mask < combos; ++mask)
		{
			auto bindings = bound;
			for (std::size_t v = 0; v < sign_vars.size(); ++v)
			{
				int s = (mask >> (sign_vars.size() - 1 - v)) & 1 ? -1 : 1;
				env[std::string(1, sign_vars[v])] = s;
				bindings.emplace_back(std::string(1, sign_vars[v]), s);
			}
			std::string why;
			std::vector<MixedGen> l, r;
			bool ok = true;
			for (auto const &t : lhs)
				if (auto g = build_letter(t, env, ctx, family.relabelled, why))
					l.push_back(*g);
				else
					ok = false;
			for (auto const &t : rhs)
				if (ok)
				{
					if (auto g = build_letter(t, env, ctx, family.relabelled, why))
						r.push_back(*g);
					else
						ok = false;
				}
			if (!ok)
			{
				out.skipped.push_back({bound, why});
				return;
			}
			if (!counted)
			{
				++out.relations;
				counted = true;
			}
			out.instances.push_back({family.id, std::move(bindings), MixedWord(ctx, std::move(l)),
			                         MixedWord(ctx, std::move(r))});
		}
	};

	auto recurse = [&](auto &&self, std::size_t depth) -> void {
		if (depth == vars.size())
		{
			emit();
			return;
		}
		auto const &v = vars[depth];
		int lo = eval(v.lo, env), hi = eval(v.hi, env);
		for (int x = lo; x <= hi; ++x)
		{
			env[v.name] = x;
			bound.emplace_back(v.name, x);
			self(self, depth + 1);
			bound.pop_back();
		}
		env.erase(v.name);
	};
	recurse(recurse, 0);
	return out;
}

inline Instantiation instantiate(std::string_view family_id, MixedContext const &ctx)
{
	return instantiate(find_family(family_id), ctx);
}

inline bool verify_instance(RelationInstance const &inst)
{
	return equal(expand_mixed(inst.lhs), expand_mixed(inst.rhs));
}

struct FamilyReport
{
	std::string id;
	std::size_t relations = 0;
	std::size_t instances = 0;
	std::size_t passed = 0;
	std::vector<RelationInstance> failures;
	std::vector<SkippedTuple> skipped;

	bool ok() const { return failures.empty() && passed == instances; }
};

struct VerificationReport
{
	MixedContext ctx;
	std::vector<FamilyReport> families;

	std::size_t total_instances() const
	{
		std::size_t t = 0;
		for (auto const &f : families)
			t += f.instances;
		return t;
	}

	std::size_t total_failures() const
	{
		std::size_t t = 0;
		for (auto const &f : families)
			t += f.failures.size();
		return t;
	}

	bool ok() const
	{
		for (auto const &f : families)
			if (!f.ok())
				return false;
		return true;
	}
};

inline VerificationReport verify_all(MixedContext const &ctx, std::vector<std::string> const &family_ids)
{
	VerificationReport report{ctx, {}};
	for (auto const &id : family_ids)
	{
		auto inst = instantiate(id, ctx);
		FamilyReport fr;
		fr.id = id;
		fr.relations = inst.relations;
		fr.instances = inst.instances.size();
		fr.skipped = std::move(inst.skipped);
		for (auto &ri : inst.instances)
		{
			if (verify_instance(ri))
				++fr.passed;
			else
				fr.failures.push_back(std::move(ri));
		}
		report.families.push_back(std::move(fr));
	}
	return report;
}

inline VerificationReport verify_all(MixedContext const &ctx)
{
	return verify_all(ctx, select_families("all"));
}

// ---------------------------------------------------------------------------
// Counting
// ---------------------------------------------------------------------------

/// Generators of P_{m,n}: n(n+2m-1)/2.
inline std::int64_t count_generators(std::int64_t m, std::int64_t n)
{
	return n * (n + 2 * m - 1) / 2;
}

/// |{(i,j) : 1 <= i < j, m+1 <= j <= m+n}| by enumeration.
inline std::int64_t enumerate_generators(int m, int n)
{
	std::int64_t c = 0;
	for (int j = m + 1; j <= m + n; ++j)
		for (int i = 1; i < j; ++i)
			++c;
	return c;
}

/// Relations of the standard presentation of P_N:
/// (1*2^2 + 2*3^2 + ... + (N-2)(N-1)^2) / 2.
inline std::int64_t pure_braid_relation_count(std::int64_t strands)
{
	std::int64_t s = 0;
	for (std::int64_t k = 1; k <= strands - 2; ++k)
		s += k * (k + 1) * (k + 1);
	return s / 2;
}

/// ((m-1)m^2 + m(m+1)^2 + ... + (m+n-2)(m+n-1)^2)/2 - (m-1) m n (n+2m-1)/4,
/// taken as stated.
inline std::int64_t count_pure_relations(std::int64_t m, std::int64_t n)
{
	std::int64_t s = 0;
	for (std::int64_t k = m - 1; k <= m + n - 2; ++k)
		s += k * (k + 1) * (k + 1);
	return s / 2 - (m - 1) * m * n * (n + 2 * m - 1) / 4;
}

/// Index tuples of the four pure braid relation families for (m, n).
inline std::int64_t enumerate_pure_relations(int m, int n)
{
	MixedContext ctx(m, n);
	std::int64_t c = 0;
	for (auto id : {"P1", "P2", "P3", "P4"})
		c += static_cast<std::int64_t>(instantiate(id, ctx).relations);
	return c;
}

} // namespace mixbraid
