#pragma once

#include "mixbraid/braid_word.hpp"
#include "mixbraid/mixed_braid.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace mixbraid {

/// Text grammar for words:
///
///   s<k>        crossing (Artin sigma_k, or moving crossing sigma_k in mixed mode)
///   a<i>        loop generator a_i (mixed mode only)
///   a[<i>,<j>]  pure generator a_{i,j}
///   ^-1         optional inverse suffix
///
/// Tokens are whitespace-separated; '#' comments to end of line.
class ParseError : public std::invalid_argument
{
  public:
	ParseError(std::string const &what, int line, int column)
	    : std::invalid_argument(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
	      line_(line), column_(column)
	{
	}

	int line() const { return line_; }
	int column() const { return column_; }

  private:
	int line_;
	int column_;
};

namespace detail {

struct RawToken
{
	char head = 's';
	std::vector<int> indices;
	int sign = 1;
	int line = 1, column = 1;
};

class Lexer
{
  public:
	explicit Lexer(std::string_view text) : text_(text) {}

	std::vector<RawToken> tokens()
	{
		std::vector<RawToken> out;
		for (;;)
		{
			skip_blank();
			if (at_end())
				return out;
			out.push_back(token());
		}
	}

  private:
	bool at_end() const { return pos_ >= text_.size(); }
	char peek() const { return at_end() ? '\0' : text_[pos_]; }

	void advance()
	{
		if (text_[pos_] == '\n')
		{
			++line_;
			column_ = 1;
		}
		else
			++column_;
		++pos_;
	}

	void skip_blank()
	{
		while (!at_end())
		{
			if (peek() == '#')
				while (!at_end() && peek() != '\n')
					advance();
			else if (std::isspace(static_cast<unsigned char>(peek())))
				advance();
			else
				return;
		}
	}

	[[noreturn]] void fail(std::string const &what, int line, int column)
	{
		throw ParseError(what, line, column);
	}

	int number()
	{
		int const l = line_, c = column_;
		if (!std::isdigit(static_cast<unsigned char>(peek())))
			fail("expected an index", l, c);
		long v = 0;
		while (std::isdigit(static_cast<unsigned char>(peek())))
		{
			v = v * 10 + (peek() - '0');
			if (v > 1'000'000)
				fail("index too large", l, c);
			advance();
		}
		return static_cast<int>(v);
	}

	RawToken token()
	{
		RawToken t;
		t.line = line_;
		t.column = column_;
		char const head = peek();
		if (head != 's' && head != 'a')
		{
			std::string word;
			for (auto p = pos_; p < text_.size() && !std::isspace(static_cast<unsigned char>(text_[p])); ++p)
				word += text_[p];
			fail("unknown token '" + word + "'", t.line, t.column);
		}
		t.head = head;
		advance();
		if (head == 'a' && peek() == '[')
		{
			advance();
			t.indices.push_back(number());
			if (peek() != ',')
				fail("expected ',' in pure generator", line_, column_);
			advance();
			t.indices.push_back(number());
			if (peek() != ']')
				fail("expected ']' in pure generator", line_, column_);
			advance();
		}
		else
			t.indices.push_back(number());
		if (peek() == '^')
		{
			int const l = line_, c = column_;
			advance();
			if (peek() != '-')
				fail("inverse suffix must be ^-1", l, c);
			advance();
			if (peek() != '1')
				fail("inverse suffix must be ^-1", l, c);
			advance();
			t.sign = -1;
		}
		if (!at_end() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != '#')
			fail(std::string("unexpected '") + peek() + "' after generator", line_, column_);
		return t;
	}

	std::string_view text_;
	std::size_t pos_ = 0;
	int line_ = 1;
	int column_ = 1;
};

} // namespace detail

/// Artin mode: s<k> is sigma_k of B_N; a[i,j] expands to the pure generator.
inline BraidWord parse_braid_word(std::string_view text, int strands)
{
	std::vector<ArtinGen> out;
	for (auto const &t : detail::Lexer(text).tokens())
	{
		if (t.head == 's')
		{
			if (t.indices[0] < 1 || t.indices[0] >= strands)
				throw ParseError("s" + std::to_string(t.indices[0]) + " out of range for " +
				                     std::to_string(strands) + " strands",
				                 t.line, t.column);
			out.push_back({t.indices[0], t.sign});
		}
		else if (t.indices.size() == 2)
		{
			int const i = t.indices[0], j = t.indices[1];
			if (i < 1 || i >= j || j > strands)
				throw ParseError("a[" + std::to_string(i) + "," + std::to_string(j) +
				                     "] out of range for " + std::to_string(strands) + " strands",
				                 t.line, t.column);
			auto e = expand_pure_gen(i, j, strands, t.sign);
			out.insert(out.end(), e.letters().begin(), e.letters().end());
		}
		else
			throw ParseError("loop generator a" + std::to_string(t.indices[0]) +
			                     " needs a mixed context (--m/--n)",
			                 t.line, t.column);
	}
	return BraidWord(strands, std::move(out));
}

inline MixedWord parse_mixed_word(std::string_view text, MixedContext const &ctx)
{
	std::vector<MixedGen> out;
	for (auto const &t : detail::Lexer(text).tokens())
	{
		MixedGen g;
		if (t.head == 's')
			g = MixedGen::cross(t.indices[0], t.sign);
		else if (t.indices.size() == 1)
			g = MixedGen::loop(t.indices[0], t.sign);
		else
			g = MixedGen::pure(t.indices[0], t.indices[1], t.sign);
		if (!is_valid(g, ctx))
			throw ParseError(describe(g) + " out of range for m=" + std::to_string(ctx.m) +
			                     ", n=" + std::to_string(ctx.n),
			                 t.line, t.column);
		out.push_back(g);
	}
	return MixedWord(ctx, std::move(out));
}

/// Non-empty lines of a file after comment stripping, with their 1-based
/// line numbers.
inline std::vector<std::pair<int, std::string>> word_lines(std::string_view text)
{
	std::vector<std::pair<int, std::string>> out;
	int line = 0;
	std::size_t start = 0;
	while (start <= text.size())
	{
		auto end = text.find('\n', start);
		if (end == std::string_view::npos)
			end = text.size();
		++line;
		auto body = text.substr(start, end - start);
		auto hash = body.find('#');
		auto code = body.substr(0, hash);
		if (code.find_first_not_of(" \t\r") != std::string_view::npos)
			out.emplace_back(line, std::string(body));
		start = end + 1;
	}
	return out;
}

struct PrintStyle
{
	bool unicode = false;
};

namespace detail {
inline std::string suffix(int sign, PrintStyle style)
{
	if (sign > 0)
		return {};
	return style.unicode ? "⁻¹" : "^-1";
}
} // namespace detail

inline std::string format_word(BraidWord const &w, PrintStyle style = {})
{
	std::string out;
	for (auto g : w.letters())
	{
		if (!out.empty())
			out += ' ';
		out += (style.unicode ? "σ" : "s") + std::to_string(g.index) + detail::suffix(g.sign, style);
	}
	return out;
}

inline std::string format_letter(MixedGen const &g, PrintStyle style = {})
{
	std::string s;
	switch (g.kind)
	{
	case MixedGen::Kind::Loop:
		s = "a" + std::to_string(g.i);
		break;
	case MixedGen::Kind::Cross:
		s = (style.unicode ? "σ" : "s") + std::to_string(g.i);
		break;
	case MixedGen::Kind::Pure:
		s = "a[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
		break;
	}
	return s + detail::suffix(g.sign, style);
}

inline std::string format_word(std::vector<MixedGen> const &letters, PrintStyle style = {})
{
	std::string out;
	for (auto const &g : letters)
	{
		if (!out.empty())
			out += ' ';
		out += format_letter(g, style);
	}
	return out;
}

inline std::string format_word(MixedWord const &w, PrintStyle style = {})
{
	return format_word(w.letters(), style);
}

} // namespace mixbraid
