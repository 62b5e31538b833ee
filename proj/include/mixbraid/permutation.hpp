#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace mixbraid {

/// A bijection of {1..N}.
///
/// For a braid, images()[p-1] is the top endpoint of the strand that enters
/// at bottom position p.  Letters are composed bottom-to-top, so the
/// permutation of a product uv is compose(perm(u), perm(v)): apply u first.
class Permutation
{
  public:
	Permutation() = default;

	static Permutation identity(int n)
	{
		Permutation p;
		p.images_.resize(n);
		std::iota(p.images_.begin(), p.images_.end(), 1);
		return p;
	}

	/// The half-twist permutation p -> N+1-p.
	static Permutation reversal(int n)
	{
		Permutation p;
		p.images_.resize(n);
		for (int i = 0; i < n; ++i)
			p.images_[i] = n - i;
		return p;
	}

	/// Builds from one-line notation (1-based images).  Throws on a non-bijection.
	explicit Permutation(std::vector<int> images) : images_(std::move(images))
	{
		std::vector<bool> seen(images_.size(), false);
		for (int v : images_)
		{
			if (v < 1 || v > size() || seen[v - 1])
				throw std::invalid_argument("permutation images are not a bijection");
			seen[v - 1] = true;
		}
	}

	int size() const { return static_cast<int>(images_.size()); }
	int operator()(int p) const { return images_[p - 1]; }
	std::vector<int> const &images() const { return images_; }

	bool is_identity() const
	{
		for (int i = 0; i < size(); ++i)
			if (images_[i] != i + 1)
				return false;
		return true;
	}

	Permutation inverse() const
	{
		Permutation r;
		r.images_.resize(images_.size());
		for (int i = 0; i < size(); ++i)
			r.images_[images_[i] - 1] = i + 1;
		return r;
	}

	/// first, then second.
	friend Permutation compose(Permutation const &first, Permutation const &second)
	{
		if (first.size() != second.size())
			throw std::invalid_argument("permutation size mismatch");
		Permutation r;
		r.images_.resize(first.images_.size());
		for (int i = 0; i < first.size(); ++i)
			r.images_[i] = second(first.images_[i]);
		return r;
	}

	/// Post-composes with the transposition (i i+1): the effect of appending
	/// the crossing sigma_i on top of the braid.
	void swap_values(int i)
	{
		for (int &v : images_)
		{
			if (v == i)
				v = i + 1;
			else if (v == i + 1)
				v = i;
		}
	}

	/// Pre-composes with (i i+1): the effect of a crossing below the braid.
	void swap_positions(int i) { std::swap(images_[i - 1], images_[i]); }

	/// Positions i where the strands entering at i, i+1 cross (left descents).
	bool starts_with(int i) const { return images_[i - 1] > images_[i]; }

	/// Positions i where the strands leaving at i, i+1 have crossed.
	bool finishes_with(int i) const
	{
		int lo = -1, hi = -1;
		for (int p = 0; p < size(); ++p)
		{
			if (images_[p] == i)
				lo = p;
			else if (images_[p] == i + 1)
				hi = p;
		}
		return lo > hi;
	}

	/// Number of inversions; the length of the permutation braid.
	int length() const
	{
		int c = 0;
		for (int a = 0; a < size(); ++a)
			for (int b = a + 1; b < size(); ++b)
				if (images_[a] > images_[b])
					++c;
		return c;
	}

	friend bool operator==(Permutation const &, Permutation const &) = default;
	friend auto operator<=>(Permutation const &, Permutation const &) = default;

  private:
	std::vector<int> images_;
};

} // namespace mixbraid
