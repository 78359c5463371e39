#pragma once

#include "tfe/parallel.hpp"
#include "tfe/scalar.hpp"
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tfe {

/** Basis element of a Lie superalgebra: label + canonical index tuple + parity. */
struct Generator {
	std::string label;
	std::vector<int> indices; // antisymmetric pairs stored with a<b
	int parity = 0;           // 0 even, 1 odd (Grassmann)

	std::string name() const
	{
		std::string s = label;
		for (size_t k = 0; k < indices.size(); ++k)
			s += (k ? "," : "_") + std::to_string(indices[k]);
		return s;
	}
	friend bool operator==(Generator const &a, Generator const &b)
	{
		return a.label == b.label && a.indices == b.indices;
	}
};

/** sparse bracket image: list of (generator index, coefficient) */
using BracketImage = std::vector<std::pair<int, Scalar>>;

inline void image_add(BracketImage &img, int gen, Scalar const &c)
{
	if (c.is_zero())
		return;
	for (auto &t : img)
		if (t.first == gen) {
			t.second += c;
			if (t.second.is_zero())
				img.erase(img.begin() + (&t - img.data()));
			return;
		}
	img.push_back({gen, c});
}

inline void image_sort(BracketImage &img)
{
	std::sort(img.begin(), img.end(), [](auto &a, auto &b) { return a.first < b.first; });
}

struct JacobiViolation {
	int a, b, c;
	BracketImage residual;
};

/**
 * Lie superalgebra on a finite graded basis with sparse structure constants.
 * Storage is canonical: brackets are kept for a<=b and completed by graded
 * antisymmetry; values are immutable after construction.
 */
class LieSuperAlgebra
{
  public:
	LieSuperAlgebra() = default;
	explicit LieSuperAlgebra(std::string name) : name_(std::move(name)) {}

	std::string const &name() const { return name_; }
	int dim() const { return (int)basis_.size(); }
	Generator const &gen(int i) const { return basis_[(size_t)i]; }
	int parity(int i) const { return basis_[(size_t)i].parity; }
	std::vector<Generator> const &basis() const { return basis_; }

	int add_generator(Generator g)
	{
		for (auto &b : basis_)
			if (b == g)
				fail(errc::duplicate_generator, "duplicate generator " + g.name());
		basis_.push_back(std::move(g));
		return dim() - 1;
	}
	int find(std::string const &label, std::vector<int> const &idx = {}) const
	{
		for (int i = 0; i < dim(); ++i)
			if (basis_[(size_t)i].label == label && basis_[(size_t)i].indices == idx)
				return i;
		fail(errc::unknown_name, "no generator " + label);
	}
	std::optional<int> try_find(std::string const &label, std::vector<int> const &idx = {}) const
	{
		for (int i = 0; i < dim(); ++i)
			if (basis_[(size_t)i].label == label && basis_[(size_t)i].indices == idx)
				return i;
		return std::nullopt;
	}

	/**
	 * Declare [a,b]; the (b,a) entry is derived via graded antisymmetry.
	 * Declaring both orders inconsistently is an error.
	 */
	void set_bracket(int a, int b, BracketImage img)
	{
		image_sort(img);
		auto key = std::make_pair(a, b);
		auto mirror = flip(a, b, img);
		if (auto it = table_.find(key); it != table_.end() && it->second != img)
			fail(errc::malformed_coefficient,
			     "inconsistent bracket re-declaration [" + gen(a).name() + "," + gen(b).name() + "]");
		if (auto it = table_.find({b, a}); it != table_.end() && it->second != mirror)
			fail(errc::malformed_coefficient,
			     "bracket [" + gen(a).name() + "," + gen(b).name() +
			         "] conflicts with graded antisymmetry of the (b,a) entry");
		if (!img.empty())
			table_[key] = img;
		if (a != b && !mirror.empty())
			table_[{b, a}] = mirror;
	}

	BracketImage const &bracket(int a, int b) const
	{
		static BracketImage const empty;
		auto it = table_.find({a, b});
		return it == table_.end() ? empty : it->second;
	}

	/** bilinear graded bracket of coefficient vectors */
	BracketImage bracket_vec(BracketImage const &x, BracketImage const &y) const
	{
		BracketImage r;
		for (auto &[a, ca] : x)
			for (auto &[b, cb] : y)
				for (auto &[c, s] : bracket(a, b))
					image_add(r, c, ca * cb * s);
		image_sort(r);
		return r;
	}

	/** graded Jacobi residual for one triple (exactly zero on a Lie superalgebra) */
	BracketImage jacobi_residual(int a, int b, int c) const
	{
		BracketImage r;
		auto term = [&](int x, int y, int z, int sgn) {
			for (auto &[k, v] : bracket(x, y))
				for (auto &[k2, v2] : bracket(k, z))
					image_add(r, k2, sgn > 0 ? v * v2 : -(v * v2));
		};
		int pa = parity(a), pb = parity(b), pc = parity(c);
		term(a, b, c, (pa * pc) % 2 ? -1 : 1);
		term(b, c, a, (pb * pa) % 2 ? -1 : 1);
		term(c, a, b, (pc * pb) % 2 ? -1 : 1);
		image_sort(r);
		return r;
	}

	/** brute-force Jacobi sweep over all basis triples (OpenMP kernel) */
	std::vector<JacobiViolation> check_jacobi(bool force_serial = false) const
	{
		int n = dim();
		size_t total = (size_t)n * n * n;
		auto body = [&](size_t t) -> std::optional<JacobiViolation> {
			int a = (int)(t / ((size_t)n * n));
			int b = (int)((t / n) % (size_t)n);
			int c = (int)(t % (size_t)n);
			auto res = jacobi_residual(a, b, c);
			if (res.empty())
				return std::nullopt;
			return JacobiViolation{a, b, c, std::move(res)};
		};
		auto results = force_serial ? serial_map<std::optional<JacobiViolation>>(total, body)
		                            : parallel_map<std::optional<JacobiViolation>>(total, body);
		std::vector<JacobiViolation> bad;
		for (auto &r : results)
			if (r)
				bad.push_back(std::move(*r));
		return bad;
	}

	/** graded antisymmetry of every stored constant (storage invariant check) */
	bool check_graded_antisymmetry() const
	{
		for (auto &[key, img] : table_) {
			auto mirror = flip(key.first, key.second, img);
			auto it = table_.find({key.second, key.first});
			BracketImage const other = it == table_.end() ? BracketImage{} : it->second;
			if (mirror != other)
				return false;
		}
		return true;
	}

	std::map<std::pair<int, int>, BracketImage> const &table() const { return table_; }

  private:
	BracketImage flip(int a, int b, BracketImage img) const
	{
		// [b,a] = -(-1)^{|a||b|} [a,b]
		bool both_odd = parity(a) && parity(b);
		if (!both_odd)
			for (auto &t : img)
				t.second = -t.second;
		return img;
	}

	std::string name_;
	std::vector<Generator> basis_;
	std::map<std::pair<int, int>, BracketImage> table_;
};

} // namespace tfe
