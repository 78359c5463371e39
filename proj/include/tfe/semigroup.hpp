#pragma once

#include "tfe/tensor.hpp"

namespace tfe {

/**
 * Finite abelian semigroup with composition table and optional zero element.
 * Axioms are verified at construction; a bad table never becomes a value.
 */
class AbelianSemigroup
{
  public:
	AbelianSemigroup() = default;
	AbelianSemigroup(std::vector<std::string> elements, std::vector<std::vector<int>> table,
	                 std::optional<int> zero = std::nullopt)
	    : el_(std::move(elements)), table_(std::move(table)), zero_(zero)
	{
		int n = size();
		if ((int)table_.size() != n)
			fail(errc::input_parse_error, "semigroup table not total");
		for (auto &row : table_) {
			if ((int)row.size() != n)
				fail(errc::input_parse_error, "semigroup table not total");
			for (int v : row)
				if (v < 0 || v >= n)
					fail(errc::index_out_of_range, "semigroup table entry out of range");
		}
		for (int a = 0; a < n; ++a)
			for (int b = 0; b < n; ++b)
				if (table_[(size_t)a][(size_t)b] != table_[(size_t)b][(size_t)a])
					fail(errc::not_commutative, "semigroup not commutative at (" + el_[(size_t)a] +
					                                "," + el_[(size_t)b] + ")");
		for (int a = 0; a < n; ++a)
			for (int b = 0; b < n; ++b)
				for (int c = 0; c < n; ++c)
					if (mul(mul(a, b), c) != mul(a, mul(b, c)))
						fail(errc::not_associative, "semigroup not associative");
		if (zero_) {
			if (*zero_ < 0 || *zero_ >= n)
				fail(errc::bad_zero, "zero element out of range");
			for (int a = 0; a < n; ++a)
				if (mul(*zero_, a) != *zero_)
					fail(errc::bad_zero, "declared zero is not absorbing");
		}
	}

	/** S_E^(2): lambda_a * lambda_b = lambda_{min(a+b,3)}, zero = lambda_3 */
	static AbelianSemigroup SE2()
	{
		std::vector<std::string> el = {"l0", "l1", "l2", "l3"};
		std::vector<std::vector<int>> t(4, std::vector<int>(4));
		for (int a = 0; a < 4; ++a)
			for (int b = 0; b < 4; ++b)
				t[(size_t)a][(size_t)b] = std::min(a + b, 3);
		return AbelianSemigroup(el, t, 3);
	}
	static AbelianSemigroup trivial()
	{
		return AbelianSemigroup({"l0"}, {{0}}, std::nullopt);
	}

	int size() const { return (int)el_.size(); }
	int mul(int a, int b) const { return table_[(size_t)a][(size_t)b]; }
	std::optional<int> zero() const { return zero_; }
	std::string const &label(int a) const { return el_[(size_t)a]; }

	int product(std::vector<int> const &xs) const
	{
		int r = xs.at(0);
		for (size_t i = 1; i < xs.size(); ++i)
			r = mul(r, xs[i]);
		return r;
	}

  private:
	std::vector<std::string> el_;
	std::vector<std::vector<int>> table_;
	std::optional<int> zero_;
};

/** n-selector K_{a1..an}^g in {0,1}: indicator of the product landing on g */
class Selector
{
  public:
	Selector(AbelianSemigroup const &s, int rank) : s_(&s), rank_(rank)
	{
		if (rank < 2)
			fail(errc::rank_mismatch, "selector rank must be >= 2");
	}
	int rank() const { return rank_; }
	int value(std::vector<int> const &idx, int gamma) const
	{
		if ((int)idx.size() != rank_)
			fail(errc::rank_mismatch, "selector index tuple of wrong rank");
		return s_->product(idx) == gamma ? 1 : 0;
	}
	int target(std::vector<int> const &idx) const { return s_->product(idx); }

  private:
	AbelianSemigroup const *s_;
	int rank_;
};

/**
 * S-expanded algebra: generators T_{(A,alpha)} with brackets weighted by the
 * two-selector. Remembers provenance for resonance / 0_S-reduction.
 */
struct ExpandedAlgebra {
	LieSuperAlgebra algebra;
	AbelianSemigroup semigroup;
	// per expanded generator: (original generator, semigroup element)
	std::vector<std::pair<int, int>> origin;

	std::optional<int> find(int orig, int alpha) const
	{
		for (size_t i = 0; i < origin.size(); ++i)
			if (origin[i] == std::make_pair(orig, alpha))
				return (int)i;
		return std::nullopt;
	}
};

inline ExpandedAlgebra s_expand(AbelianSemigroup const &S, LieSuperAlgebra const &g)
{
	ExpandedAlgebra ex;
	ex.semigroup = S;
	ex.algebra = LieSuperAlgebra(g.name() + "@" + "S" + std::to_string(S.size()));
	for (int alpha = 0; alpha < S.size(); ++alpha)
		for (int a = 0; a < g.dim(); ++a) {
			Generator gen = g.gen(a);
			gen.indices.push_back(alpha);
			ex.algebra.add_generator(gen);
			ex.origin.push_back({a, alpha});
		}
	auto id = [&](int a, int alpha) { return alpha * g.dim() + a; };
	for (int alpha = 0; alpha < S.size(); ++alpha)
		for (int beta = alpha; beta < S.size(); ++beta) {
			int gamma = S.mul(alpha, beta);
			for (int a = 0; a < g.dim(); ++a)
				for (int b = (alpha == beta ? a : 0); b < g.dim(); ++b) {
					BracketImage img;
					for (auto &[c, v] : g.bracket(a, b))
						image_add(img, id(c, gamma), v);
					ex.algebra.set_bracket(id(a, alpha), id(b, beta), std::move(img));
				}
		}
	return ex;
}

/** restriction of an expanded algebra to a generator subset, closure verified */
inline ExpandedAlgebra restrict_expansion(ExpandedAlgebra const &ex, std::vector<int> const &keep,
                                          std::string name)
{
	std::vector<int> map(ex.origin.size(), -1);
	ExpandedAlgebra out;
	out.semigroup = ex.semigroup;
	out.algebra = LieSuperAlgebra(std::move(name));
	for (int i : keep) {
		map[(size_t)i] = out.algebra.add_generator(ex.algebra.gen(i));
		out.origin.push_back(ex.origin[(size_t)i]);
	}
	for (size_t i = 0; i < keep.size(); ++i)
		for (size_t j = i; j < keep.size(); ++j) {
			BracketImage img;
			for (auto &[c, v] : ex.algebra.bracket(keep[i], keep[j])) {
				if (map[(size_t)c] < 0)
					fail(errc::not_closed, "restriction is not a subalgebra: [" +
					                           ex.algebra.gen(keep[i]).name() + "," +
					                           ex.algebra.gen(keep[j]).name() + "] hits " +
					                           ex.algebra.gen(c).name());
				image_add(img, map[(size_t)c], v);
			}
			out.algebra.set_bracket(map[(size_t)keep[i]], map[(size_t)keep[j]], std::move(img));
		}
	return out;
}

struct ResonanceViolation {
	int p, q;
	int alpha, beta; // elements violating S_p*S_q subset intersection
};

/**
 * Resonant subalgebra: subspace(A) assigns each original generator its
 * subspace index; partition[p] lists the semigroup subset S_p. The resonance
 * condition is verified against the subspace structure of the original
 * algebra before restricting.
 */
inline ExpandedAlgebra resonant_subalgebra(ExpandedAlgebra const &ex, LieSuperAlgebra const &g,
                                           std::vector<int> const &subspace,
                                           std::vector<std::vector<int>> const &partition)
{
	int nsub = (int)partition.size();
	// i(p,q): which subspaces [V_p, V_q] hits
	std::vector<std::vector<std::vector<bool>>> hits(
	    (size_t)nsub, std::vector<std::vector<bool>>((size_t)nsub, std::vector<bool>((size_t)nsub)));
	for (int a = 0; a < g.dim(); ++a)
		for (int b = 0; b < g.dim(); ++b)
			for (auto &[c, v] : g.bracket(a, b))
				hits[(size_t)subspace[(size_t)a]][(size_t)subspace[(size_t)b]]
				    [(size_t)subspace[(size_t)c]] = true;
	auto in = [&](int p, int alpha) {
		for (int x : partition[(size_t)p])
			if (x == alpha)
				return true;
		return false;
	};
	for (int p = 0; p < nsub; ++p)
		for (int q = 0; q < nsub; ++q)
			for (int alpha : partition[(size_t)p])
				for (int beta : partition[(size_t)q]) {
					int prod = ex.semigroup.mul(alpha, beta);
					for (int r = 0; r < nsub; ++r)
						if (hits[(size_t)p][(size_t)q][(size_t)r] && !in(r, prod))
							fail(errc::not_resonant,
							     "partition not resonant: S_" + std::to_string(p) + "*S_" +
							         std::to_string(q) + " contains " + ex.semigroup.label(prod) +
							         " outside S_" + std::to_string(r));
				}
	std::vector<int> keep;
	for (size_t i = 0; i < ex.origin.size(); ++i) {
		auto [a, alpha] = ex.origin[i];
		if (in(subspace[(size_t)a], alpha))
			keep.push_back((int)i);
	}
	return restrict_expansion(ex, keep, ex.algebra.name() + "_res");
}

/** 0_S-reduction: delete the zero-element sector (images onto it drop) */
inline ExpandedAlgebra zero_reduce(ExpandedAlgebra const &ex)
{
	if (!ex.semigroup.zero())
		fail(errc::no_zero_element, "semigroup has no zero element");
	int z = *ex.semigroup.zero();
	ExpandedAlgebra out;
	out.semigroup = ex.semigroup;
	out.algebra = LieSuperAlgebra(ex.algebra.name() + "_0red");
	std::vector<int> map(ex.origin.size(), -1);
	std::vector<int> keep;
	for (size_t i = 0; i < ex.origin.size(); ++i)
		if (ex.origin[i].second != z) {
			map[i] = out.algebra.add_generator(ex.algebra.gen((int)i));
			out.origin.push_back(ex.origin[i]);
			keep.push_back((int)i);
		}
	for (size_t i = 0; i < keep.size(); ++i)
		for (size_t j = i; j < keep.size(); ++j) {
			BracketImage img;
			for (auto &[c, v] : ex.algebra.bracket(keep[i], keep[j]))
				if (map[(size_t)c] >= 0)
					image_add(img, map[(size_t)c], v);
			out.algebra.set_bracket(map[(size_t)keep[i]], map[(size_t)keep[j]], std::move(img));
		}
	return out;
}

/**
 * Lift an invariant tensor through the expansion:
 *   <T_{A1,a1}...T_{Ar,ar}> = weight_gamma K_{a1..ar}^gamma <T_{A1}...T_{Ar}>.
 * Works on any ExpandedAlgebra whose origin map is onto the base tensor's
 * algebra (full expansion, resonant subalgebra or 0_S-reduction).
 */
inline InvariantTensor expand_tensor(ExpandedAlgebra const &ex, InvariantTensor const &base,
                                     std::vector<Scalar> const &weights)
{
	if ((int)weights.size() != ex.semigroup.size())
		fail(errc::rank_mismatch, "one expansion weight per semigroup element required");
	InvariantTensor T(&ex.algebra, base.rank());
	// a 0_S-reduced algebra (no zero-sector generators left) uses the reduced
	// selector: products landing on the zero element contribute nothing
	bool reduced = false;
	if (auto z = ex.semigroup.zero()) {
		reduced = true;
		for (auto &[orig, alpha] : ex.origin)
			if (alpha == *z)
				reduced = false;
	}
	for (auto &[slots, v] : base.components()) {
		// enumerate all alpha assignments over the expanded generators present;
		// generators without surviving lifts simply contribute nothing
		std::vector<std::vector<int>> lifted((size_t)base.rank());
		bool missing = false;
		for (int i = 0; i < base.rank() && !missing; ++i) {
			for (size_t j = 0; j < ex.origin.size(); ++j)
				if (ex.origin[j].first == slots[(size_t)i])
					lifted[(size_t)i].push_back((int)j);
			missing = lifted[(size_t)i].empty();
		}
		if (missing)
			continue;
		std::vector<size_t> pos((size_t)base.rank(), 0);
		while (true) {
			std::vector<int> key((size_t)base.rank());
			std::vector<int> alphas((size_t)base.rank());
			for (int i = 0; i < base.rank(); ++i) {
				key[(size_t)i] = lifted[(size_t)i][pos[(size_t)i]];
				alphas[(size_t)i] = ex.origin[(size_t)key[(size_t)i]].second;
			}
			int gamma = ex.semigroup.product(alphas);
			Scalar w = weights[(size_t)gamma];
			if (reduced && gamma == *ex.semigroup.zero())
				w = Scalar();
			if (!w.is_zero()) {
				// direct map insert: the graded orbit is produced by the loop itself
				T.set_raw(key, v * w);
			}
			int i = base.rank() - 1;
			while (i >= 0 && ++pos[(size_t)i] == lifted[(size_t)i].size()) {
				pos[(size_t)i] = 0;
				--i;
			}
			if (i < 0)
				break;
		}
	}
	return T;
}

} // namespace tfe
