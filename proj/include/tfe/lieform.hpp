#pragma once

#include "tfe/algebra.hpp"
#include "tfe/form.hpp"
#include "tfe/tensor.hpp"

namespace tfe {

/** Lie-algebra-valued form: sparse map generator index -> scalar FormExpr */
using LieForm = std::map<int, FormExpr>;

inline LieForm lf_add(LieForm const &a, LieForm const &b)
{
	LieForm r = a;
	for (auto &[k, e] : b) {
		auto it = r.find(k);
		if (it == r.end())
			r[k] = e;
		else {
			it->second += e;
			if (it->second.is_zero())
				r.erase(it);
		}
	}
	return r;
}
inline LieForm lf_neg(LieForm const &a)
{
	LieForm r;
	for (auto &[k, e] : a)
		r[k] = -e;
	return r;
}
inline LieForm lf_sub(LieForm const &a, LieForm const &b) { return lf_add(a, lf_neg(b)); }
inline LieForm lf_scale(LieForm const &a, Coeff const &c)
{
	LieForm r;
	for (auto &[k, e] : a) {
		FormExpr x = e * c;
		if (!x.is_zero())
			r[k] = std::move(x);
	}
	return r;
}
inline LieForm lf_scale(LieForm const &a, Scalar const &s)
{
	return lf_scale(a, Coeff(s));
}
inline bool lf_zero(LieForm const &a)
{
	for (auto &[k, e] : a)
		if (!e.is_zero())
			return false;
	return true;
}

/**
 * Operations on Lie-valued forms over one algebra + one form workspace.
 * Interleave signs (pulling generators through component forms) use the
 * Grassmann parity of the components; monomial commutation is bigraded.
 */
class LieFormOps
{
  public:
	LieFormOps(LieSuperAlgebra const &alg, FormWorkspace &ws) : alg_(&alg), ws_(&ws) {}

	LieSuperAlgebra const &algebra() const { return *alg_; }
	FormWorkspace &ws() const { return *ws_; }

	LieForm d(LieForm const &x) const
	{
		LieForm r;
		for (auto &[k, e] : x) {
			FormExpr de = ws_->d(e);
			if (!de.is_zero())
				r[k] = std::move(de);
		}
		return r;
	}

	/** graded bracket [X,Y]^C = sum (-1)^{p_A * q(Y^B)} X^A ^ Y^B C_AB^C */
	LieForm bracket(LieForm const &x, LieForm const &y) const
	{
		LieForm r;
		for (auto &[a, xa] : x)
			for (auto &[b, yb] : y) {
				auto &br = alg_->bracket(a, b);
				if (br.empty())
					continue;
				FormExpr w = ws_->wedge(xa, yb);
				if (w.is_zero())
					continue;
				if (alg_->parity(a) && component_parity(yb))
					w = -w;
				for (auto &[c, s] : br) {
					FormExpr t = w * s;
					auto it = r.find(c);
					if (it == r.end())
						r[c] = std::move(t);
					else {
						it->second += t;
						if (it->second.is_zero())
							r.erase(it);
					}
				}
			}
		return r;
	}

	/** F = dA + (1/2)[A,A] */
	LieForm curvature(LieForm const &a) const
	{
		return lf_add(d(a), lf_scale(bracket(a, a), Coeff(Scalar(Rational(1, 2)))));
	}

	/** e^{xi} X e^{-xi} as a terminating adjoint series (0-form xi) */
	LieForm ad_series(LieForm const &x, LieForm const &xi, int nmax = 16) const
	{
		LieForm r, term = x;
		for (int k = 0;; ++k) {
			r = lf_add(r, term);
			if (k + 1 >= nmax)
				break;
			term = lf_scale(bracket(xi, term), Coeff(Scalar(Rational(1, k + 1))));
			if (lf_zero(term))
				break;
		}
		return r;
	}

	/**
	 * Gauge transform of a connection by a coset exponential:
	 *   e^{xi}(d + A)e^{-xi} = sum ad_xi^k(A)/k! - sum ad_xi^k(d xi)/(k+1)! .
	 * Exact when ad_xi is nilpotent; otherwise truncated at nmax terms.
	 */
	LieForm conjugate_connection(LieForm const &a, LieForm const &xi, int nmax = 16) const
	{
		LieForm r = ad_series(a, xi, nmax);
		LieForm term = d(xi);
		for (int k = 0;; ++k) {
			r = lf_sub(r, lf_scale(term, Coeff(Scalar(Rational(1, k + 1)))));
			if (k + 1 >= nmax)
				break;
			term = lf_scale(bracket(xi, term), Coeff(Scalar(Rational(1, k + 1))));
			if (lf_zero(term))
				break;
		}
		return r;
	}

	/**
	 * Invariant pairing <X_1 ... X_r>: components wedge with Koszul signs from
	 * pulling each generator rightward past the later components.
	 */
	FormExpr pair(InvariantTensor const &T, std::vector<LieForm> const &xs) const
	{
		if ((int)xs.size() != T.rank())
			fail(errc::rank_mismatch, "pairing rank mismatch");
		if (T.algebra() != alg_)
			fail(errc::basis_mismatch, "tensor over a different algebra");
		FormExpr r;
		std::vector<int> slots((size_t)xs.size());
		pair_rec(T, xs, 0, slots, r);
		return r;
	}

  private:
	void pair_rec(InvariantTensor const &T, std::vector<LieForm> const &xs, size_t i,
	              std::vector<int> &slots, FormExpr &acc) const
	{
		if (i == xs.size()) {
			Scalar v = T.value(slots);
			if (v.is_zero())
				return;
			int sign = 1;
			for (size_t a = 0; a < slots.size(); ++a)
				if (alg_->parity(slots[a]))
					for (size_t b = a + 1; b < slots.size(); ++b)
						if (component_parity(xs[b].at(slots[b])))
							sign = -sign;
			FormExpr w = ws_->one();
			for (size_t a = 0; a < slots.size(); ++a)
				w = ws_->wedge(w, xs[a].at(slots[a]));
			w = w * (sign < 0 ? -v : v);
			acc += w;
			return;
		}
		for (auto &[g, e] : xs[i]) {
			slots[i] = g;
			pair_rec(T, xs, i + 1, slots, acc);
		}
	}

	int component_parity(FormExpr const &e) const
	{
		int p = -1;
		for (auto &[m, c] : e.terms()) {
			int q = ws_->parity(m);
			if (p < 0)
				p = q;
			else if (p != q)
				fail(errc::malformed_coefficient, "component of mixed Grassmann parity");
		}
		return p < 0 ? 0 : p;
	}

	LieSuperAlgebra const *alg_;
	FormWorkspace *ws_;
};

} // namespace tfe
