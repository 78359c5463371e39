#pragma once

#include "tfe/coeff.hpp"
#include "tfe/error.hpp"
#include <cstdint>
#include <map>
#include <variant>

namespace tfe {

using Mono = std::vector<uint16_t>; // generator ids, canonically ordered

/**
 * Element of the free graded differential algebra: canonical wedge monomials
 * over the declared form generators with Coeff coefficients.
 * Sign rule is bigraded: swapping generators costs (-1)^{deg*deg + par*par};
 * a generator with (deg+par) odd squares to zero.
 */
class FormExpr
{
  public:
	FormExpr() = default;

	bool is_zero() const { return t_.empty(); }
	auto const &terms() const { return t_; }
	size_t size() const { return t_.size(); }

	void add(Mono const &m, Coeff const &c)
	{
		if (c.is_zero())
			return;
		auto it = t_.find(m);
		if (it == t_.end())
			t_.emplace(m, c);
		else {
			it->second += c;
			if (it->second.is_zero())
				t_.erase(it);
		}
	}

	friend FormExpr operator+(FormExpr const &a, FormExpr const &b)
	{
		FormExpr r = a;
		for (auto &[m, c] : b.t_)
			r.add(m, c);
		return r;
	}
	friend FormExpr operator-(FormExpr const &a, FormExpr const &b) { return a + (-b); }
	FormExpr operator-() const
	{
		FormExpr r = *this;
		for (auto &t : r.t_)
			t.second = -t.second;
		return r;
	}
	FormExpr &operator+=(FormExpr const &b)
	{
		for (auto &[m, c] : b.t_)
			add(m, c);
		return *this;
	}
	friend FormExpr operator*(FormExpr const &a, Coeff const &c)
	{
		FormExpr r;
		for (auto &[m, cc] : a.t_)
			r.add(m, cc * c);
		return r;
	}
	friend FormExpr operator*(FormExpr const &a, Scalar const &s)
	{
		FormExpr r;
		for (auto &[m, cc] : a.t_)
			r.add(m, cc * s);
		return r;
	}
	friend bool operator==(FormExpr const &a, FormExpr const &b) { return a.t_ == b.t_; }
	friend bool operator!=(FormExpr const &a, FormExpr const &b) { return !(a == b); }

  private:
	std::map<Mono, Coeff> t_;
};

struct DRuleZero {};
struct DRulePartner {
	int partner;
};
// explicit rewrite (Maurer-Cartan style) expressions are installed after
// generator creation since they may reference later generators
struct DRuleExpr {
	FormExpr expr;
};
using DRule = std::variant<DRuleZero, DRulePartner, DRuleExpr>;

struct FormGen {
	std::string name;
	int degree = 0;
	int parity = 0; // Grassmann / Lie parity
	DRule drule = DRuleZero{};
};

/**
 * Registry of form generators plus the wedge/d operations. All expressions
 * produced by one workspace share its generator table.
 */
class FormWorkspace
{
  public:
	int add(std::string name, int degree, int parity, DRule rule = DRuleZero{})
	{
		for (auto &g : gens_)
			if (g.name == name)
				fail(errc::duplicate_generator, "form generator " + name);
		gens_.push_back({std::move(name), degree, parity, std::move(rule)});
		return (int)gens_.size() - 1;
	}
	/** generator together with a fresh partner representing its d */
	int add_with_partner(std::string const &name, int degree, int parity)
	{
		int g = add(name, degree, parity);
		int p = add("d" + name, degree + 1, parity, DRuleZero{});
		gens_[(size_t)g].drule = DRulePartner{p};
		return g;
	}
	void set_drule(int g, FormExpr rule) { gens_[(size_t)g].drule = DRuleExpr{std::move(rule)}; }

	FormGen const &gen(int i) const { return gens_[(size_t)i]; }
	int find(std::string const &name) const
	{
		for (size_t i = 0; i < gens_.size(); ++i)
			if (gens_[i].name == name)
				return (int)i;
		fail(errc::unknown_name, "no form generator " + name);
	}
	int partner(int g) const
	{
		if (auto *p = std::get_if<DRulePartner>(&gens_[(size_t)g].drule))
			return p->partner;
		fail(errc::missing_d_rule, gens_[(size_t)g].name + " has no partner");
	}
	size_t size() const { return gens_.size(); }

	/** sphere one-form generators dy, dybar (created on first use) */
	int dy()
	{
		if (dy_ < 0)
			dy_ = add("dy", 1, 0);
		return dy_;
	}
	int dybar()
	{
		if (dyb_ < 0)
			dyb_ = add("dyb", 1, 0);
		return dyb_;
	}

	FormExpr one() const
	{
		FormExpr e;
		e.add({}, Coeff(1));
		return e;
	}
	FormExpr generator(int g) const
	{
		FormExpr e;
		e.add({(uint16_t)g}, Coeff(1));
		return e;
	}
	FormExpr constant(Coeff const &c) const
	{
		FormExpr e;
		e.add({}, c);
		return e;
	}

	int degree(Mono const &m) const
	{
		int d = 0;
		for (auto g : m)
			d += gens_[g].degree;
		return d;
	}
	int parity(Mono const &m) const
	{
		int p = 0;
		for (auto g : m)
			p += gens_[g].parity;
		return p & 1;
	}

	/** canonicalize a concatenated monomial; returns false when it vanishes */
	bool normalize(Mono &m, int &sign) const
	{
		sign = 1;
		for (size_t i = 1; i < m.size(); ++i) {
			size_t j = i;
			while (j > 0 && m[j - 1] > m[j]) {
				auto &a = gens_[m[j - 1]];
				auto &b = gens_[m[j]];
				if (((a.degree & 1) & (b.degree & 1)) ^ ((a.parity & 1) & (b.parity & 1)))
					sign = -sign;
				std::swap(m[j - 1], m[j]);
				--j;
			}
		}
		for (size_t i = 1; i < m.size(); ++i)
			if (m[i] == m[i - 1]) {
				auto &g = gens_[m[i]];
				if ((g.degree + g.parity) & 1)
					return false;
			}
		return true;
	}

	FormExpr wedge(FormExpr const &a, FormExpr const &b) const
	{
		FormExpr r;
		for (auto &[ma, ca] : a.terms())
			for (auto &[mb, cb] : b.terms()) {
				Mono m = ma;
				m.insert(m.end(), mb.begin(), mb.end());
				int sign;
				if (!normalize(m, sign))
					continue;
				Coeff c = ca * cb;
				r.add(m, sign < 0 ? -c : c);
			}
		return r;
	}

	FormExpr d_of_generator(int g) const
	{
		auto &rule = gens_[(size_t)g].drule;
		if (std::holds_alternative<DRuleZero>(rule))
			return {};
		if (auto *p = std::get_if<DRulePartner>(&rule))
			return generator(p->partner);
		return std::get<DRuleExpr>(rule).expr;
	}

	/**
	 * Exterior derivative: graded Leibniz over the monomial with the sign of the
	 * accumulated form degree, plus d on coefficients in y,ybar emitting dy,dybar
	 * wedged from the left.
	 */
	FormExpr d(FormExpr const &x)
	{
		FormExpr r;
		for (auto &[m, c] : x.terms()) {
			if (c.depends_y()) {
				Coeff cy = c.deriv_y(2), cyb = c.deriv_y(3);
				FormExpr mono;
				mono.add(m, Coeff(1));
				if (!cy.is_zero())
					r += wedge(constant(cy), wedge(generator(dy()), mono));
				if (!cyb.is_zero())
					r += wedge(constant(cyb), wedge(generator(dybar()), mono));
			}
			int degpre = 0;
			for (size_t i = 0; i < m.size(); ++i) {
				FormExpr dg = d_of_generator(m[i]);
				if (!dg.is_zero()) {
					FormExpr pre, post;
					pre.add(Mono(m.begin(), m.begin() + (long)i), c);
					post.add(Mono(m.begin() + (long)i + 1, m.end()), Coeff(1));
					FormExpr term = wedge(pre, wedge(dg, post));
					if (degpre & 1)
						term = -term;
					r += term;
				}
				degpre += gens_[m[i]].degree;
			}
		}
		return r;
	}

	/**
	 * Fibre integration over the sphere: extract the beta^betabar coefficient
	 * (terms carrying dy^dybar, coefficient f with f*(1+y ybar)^2 constant in
	 * y,ybar) and replace it by the symbolic volume V_S2. Terms without the
	 * area element integrate to zero.
	 */
	FormExpr fibre_integrate(FormExpr const &x)
	{
		FormExpr r;
		int iy = dy(), iyb = dybar();
		Scalar vol = Scalar::param("V_S2");
		for (auto &[m, c] : x.terms()) {
			Mono rest;
			bool hasy = false, hasyb = false;
			for (auto g : m) {
				if ((int)g == iy)
					hasy = true;
				else if ((int)g == iyb)
					hasyb = true;
				else
					rest.push_back(g);
			}
			if (!hasy || !hasyb)
				continue;
			// write the canonical monomial as sign * dy^dyb^rest
			Mono tgt;
			tgt.push_back((uint16_t)iy);
			tgt.push_back((uint16_t)iyb);
			tgt.insert(tgt.end(), rest.begin(), rest.end());
			int sign;
			if (!normalize(tgt, sign))
				continue;
			// c * dy^dyb = [c*(1+y ybar)^2] * beta^betabar
			Coeff onep = Coeff(1) + Coeff::y() * Coeff::ybar();
			Scalar s = (c * onep * onep).scalar_value(); // throws ResidualYDependence otherwise
			r.add(rest, Coeff(s * vol * Scalar(Rational(sign))));
		}
		return r;
	}

	std::string str(FormExpr const &x) const
	{
		if (x.is_zero())
			return "0";
		std::string s;
		for (auto &[m, c] : x.terms()) {
			if (!s.empty())
				s += "  +  ";
			std::string mono;
			for (auto g : m)
				mono += (mono.empty() ? "" : "^") + gens_[g].name;
			s += "(" + c.str() + ") " + (mono.empty() ? "1" : mono);
		}
		return s;
	}

  private:
	std::vector<FormGen> gens_;
	int dy_ = -1, dyb_ = -1;
};

} // namespace tfe
