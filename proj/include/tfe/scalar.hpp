#pragma once

#include "tfe/rational.hpp"
#include <algorithm>
#include <map>
#include <vector>

namespace tfe {

/** Interned symbolic parameter names (l, kappa, alpha0, mu0, gamma, R, V_S2, ...). */
class Params
{
  public:
	static int id(std::string const &name)
	{
		auto &t = table();
		auto it = t.index.find(name);
		if (it != t.index.end())
			return it->second;
		int n = (int)t.names.size();
		t.names.push_back(name);
		t.index[name] = n;
		return n;
	}
	static std::string const &name(int id) { return table().names[(size_t)id]; }

  private:
	struct Table {
		std::vector<std::string> names;
		std::map<std::string, int> index;
	};
	static Table &table()
	{
		static Table t;
		return t;
	}
};

/** Laurent monomial in the parameters: sorted (paramId, exponent), exponents nonzero (may be negative). */
class ParamMono
{
  public:
	ParamMono() = default;
	ParamMono(int param, int exp)
	{
		if (exp != 0)
			f_.push_back({param, exp});
	}
	static ParamMono one() { return {}; }

	bool trivial() const { return f_.empty(); }
	auto const &factors() const { return f_; }

	friend ParamMono operator*(ParamMono const &a, ParamMono const &b)
	{
		ParamMono r;
		size_t i = 0, j = 0;
		while (i < a.f_.size() || j < b.f_.size()) {
			if (j == b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first))
				r.f_.push_back(a.f_[i++]);
			else if (i == a.f_.size() || b.f_[j].first < a.f_[i].first)
				r.f_.push_back(b.f_[j++]);
			else {
				int e = a.f_[i].second + b.f_[j].second;
				if (e != 0)
					r.f_.push_back({a.f_[i].first, e});
				++i, ++j;
			}
		}
		return r;
	}
	ParamMono inverse() const
	{
		ParamMono r = *this;
		for (auto &f : r.f_)
			f.second = -f.second;
		return r;
	}
	ParamMono pow(int k) const
	{
		ParamMono r = *this;
		for (auto &f : r.f_)
			f.second *= k;
		return k == 0 ? one() : r;
	}

	friend bool operator==(ParamMono const &a, ParamMono const &b) { return a.f_ == b.f_; }
	friend bool operator<(ParamMono const &a, ParamMono const &b) { return a.f_ < b.f_; }

	std::string str() const
	{
		std::string s;
		for (auto &[p, e] : f_) {
			if (!s.empty())
				s += "*";
			s += Params::name(p);
			if (e != 1)
				s += "^" + std::to_string(e);
		}
		return s;
	}

  private:
	std::vector<std::pair<int, int>> f_;
};

/**
 * Exact scalar: finite sum of Gaussian-rational coefficients times Laurent
 * monomials in named parameters. The coefficient field of the whole engine.
 */
class Scalar
{
  public:
	Scalar() = default;
	Scalar(int64_t n)
	{
		if (n != 0)
			t_.push_back({ParamMono::one(), GRat(n)});
	}
	Scalar(Rational r) : Scalar(GRat(r)) {}
	Scalar(GRat c)
	{
		if (!c.is_zero())
			t_.push_back({ParamMono::one(), c});
	}
	Scalar(GRat c, ParamMono m)
	{
		if (!c.is_zero())
			t_.push_back({std::move(m), c});
	}
	static Scalar i() { return Scalar(GRat::i()); }
	static Scalar param(std::string const &name, int exp = 1)
	{
		return Scalar(GRat(1), ParamMono(Params::id(name), exp));
	}

	bool is_zero() const { return t_.empty(); }
	bool single_term() const { return t_.size() == 1; }
	auto const &terms() const { return t_; }

	/** the Gaussian-rational part when the scalar is parameter-free */
	GRat rational_value() const
	{
		if (t_.empty())
			return GRat();
		if (t_.size() != 1 || !t_[0].first.trivial())
			fail(errc::malformed_coefficient, "scalar is not a pure number: " + str());
		return t_[0].second;
	}

	friend Scalar operator+(Scalar const &a, Scalar const &b)
	{
		Scalar r;
		size_t i = 0, j = 0;
		while (i < a.t_.size() || j < b.t_.size()) {
			if (j == b.t_.size() || (i < a.t_.size() && a.t_[i].first < b.t_[j].first))
				r.t_.push_back(a.t_[i++]);
			else if (i == a.t_.size() || b.t_[j].first < a.t_[i].first)
				r.t_.push_back(b.t_[j++]);
			else {
				GRat c = a.t_[i].second + b.t_[j].second;
				if (!c.is_zero())
					r.t_.push_back({a.t_[i].first, c});
				++i, ++j;
			}
		}
		return r;
	}
	friend Scalar operator-(Scalar const &a, Scalar const &b) { return a + (-b); }
	Scalar operator-() const
	{
		Scalar r = *this;
		for (auto &t : r.t_)
			t.second = -t.second;
		return r;
	}
	friend Scalar operator*(Scalar const &a, Scalar const &b)
	{
		Scalar r;
		for (auto &[ma, ca] : a.t_)
			for (auto &[mb, cb] : b.t_)
				r.add_term(ma * mb, ca * cb);
		return r;
	}
	Scalar &operator+=(Scalar const &b) { return *this = *this + b; }
	Scalar &operator-=(Scalar const &b) { return *this = *this - b; }
	Scalar &operator*=(Scalar const &b) { return *this = *this * b; }

	/** division; requires b to be a single term (monomial times Gaussian rational) */
	friend Scalar operator/(Scalar const &a, Scalar const &b)
	{
		if (b.t_.size() != 1)
			fail(errc::malformed_coefficient, "scalar division needs single-term divisor");
		Scalar r;
		ParamMono mi = b.t_[0].first.inverse();
		for (auto &[m, c] : a.t_)
			r.add_term(m * mi, c / b.t_[0].second);
		return r;
	}

	friend bool operator==(Scalar const &a, Scalar const &b) { return a.t_ == b.t_; }
	friend bool operator!=(Scalar const &a, Scalar const &b) { return !(a == b); }
	friend bool operator<(Scalar const &a, Scalar const &b)
	{
		auto key = [](Scalar const &s) {
			std::vector<std::pair<std::string, std::string>> k;
			for (auto &[m, c] : s.t_)
				k.push_back({m.str(), c.str()});
			return k;
		};
		return key(a) < key(b);
	}

	std::string str() const
	{
		if (t_.empty())
			return "0";
		std::string s;
		for (auto &[m, c] : t_) {
			if (!s.empty())
				s += " + ";
			if (m.trivial())
				s += c.str();
			else if (c.is_one())
				s += m.str();
			else
				s += c.str() + "*" + m.str();
		}
		return s;
	}

	void add_term(ParamMono const &m, GRat const &c)
	{
		if (c.is_zero())
			return;
		auto it = std::lower_bound(t_.begin(), t_.end(), m,
		                           [](auto const &t, ParamMono const &mm) { return t.first < mm; });
		if (it != t_.end() && it->first == m) {
			it->second += c;
			if (it->second.is_zero())
				t_.erase(it);
		} else
			t_.insert(it, {m, c});
	}

  private:
	std::vector<std::pair<ParamMono, GRat>> t_;
};

} // namespace tfe
