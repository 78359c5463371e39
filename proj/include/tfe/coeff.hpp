#pragma once

#include "tfe/scalar.hpp"
#include <array>

namespace tfe {

/**
 * Form-expression coefficients: polynomials in the homotopy parameters t,s and
 * the sphere coordinates y,ybar over Scalar, divided by a power of (1+y*ybar).
 * Every rational function the sphere calculus produces lives here; a canonical
 * representative divides out (1+y*ybar) whenever possible.
 */
class Coeff
{
  public:
	// exponent order: t, s, y, ybar
	using Key = std::array<int16_t, 4>;

	Coeff() = default;
	Coeff(int64_t n) : Coeff(Scalar(n)) {}
	Coeff(Scalar const &s)
	{
		if (!s.is_zero())
			num_.push_back({{0, 0, 0, 0}, s});
	}
	static Coeff term(Key k, Scalar const &s)
	{
		Coeff c;
		if (!s.is_zero())
			c.num_.push_back({k, s});
		return c;
	}
	static Coeff t() { return term({1, 0, 0, 0}, Scalar(1)); }
	static Coeff s() { return term({0, 1, 0, 0}, Scalar(1)); }
	static Coeff y() { return term({0, 0, 1, 0}, Scalar(1)); }
	static Coeff ybar() { return term({0, 0, 0, 1}, Scalar(1)); }
	/** 1/(1+y*ybar)^k */
	static Coeff inv_onepyyb(int k)
	{
		Coeff c(1);
		c.den_ = k;
		return c;
	}

	bool is_zero() const { return num_.empty(); }
	int denom_pow() const { return den_; }
	auto const &num_terms() const { return num_; }

	bool depends_t() const { return depends(0); }
	bool depends_s() const { return depends(1); }
	bool depends_y() const { return depends(2) || depends(3) || den_ != 0; }

	friend Coeff operator+(Coeff const &a, Coeff const &b)
	{
		// common denominator (1+yyb)^max
		int d = std::max(a.den_, b.den_);
		Coeff r;
		r.den_ = d;
		r.num_ = mul_onepyyb(a.num_, d - a.den_);
		for (auto &[k, s] : mul_onepyyb(b.num_, d - b.den_))
			r.add_num(k, s);
		r.normalize();
		return r;
	}
	friend Coeff operator-(Coeff const &a, Coeff const &b) { return a + (-b); }
	Coeff operator-() const
	{
		Coeff r = *this;
		for (auto &t : r.num_)
			t.second = -t.second;
		return r;
	}
	friend Coeff operator*(Coeff const &a, Coeff const &b)
	{
		Coeff r;
		r.den_ = a.den_ + b.den_;
		for (auto &[ka, sa] : a.num_)
			for (auto &[kb, sb] : b.num_) {
				Key k = {int16_t(ka[0] + kb[0]), int16_t(ka[1] + kb[1]),
				         int16_t(ka[2] + kb[2]), int16_t(ka[3] + kb[3])};
				r.add_num(k, sa * sb);
			}
		r.normalize();
		return r;
	}
	friend Coeff operator*(Coeff const &a, Scalar const &s)
	{
		Coeff r;
		r.den_ = a.den_;
		for (auto &[k, sa] : a.num_)
			r.add_num(k, sa * s);
		return r;
	}
	Coeff &operator+=(Coeff const &b) { return *this = *this + b; }
	Coeff &operator*=(Coeff const &b) { return *this = *this * b; }

	friend bool operator==(Coeff const &a, Coeff const &b)
	{
		return a.den_ == b.den_ && a.num_ == b.num_;
	}
	friend bool operator!=(Coeff const &a, Coeff const &b) { return !(a == b); }

	/** partial derivative in y (idx 2) or ybar (idx 3), quotient rule over (1+y ybar)^den */
	Coeff deriv_y(int idx) const
	{
		Coeff r;
		r.den_ = den_ == 0 ? 0 : den_ + 1;
		// d(num)/(1+u)^k : (dnum*(1+u) - k*num*conj_var)/(1+u)^{k+1}, u = y*ybar
		for (auto &[k, s] : num_) {
			if (k[idx] > 0) {
				Key kk = k;
				kk[idx] = int16_t(kk[idx] - 1);
				Scalar c = s * Scalar(Rational(k[idx]));
				if (den_ == 0)
					r.add_num(kk, c);
				else {
					r.add_num(kk, c); // * 1
					Key k2 = kk;
					k2[2] = int16_t(k2[2] + 1);
					k2[3] = int16_t(k2[3] + 1);
					r.add_num(k2, c); // * y*ybar
				}
			}
			if (den_ != 0) {
				// -k * num * (other var)
				Key k2 = k;
				k2[idx == 2 ? 3 : 2] = int16_t(k2[idx == 2 ? 3 : 2] + 1);
				r.add_num(k2, s * Scalar(Rational(-den_)));
			}
		}
		r.normalize();
		return r;
	}

	/** exact definite integral over t in [0,1]; s survives untouched */
	Coeff integrate_t() const
	{
		if (den_ != 0 || depends_y())
			fail(errc::non_polynomial_coefficient, "t-integration with y-dependence");
		Coeff r;
		for (auto &[k, s] : num_) {
			Key kk = k;
			kk[0] = 0;
			r.add_num(kk, s * Scalar(Rational(1, k[0] + 1)));
		}
		return r;
	}

	/** exact iterated integral: int_0^1 dt int_0^t ds */
	Coeff integrate_st() const
	{
		if (den_ != 0 || depends_y())
			fail(errc::non_polynomial_coefficient, "st-integration with y-dependence");
		Coeff r;
		for (auto &[k, s] : num_) {
			Key kk = k;
			kk[0] = kk[1] = 0;
			r.add_num(kk, s * Scalar(Rational(1, (k[1] + 1) * (k[0] + k[1] + 2))));
		}
		return r;
	}

	/** the constant Scalar part; requires no t,s,y dependence */
	Scalar scalar_value() const
	{
		if (num_.empty())
			return Scalar();
		if (den_ != 0 || num_.size() != 1 || num_[0].first != Key{0, 0, 0, 0})
			fail(errc::residual_y_dependence, "coefficient not constant: " + str());
		return num_[0].second;
	}

	std::string str() const
	{
		if (num_.empty())
			return "0";
		std::string s;
		for (auto &[k, c] : num_) {
			if (!s.empty())
				s += " + ";
			std::string m;
			char const *vn[4] = {"t", "s", "y", "yb"};
			for (int v = 0; v < 4; ++v)
				if (k[v] != 0) {
					m += std::string(vn[v]);
					if (k[v] != 1)
						m += "^" + std::to_string(k[v]);
					m += "*";
				}
			s += "(" + c.str() + ")*" + (m.empty() ? "1" : m.substr(0, m.size() - 1));
		}
		if (den_ != 0)
			s = "[" + s + "]/(1+y*yb)^" + std::to_string(den_);
		return s;
	}

  private:
	bool depends(int idx) const
	{
		for (auto &[k, s] : num_)
			if (k[idx] != 0)
				return true;
		return false;
	}
	void add_num(Key const &k, Scalar const &s)
	{
		if (s.is_zero())
			return;
		auto it = std::lower_bound(num_.begin(), num_.end(), k,
		                           [](auto const &t, Key const &kk) { return t.first < kk; });
		if (it != num_.end() && it->first == k) {
			it->second += s;
			if (it->second.is_zero())
				num_.erase(it);
		} else
			num_.insert(it, {k, s});
	}
	static std::vector<std::pair<Key, Scalar>> mul_onepyyb(std::vector<std::pair<Key, Scalar>> v,
	                                                       int k)
	{
		// multiply by (1+y*ybar)^k
		for (; k > 0; --k) {
			std::vector<std::pair<Key, Scalar>> w;
			for (auto &[key, s] : v) {
				w.push_back({key, s});
				Key k2 = key;
				k2[2] = int16_t(k2[2] + 1);
				k2[3] = int16_t(k2[3] + 1);
				w.push_back({k2, s});
			}
			std::sort(w.begin(), w.end(), [](auto &a, auto &b) { return a.first < b.first; });
			std::vector<std::pair<Key, Scalar>> out;
			for (auto &t : w) {
				if (!out.empty() && out.back().first == t.first) {
					out.back().second += t.second;
					if (out.back().second.is_zero())
						out.pop_back();
				} else
					out.push_back(t);
			}
			v = std::move(out);
		}
		return v;
	}

	/** divide out (1+y*ybar) while the numerator allows it */
	void normalize()
	{
		while (den_ > 0 && !num_.empty()) {
			// group terms by (t,s, y-yb difference); within a group the terms form a
			// univariate polynomial in u = y*ybar; divide that by (1+u).
			std::map<std::tuple<int, int, int>, std::map<int, Scalar>> groups;
			for (auto &[k, s] : num_) {
				int shift = k[2] - k[3];
				int u = std::min(k[2], k[3]);
				groups[{k[0], k[1], shift}][u] = s;
			}
			std::vector<std::pair<Key, Scalar>> quot;
			bool ok = true;
			for (auto &[g, poly] : groups) {
				auto [pt, ps, shift] = g;
				int maxu = poly.rbegin()->first;
				// synthetic division by (1+u), from the top
				std::map<int, Scalar> q;
				Scalar rem;
				Scalar carry;
				for (int u = maxu; u >= 1; --u) {
					Scalar c = carry;
					auto it = poly.find(u);
					if (it != poly.end())
						c += it->second;
					q[u - 1] = c;
					carry = -c;
				}
				{
					Scalar c = carry;
					auto it = poly.find(0);
					if (it != poly.end())
						c += it->second;
					rem = c;
				}
				if (!rem.is_zero()) {
					ok = false;
					break;
				}
				for (auto &[u, s] : q) {
					if (s.is_zero())
						continue;
					Key k = {int16_t(pt), int16_t(ps), int16_t(u + std::max(shift, 0)),
					         int16_t(u + std::max(-shift, 0))};
					quot.push_back({k, s});
				}
			}
			if (!ok)
				break;
			std::sort(quot.begin(), quot.end(),
			          [](auto &a, auto &b) { return a.first < b.first; });
			num_ = std::move(quot);
			--den_;
		}
		if (num_.empty())
			den_ = 0;
	}

	std::vector<std::pair<Key, Scalar>> num_;
	int den_ = 0;
};

} // namespace tfe
