#pragma once

#include "tfe/error.hpp"
#include <cstdint>
#include <numeric>
#include <string>

namespace tfe {

/**
 * Exact rational over int64 with overflow-checked arithmetic.
 * Intermediate products run in __int128; a result that does not fit back
 * into int64 after reduction throws rather than wrapping.
 */
class Rational
{
  public:
	Rational() = default;
	Rational(int64_t n) : num_(n), den_(1) {}
	Rational(int64_t n, int64_t d) : num_(n), den_(d) { reduce128(num_, den_); }

	int64_t num() const { return num_; }
	int64_t den() const { return den_; }

	bool is_zero() const { return num_ == 0; }
	bool is_one() const { return num_ == 1 && den_ == 1; }
	bool is_integer() const { return den_ == 1; }

	friend Rational operator+(Rational const &a, Rational const &b)
	{
		return make128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
		               (__int128)a.den_ * b.den_);
	}
	friend Rational operator-(Rational const &a, Rational const &b)
	{
		return make128((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
		               (__int128)a.den_ * b.den_);
	}
	friend Rational operator*(Rational const &a, Rational const &b)
	{
		return make128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
	}
	friend Rational operator/(Rational const &a, Rational const &b)
	{
		if (b.num_ == 0)
			fail(errc::domain_error, "rational division by zero");
		return make128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
	}
	Rational operator-() const
	{
		Rational r;
		r.num_ = -num_;
		r.den_ = den_;
		return r;
	}
	Rational &operator+=(Rational const &b) { return *this = *this + b; }
	Rational &operator-=(Rational const &b) { return *this = *this - b; }
	Rational &operator*=(Rational const &b) { return *this = *this * b; }
	Rational &operator/=(Rational const &b) { return *this = *this / b; }

	friend bool operator==(Rational const &a, Rational const &b)
	{
		return a.num_ == b.num_ && a.den_ == b.den_;
	}
	friend bool operator!=(Rational const &a, Rational const &b) { return !(a == b); }
	friend bool operator<(Rational const &a, Rational const &b)
	{
		return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
	}

	std::string str() const
	{
		if (den_ == 1)
			return std::to_string(num_);
		return std::to_string(num_) + "/" + std::to_string(den_);
	}

	/** n! as a rational; throws on overflow like everything else */
	static Rational factorial(int n)
	{
		Rational r(1);
		for (int k = 2; k <= n; ++k)
			r *= Rational(k);
		return r;
	}
	static Rational binom(int n, int k)
	{
		if (k < 0 || k > n)
			return Rational(0);
		return factorial(n) / (factorial(k) * factorial(n - k));
	}

  private:
	static void reduce128(int64_t &n, int64_t &d)
	{
		__int128 nn = n, dd = d;
		Rational r = make128(nn, dd);
		n = r.num_;
		d = r.den_;
	}
	static Rational make128(__int128 n, __int128 d)
	{
		if (d == 0)
			fail(errc::domain_error, "zero denominator");
		if (d < 0) {
			n = -n;
			d = -d;
		}
		__int128 g = gcd128(n < 0 ? -n : n, d);
		if (g > 1) {
			n /= g;
			d /= g;
		}
		if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
			fail(errc::overflow, "rational overflow");
		Rational r;
		r.num_ = (int64_t)n;
		r.den_ = (int64_t)d;
		return r;
	}
	static __int128 gcd128(__int128 a, __int128 b)
	{
		while (b) {
			__int128 t = a % b;
			a = b;
			b = t;
		}
		return a == 0 ? 1 : a;
	}

	int64_t num_ = 0;
	int64_t den_ = 1;
};

/** Gaussian rational a + b*i */
class GRat
{
  public:
	GRat() = default;
	GRat(int64_t n) : re_(n) {}
	GRat(Rational re) : re_(re) {}
	GRat(Rational re, Rational im) : re_(re), im_(im) {}

	static GRat i() { return GRat(Rational(0), Rational(1)); }

	Rational const &re() const { return re_; }
	Rational const &im() const { return im_; }
	bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
	bool is_one() const { return re_.is_one() && im_.is_zero(); }
	bool is_real() const { return im_.is_zero(); }

	friend GRat operator+(GRat const &a, GRat const &b)
	{
		return GRat(a.re_ + b.re_, a.im_ + b.im_);
	}
	friend GRat operator-(GRat const &a, GRat const &b)
	{
		return GRat(a.re_ - b.re_, a.im_ - b.im_);
	}
	friend GRat operator*(GRat const &a, GRat const &b)
	{
		return GRat(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
	}
	friend GRat operator/(GRat const &a, GRat const &b)
	{
		Rational n2 = b.re_ * b.re_ + b.im_ * b.im_;
		if (n2.is_zero())
			fail(errc::domain_error, "gaussian division by zero");
		return GRat((a.re_ * b.re_ + a.im_ * b.im_) / n2,
		            (a.im_ * b.re_ - a.re_ * b.im_) / n2);
	}
	GRat operator-() const { return GRat(-re_, -im_); }
	GRat conj() const { return GRat(re_, -im_); }
	GRat &operator+=(GRat const &b) { return *this = *this + b; }
	GRat &operator-=(GRat const &b) { return *this = *this - b; }
	GRat &operator*=(GRat const &b) { return *this = *this * b; }

	friend bool operator==(GRat const &a, GRat const &b)
	{
		return a.re_ == b.re_ && a.im_ == b.im_;
	}
	friend bool operator!=(GRat const &a, GRat const &b) { return !(a == b); }

	std::string str() const
	{
		if (im_.is_zero())
			return re_.str();
		std::string im = im_.str() + "*i";
		if (re_.is_zero())
			return im;
		return "(" + re_.str() + (im_ < Rational(0) ? "" : "+") + im + ")";
	}

  private:
	Rational re_, im_;
};

} // namespace tfe
