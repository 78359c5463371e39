#pragma once

#include "tfe/coeff.hpp"
#include "tfe/error.hpp"
#include <map>
#include <variant>

namespace tfe {

using MatWord = std::vector<uint16_t>;

/**
 * Matrix-valued form algebra on free noncommuting generators (theta, B, C,
 * Lambda, Phi, A, ...) with Coeff coefficients. Scalar-valued generators
 * (dy, dybar, ...) are marked central and commute with bigraded signs;
 * normal-ordering rewrite rules (e.g. [Lambda,Phi] = -i Phi with Lambda moved
 * leftmost) are installed per generator pair.
 */
class MatWorkspace;

class MatForm
{
  public:
	MatForm() = default;
	bool is_zero() const { return t_.empty(); }
	auto const &terms() const { return t_; }

	void add(MatWord const &w, Coeff const &c)
	{
		if (c.is_zero())
			return;
		auto it = t_.find(w);
		if (it == t_.end())
			t_.emplace(w, c);
		else {
			it->second += c;
			if (it->second.is_zero())
				t_.erase(it);
		}
	}
	friend MatForm operator+(MatForm const &a, MatForm const &b)
	{
		MatForm r = a;
		for (auto &[w, c] : b.t_)
			r.add(w, c);
		return r;
	}
	friend MatForm operator-(MatForm const &a, MatForm const &b) { return a + (-b); }
	MatForm operator-() const
	{
		MatForm r = *this;
		for (auto &t : r.t_)
			t.second = -t.second;
		return r;
	}
	MatForm &operator+=(MatForm const &b)
	{
		for (auto &[w, c] : b.t_)
			add(w, c);
		return *this;
	}
	friend MatForm operator*(MatForm const &a, Coeff const &c)
	{
		MatForm r;
		for (auto &[w, cc] : a.t_)
			r.add(w, cc * c);
		return r;
	}
	friend MatForm operator*(MatForm const &a, Scalar const &s)
	{
		MatForm r;
		for (auto &[w, cc] : a.t_)
			r.add(w, cc * s);
		return r;
	}
	friend bool operator==(MatForm const &a, MatForm const &b) { return a.t_ == b.t_; }

  private:
	std::map<MatWord, Coeff> t_;
};

/** formal trace bracket: cyclic-canonical words -> coefficients */
class TraceExpr
{
  public:
	bool is_zero() const { return t_.empty(); }
	auto const &terms() const { return t_; }
	void add(MatWord const &w, Coeff const &c)
	{
		if (c.is_zero())
			return;
		auto it = t_.find(w);
		if (it == t_.end())
			t_.emplace(w, c);
		else {
			it->second += c;
			if (it->second.is_zero())
				t_.erase(it);
		}
	}
	friend TraceExpr operator+(TraceExpr const &a, TraceExpr const &b)
	{
		TraceExpr r = a;
		for (auto &[w, c] : b.t_)
			r.add(w, c);
		return r;
	}
	friend TraceExpr operator-(TraceExpr const &a, TraceExpr const &b) { return a + (-b); }
	TraceExpr operator-() const
	{
		TraceExpr r = *this;
		for (auto &t : r.t_)
			t.second = -t.second;
		return r;
	}
	TraceExpr &operator+=(TraceExpr const &b)
	{
		for (auto &[w, c] : b.t_)
			add(w, c);
		return *this;
	}
	friend TraceExpr operator*(TraceExpr const &a, Coeff const &c)
	{
		TraceExpr r;
		for (auto &[w, cc] : a.t_)
			r.add(w, cc * c);
		return r;
	}
	friend bool operator==(TraceExpr const &a, TraceExpr const &b) { return a.t_ == b.t_; }

  private:
	std::map<MatWord, Coeff> t_;
};

class MatWorkspace
{
  public:
	struct MGen {
		std::string name;
		int degree = 0;
		int parity = 0;
		bool central = false; // scalar-valued: commutes (bigraded) with everything
		std::variant<std::monostate, int, MatForm> drule; // none / partner id / expression
	};

	int add(std::string name, int degree, int parity = 0, bool central = false)
	{
		for (auto &g : gens_)
			if (g.name == name)
				fail(errc::duplicate_generator, "matrix generator " + name);
		gens_.push_back({std::move(name), degree, parity, central, std::monostate{}});
		return (int)gens_.size() - 1;
	}
	int add_with_partner(std::string const &name, int degree, int parity = 0)
	{
		int g = add(name, degree, parity);
		int p = add("d" + name, degree + 1, parity);
		gens_[(size_t)g].drule = p;
		return g;
	}
	void set_drule(int g, MatForm rule) { gens_[(size_t)g].drule = std::move(rule); }
	int partner(int g) const
	{
		if (auto *p = std::get_if<int>(&gens_[(size_t)g].drule))
			return *p;
		fail(errc::missing_d_rule, gens_[(size_t)g].name + " has no partner");
	}
	MGen const &gen(int i) const { return gens_[(size_t)i]; }
	size_t size() const { return gens_.size(); }

	int dy()
	{
		if (dy_ < 0)
			dy_ = add("dy", 1, 0, true);
		return dy_;
	}
	int dybar()
	{
		if (dyb_ < 0)
			dyb_ = add("dyb", 1, 0, true);
		return dyb_;
	}

	/**
	 * Normal-ordering rule: graded commutator [mover, g] = image (a sum of
	 * single generators with Coeff weights); the mover migrates leftward.
	 */
	void add_rewrite(int mover, int g, std::vector<std::pair<int, Coeff>> image)
	{
		movers_.resize(gens_.size(), false);
		movers_[(size_t)mover] = true;
		rules_[{mover, g}] = std::move(image);
	}
	bool is_mover(int g) const { return (size_t)g < movers_.size() && movers_[(size_t)g]; }

	MatForm one() const
	{
		MatForm e;
		e.add({}, Coeff(1));
		return e;
	}
	MatForm generator(int g) const
	{
		MatForm e;
		e.add({(uint16_t)g}, Coeff(1));
		return e;
	}
	MatForm constant(Coeff const &c) const
	{
		MatForm e;
		e.add({}, c);
		return e;
	}

	int bidegree(int g) const { return gens_[(size_t)g].degree & 1; }
	int biparity(int g) const { return gens_[(size_t)g].parity & 1; }
	int swap_sign(int a, int b) const
	{
		return ((bidegree(a) & bidegree(b)) ^ (biparity(a) & biparity(b))) ? -1 : 1;
	}

	/** normalize one word: pull central generators to the front (sorted), apply rewrite rules */
	void normalize_into(MatWord w, Coeff c, MatForm &out) const
	{
		// 1) extract central generators
		int sign = 1;
		MatWord central, rest;
		for (size_t i = 0; i < w.size(); ++i) {
			if (gens_[w[i]].central) {
				// move left past the earlier non-central part
				for (auto g : rest)
					sign *= swap_sign(w[i], g);
				central.push_back(w[i]);
			} else
				rest.push_back(w[i]);
		}
		// canonicalize the central cluster (bigraded sorting, square-zero)
		for (size_t i = 1; i < central.size(); ++i) {
			size_t j = i;
			while (j > 0 && central[j - 1] > central[j]) {
				sign *= swap_sign(central[j - 1], central[j]);
				std::swap(central[j - 1], central[j]);
				--j;
			}
		}
		for (size_t i = 1; i < central.size(); ++i)
			if (central[i] == central[i - 1] &&
			    ((gens_[central[i]].degree + gens_[central[i]].parity) & 1))
				return; // odd square
		// 2) rewrite (x, mover) -> sign * (mover, x) + image within the rest
		for (size_t i = 0; i + 1 < rest.size(); ++i) {
			int x = rest[i], m = rest[i + 1];
			if (!is_mover(m) || is_mover(x))
				continue;
			auto it = rules_.find({m, x});
			if (it == rules_.end())
				fail(errc::missing_rewrite_rule,
				     "no rule for moving " + gens_[(size_t)m].name + " past " + gens_[(size_t)x].name);
			// [m,x] = img  =>  x m = (-1)^{bi} (m x - img)
			int s = swap_sign(m, x);
			{
				MatWord w2(rest.begin(), rest.end());
				std::swap(w2[i], w2[i + 1]);
				MatWord full = central;
				full.insert(full.end(), w2.begin(), w2.end());
				normalize_into(std::move(full), c * Scalar(Rational(sign * s)), out);
			}
			for (auto &[g, ic] : it->second) {
				MatWord w2;
				w2.reserve(rest.size() - 1);
				for (size_t k = 0; k < rest.size(); ++k) {
					if (k == i)
						w2.push_back((uint16_t)g);
					else if (k != i + 1)
						w2.push_back(rest[k]);
				}
				MatWord full = central;
				full.insert(full.end(), w2.begin(), w2.end());
				normalize_into(std::move(full), c * ic * Scalar(Rational(-sign * s)), out);
			}
			return;
		}
		MatWord full = central;
		full.insert(full.end(), rest.begin(), rest.end());
		out.add(full, sign < 0 ? -c : c);
	}

	MatForm mul(MatForm const &a, MatForm const &b) const
	{
		MatForm r;
		for (auto &[wa, ca] : a.terms())
			for (auto &[wb, cb] : b.terms()) {
				MatWord w = wa;
				w.insert(w.end(), wb.begin(), wb.end());
				normalize_into(std::move(w), ca * cb, r);
			}
		return r;
	}

	MatForm d_of_generator(int g) const
	{
		auto &rule = gens_[(size_t)g].drule;
		if (std::holds_alternative<std::monostate>(rule))
			return {};
		if (auto *p = std::get_if<int>(&rule))
			return generator(*p);
		return std::get<MatForm>(rule);
	}

	MatForm d(MatForm const &x)
	{
		MatForm r;
		for (auto &[w, c] : x.terms()) {
			if (c.depends_y()) {
				Coeff cy = c.deriv_y(2), cyb = c.deriv_y(3);
				MatForm mono;
				mono.add(w, Coeff(1));
				if (!cy.is_zero())
					r += mul(constant(cy), mul(generator(dy()), mono));
				if (!cyb.is_zero())
					r += mul(constant(cyb), mul(generator(dybar()), mono));
			}
			int degpre = 0;
			for (size_t i = 0; i < w.size(); ++i) {
				MatForm dg = d_of_generator(w[i]);
				if (!dg.is_zero()) {
					MatForm pre, post;
					pre.add(MatWord(w.begin(), w.begin() + (long)i), c);
					post.add(MatWord(w.begin() + (long)i + 1, w.end()), Coeff(1));
					MatForm term = mul(pre, mul(dg, post));
					if (degpre & 1)
						term = -term;
					r += term;
				}
				degpre += gens_[w[i]].degree;
			}
		}
		return r;
	}

	/** (degree, parity) of a homogeneous matrix form */
	std::pair<int, int> bigrade(MatForm const &x) const
	{
		std::pair<int, int> g = {-1, -1};
		for (auto &[w, c] : x.terms()) {
			int d = 0, p = 0;
			for (auto gi : w) {
				d += gens_[gi].degree;
				p += gens_[gi].parity;
			}
			std::pair<int, int> cur = {d & 1, p & 1};
			if (g.first < 0)
				g = cur;
			else if (g != cur)
				fail(errc::malformed_coefficient, "matrix form of mixed bigrade");
		}
		return g.first < 0 ? std::make_pair(0, 0) : g;
	}

	/**
	 * Cyclic canonicalization of a trace word under graded cyclicity
	 * tr(g w) = (-1)^{bigrade(g)*bigrade(w)} tr(w g); rewrites to the minimal
	 * rotation. Returns false when the word equals one of its own rotations
	 * with opposite sign (the trace then vanishes identically).
	 */
	bool trace_canonical(MatWord &w, int &sign) const
	{
		sign = 1;
		if (w.size() <= 1)
			return true;
		auto rot_sign = [&](MatWord const &v) {
			int d0 = bidegree(v[0]), p0 = biparity(v[0]);
			int dr = 0, pr = 0;
			for (size_t i = 1; i < v.size(); ++i) {
				dr += bidegree(v[i]);
				pr += biparity(v[i]);
			}
			return ((d0 & dr & 1) ^ (p0 & pr & 1)) ? -1 : 1;
		};
		std::vector<std::pair<MatWord, int>> rots;
		MatWord cur = w;
		int cur_sign = 1;
		for (size_t r = 0; r < w.size(); ++r) {
			rots.push_back({cur, cur_sign});
			int s = rot_sign(cur);
			std::rotate(cur.begin(), cur.begin() + 1, cur.end());
			cur_sign *= s;
		}
		for (auto &[v1, s1] : rots)
			for (auto &[v2, s2] : rots)
				if (v1 == v2 && s1 != s2)
					return false;
		auto best = std::min_element(rots.begin(), rots.end(),
		                             [](auto &a, auto &b) { return a.first < b.first; });
		w = best->first;
		sign = best->second;
		return true;
	}

	TraceExpr trace(MatForm const &x) const
	{
		TraceExpr r;
		for (auto &[w, c] : x.terms()) {
			int sign;
			MatWord cw = w;
			if (!trace_canonical(cw, sign))
				continue;
			r.add(cw, sign < 0 ? -c : c);
		}
		return r;
	}

	/** graded symmetrized trace pairing of homogeneous slots (1/r! sum over orders) */
	TraceExpr trace_pair(std::vector<MatForm> const &slots) const
	{
		size_t r = slots.size();
		std::vector<std::pair<int, int>> gr;
		for (auto &s : slots)
			gr.push_back(bigrade(s));
		std::vector<int> perm(r);
		for (size_t i = 0; i < r; ++i)
			perm[i] = (int)i;
		TraceExpr acc;
		Rational invfact = Rational(1) / Rational::factorial((int)r);
		do {
			int sign = 1;
			for (size_t i = 0; i < r; ++i)
				for (size_t j = i + 1; j < r; ++j)
					if (perm[i] > perm[j]) {
						auto &a = gr[(size_t)perm[i]];
						auto &b = gr[(size_t)perm[j]];
						if ((a.first & b.first) ^ (a.second & b.second))
							sign = -sign;
					}
			MatForm prod = slots[(size_t)perm[0]];
			for (size_t i = 1; i < r; ++i)
				prod = mul(prod, slots[(size_t)perm[i]]);
			TraceExpr t = trace(prod);
			acc += sign < 0 ? -t : t;
		} while (std::next_permutation(perm.begin(), perm.end()));
		return acc * Coeff(Scalar(invfact));
	}

	/** d through the trace: trace of d(representative) */
	TraceExpr trace_d(TraceExpr const &x)
	{
		TraceExpr r;
		for (auto &[w, c] : x.terms()) {
			MatForm m;
			m.add(w, c);
			r += trace(d(m));
		}
		return r;
	}

	/** fibre integration of a trace expression (see FormWorkspace::fibre_integrate) */
	TraceExpr fibre_integrate(TraceExpr const &x)
	{
		TraceExpr r;
		int iy = dy(), iyb = dybar();
		Scalar vol = Scalar::param("V_S2");
		Coeff onep = Coeff(1) + Coeff::y() * Coeff::ybar();
		for (auto &[w, c] : x.terms()) {
			int p1 = -1, p2 = -1;
			for (size_t i = 0; i < w.size(); ++i) {
				if ((int)w[i] == iy)
					p1 = (int)i;
				else if ((int)w[i] == iyb)
					p2 = (int)i;
			}
			if (p1 < 0 || p2 < 0)
				continue;
			int sign = 1;
			for (int k = 0; k < p1; ++k)
				sign *= swap_sign(iy, w[(size_t)k]);
			for (int k = 0; k < p2; ++k)
				if (k != p1)
					sign *= swap_sign(iyb, w[(size_t)k]);
			MatWord rest;
			for (size_t i = 0; i < w.size(); ++i)
				if ((int)i != p1 && (int)i != p2)
					rest.push_back(w[i]);
			Scalar s = (c * onep * onep).scalar_value();
			MatForm m;
			m.add(rest, Coeff(s * vol * Scalar(Rational(sign))));
			r += trace(m);
		}
		return r;
	}

	std::string str(MatForm const &x) const
	{
		if (x.is_zero())
			return "0";
		std::string s;
		for (auto &[w, c] : x.terms()) {
			if (!s.empty())
				s += "  +  ";
			std::string word;
			for (auto g : w)
				word += (word.empty() ? "" : ".") + gens_[g].name;
			s += "(" + c.str() + ") " + (word.empty() ? "1" : word);
		}
		return s;
	}
	std::string str(TraceExpr const &x) const
	{
		if (x.is_zero())
			return "0";
		std::string s;
		for (auto &[w, c] : x.terms()) {
			if (!s.empty())
				s += "  +  ";
			std::string word;
			for (auto g : w)
				word += (word.empty() ? "" : ".") + gens_[g].name;
			s += "(" + c.str() + ") tr(" + word + ")";
		}
		return s;
	}

  private:
	std::vector<MGen> gens_;
	std::vector<bool> movers_;
	std::map<std::pair<int, int>, std::vector<std::pair<int, Coeff>>> rules_;
	int dy_ = -1, dyb_ = -1;
};

} // namespace tfe
