#pragma once

#include "tfe/algebra.hpp"

namespace tfe {

/** dense matrix over the Gaussian rationals */
class GMat
{
  public:
	GMat() = default;
	GMat(int n) : n_(n), a_((size_t)n * n) {}
	static GMat id(int n)
	{
		GMat m(n);
		for (int i = 0; i < n; ++i)
			m(i, i) = GRat(1);
		return m;
	}
	static GMat kron(GMat const &a, GMat const &b)
	{
		GMat r(a.n_ * b.n_);
		for (int i = 0; i < a.n_; ++i)
			for (int j = 0; j < a.n_; ++j)
				for (int k = 0; k < b.n_; ++k)
					for (int l = 0; l < b.n_; ++l)
						r(i * b.n_ + k, j * b.n_ + l) = a(i, j) * b(k, l);
		return r;
	}

	int n() const { return n_; }
	GRat &operator()(int i, int j) { return a_[(size_t)i * n_ + j]; }
	GRat const &operator()(int i, int j) const { return a_[(size_t)i * n_ + j]; }

	friend GMat operator*(GMat const &a, GMat const &b)
	{
		GMat r(a.n_);
		for (int i = 0; i < a.n_; ++i)
			for (int k = 0; k < a.n_; ++k) {
				if (a(i, k).is_zero())
					continue;
				for (int j = 0; j < a.n_; ++j)
					r(i, j) += a(i, k) * b(k, j);
			}
		return r;
	}
	friend GMat operator+(GMat const &a, GMat const &b)
	{
		GMat r(a.n_);
		for (size_t i = 0; i < a.a_.size(); ++i)
			r.a_[i] = a.a_[i] + b.a_[i];
		return r;
	}
	friend GMat operator-(GMat const &a, GMat const &b)
	{
		GMat r(a.n_);
		for (size_t i = 0; i < a.a_.size(); ++i)
			r.a_[i] = a.a_[i] - b.a_[i];
		return r;
	}
	friend GMat operator*(GRat const &c, GMat const &a)
	{
		GMat r(a.n_);
		for (size_t i = 0; i < a.a_.size(); ++i)
			r.a_[i] = c * a.a_[i];
		return r;
	}
	friend bool operator==(GMat const &a, GMat const &b) { return a.n_ == b.n_ && a.a_ == b.a_; }
	bool is_zero() const
	{
		for (auto &c : a_)
			if (!c.is_zero())
				return false;
		return true;
	}
	GRat trace() const
	{
		GRat t;
		for (int i = 0; i < n_; ++i)
			t += (*this)(i, i);
		return t;
	}

  private:
	int n_ = 0;
	std::vector<GRat> a_;
};

/**
 * Matrix representation: one Gaussian-rational matrix per generator, times an
 * optional Laurent-monomial scale (so e.g. translations can carry 1/l exactly).
 * superSplit marks the bosonic block size for supertraces.
 */
class MatrixRep
{
  public:
	MatrixRep() = default;
	MatrixRep(int dim, int bosonic_block = -1) : dim_(dim), bos_(bosonic_block) {}

	int dim() const { return dim_; }
	bool has_super_split() const { return bos_ >= 0; }
	int bosonic_block() const { return bos_; }
	size_t size() const { return mats_.size(); }

	void add(GMat m, ParamMono scale = ParamMono::one())
	{
		mats_.push_back(std::move(m));
		scales_.push_back(std::move(scale));
	}
	GMat const &mat(int i) const { return mats_[(size_t)i]; }
	ParamMono const &scale(int i) const { return scales_[(size_t)i]; }

	/** scaled matrix entry as a Scalar */
	Scalar entry(int g, int i, int j) const
	{
		return Scalar(mats_[(size_t)g](i, j), scales_[(size_t)g]);
	}

	/** supertrace Tr(bosonic) - Tr(fermionic); plain trace without a split */
	GRat supertrace(GMat const &m) const
	{
		if (bos_ < 0)
			return m.trace();
		GRat t;
		for (int i = 0; i < dim_; ++i)
			t += i < bos_ ? m(i, i) : -m(i, i);
		return t;
	}

  private:
	int dim_ = 0;
	int bos_ = -1;
	std::vector<GMat> mats_;
	std::vector<ParamMono> scales_;
};

/**
 * Exact solve of sum_j x_j * cols[j] = rhs over ℚ(i).
 * Returns nullopt when inconsistent; sets *dependent when the columns are
 * linearly dependent (solution then is one representative).
 */
inline std::optional<std::vector<GRat>> solve_gaussian(std::vector<std::vector<GRat>> const &cols,
                                                       std::vector<GRat> rhs,
                                                       bool *dependent = nullptr)
{
	size_t ncols = cols.size(), nrows = rhs.size();
	std::vector<std::vector<GRat>> m(nrows, std::vector<GRat>(ncols));
	for (size_t j = 0; j < ncols; ++j)
		for (size_t i = 0; i < nrows; ++i)
			m[i][j] = cols[j][i];
	std::vector<std::pair<size_t, size_t>> pivots; // (row, col)
	size_t row = 0;
	for (size_t col = 0; col < ncols && row < nrows; ++col) {
		size_t p = row;
		while (p < nrows && m[p][col].is_zero())
			++p;
		if (p == nrows)
			continue;
		std::swap(m[p], m[row]);
		std::swap(rhs[p], rhs[row]);
		GRat inv = GRat(1) / m[row][col];
		for (size_t j = col; j < ncols; ++j)
			m[row][j] = inv * m[row][j];
		rhs[row] = inv * rhs[row];
		for (size_t i = 0; i < nrows; ++i) {
			if (i == row || m[i][col].is_zero())
				continue;
			GRat f = m[i][col];
			for (size_t j = col; j < ncols; ++j)
				m[i][j] -= f * m[row][j];
			rhs[i] -= f * rhs[row];
		}
		pivots.push_back({row, col});
		++row;
	}
	if (dependent)
		*dependent = pivots.size() < ncols;
	for (size_t i = row; i < nrows; ++i)
		if (!rhs[i].is_zero())
			return std::nullopt;
	std::vector<GRat> x(ncols);
	for (auto &[r, c] : pivots)
		x[c] = rhs[r];
	return x;
}

/**
 * Derive structure constants from a matrix representation by exact linear
 * solve: commutator for even-even/even-odd pairs, anticommutator for odd-odd.
 * Round-trips against the catalog algebras in tests.
 */
inline LieSuperAlgebra brackets_from_rep(std::vector<Generator> basis, MatrixRep const &rep,
                                         std::string name = "from_rep")
{
	if (basis.size() != rep.size())
		fail(errc::basis_mismatch, "basis/rep size mismatch");
	LieSuperAlgebra alg(std::move(name));
	for (auto &g : basis)
		alg.add_generator(g);
	int n = rep.dim();
	std::vector<std::vector<GRat>> cols;
	for (size_t g = 0; g < rep.size(); ++g) {
		std::vector<GRat> v;
		v.reserve((size_t)n * n);
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				v.push_back(rep.mat((int)g)(i, j));
		cols.push_back(std::move(v));
	}
	{
		// images must be linearly independent
		bool dep = false;
		std::vector<GRat> zero((size_t)n * n);
		solve_gaussian(cols, zero, &dep);
		if (dep)
			fail(errc::singular_basis, "representation images are linearly dependent");
	}
	for (int a = 0; a < alg.dim(); ++a)
		for (int b = a; b < alg.dim(); ++b) {
			bool odd_odd = alg.parity(a) && alg.parity(b);
			GMat br = odd_odd ? rep.mat(a) * rep.mat(b) + rep.mat(b) * rep.mat(a)
			                  : rep.mat(a) * rep.mat(b) - rep.mat(b) * rep.mat(a);
			std::vector<GRat> rhs;
			rhs.reserve((size_t)n * n);
			for (int i = 0; i < n; ++i)
				for (int j = 0; j < n; ++j)
					rhs.push_back(br(i, j));
			auto x = solve_gaussian(cols, rhs);
			if (!x)
				fail(errc::not_closed, "bracket [" + alg.gen(a).name() + "," + alg.gen(b).name() +
				                           "] leaves the span of the representation");
			BracketImage img;
			ParamMono mab = rep.scale(a) * rep.scale(b);
			for (int c = 0; c < alg.dim(); ++c)
				if (!(*x)[(size_t)c].is_zero())
					image_add(img, c, Scalar((*x)[(size_t)c], mab * rep.scale(c).inverse()));
			alg.set_bracket(a, b, std::move(img));
		}
	return alg;
}

struct CliffordReport {
	bool pass = true;
	std::vector<std::pair<int, int>> violations;
};

/** verify {Gamma_a, Gamma_b} = 2 eta_ab 1 with eta = diag(-1,+1,...,+1) */
inline CliffordReport clifford_check(std::vector<GMat> const &gammas)
{
	CliffordReport rep;
	if (gammas.empty())
		return rep;
	int n = gammas[0].n();
	for (size_t a = 0; a < gammas.size(); ++a)
		for (size_t b = a; b < gammas.size(); ++b) {
			GRat eta = a == b ? (a == 0 ? GRat(-1) : GRat(1)) : GRat(0);
			GMat lhs = gammas[a] * gammas[b] + gammas[b] * gammas[a];
			if (!(lhs - (GRat(2) * eta) * GMat::id(n)).is_zero()) {
				rep.pass = false;
				rep.violations.push_back({(int)a, (int)b});
			}
		}
	return rep;
}

} // namespace tfe
