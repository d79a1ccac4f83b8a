#pragma once

#include <optional>
#include <vector>

#include "seqann/unipoly.hpp"

namespace seqann {

/**
 * @file linalg.hpp
 * @brief Exact dense linear algebra over a field context.
 *
 * Reduced row echelon form is fully deterministic: columns are scanned left
 * to right, the pivot is the first nonzero entry top to bottom, pivots are
 * scaled to 1 and eliminated above and below.
 */
template <class F>
struct Matrix {
	int rows = 0, cols = 0;
	std::vector<typename F::Elem> a;

	Matrix() = default;
	Matrix(const F& K, int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, K.zero()) {}

	typename F::Elem& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
	const typename F::Elem& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// returns pivot column indices; pivot_counter (optional) is bumped per pivot
template <FieldContext F>
std::vector<int> rref_in_place(const F& K, Matrix<F>& M, long long* pivot_counter = nullptr) {
	std::vector<int> pivots;
	int row = 0;
	for (int col = 0; col < M.cols && row < M.rows; ++col) {
		int pr = -1;
		for (int r = row; r < M.rows; ++r)
			if (!K.is_zero(M.at(r, col))) { pr = r; break; }
		if (pr < 0) continue;
		if (pr != row)
			for (int c = 0; c < M.cols; ++c) std::swap(M.at(pr, c), M.at(row, c));
		auto s = K.inv(M.at(row, col));
		for (int c = col; c < M.cols; ++c) M.at(row, c) = K.mul(M.at(row, c), s);
		for (int r = 0; r < M.rows; ++r) {
			if (r == row || K.is_zero(M.at(r, col))) continue;
			auto t = M.at(r, col);
			for (int c = col; c < M.cols; ++c)
				M.at(r, c) = K.sub(M.at(r, c), K.mul(t, M.at(row, c)));
		}
		pivots.push_back(col);
		if (pivot_counter) ++*pivot_counter;
		++row;
	}
	return pivots;
}

template <FieldContext F>
int rank(const F& K, Matrix<F> M) {
	return static_cast<int>(rref_in_place(K, M).size());
}

// solve A x = b; returns nullopt when inconsistent.  Free variables are 0.
template <FieldContext F>
std::optional<std::vector<typename F::Elem>> solve(const F& K, const Matrix<F>& A,
                                                   const std::vector<typename F::Elem>& b) {
	Matrix<F> M(K, A.rows, A.cols + 1);
	for (int r = 0; r < A.rows; ++r) {
		for (int c = 0; c < A.cols; ++c) M.at(r, c) = A.at(r, c);
		M.at(r, A.cols) = b[r];
	}
	auto pivots = rref_in_place(K, M);
	if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;
	std::vector<typename F::Elem> x(A.cols, K.zero());
	for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = M.at(static_cast<int>(i), A.cols);
	return x;
}

// basis of the right nullspace, one vector per free column
template <FieldContext F>
std::vector<std::vector<typename F::Elem>> nullspace(const F& K, Matrix<F> M) {
	int cols = M.cols;
	auto pivots = rref_in_place(K, M);
	std::vector<bool> is_pivot(cols, false);
	for (int c : pivots) is_pivot[c] = true;
	std::vector<std::vector<typename F::Elem>> basis;
	for (int fc = 0; fc < cols; ++fc) {
		if (is_pivot[fc]) continue;
		std::vector<typename F::Elem> v(cols, K.zero());
		v[fc] = K.one();
		for (size_t i = 0; i < pivots.size(); ++i)
			v[pivots[i]] = K.neg(M.at(static_cast<int>(i), fc));
		basis.push_back(std::move(v));
	}
	return basis;
}

template <FieldContext F>
std::optional<Matrix<F>> inverse(const F& K, const Matrix<F>& A) {
	if (A.rows != A.cols) return std::nullopt;
	int n = A.rows;
	Matrix<F> M(K, n, 2 * n);
	for (int r = 0; r < n; ++r) {
		for (int c = 0; c < n; ++c) M.at(r, c) = A.at(r, c);
		M.at(r, n + r) = K.one();
	}
	auto pivots = rref_in_place(K, M);
	if (static_cast<int>(pivots.size()) != n) return std::nullopt;
	Matrix<F> Inv(K, n, n);
	for (int r = 0; r < n; ++r)
		for (int c = 0; c < n; ++c) Inv.at(r, c) = M.at(r, n + c);
	return Inv;
}

template <FieldContext F>
Matrix<F> matmul(const F& K, const Matrix<F>& A, const Matrix<F>& B) {
	Matrix<F> C(K, A.rows, B.cols);
	for (int i = 0; i < A.rows; ++i)
		for (int k = 0; k < A.cols; ++k) {
			if (K.is_zero(A.at(i, k))) continue;
			for (int j = 0; j < B.cols; ++j)
				C.at(i, j) = K.add(C.at(i, j), K.mul(A.at(i, k), B.at(k, j)));
		}
	return C;
}

/**
 * Incremental Gauss-Jordan over a growing set of vectors whose length may
 * also grow.  Supports three operations used by the annihilator algorithms:
 * membership-with-coefficients against the vectors kept so far, appending an
 * independent vector, and appending new trailing coordinates to every kept
 * vector.  Kept vectors are the raw inputs; the reduced basis and the
 * transform expressing it over the raw inputs are maintained side by side.
 */
template <FieldContext F>
class EchelonSolver {
 public:
	explicit EchelonSolver(const F& K) : K_(&K) {}

	int size() const { return static_cast<int>(raw_.size()); }
	int width() const { return width_; }

	// coefficients over the kept raw vectors when v lies in their span
	std::optional<std::vector<typename F::Elem>> try_reduce(
	    const std::vector<typename F::Elem>& v) const {
		auto [res, gamma] = reduce(v);
		for (auto& x : res)
			if (!K_->is_zero(x)) return std::nullopt;
		// v = sum gamma_r U_r and U = E * raw, so coefficients are gamma * E
		std::vector<typename F::Elem> c(raw_.size(), K_->zero());
		for (size_t r = 0; r < u_.size(); ++r) {
			if (K_->is_zero(gamma[r])) continue;
			for (size_t s = 0; s < raw_.size(); ++s)
				c[s] = K_->add(c[s], K_->mul(gamma[r], e_[r][s]));
		}
		return c;
	}

	// keeps v when independent; returns false (and discards) otherwise
	bool add(const std::vector<typename F::Elem>& v, long long* pivot_counter = nullptr) {
		auto [res, gamma] = reduce(v);
		int lead = -1;
		for (int i = 0; i < static_cast<int>(res.size()); ++i)
			if (!K_->is_zero(res[i])) { lead = i; break; }
		if (lead < 0) return false;
		auto s = K_->inv(res[lead]);
		for (auto& x : res) x = K_->mul(x, s);
		// transform row for the new reduced vector: s * (e_new - sum gamma_r E_r)
		std::vector<typename F::Elem> erow(raw_.size() + 1, K_->zero());
		erow[raw_.size()] = s;
		for (size_t r = 0; r < u_.size(); ++r) {
			if (K_->is_zero(gamma[r])) continue;
			for (size_t j = 0; j < raw_.size(); ++j)
				erow[j] = K_->sub(erow[j], K_->mul(s, K_->mul(gamma[r], e_[r][j])));
		}
		for (auto& row : e_) row.push_back(K_->zero());
		// eliminate the new lead from existing reduced vectors
		for (size_t r = 0; r < u_.size(); ++r) {
			auto t = u_[r][lead];
			if (K_->is_zero(t)) continue;
			for (size_t j = 0; j < res.size(); ++j)
				u_[r][j] = K_->sub(u_[r][j], K_->mul(t, res[j]));
			for (size_t j = 0; j < erow.size(); ++j)
				e_[r][j] = K_->sub(e_[r][j], K_->mul(t, erow[j]));
		}
		raw_.push_back(v);
		u_.push_back(std::move(res));
		e_.push_back(std::move(erow));
		leads_.push_back(lead);
		if (pivot_counter) ++*pivot_counter;
		return true;
	}

	// tails[i] extends kept raw vector i; all kept vectors grow together
	void extend(const std::vector<std::vector<typename F::Elem>>& tails) {
		if (tails.size() != raw_.size()) throw InvalidArgument("echelon extension size mismatch");
		size_t add_len = raw_.empty() ? 0 : tails[0].size();
		for (size_t i = 0; i < raw_.size(); ++i)
			raw_[i].insert(raw_[i].end(), tails[i].begin(), tails[i].end());
		for (size_t r = 0; r < u_.size(); ++r) {
			for (size_t k = 0; k < add_len; ++k) {
				auto x = K_->zero();
				for (size_t s = 0; s < raw_.size(); ++s)
					x = K_->add(x, K_->mul(e_[r][s], tails[s][k]));
				u_[r].push_back(x);
			}
		}
		if (!raw_.empty()) width_ += static_cast<int>(add_len);
	}

	void set_width(int w) { width_ = w; }

 private:
	// reduce v against the kept reduced vectors; returns (residual, gamma)
	std::pair<std::vector<typename F::Elem>, std::vector<typename F::Elem>> reduce(
	    std::vector<typename F::Elem> v) const {
		std::vector<typename F::Elem> gamma(u_.size(), K_->zero());
		for (size_t r = 0; r < u_.size(); ++r) {
			auto t = v[leads_[r]];
			if (K_->is_zero(t)) continue;
			gamma[r] = t;
			for (size_t j = 0; j < v.size(); ++j)
				v[j] = K_->sub(v[j], K_->mul(t, u_[r][j]));
		}
		return {std::move(v), std::move(gamma)};
	}

	const F* K_;
	int width_ = 0;
	std::vector<std::vector<typename F::Elem>> raw_, u_, e_;
	std::vector<int> leads_;
};

}  // namespace seqann
