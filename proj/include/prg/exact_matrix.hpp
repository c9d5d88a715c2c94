#ifndef PRG_EXACT_MATRIX_HPP
#define PRG_EXACT_MATRIX_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "prg/gaussian.hpp"

namespace prg {

/// Dense matrix over the Gaussian rationals, row-major.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational{1};
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const GaussianRational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const ExactMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    ExactMatrix operator+(const ExactMatrix& o) const {
        require_same_shape(o);
        ExactMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
        return r;
    }

    ExactMatrix operator*(const GaussianRational& s) const {
        ExactMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
        return r;
    }

    GaussianRational trace() const {
        GaussianRational t{0};
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t = t + at(i, i);
        return t;
    }

private:
    void require_same_shape(const ExactMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<GaussianRational> e_;
};

inline ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul dimension mismatch");
    ExactMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return r;
}

/// Kronecker product; the left factor indexes the coarse blocks.
inline ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    return r;
}

/// Unnormalized 4-component state with Gaussian-integer entries.
struct StateVector {
    std::array<GaussianInt, 4> e{};

    bool is_zero() const {
        for (const auto& x : e)
            if (!x.is_zero()) return false;
        return true;
    }

    std::int64_t norm2() const {
        std::int64_t n = 0;
        for (const auto& x : e) n += x.norm2();
        return n;
    }

    bool operator==(const StateVector& o) const = default;

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < 4; ++i) s += e[i].str() + (i < 3 ? "," : ")");
        return s;
    }
};

/// <u|v>, conjugate-linear in the first argument.
inline GaussianInt inner(const StateVector& u, const StateVector& v) {
    GaussianInt s;
    for (std::size_t i = 0; i < 4; ++i) s = s + u.e[i].conj() * v.e[i];
    return s;
}

/// Eigenvalue signs of a commuting operator triple acting on one eigenvector.
struct SignSignature {
    std::array<int, 3> signs{};
    bool operator==(const SignSignature& o) const = default;

    std::string str() const {
        std::string s;
        for (int x : signs) s += (x > 0 ? '+' : '-');
        return s;
    }
};

/// 1 for product states, 2 for entangled ones; the 2x2 reshape determinant decides.
inline int schmidt_rank(const StateVector& v) {
    if (v.is_zero()) throw std::invalid_argument("schmidt_rank of zero vector");
    const GaussianInt det = v.e[0] * v.e[3] - v.e[1] * v.e[2];
    return det.is_zero() ? 1 : 2;
}

/// Primitive canonical form: divide out the Gaussian gcd, then pick the unit
/// multiple whose first nonzero entry is lexicographically largest by (re, im).
/// That entry ends up with nonnegative real part (positive imaginary if re = 0).
inline StateVector canonical_vector(StateVector v) {
    GaussianInt g;
    for (const auto& x : v.e)
        if (!x.is_zero()) g = g.is_zero() ? x : gi_gcd(g, x);
    if (g.is_zero()) throw std::invalid_argument("canonical form of zero vector");
    for (auto& x : v.e) x = gi_div_round(x, g);

    std::size_t first = 0;
    while (v.e[first].is_zero()) ++first;
    GaussianInt best_unit{1};
    auto lex_less = [](const GaussianInt& a, const GaussianInt& b) {
        return a.re != b.re ? a.re < b.re : a.im < b.im;
    };
    for (const auto& u : kUnits)
        if (lex_less(v.e[first] * best_unit, v.e[first] * u)) best_unit = u;
    for (auto& x : v.e) x = x * best_unit;
    return v;
}

namespace detail {

/// Exact eigenvalue of `m` on integer vector `v`, restricted to +-1; throws if
/// v is not an eigenvector with such an eigenvalue.
inline int unit_eigenvalue(const ExactMatrix& m, const StateVector& v) {
    for (int s : {+1, -1}) {
        bool ok = true;
        for (std::size_t i = 0; i < 4 && ok; ++i) {
            GaussianRational acc{0};
            for (std::size_t j = 0; j < 4; ++j)
                acc = acc + m.at(i, j) * GaussianRational{v.e[j]};
            GaussianRational want{GaussianInt{s} * v.e[i]};
            ok = acc == want;
        }
        if (ok) return s;
    }
    throw std::domain_error("not a +-1 eigenvector");
}

}  // namespace detail

/// Joint eigenbasis of two commuting involutions A, B (4x4), with the third
/// sign taken from C (the phaseless product operator). Vectors come out in
/// signature order (++), (+-), (-+), (--), each in primitive canonical form.
inline std::vector<std::pair<StateVector, SignSignature>> joint_eigenbasis(
    const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c) {
    if (!(matmul(a, b) == matmul(b, a)))
        throw std::invalid_argument("joint_eigenbasis requires commuting operators");
    const ExactMatrix id = ExactMatrix::identity(4);
    std::vector<std::pair<StateVector, SignSignature>> out;
    for (int s1 : {+1, -1})
        for (int s2 : {+1, -1}) {
            const ExactMatrix proj =
                matmul(id + a * GaussianRational{s1}, id + b * GaussianRational{s2});
            StateVector col;
            bool found = false;
            for (std::size_t j = 0; j < 4 && !found; ++j) {
                for (std::size_t i = 0; i < 4; ++i) {
                    const auto& x = proj.at(i, j);
                    if (!x.is_integral())
                        throw std::domain_error("projector has fractional entries");
                    col.e[i] = x.num;
                }
                found = !col.is_zero();
            }
            if (!found) throw std::domain_error("rank-1 projector has no nonzero column");
            StateVector v = canonical_vector(col);
            if (detail::unit_eigenvalue(a, v) != s1 || detail::unit_eigenvalue(b, v) != s2)
                throw std::domain_error("projector output is not a joint eigenvector");
            const int s3 = detail::unit_eigenvalue(c, v);
            out.push_back({v, SignSignature{{s1, s2, s3}}});
        }
    return out;
}

/// Exact unbiasedness of two orthogonal 4-vector bases:
/// 4 |<u,v>|^2 = |u|^2 |v|^2 for every cross pair.
inline bool is_unbiased_pair(const std::vector<StateVector>& b1,
                             const std::vector<StateVector>& b2) {
    for (const auto* basis : {&b1, &b2}) {
        if (basis->size() != 4) throw std::invalid_argument("basis must have 4 vectors");
        for (std::size_t i = 0; i < 4; ++i) {
            if ((*basis)[i].is_zero()) throw std::invalid_argument("zero vector in basis");
            for (std::size_t j = i + 1; j < 4; ++j)
                if (!inner((*basis)[i], (*basis)[j]).is_zero())
                    throw std::invalid_argument("input basis is not orthogonal");
        }
    }
    for (const auto& u : b1)
        for (const auto& v : b2)
            if (4 * inner(u, v).norm2() != u.norm2() * v.norm2()) return false;
    return true;
}

}  // namespace prg

#endif
