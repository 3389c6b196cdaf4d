#include "swr/bigmatrix.hpp"

#include <cassert>

namespace swr {

BigMatrix BigMatrix::identity(std::size_t n) {
    BigMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

BigMatrix BigMatrix::ones(std::size_t n) {
    BigMatrix m(n);
    for (auto& x : m.data_) x = 1;
    return m;
}

BigMatrix BigMatrix::adjacency(const Graph& g) {
    BigMatrix m(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v : g.neighbors(u)) m(u, v) = 1;
    }
    return m;
}

BigInt BigMatrix::trace() const {
    BigInt t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

BigMatrix& BigMatrix::operator+=(const BigMatrix& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

BigMatrix& BigMatrix::operator-=(const BigMatrix& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

BigMatrix& BigMatrix::operator*=(const BigInt& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

BigMatrix operator*(const BigMatrix& a, const BigMatrix& b) {
    assert(a.n_ == b.n_);
    const std::size_t n = a.n_;
    BigMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const BigInt& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
            }
        }
    }
    return c;
}

BigMatrix mat_pow(const BigMatrix& a, unsigned long ell) {
    BigMatrix result = BigMatrix::identity(a.dim());
    BigMatrix base = a;
    while (ell > 0) {
        if (ell & 1UL) result = result * base;
        ell >>= 1;
        if (ell > 0) base = base * base;
    }
    return result;
}

std::vector<BigMatrix> mat_powers(const BigMatrix& a, unsigned long ell) {
    std::vector<BigMatrix> out;
    out.reserve(ell + 1);
    out.push_back(BigMatrix::identity(a.dim()));
    for (unsigned long i = 1; i <= ell; ++i) out.push_back(out.back() * a);
    return out;
}

}  // namespace swr
