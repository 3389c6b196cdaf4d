#pragma once

#include <cstddef>
#include <vector>

#include "swr/bigint.hpp"
#include "swr/graph.hpp"

namespace swr {

/// Dense square matrix of arbitrary-precision integers, row-major.
class BigMatrix {
public:
    BigMatrix() = default;
    explicit BigMatrix(std::size_t n) : n_(n), data_(n * n) {}

    static BigMatrix identity(std::size_t n);
    static BigMatrix ones(std::size_t n);
    static BigMatrix adjacency(const Graph& g);

    std::size_t dim() const { return n_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    BigInt trace() const;

    BigMatrix& operator+=(const BigMatrix& o);
    BigMatrix& operator-=(const BigMatrix& o);
    BigMatrix& operator*=(const BigInt& s);

    friend BigMatrix operator+(BigMatrix a, const BigMatrix& b) { return a += b; }
    friend BigMatrix operator-(BigMatrix a, const BigMatrix& b) { return a -= b; }
    friend BigMatrix operator*(BigMatrix a, const BigInt& s) { return a *= s; }
    friend BigMatrix operator*(const BigInt& s, BigMatrix a) { return a *= s; }
    friend BigMatrix operator*(const BigMatrix& a, const BigMatrix& b);
    friend bool operator==(const BigMatrix& a, const BigMatrix& b) = default;

private:
    std::size_t n_ = 0;
    std::vector<BigInt> data_;
};

/// Exact a^ell by binary powering; a^0 is the identity.
BigMatrix mat_pow(const BigMatrix& a, unsigned long ell);

/// a^0, a^1, ..., a^ell by repeated multiplication.
std::vector<BigMatrix> mat_powers(const BigMatrix& a, unsigned long ell);

}  // namespace swr
