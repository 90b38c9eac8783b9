#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schubert {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(int n, int r);

/// Number of r-dimensional subspaces of F_q^n (the q-binomial coefficient evaluated at q).
BigInt gaussian_binomial(int n, int r, const BigInt& q);

BigInt ipow(const BigInt& base, int exponent);

}  // namespace schubert
