#pragma once

#include "lieweyl/rational.hpp"
#include "lieweyl/report.hpp"

namespace lieweyl {

// B_N with B_1 = -1/2, from sum_{k<=N} binom(N+1, k) B_k = 0.
Rational bernoulli(int N);

// (-1)^N B_N / N!, the weight of the N-th power of the C-matrix in phi.
Rational phi_weight(int N);

// sum_{s=1}^{l} B_{2s}/(2s)! B_{2l-2s}/(2l-2s)! = -B_{2l}/(2l-1)! + delta_{l,1}/4
CheckReport bernoulli_identity_check(int l);

}  // namespace lieweyl
