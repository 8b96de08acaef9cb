#include "uavcic/linalg.hpp"

namespace uavcic::linalg {

CMat identity(int n) {
    CMat m(n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

CMat mul(const CMat& lhs, const CMat& rhs) {
    if (lhs.n != rhs.n) {
        throw std::invalid_argument("mul: size mismatch");
    }
    CMat out(lhs.n);
    for (int i = 0; i < lhs.n; ++i) {
        for (int k = 0; k < lhs.n; ++k) {
            const cd a = lhs(i, k);
            for (int j = 0; j < lhs.n; ++j) {
                out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

std::vector<cd> solve(const CMat& a, const std::vector<cd>& b) {
    if (static_cast<int>(b.size()) != a.n) {
        throw std::invalid_argument("solve: size mismatch");
    }
    return solve_dense(a.a, b, a.n);
}

}  // namespace uavcic::linalg
