#include "hdq/matrix.hpp"

namespace hdq {

ExactMatrix to_exact(const SignMatrix& m) {
    ExactMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = SignedRoot(long{m(r, c)});
    }
    return out;
}

FloatMatrix to_float(const ExactMatrix& m) {
    FloatMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).to_double();
    }
    return out;
}

}  // namespace hdq
