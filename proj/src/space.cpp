#include "superyang/space.hpp"

#include <sstream>

#include "superyang/ops.hpp"

namespace superyang {

SuperSpace SuperSpace::gl(int m, int n) {
    if (m < 0 || n < 0 || m + n == 0) throw DomainError("gl space needs m, n >= 0, m + n > 0");
    return SuperSpace(SpaceKind::GL, m, n, m + n);
}

SuperSpace SuperSpace::osp(int n) {
    if (n < 1) throw DomainError("osp space needs n >= 1");
    return SuperSpace(SpaceKind::OSP, 0, n, 2 * n + 2);
}

SuperSpace SuperSpace::osp0(int n) {
    if (n < 1) throw DomainError("osp0 space needs n >= 1");
    return SuperSpace(SpaceKind::OSP0, 0, n, 2 * n);
}

std::string SuperSpace::str() const {
    std::ostringstream os;
    switch (kind_) {
        case SpaceKind::GL: os << "gl(" << m_ << "|" << n_ << ")"; break;
        case SpaceKind::OSP: os << "osp(2|" << 2 * n_ << ")"; break;
        case SpaceKind::OSP0: os << "osp(0|" << 2 * n_ << ")"; break;
    }
    return os.str();
}

TensorSpace::TensorSpace(std::vector<SuperSpace> factors) : factors_(std::move(factors)) {
    stride_.assign(factors_.size(), 1);
    for (int a = static_cast<int>(factors_.size()) - 2; a >= 0; --a)
        stride_[a] = stride_[a + 1] * factors_[a + 1].dim();
    dim_ = factors_.empty() ? 1 : stride_[0] * factors_[0].dim();
}

TensorSpace TensorSpace::power(const SuperSpace& v, int d) {
    return TensorSpace(std::vector<SuperSpace>(d, v));
}

long TensorSpace::index_of(const std::vector<int>& digits) const {
    long idx = 0;
    for (std::size_t a = 0; a < factors_.size(); ++a) idx += stride_[a] * digits[a];
    return idx;
}

void TensorSpace::digits_of(long index, std::vector<int>& out) const {
    out.resize(factors_.size());
    for (std::size_t a = 0; a < factors_.size(); ++a) {
        out[a] = static_cast<int>(index / stride_[a]);
        index %= stride_[a];
    }
}

std::vector<int> TensorSpace::digits_of(long index) const {
    std::vector<int> out;
    digits_of(index, out);
    return out;
}

int TensorSpace::parity(const std::vector<int>& digits) const {
    int p = 0;
    for (std::size_t a = 0; a < factors_.size(); ++a) p += factors_[a].parity(digits[a]);
    return p & 1;
}

TwoSlotOp<Rational> op_swap(const SuperSpace& v) {
    const int n = v.dim();
    TwoSlotOp<Rational> op(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            op.add(a, b, b, a, Rational((v.parity(a) & v.parity(b)) ? -1 : 1));
    return op;
}

TwoSlotOp<Rational> op_block_gl(const SuperSpace& v) {
    if (v.kind() != SpaceKind::GL) throw DomainError("GL block on a non-GL space");
    const int n = v.dim();
    TwoSlotOp<Rational> op(n, n);
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < n; ++i) op.add(a, a, i, i, Rational(v.parity(i) ? -1 : 1));
    return op;
}

TwoSlotOp<Rational> op_block_osp(const SuperSpace& v) {
    const int n = v.dim();
    TwoSlotOp<Rational> op(n, n);
    for (int a = 0; a < n; ++a) {
        const int sign_a = (v.parity(a) ? -1 : 1) * v.tau(a);
        for (int i = 0; i < n; ++i)
            op.add(a, v.prime(a), i, v.prime(i), Rational(sign_a * v.tau(i)));
    }
    return op;
}

}  // namespace superyang
