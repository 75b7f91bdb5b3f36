#include "rademacher/matrix.hpp"

#include "rademacher/error.hpp"

namespace rademacher {

IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
    return {x.m11 * y.m11 + x.m12 * y.m21, x.m11 * y.m12 + x.m12 * y.m22,
            x.m21 * y.m11 + x.m22 * y.m21, x.m21 * y.m12 + x.m22 * y.m22};
}

UnimodularMatrix::UnimodularMatrix(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    Integer det = a_ * d_ - b_ * c_;
    if (det != 1)
        fail(ErrorCode::determinant_mismatch,
             "matrix (" + a_.get_str() + "," + b_.get_str() + "," + c_.get_str() + "," +
                 d_.get_str() + ") has determinant " + det.get_str() + ", expected 1");
}

UnimodularMatrix::UnimodularMatrix(const IntMatrix2& m)
    : UnimodularMatrix(m.m11, m.m12, m.m21, m.m22) {}

UnimodularMatrix UnimodularMatrix::identity() { return {Unchecked{}, 1, 0, 0, 1}; }
UnimodularMatrix UnimodularMatrix::S() { return {Unchecked{}, 0, -1, 1, 0}; }
UnimodularMatrix UnimodularMatrix::T() { return {Unchecked{}, 1, 1, 0, 1}; }
UnimodularMatrix UnimodularMatrix::T_power(const Integer& n) { return {Unchecked{}, 1, n, 0, 1}; }
UnimodularMatrix UnimodularMatrix::turn(const Integer& n) { return {Unchecked{}, n, -1, 1, 0}; }

UnimodularMatrix UnimodularMatrix::operator-() const {
    return {Unchecked{}, -a_, -b_, -c_, -d_};
}

UnimodularMatrix UnimodularMatrix::inverse() const { return {Unchecked{}, d_, -b_, -c_, a_}; }

UnimodularMatrix mat_mul(const UnimodularMatrix& x, const UnimodularMatrix& y) {
    return {UnimodularMatrix::Unchecked{}, x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
            x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_};
}

bool psl_eq(const UnimodularMatrix& x, const UnimodularMatrix& y) {
    if (x == y) return true;
    return x.a() == -y.a() && x.b() == -y.b() && x.c() == -y.c() && x.d() == -y.d();
}

std::ostream& operator<<(std::ostream& os, const UnimodularMatrix& m) {
    return os << m.a() << ',' << m.b() << ',' << m.c() << ',' << m.d();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix2& m) {
    return os << m.m11 << ',' << m.m12 << ',' << m.m21 << ',' << m.m22;
}

}  // namespace rademacher
