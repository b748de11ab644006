#include "uqaudit/numeric.hpp"

#include "uqaudit/errors.hpp"

#include <cmath>
#include <utility>

namespace uqaudit::numeric {

namespace {

Mat4 identity() {
    Mat4 m{};
    for (int i = 0; i < 4; ++i) m[i * 5] = 1.0;
    return m;
}

Mat4 mul(const Mat4& a, const Mat4& b) {
    Mat4 c{};
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            for (int j = 0; j < 4; ++j) c[i * 4 + j] += a[i * 4 + k] * b[k * 4 + j];
        }
    }
    return c;
}

Vec4 mat_vec(const Mat4& a, const Vec4& v) {
    Vec4 out{};
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) out[i] += a[i * 4 + k] * v[k];
    }
    return out;
}

double dot(const Vec4& a, const Vec4& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

Mat4 flip_matrix() {
    Mat4 p{};
    p[0] = 1.0;
    p[1 * 4 + 2] = 1.0;
    p[2 * 4 + 1] = 1.0;
    p[15] = 1.0;
    return p;
}

Mat4 conj(const Mat4& g, const Mat4& x) { return mul(mul(g, x), inverse(g)); }

}  // namespace

Mat4 r_matrix(double q, const RSource& r) {
    Mat4 m{};
    if (std::holds_alternative<PaperR>(r)) {
        const double s = std::sqrt(q);
        m[0] = s;
        m[5] = 1.0;
        m[6] = s - 1.0 / s;
        m[10] = 1.0;
        m[15] = s;
    } else if (std::holds_alternative<SolvedR>(r)) {
        m[0] = q;
        m[5] = 1.0;
        m[6] = q - 1.0 / q;
        m[10] = 1.0;
        m[15] = q;
    } else {
        throw Error(ErrorKind::DimensionMismatch, "float pipeline has no custom R");
    }
    return m;
}

Mat4 r21_matrix(double q, const RSource& r) {
    const Mat4 p = flip_matrix();
    return mul(mul(p, r_matrix(q, r)), p);
}

Mat4 inverse(const Mat4& m) {
    Mat4 a = m;
    Mat4 inv = identity();
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 4; ++r) {
            if (std::fabs(a[r * 4 + col]) > std::fabs(a[pivot * 4 + col])) pivot = r;
        }
        if (a[pivot * 4 + col] == 0.0) throw Error(ErrorKind::SingularMatrix, "float inverse");
        for (int c = 0; c < 4; ++c) {
            std::swap(a[col * 4 + c], a[pivot * 4 + c]);
            std::swap(inv[col * 4 + c], inv[pivot * 4 + c]);
        }
        const double d = a[col * 4 + col];
        for (int c = 0; c < 4; ++c) {
            a[col * 4 + c] /= d;
            inv[col * 4 + c] /= d;
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            const double f = a[r * 4 + col];
            for (int c = 0; c < 4; ++c) {
                a[r * 4 + c] -= f * a[col * 4 + c];
                inv[r * 4 + c] -= f * inv[col * 4 + c];
            }
        }
    }
    return inv;
}

Mat4 dressed_alice_jz(double q, const RSource& r) {
    Mat4 jz_a{};
    jz_a[0] = jz_a[5] = 0.5;
    jz_a[10] = jz_a[15] = -0.5;
    return conj(r21_matrix(q, r), jz_a);
}

Mat4 dressed_bob_jz(double q, const RSource& r, BobRule rule) {
    Mat4 jz_b{};
    jz_b[0] = jz_b[10] = 0.5;
    jz_b[5] = jz_b[15] = -0.5;
    Mat4 g;
    switch (rule) {
        case BobRule::ConjugateByR: g = r_matrix(q, r); break;
        case BobRule::ConjugateByR21: g = r21_matrix(q, r); break;
        case BobRule::ConjugateByRinv: g = inverse(r_matrix(q, r)); break;
    }
    return conj(g, jz_b);
}

std::array<Mat4, 2> projectors(const Mat4& j) {
    const Mat4 one = identity();
    Mat4 plus{}, minus{};
    for (int i = 0; i < 16; ++i) {
        plus[i] = 0.5 * one[i] + j[i];
        minus[i] = 0.5 * one[i] - j[i];
    }
    return {plus, minus};
}

Vec4 singlet(double q) { return {0.0, 1.0, -1.0 / q, 0.0}; }

Joint naive_joint(double q) {
    const Vec4 v = singlet(q);
    const double n2 = dot(v, v);
    return {v[0] * v[0] / n2, v[1] * v[1] / n2, v[2] * v[2] / n2, v[3] * v[3] / n2};
}

Joint dressed_joint(double q, const Convention& conv) {
    const auto pa = projectors(dressed_alice_jz(q, conv.r_source));
    const auto pb = projectors(dressed_bob_jz(q, conv.r_source, conv.dressing.bob_rule));
    const Vec4 v = singlet(q);
    // The invariant dual covector has the same components as the state.
    const Vec4& bra = v;
    Joint out{};
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const Vec4 w = conv.ordering == Ordering::BobThenAlice ? mat_vec(pa[a], mat_vec(pb[b], v))
                                                                   : mat_vec(pb[b], mat_vec(pa[a], v));
            out[a * 2 + b] = conv.born == BornRule::SandwichProduct ? dot(bra, w) / dot(bra, v)
                                                                    : dot(w, w) / dot(v, v);
        }
    }
    return out;
}

}  // namespace uqaudit::numeric
