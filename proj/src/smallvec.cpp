#include "santalo/smallvec.hpp"

#include <cstdio>
#include <stdexcept>

namespace santalo {

double det(const Mat& A) {
    switch (A.n) {
        case 1:
            return A(0, 0);
        case 2:
            return A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
        case 3:
            return A(0, 0) * (A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1)) -
                   A(0, 1) * (A(1, 0) * A(2, 2) - A(1, 2) * A(2, 0)) +
                   A(0, 2) * (A(1, 0) * A(2, 1) - A(1, 1) * A(2, 0));
        case 4: {
            // expand along the first row
            double s = 0;
            for (int j = 0; j < 4; ++j) {
                Mat M(3);
                for (int r = 1; r < 4; ++r) {
                    int cc = 0;
                    for (int c = 0; c < 4; ++c) {
                        if (c == j) continue;
                        M(r - 1, cc++) = A(r, c);
                    }
                }
                s += ((j % 2) ? -1.0 : 1.0) * A(0, j) * det(M);
            }
            return s;
        }
        default:
            throw std::logic_error("det: unsupported dimension");
    }
}

Mat inverse(const Mat& A) {
    const int n = A.n;
    // Gauss-Jordan with partial pivoting; n <= 4 so this is plenty.
    Mat a = A, inv = Mat::identity(n);
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a(r, c)) > std::abs(a(p, c))) p = r;
        if (a(p, c) == 0.0) throw std::runtime_error("inverse: singular matrix");
        if (p != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        double piv = a(c, c);
        for (int j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            double f = a(r, c);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

Vec solve(const Mat& A, const Vec& b) { return inverse(A) * b; }

double det_cols(const Vec* cols, int n) {
    Mat A(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) A(i, j) = cols[j][i];
    return det(A);
}

double min_eigenvalue_sym(const Mat& A) {
    switch (A.n) {
        case 1:
            return A(0, 0);
        case 2: {
            double tr = A(0, 0) + A(1, 1);
            double d = A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
            double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - d));
            return tr / 2.0 - disc;
        }
        case 3: {
            // closed-form symmetric 3x3 eigenvalues (trigonometric method)
            double q = (A(0, 0) + A(1, 1) + A(2, 2)) / 3.0;
            Mat B = A - q * Mat::identity(3);
            double p2 = 0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) p2 += B(i, j) * B(i, j);
            double p = std::sqrt(p2 / 6.0);
            if (p < 1e-300) return q;
            Mat C = (1.0 / p) * B;
            double r = det(C) / 2.0;
            r = std::max(-1.0, std::min(1.0, r));
            double phi = std::acos(r) / 3.0;
            // smallest eigenvalue corresponds to phi + 2*pi/3
            return q + 2.0 * p * std::cos(phi + 2.0 * kPi / 3.0);
        }
        default:
            throw std::logic_error("min_eigenvalue_sym: unsupported dimension");
    }
}

std::string to_string(const Vec& v) {
    std::string s = "(";
    char buf[32];
    for (int i = 0; i < v.n; ++i) {
        std::snprintf(buf, sizeof(buf), "%.12g", v[i]);
        s += buf;
        if (i + 1 < v.n) s += ", ";
    }
    return s + ")";
}

}  // namespace santalo
