#pragma once

#include <vector>

#include "santalo/errors.hpp"
#include "santalo/smallvec.hpp"

namespace santalo {

// Linear hyperplane through the origin, identified with its unit normal up
// to sign. Instances with normals u and -u compare equal.
struct LinearHyperplane {
    Vec normal;  // unit vector

    LinearHyperplane() = default;
    explicit LinearHyperplane(const Vec& u) {
        double r = norm(u);
        if (r == 0.0) throw ZeroDirection();
        normal = u / r;
        canonicalize();
    }

    int dim() const { return normal.dim(); }

    // flips the sign so the first nonzero coordinate is positive
    void canonicalize() {
        for (int i = 0; i < normal.dim(); ++i) {
            if (std::abs(normal[i]) > 1e-14) {
                if (normal[i] < 0) normal = -normal;
                return;
            }
        }
    }

    bool same_as(const LinearHyperplane& o, double tol = 1e-9) const {
        return dist(normal, o.normal) <= tol || dist(normal, -o.normal) <= tol;
    }
};

// Deterministic orthonormal basis of the hyperplane u^perp (n-1 vectors).
inline std::vector<Vec> orthonormal_complement(const Vec& u_in) {
    Vec u = normalized(u_in);
    int n = u.dim();
    std::vector<Vec> basis;
    if (n == 2) {
        basis.push_back(rot90(u));
        return basis;
    }
    // pick the coordinate axis least aligned with u
    int k = 0;
    for (int i = 1; i < n; ++i)
        if (std::abs(u[i]) < std::abs(u[k])) k = i;
    Vec e1 = Vec::axis(n, k) - u[k] * u;
    e1 = normalized(e1);
    if (n == 3) {
        basis.push_back(e1);
        basis.push_back(cross(u, e1));
        return basis;
    }
    throw WrongDimension("orthonormal_complement: dimension must be 2 or 3");
}

inline std::vector<Vec> hyperplane_basis(const LinearHyperplane& H) {
    return orthonormal_complement(H.normal);
}

}  // namespace santalo
