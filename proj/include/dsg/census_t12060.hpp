#pragma once

#include "dsg/gluing.hpp"
#include "dsg/presentations.hpp"

namespace dsg {

// Built-in data for the census manifold t12060 (8-tetrahedron census), the
// double cover of the twice-drilled Kanenobu tangle complement. The gluing
// rows and the exact shape solution are shipped as JSON assets as well; the
// test suite pins both to these values by checksum.

inline GluingSystem t12060_gluing_system() {
    return GluingSystem(8, {
        { 2, -2,  2,  1,  2, -1,  1, -1,  2,  0,  0,  2, -1,  1,  2,  0, -4},
        { 0,  0,  0,  0,  0,  0,  1, -1,  0,  0,  0,  0, -1,  1,  0,  0,  0},
        {-1,  2,  0, -1,  0, -1,  0,  0, -2,  1,  0,  0,  0,  0,  0,  0,  2},
        { 0, -2, -1,  1, -1,  1,  0, -1,  0,  0,  0,  0,  0, -1,  0,  0,  0},
        { 1,  0,  1,  0,  1,  0,  0,  0,  0,  0,  1,  0,  0,  0,  1,  0, -2},
        { 0,  0,  1,  0,  1,  0,  1,  0,  2,  0,  0,  0,  1,  0,  0,  0, -2},
        { 0,  0,  0, -1,  0, -1, -1,  1,  0,  0, -1,  1, -1,  1, -1,  1,  2},
        { 0,  0,  0,  0,  0,  0, -1,  1,  0,  0,  1, -1,  1, -1, -1,  1,  0},
    });
}

// Exact solution of the system above; every shape lies in the upper half
// plane, so the triangulation is geometric.
inline ShapeVector t12060_shapes() {
    return ShapeVector({
        {0.0, 2.0},
        {1.0 / 5.0, 3.0 / 5.0},
        {1.0 / 5.0, 3.0 / 5.0},
        {0.5, 0.5},
        {1.0, 2.0},
        {0.5, 1.0},
        {0.5, 0.5},
        {0.5, 1.0},
    });
}

// Fundamental group of the double branched cover M_n of the Kanenobu knot
// K_{-10n, 10n+3}:
//   < a1, a2, a3, a4 | b1, b2, b3, b4 >  with
//   b1 = (a1^-1 a2)^10n a4^-1 a1^2
//   b2 = a2^-1 a3 (a2^-1 a1)^10n a2^-1
//   b3 = (a4^-1 a3)^(10n+3) a3^-1 a2 a3^-2
//   b4 = a1^-1 a4 (a3^-1 a4)^(10n+3) a4^2
// Words are stored freely reduced; H_1 is Z/25 for every n >= 1.
inline GroupPresentation kanenobu_presentation(long long n) {
    if (n < 1) throw domain_error("kanenobu_presentation: n must be >= 1");
    const long long m = 10 * n;
    GroupPresentation p;
    p.generators = {"a1", "a2", "a3", "a4"};
    const int a1 = 0, a2 = 1, a3 = 2, a4 = 3;

    Word b1;
    for (long long i = 0; i < m; ++i) {
        b1.append(a1, -1);
        b1.append(a2, 1);
    }
    b1.append(a4, -1);
    b1.append(a1, 2);

    Word b2;
    b2.append(a2, -1);
    b2.append(a3, 1);
    for (long long i = 0; i < m; ++i) {
        b2.append(a2, -1);
        b2.append(a1, 1);
    }
    b2.append(a2, -1);

    Word b3;
    for (long long i = 0; i < m + 3; ++i) {
        b3.append(a4, -1);
        b3.append(a3, 1);
    }
    b3.append(a3, -1);
    b3.append(a2, 1);
    b3.append(a3, -2);

    Word b4;
    b4.append(a1, -1);
    b4.append(a4, 1);
    for (long long i = 0; i < m + 3; ++i) {
        b4.append(a3, -1);
        b4.append(a4, 1);
    }
    b4.append(a4, 2);

    p.relators = {b1, b2, b3, b4};
    return p;
}

}  // namespace dsg
