#pragma once

#include <vector>

namespace braidtk::detail {

/// Planar matching on 2n boundary points of a rectangle: points 0..n-1 on
/// the top edge, n..2n-1 on the bottom edge. m[x] is the partner of x and
/// m[m[x]] == x. These are the basis diagrams of the Temperley-Lieb
/// algebra; there are at most Catalan(n) of them.
using TLMatching = std::vector<int>;

inline TLMatching tl_identity(int n) {
    TLMatching m(2 * n);
    for (int k = 0; k < n; ++k) {
        m[k] = n + k;
        m[n + k] = k;
    }
    return m;
}

/// Stack the cup-cap generator e_i (1-based, joining bottom points i-1 and
/// i of the running diagram) underneath the matching. Returns the number
/// of closed loops produced (0 or 1); the matching is updated in place.
inline int tl_apply_e(TLMatching& m, int i, int n) {
    const int a = n + (i - 1), b = n + i;
    const int pa = m[a], pb = m[b];
    if (pa == b) return 1;  // cap closes the existing a-b arc into a loop
    m[pa] = pb;
    m[pb] = pa;
    m[a] = b;
    m[b] = a;
    return 0;
}

/// Loops formed when the diagram is closed around the braid axis
/// (top point k glued to bottom point n+k).
inline int tl_trace_loops(const TLMatching& m, int n) {
    std::vector<char> seen(2 * n, 0);
    int loops = 0;
    for (int start = 0; start < 2 * n; ++start) {
        if (seen[start]) continue;
        ++loops;
        int x = start;
        while (!seen[x]) {
            seen[x] = 1;
            int y = m[x];  // arc inside the diagram
            seen[y] = 1;
            x = y < n ? y + n : y - n;  // closure arc
        }
    }
    return loops;
}

}  // namespace braidtk::detail
