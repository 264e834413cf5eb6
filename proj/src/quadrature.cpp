#include "mayer/quadrature.hpp"

#include <queue>
#include <vector>

namespace mayer {

namespace {

constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
    double a, b;
    Complex value;
    double error;
    bool operator<(const Piece& o) const { return error < o.error; }
};

Piece rule(const std::function<Complex(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    Complex fc = f(c);
    Complex kron = wgk[7] * fc;
    Complex gauss = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        Complex f1 = f(c - dx), f2 = f(c + dx);
        kron += wgk[j] * (f1 + f2);
        if (j % 2 == 1) gauss += wg[j / 2] * (f1 + f2);
    }
    kron *= h;
    gauss *= h;
    return {a, b, kron, std::abs(kron - gauss)};
}

}  // namespace

QuadratureResult integrate_gk15(const std::function<Complex(double)>& f, double a, double b, double abs_tol,
                                double rel_tol, int max_intervals) {
    std::priority_queue<Piece> heap;
    Piece first = rule(f, a, b);
    Complex total = first.value;
    double err = first.error;
    heap.push(first);
    int evals = 15;
    while (err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (int(heap.size()) >= max_intervals)
            throw QuadratureError("integrate_gk15: tolerance not reached within the interval budget");
        Piece worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Piece l = rule(f, worst.a, mid), r = rule(f, mid, worst.b);
        evals += 30;
        total += l.value + r.value - worst.value;
        err += l.error + r.error - worst.error;
        heap.push(l);
        heap.push(r);
    }
    // re-sum to drop the accumulated update rounding
    Complex v = 0.0;
    double e = 0.0;
    while (!heap.empty()) {
        v += heap.top().value;
        e += heap.top().error;
        heap.pop();
    }
    return {v, e, evals};
}

}  // namespace mayer
