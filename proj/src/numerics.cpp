#include "zr/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "zr/errors.hpp"

namespace zr {

void ToleranceConfig::validate() const {
    if (!(quad_abs_tol > 0) || !(root_tol > 0) || !(minimize_tol > 0) || max_subdivisions <= 0)
        throw InvalidArgument("tolerances must be strictly positive");
}

double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= 8) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    const auto half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the nodes kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

std::string fmt_g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

struct Piece {
    double a, b, value, error;
};

Piece gk15(const Fn& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double k = kWgk[7] * fc;
    double g = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double s = f(c - dx) + f(c + dx);
        k += kWgk[j] * s;
        if (j % 2 == 1) g += kWg[j / 2] * s;
    }
    k *= h;
    g *= h;
    if (!std::isfinite(k))
        throw InvalidArgument("non-finite integrand on [" + std::to_string(a) + ", " +
                              std::to_string(b) + "]");
    return {a, b, k, std::abs(k - g)};
}

// Sum of the error estimates in left-to-right order. The running total in
// the refinement loop drifts after many updates, so decisions to stop are
// taken on this value.
double canonical_error(std::vector<Piece> pieces) {
    std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) { return x.a < y.a; });
    std::vector<double> errs;
    errs.reserve(pieces.size());
    for (const auto& p : pieces) errs.push_back(p.error);
    return pairwise_sum(errs);
}

bool worse(const Piece& x, const Piece& y) {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
}

}  // namespace

QuadratureResult integrate(const Fn& f, std::span<const double> bp, double tol,
                           int max_subdivisions) {
    if (bp.size() < 2) throw InvalidArgument("need at least two breakpoints");
    if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
    for (std::size_t i = 1; i < bp.size(); ++i)
        if (!(bp[i - 1] <= bp[i])) throw InvalidArgument("breakpoints must be sorted");

    std::vector<Piece> heap;
    double err_total = 0.0;
    for (std::size_t i = 1; i < bp.size(); ++i) {
        if (bp[i] == bp[i - 1]) continue;
        heap.push_back(gk15(f, bp[i - 1], bp[i]));
        err_total += heap.back().error;
    }
    if (heap.empty()) return {0.0, 0.0};
    std::make_heap(heap.begin(), heap.end(), worse);

    for (long iter = 1;; ++iter) {
        if (err_total <= tol || iter % 4096 == 0) {
            err_total = canonical_error(heap);
            if (err_total <= tol) break;
        }
        if (static_cast<int>(heap.size()) >= max_subdivisions)
            throw SubdivisionLimit("error estimate " + fmt_g(err_total) +
                                   " above tolerance " + fmt_g(tol));
        std::pop_heap(heap.begin(), heap.end(), worse);
        const Piece worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        Piece left = gk15(f, worst.a, mid);
        Piece right = gk15(f, mid, worst.b);
        err_total += left.error + right.error - worst.error;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), worse);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), worse);
    }

    // Recompute totals in a canonical order so the result does not depend
    // on the history of the running sums.
    std::sort(heap.begin(), heap.end(), [](const Piece& x, const Piece& y) { return x.a < y.a; });
    std::vector<double> vals, errs;
    vals.reserve(heap.size());
    errs.reserve(heap.size());
    for (const auto& p : heap) {
        vals.push_back(p.value);
        errs.push_back(p.error);
    }
    return {pairwise_sum(vals), pairwise_sum(errs)};
}

QuadratureResult integrate(const Fn& f, double a, double b, double tol, int max_subdivisions) {
    if (!(a <= b)) throw InvalidArgument("integrate requires a <= b");
    const std::array<double, 2> bp{a, b};
    return integrate(f, bp, tol, max_subdivisions);
}

std::vector<double> geometric_partition(double a, double b, double first_step) {
    std::vector<double> bp{a};
    double step = first_step;
    while (a + step < b) {
        bp.push_back(a + step);
        step *= 2.0;
    }
    bp.push_back(b);
    return bp;
}

QuadratureResult integrate_improper_upper(const Fn& f, double a, const Fn& tail_bound,
                                          double tol, int max_subdivisions) {
    if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
    double span = 1.0;
    double cut = a + span;
    double tail = tail_bound(cut);
    while (!(tail <= tol / 2)) {
        span *= 2.0;
        cut = a + span;
        if (!std::isfinite(cut) || span > 1e300)
            throw TailDivergence("tail bound never dropped below tol/2");
        tail = tail_bound(cut);
    }
    const auto bp = geometric_partition(a, cut);
    auto body = integrate(f, bp, tol / 2, max_subdivisions);
    return {body.value, body.error_estimate + tail};
}

double find_root(const Fn& f, double lo, double hi, double tol) {
    if (!(lo <= hi)) throw InvalidArgument("find_root requires lo <= hi");
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi))
        throw NoSignChange("f(" + std::to_string(lo) + ") and f(" + std::to_string(hi) +
                           ") have the same sign");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (std::signbit(fm) == std::signbit(flo)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double minimize_scalar(const Fn& f, double lo, double hi, double tol) {
    if (!(lo < hi) || !(tol > 0)) throw InvalidArgument("minimize_scalar needs lo < hi, tol > 0");
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = f(x2);
        }
        if (!(x1 > lo && x2 < hi)) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace zr
