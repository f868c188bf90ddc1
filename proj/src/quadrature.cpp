#include "mesofringe/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "mesofringe/errors.hpp"

namespace mesofringe {

namespace {

// Kronrod abscissae (descending, last is the centre) and weights, with the
// embedded 7-point Gauss weights on the odd-indexed abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

struct ByError {
    bool operator()(const Panel& lhs, const Panel& rhs) const {
        if (lhs.error != rhs.error) return lhs.error < rhs.error;
        return lhs.a > rhs.a;
    }
};

// One G7/K15 panel with the QUADPACK error heuristic.
Panel gauss_kronrod_15(const RealFunction& f, double a, double b) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double tiny = std::numeric_limits<double>::min();

    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double abs_half = std::abs(half);

    const double fc = f(centre);
    double resk = fc * kWgk[7];
    double resg = fc * kWg[3];
    double resabs = std::abs(resk);

    std::array<double, 7> f1{};
    std::array<double, 7> f2{};
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = f(centre - dx);
        f2[j] = f(centre + dx);
        const double pair = f1[j] + f2[j];
        resk += kWgk[j] * pair;
        resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) resg += kWg[j / 2] * pair;
    }

    const double mean = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (std::size_t j = 0; j < 7; ++j) {
        resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
    }

    const double value = resk * half;
    resabs *= abs_half;
    resasc *= abs_half;
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    if (resabs > tiny / (50.0 * eps)) {
        err = std::max(50.0 * eps * resabs, err);
    }
    if (!std::isfinite(value)) {
        throw DomainError("integrate: integrand is not finite on the interval");
    }
    return {a, b, value, err};
}

}  // namespace

IntegrationResult integrate_adaptive(const RealFunction& f, double a, double b,
                                     const QuadratureOptions& opts) {
    if (!(a <= b)) throw DomainError("integrate: requires a <= b");
    if (!(opts.abs_tol > 0.0)) throw DomainError("integrate: tolerance must be positive");
    if (a == b) return {};

    const std::size_t initial = std::max<std::size_t>(1, opts.initial_panels);
    std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
    double total_err = 0.0;
    const double width = (b - a) / static_cast<double>(initial);
    for (std::size_t i = 0; i < initial; ++i) {
        const double lo = a + width * static_cast<double>(i);
        const double hi = (i + 1 == initial) ? b : a + width * static_cast<double>(i + 1);
        Panel p = gauss_kronrod_15(f, lo, hi);
        total_err += p.error;
        heap.push(p);
    }

    std::size_t evaluations = 15 * initial;
    std::size_t splits = 0;
    std::vector<Panel> frozen;  // panels too narrow to bisect further

    while (total_err > opts.abs_tol && !heap.empty()) {
        if (splits >= opts.max_subdivisions) break;
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            frozen.push_back(worst);
            continue;
        }
        Panel left = gauss_kronrod_15(f, worst.a, mid);
        Panel right = gauss_kronrod_15(f, mid, worst.b);
        evaluations += 30;
        ++splits;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum from scratch so the running-update drift does not leak into
    // the reported bound.
    std::vector<Panel> panels = std::move(frozen);
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    IntegrationResult result;
    for (const Panel& p : panels) {
        result.value += p.value;
        result.abs_error += p.error;
    }
    result.evaluations = evaluations;
    result.panels = panels.size();

    if (result.abs_error > opts.abs_tol) {
        std::ostringstream msg;
        msg << "integrate: no convergence on [" << a << ", " << b << "] after " << splits
            << " subdivisions (estimate " << result.value << ", error bound " << result.abs_error
            << ", tolerance " << opts.abs_tol << ")";
        throw IntegrationError(msg.str(), result.value, result.abs_error);
    }
    return result;
}

IntegrationResult principal_value_adaptive(const RealFunction& numerator, double pole, double a,
                                           double b, const QuadratureOptions& opts) {
    if (!(a < pole && pole < b)) {
        throw DomainError("principal_value_integrate: pole must lie strictly inside (a, b)");
    }
    const double radius = std::min(pole - a, b - pole);

    QuadratureOptions half_opts = opts;
    half_opts.abs_tol = 0.5 * opts.abs_tol;

    const RealFunction folded = [&](double u) {
        return (numerator(pole + u) - numerator(pole - u)) / u;
    };
    IntegrationResult out = integrate_adaptive(folded, 0.0, radius, half_opts);

    const double lo = pole - radius;
    const double hi = pole + radius;
    const RealFunction direct = [&](double x) { return numerator(x) / (x - pole); };
    if (lo > a) {
        const IntegrationResult tail = integrate_adaptive(direct, a, lo, half_opts);
        out.value += tail.value;
        out.abs_error += tail.abs_error;
        out.evaluations += tail.evaluations;
        out.panels += tail.panels;
    } else if (hi < b) {
        const IntegrationResult tail = integrate_adaptive(direct, hi, b, half_opts);
        out.value += tail.value;
        out.abs_error += tail.abs_error;
        out.evaluations += tail.evaluations;
        out.panels += tail.panels;
    }
    return out;
}

}  // namespace mesofringe
