#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <limits>
#include <mutex>
#include <numbers>

namespace qgt::detail {

const GaussRule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw InvalidConfig("Gauss-Legendre rule needs n >= 1");
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 1;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1;
            dp = n * (x * p1 - p0) / (x * x - 1);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.x[i] = x;
        r.w[i] = 2 / ((1 - x * x) * dp * dp);
    }
    return cache.emplace(n, std::move(r)).first->second;
}

long product_cutoff(double q, const QuadratureSpec& quad, double slowest_start) {
    const double K = std::log(quad.tol * 1e-3) / std::log(q);
    const double need = quad.u_halfwidth + std::abs(quad.R) + K - slowest_start + 2;
    const long I = std::max(1L, static_cast<long>(std::ceil(need)));
    if (I > quad.product_truncation)
        throw NonConvergedQuadrature("infinite product needs more than product_truncation factors");
    return I;
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRoundoffFactor = 4;

// log(1 - e^z) without overflow when Re z is large
cd log1m_exp(cd z) {
    if (z.real() > 30) return z + std::log(std::exp(-z) - 1.0);
    return std::log(1.0 - std::exp(z));
}

struct Engine {
    const StripProblem& p;
    const QuadratureSpec& quad;
    double lnq, L, c, cut;
    cd lnx;
    std::vector<double> minus, plus;

    Engine(const StripProblem& prob, const QuadratureSpec& qs)
        : p(prob), quad(qs), minus(prob.minus), plus(prob.plus) {
        lnq = std::log(p.q);
        L = -lnq;
        c = kPi / (2 * L);
        cut = std::log(quad.tol * 1e-6) / lnq;
        lnx = std::log(p.x);
        std::sort(minus.begin(), minus.end());
        std::sort(plus.begin(), plus.end());
    }

    // Factors with q^{e -+ Re w} below q^cut are dropped node by node; the
    // exponent lists are sorted so the loops stop at the first such factor.
    cd log_prod(cd w) const {
        cd s = 0;
        for (double e : minus) {
            if (e - w.real() > cut) break;
            s += log1m_exp((e - w) * lnq);
        }
        for (double e : plus) {
            if (e + w.real() > cut) break;
            s += log1m_exp((e + w) * lnq);
        }
        return s;
    }

    double center() const {
        if (minus.empty() || plus.empty()) return 0;
        return 0.5 * (minus.front() - plus.front());
    }

    struct UPre {
        cd qu, qiu, hu, hiu;  // q^u, q^-u, q^{u/2}, q^{-u/2}
    };
    struct VPre {
        cd qv, qiv, hv, hiv, a1, a2, a3;
    };
    // Nodes on the two u-lines Im u = -h and Im u = +h with the orientation
    // sign folded into the weight, scaled later by exp(-shift).
    struct ULines {
        std::vector<cd> u, logwg;  // log of (weight * x^u / P(u)), sign kept apart
        std::vector<UPre> pre;
        std::vector<double> sign;
        double lo = 0, hi = 0;
    };

    ULines march(double h, int n) const {
        const auto& gl = gauss_legendre(n);
        const double width = std::min(1.0, 0.25 * kPi / L);
        const double s0 = center();
        ULines out;
        out.lo = out.hi = s0;
        double gmax = -1e300;
        const double drop = std::log(quad.tol * 1e-3);
        for (int dir : {+1, -1}) {
            int quiet = 0;
            for (long k = 0; quiet < 2; ++k) {
                const double a = s0 + dir * k * width, b = a + dir * width;
                if (std::abs(b - s0) > quad.u_halfwidth)
                    throw NonConvergedQuadrature("u-integrand not negligible at u_halfwidth");
                double panel_max = -1e300;
                for (int i = 0; i < n; ++i) {
                    const double s = 0.5 * (a + b) + 0.5 * (b - a) * gl.x[i];
                    const double w = 0.5 * width * gl.w[i];
                    for (double sg : {+1.0, -1.0}) {
                        const cd u(s, -sg * h);  // lower line forward, upper line backward
                        const cd lg = std::log(w) + u * lnx - log_prod(u);
                        out.u.push_back(u);
                        out.pre.push_back(upre(u));
                        out.logwg.push_back(lg);
                        out.sign.push_back(sg);
                        panel_max = std::max(panel_max, lg.real());
                    }
                }
                gmax = std::max(gmax, panel_max);
                quiet = panel_max < gmax + drop ? quiet + 1 : 0;
                (dir > 0 ? out.hi : out.lo) = b;
            }
        }
        return out;
    }

    UPre upre(cd u) const {
        const cd h = std::exp(0.5 * u * lnq);
        return {h * h, 1.0 / (h * h), h, 1.0 / h};
    }
    VPre vpre(cd v) const {
        const double mm = static_cast<double>(p.m);
        const cd h = std::exp(0.5 * v * lnq);
        VPre r{h * h, 1.0 / (h * h), h, 1.0 / h, 0, 0, 0};
        switch (p.kernel) {
            case StripKernel::A: break;
            case StripKernel::C: r.a1 = std::exp((mm + 1) * v * lnq) - std::exp(-(mm + 1) * v * lnq); break;
            case StripKernel::D:
                r.a1 = std::exp(-(mm + 0.5) * v * lnq);
                r.a2 = 1.0 / r.a1;
                break;
            case StripKernel::B:
                r.a1 = std::exp(-(mm + 1) * v * lnq);
                r.a2 = 1.0 / r.a1;
                r.a3 = r.hv - r.hiv;
                break;
        }
        return r;
    }
    cd kernel(const UPre& u, const VPre& v) const {
        switch (p.kernel) {
            case StripKernel::A: return 1.0 / (1.0 - v.qv * u.qiu);
            case StripKernel::C: return v.a1 / (u.qu * v.qiv - 1.0);
            case StripKernel::D: return (u.hu * v.a1 + u.hiu * v.a2) / (v.hv * u.hiu - u.hu * v.hiv);
            case StripKernel::B:
                return (u.hu * v.a1 - u.hiu * v.a2) * v.a3 / ((v.hv * u.hiu - u.hu * v.hiv) * (u.hu - u.hiu));
        }
        return 0;
    }

    // -(1/2 pi) * integral of I(R + iy) dy over one period, with
    // I(v) = (1/2 pi i) * (integral over the u-lines).
    cd double_integral(int nu, int nv, QuadDiagnostics* diag, double* magnitude) const {
        const ULines inner = march(1.5 * c, nu), outer = march(0.5 * c, nu);
        double shift = -1e300;
        for (const auto& lg : inner.logwg) shift = std::max(shift, lg.real());
        for (const auto& lg : outer.logwg) shift = std::max(shift, lg.real());
        auto weights = [&](const ULines& ul) {
            std::vector<cd> w(ul.u.size());
            for (std::size_t i = 0; i < w.size(); ++i) w[i] = ul.sign[i] * std::exp(ul.logwg[i] - shift);
            return w;
        };
        const std::vector<cd> win = weights(inner), wout = weights(outer);

        const auto& gl = gauss_legendre(std::max(1, (nv + 3) / 4));
        const int npan = static_cast<int>(gl.x.size());
        struct VNode {
            double y, w;
            bool in;
        };
        std::vector<VNode> vn;
        const double edges[5] = {-c, 0, c, 2 * c, 3 * c};
        for (int pnl = 0; pnl < 4; ++pnl)
            for (int i = 0; i < npan; ++i) {
                const double a = edges[pnl], b = edges[pnl + 1];
                vn.push_back({0.5 * (a + b) + 0.5 * (b - a) * gl.x[i], 0.5 * (b - a) * gl.w[i], pnl < 2});
            }
        std::vector<cd> terms(vn.size());
        std::vector<double> mags(vn.size());
        auto body = [&](std::size_t k) {
            const cd v(quad.R, vn[k].y);
            const ULines& ul = vn[k].in ? inner : outer;
            const std::vector<cd>& w = vn[k].in ? win : wout;
            const VPre vp = vpre(v);
            cd acc = 0;
            double mag = 0;
            for (std::size_t i = 0; i < ul.u.size(); ++i) {
                const cd t = w[i] * kernel(ul.pre[i], vp);
                acc += t;
                mag += std::abs(t);
            }
            const cd outer_factor = vn[k].w * std::exp(log_prod(v) + shift);
            terms[k] = acc * outer_factor;
            mags[k] = mag * std::abs(outer_factor);
        };
        const long nvn = static_cast<long>(vn.size());
        if (quad.parallel) {
#pragma omp parallel for schedule(static)
            for (long k = 0; k < nvn; ++k) body(static_cast<std::size_t>(k));
        } else {
            for (long k = 0; k < nvn; ++k) body(static_cast<std::size_t>(k));
        }
        cd total = 0;
        double mag = 0;
        for (std::size_t k = 0; k < terms.size(); ++k) {
            total += terms[k];
            mag += mags[k];
        }
        if (magnitude) *magnitude = mag / (4 * kPi * kPi);
        if (diag) {
            diag->u_lo = std::min(inner.lo, outer.lo);
            diag->u_hi = std::max(inner.hi, outer.hi);
            diag->u_nodes = static_cast<long>(inner.u.size() + outer.u.size());
            diag->v_nodes = nvn;
        }
        // (1/2 pi i) from the u-integral, -(1/2 pi) from dv/(2 pi i) with dv = i dy
        return total / cd(0, 2 * kPi) * (-1.0 / (2 * kPi));
    }

    // integral from R + ic down to R - ic of x^v sum_k alpha_k q^{beta_k v} dv / (2 pi i)
    cd single_integral() const {
        std::vector<std::pair<double, double>> terms;  // (alpha, beta)
        const double mm = static_cast<double>(p.m);
        switch (p.kernel) {
            case StripKernel::A: terms = {{1, 0}}; break;
            case StripKernel::B: terms = {{1, mm + 0.5}, {-1, -(mm + 0.5)}}; break;
            case StripKernel::C: terms = {{1, mm + 1}, {-1, -(mm + 1)}}; break;
            case StripKernel::D: terms = {{1, mm}, {1, -mm}}; break;
        }
        cd s = 0;
        for (auto [alpha, beta] : terms) {
            const cd g = lnx + beta * lnq;
            const cd e = std::exp(g * quad.R);
            s += std::abs(g) < 1e-12 ? -alpha * e * c / kPi : -alpha * e * std::sin(g * c) / (kPi * g);
        }
        return s;
    }

    cd bracket(int nu, int nv, QuadDiagnostics* diag, double* magnitude = nullptr) const {
        const cd v2 = double_integral(nu, nv, diag, magnitude);
        const cd s = single_integral() / lnq;
        return p.kernel == StripKernel::D ? v2 + s : v2 - s;
    }
};

}  // namespace

cd strip_value(const StripProblem& p, const QuadratureSpec& quad, QuadDiagnostics* diag) {
    quad.validate();
    if (p.x.imag() == 0 && p.x.real() <= 0) throw DomainViolation("x on the branch cut (-inf, 0]");
    Engine eng(p, quad);
    const cd r1 = p.prefactor * eng.bracket(quad.u_nodes_per_unit, quad.v_nodes, diag);
    if (!quad.check_doubling) return r1;
    QuadDiagnostics d2;
    double mag = 0;
    const cd r2 = p.prefactor * eng.bracket(2 * quad.u_nodes_per_unit, 2 * quad.v_nodes, &d2, &mag);
    const double scale = std::max(1.0, std::abs(r2));
    const double delta = std::abs(r2 - r1) / scale;
    // Doubling cannot resolve differences below the rounding error of the sum.
    const double floor = kRoundoffFactor * std::numeric_limits<double>::epsilon() * mag * std::abs(p.prefactor) / scale;
    if (diag) {
        const long pt = diag->product_terms;
        const bool cont = diag->continued;
        *diag = d2;
        diag->product_terms = pt;
        diag->continued = cont;
        diag->doubling_delta = delta;
        diag->roundoff_floor = floor;
    }
    if (!(delta <= std::max(quad.tol, floor))) throw NonConvergedQuadrature("doubling the nodes changed the strip integral by more than tol");
    return r2;
}

}  // namespace qgt::detail
