#include "gnorm/density.hpp"

#include "gnorm/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gnorm {

namespace {

// Neumaier compensated sum, real and imaginary parts kept apart.
struct Acc {
    double s_re = 0, c_re = 0, s_im = 0, c_im = 0;
    static void add1(double &s, double &c, double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    void add(cplx x) {
        add1(s_re, c_re, x.real());
        add1(s_im, c_im, x.imag());
    }
    cplx value() const { return {s_re + c_re, s_im + c_im}; }
};

double unit_uniform(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

cplx unit_disc(std::mt19937_64 &rng) {
    double r = std::sqrt(unit_uniform(rng));
    double th = 2 * std::numbers::pi * unit_uniform(rng);
    return std::polar(r, th);
}

cplx unit_circle(std::mt19937_64 &rng) { return std::polar(1.0, 2 * std::numbers::pi * unit_uniform(rng)); }

struct Tables {
    int p = 1, q = 1;
    std::vector<std::vector<cplx>> edge; // edge[e][x * q + y]
};

Tables build_tables(const BipartiteGraph &g, const Colouring &a, const Decoration &d, Mode mode) {
    check_aligned(g, a);
    if (static_cast<int>(d.size()) != g.num_edges())
        fail(ErrorKind::InvalidArgument, "decoration must give one kernel per edge");
    Tables t;
    if (!d.empty()) {
        t.p = d[0].p;
        t.q = d[0].q;
    }
    for (const auto &f : d) {
        if (f.p != t.p || f.q != t.q)
            fail(ErrorKind::ShapeMismatch, "decoration kernels differ in shape");
        for (const auto &z : f.v)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                fail(ErrorKind::InvalidArgument, "kernel entry is not finite");
    }
    if (mode == Mode::Transpose && t.p != t.q)
        fail(ErrorKind::ShapeMismatch, "transpose mode needs a square kernel, got " + std::to_string(t.p) + "x" +
                                           std::to_string(t.q));
    t.edge.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        auto &tab = t.edge[e];
        tab.resize(static_cast<std::size_t>(t.p) * t.q);
        const auto &f = d[e];
        for (int x = 0; x < t.p; ++x)
            for (int y = 0; y < t.q; ++y) {
                cplx z;
                if (a[e])
                    z = f.at(x, y);
                else if (mode == Mode::Conjugate)
                    z = std::conj(f.at(x, y));
                else
                    z = f.at(y, x);
                tab[static_cast<std::size_t>(x) * t.q + y] = z;
            }
    }
    return t;
}

cplx eval_direct(const BipartiteGraph &g, const Tables &t, const Caps &caps) {
    int n = g.num_vertices();
    std::vector<int> dom(n);
    long double total = 1;
    for (int v = 0; v < n; ++v) {
        dom[v] = g.is_left(v) ? t.p : t.q;
        total *= dom[v];
    }
    if (total > static_cast<long double>(caps.assignments))
        fail(ErrorKind::CapExceeded, "direct evaluation: assignment count exceeds cap " +
                                         std::to_string(caps.assignments));
    std::uint64_t count = static_cast<std::uint64_t>(total);
    const std::size_t chunks = 64;
    std::uint64_t per = (count + chunks - 1) / chunks;
    std::vector<Acc> partial(chunks);
    int m = g.num_edges();
    std::vector<int> eu(m), ev(m);
    for (int e = 0; e < m; ++e) {
        eu[e] = g.edge_left(e);
        ev[e] = g.edge_right(e);
    }
    parallel_for(chunks, [&](std::size_t c) {
        std::uint64_t lo = c * per, hi = std::min(count, lo + per);
        if (lo >= hi)
            return;
        std::vector<int> x(n);
        std::uint64_t r = lo;
        for (int v = 0; v < n; ++v) {
            x[v] = static_cast<int>(r % dom[v]);
            r /= dom[v];
        }
        Acc acc;
        for (std::uint64_t i = lo; i < hi; ++i) {
            cplx prod = 1.0;
            for (int e = 0; e < m; ++e)
                prod *= t.edge[e][static_cast<std::size_t>(x[eu[e]]) * t.q + x[ev[e]]];
            acc.add(prod);
            for (int v = 0; v < n; ++v) {
                if (++x[v] < dom[v])
                    break;
                x[v] = 0;
            }
        }
        partial[c] = acc;
    });
    Acc all;
    for (const auto &p : partial)
        all.add(p.value());
    return all.value() / static_cast<double>(total);
}

struct Factor {
    std::vector<int> vars; // sorted; vars[0] most significant
    std::vector<cplx> table;
};

cplx eval_eliminate(const BipartiteGraph &g, const Tables &t, const Caps &caps) {
    int n = g.num_vertices();
    std::vector<int> dom(n);
    for (int v = 0; v < n; ++v)
        dom[v] = g.is_left(v) ? t.p : t.q;
    std::vector<Factor> fs;
    for (int e = 0; e < g.num_edges(); ++e)
        fs.push_back({{g.edge_left(e), g.edge_right(e)}, t.edge[e]});
    std::vector<char> alive(n, 1);
    for (int step = 0; step < n; ++step) {
        // adjacency among live variables through shared factors
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (const auto &f : fs)
            for (int u : f.vars)
                for (int w : f.vars)
                    adj[u][w] = 1;
        int best = -1;
        long long best_fill = 0;
        long double best_size = 0;
        for (int v = 0; v < n; ++v) {
            if (!alive[v])
                continue;
            std::vector<int> nb;
            long double size = 1;
            for (int u = 0; u < n; ++u)
                if (u != v && alive[u] && adj[v][u]) {
                    nb.push_back(u);
                    size *= dom[u];
                }
            long long fill = 0;
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    fill += adj[nb[i]][nb[j]] ? 0 : 1;
            if (best < 0 || fill < best_fill || (fill == best_fill && size < best_size)) {
                best = v;
                best_fill = fill;
                best_size = size;
            }
        }
        int v = best;
        alive[v] = 0;
        std::vector<Factor> keep, use;
        for (auto &f : fs) {
            if (std::binary_search(f.vars.begin(), f.vars.end(), v))
                use.push_back(std::move(f));
            else
                keep.push_back(std::move(f));
        }
        std::vector<int> U;
        for (const auto &f : use)
            U.insert(U.end(), f.vars.begin(), f.vars.end());
        std::sort(U.begin(), U.end());
        U.erase(std::unique(U.begin(), U.end()), U.end());
        std::vector<int> R;
        for (int u : U)
            if (u != v)
                R.push_back(u);
        long double rsize = 1;
        for (int u : R)
            rsize *= dom[u];
        if (rsize > static_cast<long double>(caps.factor_entries))
            fail(ErrorKind::CapExceeded, "elimination: intermediate factor exceeds cap " +
                                             std::to_string(caps.factor_entries));
        std::size_t k = U.size();
        // stride of each U position inside each used factor and inside the result
        std::vector<std::vector<std::size_t>> fstride(use.size(), std::vector<std::size_t>(k, 0));
        for (std::size_t fi = 0; fi < use.size(); ++fi) {
            const auto &fv = use[fi].vars;
            std::size_t s = 1;
            for (int i = static_cast<int>(fv.size()) - 1; i >= 0; --i) {
                auto pos = std::lower_bound(U.begin(), U.end(), fv[i]) - U.begin();
                fstride[fi][pos] = s;
                s *= dom[fv[i]];
            }
        }
        std::vector<std::size_t> rstride(k, 0);
        {
            std::size_t s = 1;
            for (int i = static_cast<int>(k) - 1; i >= 0; --i) {
                if (U[i] == v)
                    continue;
                rstride[i] = s;
                s *= dom[U[i]];
            }
        }
        std::vector<Acc> acc(static_cast<std::size_t>(rsize));
        std::vector<int> digit(k, 0);
        std::vector<std::size_t> fidx(use.size(), 0);
        std::size_t ridx = 0;
        for (;;) {
            cplx prod = 1.0;
            for (std::size_t fi = 0; fi < use.size(); ++fi)
                prod *= use[fi].table[fidx[fi]];
            acc[ridx].add(prod);
            int j = static_cast<int>(k) - 1;
            for (; j >= 0; --j) {
                int d = dom[U[j]];
                if (++digit[j] < d) {
                    for (std::size_t fi = 0; fi < use.size(); ++fi)
                        fidx[fi] += fstride[fi][j];
                    ridx += rstride[j];
                    break;
                }
                digit[j] = 0;
                for (std::size_t fi = 0; fi < use.size(); ++fi)
                    fidx[fi] -= fstride[fi][j] * (d - 1);
                ridx -= rstride[j] * (d - 1);
            }
            if (j < 0)
                break;
        }
        Factor out;
        out.vars = R;
        out.table.resize(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i)
            out.table[i] = acc[i].value() / static_cast<double>(dom[v]);
        keep.push_back(std::move(out));
        fs = std::move(keep);
    }
    cplx r = 1.0;
    for (const auto &f : fs)
        r *= f.table.at(0);
    return r;
}

} // namespace

StepKernel::StepKernel(int rows, int cols, cplx fill) : p(rows), q(cols) {
    if (rows < 1 || cols < 1)
        fail(ErrorKind::InvalidArgument, "kernel needs at least one row and column");
    v.assign(static_cast<std::size_t>(rows) * cols, fill);
}

StepKernel::StepKernel(int rows, int cols, std::vector<cplx> values) : p(rows), q(cols), v(std::move(values)) {
    if (rows < 1 || cols < 1 || v.size() != static_cast<std::size_t>(rows) * cols)
        fail(ErrorKind::InvalidArgument, "kernel value count does not match its shape");
}

StepKernel StepKernel::conj() const {
    StepKernel r = *this;
    for (auto &z : r.v)
        z = std::conj(z);
    return r;
}

StepKernel StepKernel::transpose() const {
    StepKernel r(q, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

StepKernel StepKernel::abs() const {
    StepKernel r = *this;
    for (auto &z : r.v)
        z = std::abs(z);
    return r;
}

StepKernel StepKernel::scaled(cplx c) const {
    StepKernel r = *this;
    for (auto &z : r.v)
        z *= c;
    return r;
}

StepKernel StepKernel::plus(const StepKernel &o) const {
    if (o.p != p || o.q != q)
        fail(ErrorKind::ShapeMismatch, "kernel sum needs equal shapes");
    StepKernel r = *this;
    for (std::size_t i = 0; i < v.size(); ++i)
        r.v[i] += o.v[i];
    return r;
}

double StepKernel::sup_norm() const {
    double m = 0;
    for (const auto &z : v)
        m = std::max(m, std::abs(z));
    return m;
}

cplx StepKernel::integral() const {
    Acc a;
    for (const auto &z : v)
        a.add(z);
    return a.value() / static_cast<double>(v.size());
}

StepKernel kron(const StepKernel &f, const StepKernel &g) {
    StepKernel r(f.p * g.p, f.q * g.q);
    for (int i1 = 0; i1 < f.p; ++i1)
        for (int j1 = 0; j1 < f.q; ++j1)
            for (int i2 = 0; i2 < g.p; ++i2)
                for (int j2 = 0; j2 < g.q; ++j2)
                    r.at(i1 * g.p + i2, j1 * g.q + j2) = f.at(i1, j1) * g.at(i2, j2);
    return r;
}

StepKernel character_kernel(int p, int a, int b) {
    StepKernel r(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            long long k = (static_cast<long long>(a) * i + static_cast<long long>(b) * j) % p;
            r.at(i, j) = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / p);
        }
    return r;
}

StepKernel random_complex_kernel(int p, int q, std::mt19937_64 &rng) {
    StepKernel r(p, q);
    for (auto &z : r.v)
        z = unit_disc(rng);
    return r;
}

StepKernel random_real_kernel(int p, int q, std::mt19937_64 &rng) {
    StepKernel r(p, q);
    for (auto &z : r.v)
        z = 2 * unit_uniform(rng) - 1;
    return r;
}

cplx t_decoration(const BipartiteGraph &g, const Colouring &a, const Decoration &d, Mode mode, Method method,
                  const Caps &caps) {
    auto t = build_tables(g, a, d, mode);
    return method == Method::Direct ? eval_direct(g, t, caps) : eval_eliminate(g, t, caps);
}

cplx t_density(const BipartiteGraph &g, const Colouring &a, const StepKernel &f, Mode mode, Method method,
               const Caps &caps) {
    return t_decoration(g, a, Decoration(g.num_edges(), f), mode, method, caps);
}

bool agree_relative(cplx x, cplx y, double rel) {
    double scale = std::max(std::abs(x), std::abs(y));
    return std::abs(x - y) <= rel * scale;
}

namespace {

Colouring colouring_at(std::uint64_t x, int m) {
    Colouring a(m);
    for (int i = m - 1; i >= 0; --i) {
        a[i] = x & 1;
        x >>= 1;
    }
    return a;
}

std::vector<cplx> all_colouring_values(const BipartiteGraph &g, const StepKernel &f, Mode mode,
                                       const Caps &caps) {
    int m = g.num_edges();
    if (static_cast<std::size_t>(m) > caps.colouring_edges || m > 62)
        fail(ErrorKind::CapExceeded, "colouring scan: " + std::to_string(m) + " edges > cap " +
                                         std::to_string(caps.colouring_edges));
    std::uint64_t total = 1ULL << m;
    std::vector<cplx> vals(total);
    parallel_for(total, [&](std::size_t x) { vals[x] = t_density(g, colouring_at(x, m), f, mode, Method::Eliminate, caps); });
    return vals;
}

} // namespace

SMax s_max(const BipartiteGraph &g, const StepKernel &f, Mode mode, const Caps &caps) {
    SMax r;
    r.values = all_colouring_values(g, f, mode, caps);
    double mx = 0;
    for (const auto &z : r.values)
        mx = std::max(mx, std::abs(z));
    r.value = mx;
    for (std::size_t x = 0; x < r.values.size(); ++x)
        if (std::abs(r.values[x]) >= mx * (1 - kArgmaxRelTol)) {
            r.argmax = colouring_at(x, g.num_edges());
            break;
        }
    return r;
}

double rho_2m(const BipartiteGraph &g, const StepKernel &f, int m, Mode mode, const Caps &caps) {
    if (m < 1)
        fail(ErrorKind::InvalidArgument, "rho_2m needs m >= 1");
    auto vals = all_colouring_values(g, f, mode, caps);
    double mx = 0;
    for (const auto &z : vals)
        mx = std::max(mx, std::abs(z));
    if (mx == 0)
        return 0;
    double s = 0;
    for (const auto &z : vals)
        s += std::pow(std::abs(z) / mx, 2.0 * m);
    return mx * std::pow(s, 1.0 / (2.0 * m));
}

cplx trig_density(const BipartiteGraph &g, const Colouring &a, const TrigKernel &h, const Caps &caps) {
    check_aligned(g, a);
    switch (h.kind) {
    case TrigKernel::Kind::H0:
        return is_balanced(g, a) ? 1.0 : 0.0;
    case TrigKernel::Kind::Constant: {
        int w = weight(a);
        return std::pow(h.c, w) * std::pow(std::conj(h.c), g.num_edges() - w);
    }
    case TrigKernel::Kind::Hk:
        break;
    }
    if (h.k < 1)
        fail(ErrorKind::InvalidArgument, "h_k needs k >= 1");
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) != 2)
            return trig_density_orientation_sum(g, a, h, caps);
    int ncomp = 0;
    auto comp = connected_components(g, &ncomp);
    std::vector<int> len(ncomp, 0), ones(ncomp, 0);
    for (int e = 0; e < g.num_edges(); ++e) {
        int c = comp[g.edge_left(e)];
        ++len[c];
        ones[c] += a[e];
    }
    cplx r = 1.0;
    for (int c = 0; c < ncomp; ++c)
        r *= 2.0 * std::polar(1.0, 4 * std::numbers::pi * (ones[c] - len[c] / 2) / h.k);
    return r;
}

cplx trig_density_orientation_sum(const BipartiteGraph &g, const Colouring &a, const TrigKernel &h,
                                  const Caps &caps) {
    check_aligned(g, a);
    if (h.kind != TrigKernel::Kind::Hk)
        return trig_density(g, a, h, caps);
    cplx w = std::polar(1.0, 2 * std::numbers::pi / h.k);
    Acc acc;
    for (const auto &sigma : enumerate_balanced_colourings(g, caps)) {
        (void)sigma;
        cplx prod = 1.0;
        for (int e = 0; e < g.num_edges(); ++e)
            prod *= a[e] ? w : std::conj(w);
        acc.add(prod);
    }
    return acc.value();
}

std::map<int, cplx> perturbation_coefficients(const BipartiteGraph &g, const Colouring &a, const TrigKernel &h,
                                              const std::set<int> &orders, const Caps &caps) {
    check_aligned(g, a);
    if (h.kind == TrigKernel::Kind::Constant)
        fail(ErrorKind::UnsupportedOrder, "constant kernels contribute at every order");
    auto gi = girth(g);
    if (!gi)
        fail(ErrorKind::UnsupportedOrder, "forests have no cycle terms");
    std::map<int, cplx> out;
    for (int L : orders) {
        if (L != *gi && L != *gi + 2)
            fail(ErrorKind::UnsupportedOrder, "order " + std::to_string(L) + " is neither g nor g+2");
        // with girth >= 4, the only Eulerian edge sets of size g or g+2 are single cycles
        Acc acc;
        for (const auto &c : enumerate_cycles(g, L, caps).cycles) {
            if (h.kind == TrigKernel::Kind::H0)
                acc.add(is_alternating(c, a) ? 1.0 : 0.0);
            else
                acc.add(2.0 * std::polar(1.0, 4 * std::numbers::pi * (ones_on(c, a) - L / 2) / h.k));
        }
        out[L] = acc.value();
    }
    return out;
}

SecondOrder second_order_expansion(const BipartiteGraph &g, const Colouring &a, const StepKernel &h) {
    check_aligned(g, a);
    if (h.p != h.q)
        fail(ErrorKind::ShapeMismatch, "second-order expansion needs a square kernel");
    for (const auto &z : h.v)
        if (z.imag() != 0)
            fail(ErrorKind::InvalidArgument, "second-order expansion needs a real kernel");
    int p = h.p;
    std::vector<double> row(p, 0), col(p, 0);
    double total = 0;
    for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y) {
            row[x] += h.at(x, y).real() / p;
            col[y] += h.at(x, y).real() / p;
            total += h.at(x, y).real();
        }
    SecondOrder s;
    for (int x = 0; x < p; ++x) {
        s.I1 += row[x] * row[x] / p;
        s.I2 += col[x] * col[x] / p;
        s.I3 += row[x] * col[x] / p;
    }
    s.integral = total / (static_cast<double>(p) * p);
    s.matchings = count_two_edge_matchings(g);
    s.constant = 1;
    s.linear = g.num_edges() * s.integral;
    auto ds = degree_stats(g, a);
    double q = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        double dp = ds.d_plus[v], dm = ds.d_minus[v];
        q += dp * (dp - 1) / 2 * s.I1 + dm * (dm - 1) / 2 * s.I2 + dp * dm * s.I3;
    }
    s.quadratic = q + static_cast<double>(s.matchings) * s.integral * s.integral;
    return s;
}

ExpansionCheck check_expansion(const BipartiteGraph &g, const Colouring &a, const StepKernel &h, double eps,
                               const Caps &caps) {
    ExpansionCheck c;
    c.eps = eps;
    auto s = second_order_expansion(g, a, h);
    StepKernel f(h.p, h.q);
    for (std::size_t i = 0; i < f.v.size(); ++i)
        f.v[i] = 1.0 + eps * h.v[i];
    c.direct = t_density(g, a, f, Mode::Transpose, Method::Eliminate, caps).real();
    c.predicted = s.at(eps);
    c.residual = std::abs(c.direct - c.predicted);
    double H = h.sup_norm(), ae = std::abs(eps);
    int e = g.num_edges();
    for (int j = 3; j <= e; ++j)
        c.rigorous_c += static_cast<double>(binomial_u64(e, j)) * std::pow(H, j) * std::pow(ae, j - 3);
    c.fitted_c = ae > 0 ? c.residual / (ae * ae * ae) : 0;
    constexpr double kExpansionFpSlack = 1e-12;
    c.ok = c.residual <= c.rigorous_c * ae * ae * ae + kExpansionFpSlack;
    return c;
}

HatamiResult hatami_check(const BipartiteGraph &g, const Colouring &a, const Decoration &d, Mode mode,
                          const Caps &caps) {
    HatamiResult r;
    double td = std::abs(t_decoration(g, a, d, mode, Method::Eliminate, caps));
    int e = g.num_edges();
    r.lhs = std::pow(td, e);
    r.rhs = 1;
    std::vector<double> each(e);
    for (int i = 0; i < e; ++i) {
        each[i] = std::abs(t_density(g, a, d[i], mode, Method::Eliminate, caps));
        r.rhs *= each[i];
    }
    if (td == 0) {
        r.log_margin = INFINITY;
    } else {
        double lt = std::log(td);
        r.log_margin = 0;
        for (double x : each)
            r.log_margin += x == 0 ? -INFINITY : std::log(x) - lt;
    }
    r.holds = r.lhs <= r.rhs + kFalsifierTol;
    return r;
}

namespace {

double norm_e(const BipartiteGraph &g, const Colouring &a, const StepKernel &f, const Caps &caps) {
    return std::pow(std::abs(t_density(g, a, f, Mode::Conjugate, Method::Eliminate, caps)),
                    1.0 / g.num_edges());
}

// Evaluates one generated candidate; fills lhs/rhs and returns whether it violates.
bool evaluate(const BipartiteGraph &g, const Colouring &a, Witness &w, const Caps &caps) {
    if (w.kind == "triangle") {
        const auto &f = w.kernels.at(0), &h = w.kernels.at(1);
        w.lhs = norm_e(g, a, f.plus(h), caps);
        w.rhs = norm_e(g, a, f, caps) + norm_e(g, a, h, caps);
        return w.lhs > w.rhs + kFalsifierTol;
    }
    if (w.kind == "homogeneity") {
        const auto &f = w.kernels.at(0);
        cplx tcf = t_density(g, a, f.scaled(w.scalar), Mode::Conjugate, Method::Eliminate, caps);
        cplx tf = t_density(g, a, f, Mode::Conjugate, Method::Eliminate, caps);
        cplx want = std::pow(std::abs(w.scalar), g.num_edges()) * tf;
        w.lhs = std::abs(tcf - want);
        w.rhs = 0;
        return w.lhs > kFalsifierTol;
    }
    if (w.kind == "hatami") {
        auto r = hatami_check(g, a, w.kernels, Mode::Conjugate, caps);
        w.lhs = r.lhs;
        w.rhs = r.rhs;
        return !r.holds;
    }
    fail(ErrorKind::InvalidArgument, "unknown witness kind '" + w.kind + "'");
}

std::vector<Witness> generate(const BipartiteGraph &g, const std::string &search, std::uint64_t seed,
                              std::uint64_t trial, int p) {
    std::mt19937_64 rng(substream_seed(seed, trial));
    std::vector<Witness> out;
    Witness base;
    base.seed = seed;
    base.trial = trial;
    base.resolution = p;
    auto rand_index = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    if (search == "triangle") {
        switch (trial % 3) {
        case 0: {
            Witness w = base;
            w.kind = "triangle";
            w.kernels = {random_complex_kernel(p, p, rng), random_complex_kernel(p, p, rng)};
            out.push_back(std::move(w));
            break;
        }
        case 1: {
            Witness w = base;
            w.kind = "triangle";
            int fa = p > 1 ? rand_index(1, p - 1) : 0, fb = p > 1 ? rand_index(1, p - 1) : 0;
            auto chi = character_kernel(p, fa, fb).scaled(unit_circle(rng));
            w.kernels = {chi, chi.conj()};
            out.push_back(std::move(w));
            break;
        }
        default: {
            auto f = random_complex_kernel(p, p, rng);
            cplx c = unit_circle(rng) * (0.5 + unit_uniform(rng));
            Witness h = base;
            h.kind = "homogeneity";
            h.kernels = {f};
            h.scalar = c;
            out.push_back(h);
            Witness w = base;
            w.kind = "triangle";
            w.kernels = {f, f.scaled(c)};
            out.push_back(std::move(w));
        }
        }
    } else if (search == "hatami") {
        Witness w = base;
        w.kind = "hatami";
        int fa = p > 1 ? rand_index(1, p - 1) : 0, fb = p > 1 ? rand_index(1, p - 1) : 0;
        auto chi = character_kernel(p, fa, fb);
        for (int e = 0; e < g.num_edges(); ++e) {
            switch (rng() % 3) {
            case 0: w.kernels.push_back(random_complex_kernel(p, p, rng)); break;
            case 1: w.kernels.push_back(chi); break;
            default: w.kernels.push_back(chi.conj());
            }
        }
        out.push_back(std::move(w));
    } else {
        fail(ErrorKind::InvalidArgument, "unknown search '" + search + "'");
    }
    return out;
}

std::optional<Witness> run_search(const BipartiteGraph &g, const Colouring &a, const std::string &search,
                                  std::uint64_t seed, std::uint64_t trials, int resolution, const Caps &caps) {
    check_aligned(g, a);
    if (resolution < 1)
        fail(ErrorKind::InvalidArgument, "resolution must be positive");
    // fixed-size batches keep the first witness independent of scheduling
    const std::uint64_t batch = 256;
    for (std::uint64_t lo = 0; lo < trials; lo += batch) {
        std::uint64_t hi = std::min(trials, lo + batch);
        std::vector<std::optional<Witness>> found(hi - lo);
        parallel_for(hi - lo, [&](std::size_t i) {
            for (auto &w : generate(g, search, seed, lo + i, resolution))
                if (evaluate(g, a, w, caps)) {
                    found[i] = std::move(w);
                    return;
                }
        });
        for (auto &f : found)
            if (f)
                return f;
    }
    return std::nullopt;
}

} // namespace

std::optional<Witness> triangle_falsifier(const BipartiteGraph &g, const Colouring &a, std::uint64_t seed,
                                          std::uint64_t trials, int resolution, const Caps &caps) {
    return run_search(g, a, "triangle", seed, trials, resolution, caps);
}

std::optional<Witness> hatami_search(const BipartiteGraph &g, const Colouring &a, std::uint64_t seed,
                                     std::uint64_t trials, int resolution, const Caps &caps) {
    return run_search(g, a, "hatami", seed, trials, resolution, caps);
}

bool replay_witness(const BipartiteGraph &g, const Colouring &a, const Witness &w, const Caps &caps) {
    Witness again = w;
    bool violates = evaluate(g, a, again, caps);
    return violates && again.lhs == w.lhs && again.rhs == w.rhs;
}

std::optional<Witness> regenerate_trial(const BipartiteGraph &g, const Colouring &a, const std::string &search,
                                        std::uint64_t seed, std::uint64_t trial, int resolution,
                                        const Caps &caps) {
    for (auto &w : generate(g, search, seed, trial, resolution))
        if (evaluate(g, a, w, caps))
            return w;
    return std::nullopt;
}

P1Result p1_check(const BipartiteGraph &g, const Colouring &candidate, const std::vector<Colouring> &betas,
                  const StepKernel &f, const Caps &caps) {
    P1Result r;
    double ta = t_density(g, candidate, f, Mode::Conjugate, Method::Eliminate, caps).real();
    r.worst_gap = -INFINITY;
    for (const auto &b : betas) {
        double gap = std::abs(t_density(g, b, f, Mode::Conjugate, Method::Eliminate, caps)) - ta;
        if (gap > r.worst_gap) {
            r.worst_gap = gap;
            r.worst = b;
        }
    }
    r.holds = betas.empty() || r.worst_gap <= kFalsifierTol;
    return r;
}

} // namespace gnorm
