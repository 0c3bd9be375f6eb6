#include "holab/brownian_sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "holab/quadrature.hpp"
#include "holab/rng.hpp"

namespace holab {

namespace {

constexpr std::uint64_t kBlock = 4096; // reduction unit, independent of threads

struct BlockResult {
    std::uint64_t outer = 0;
    std::uint64_t inner = 0;
    std::uint64_t censored = 0;
    double exit_time_sum = 0.0; // non-censored paths, accumulated in path order
};

struct PathOutcome {
    int side; // +1 outer, -1 inner, 0 censored
    double time;
};

PathOutcome run_path(const SimConfig& cfg, std::uint64_t index) {
    const ScalarFunction& sigma = cfg.manifold.sigma();
    const double half_nm1 = 0.5 * (cfg.manifold.dim() - 1);
    const double a = cfg.inner, b = cfg.outer;
    const double dt0 = cfg.dt;
    const double sqrt_dt0 = std::sqrt(dt0);
    const bool adaptive = cfg.stepping == Stepping::BoundaryAdaptive;

    SplitMix64 rng = SplitMix64::keyed(cfg.seed, index);
    double r = cfg.r0;
    double t = 0.0;
    for (std::uint64_t step = 0; step < cfg.max_steps; ++step) {
        double s_dev = sqrt_dt0;
        double dt = dt0;
        if (adaptive) {
            double d = std::min(r - a, b - r);
            double cap = 0.25 * d;
            if (cap > s_dev) {
                s_dev = cap;
                dt = cap * cap;
            }
        }
        auto [sv, sd] = sigma.value_d1(r);
        double drift = half_nm1 * sd / sv;
        r += drift * dt + s_dev * rng.next_normal();
        t += dt;
        if ((r - a) * (r - b) >= 0.0)
            return {r <= a ? -1 : +1, t};
    }
    return {0, t};
}

BlockResult run_block(const SimConfig& cfg, std::uint64_t begin, std::uint64_t end) {
    BlockResult res;
    for (std::uint64_t i = begin; i < end; ++i) {
        PathOutcome o = run_path(cfg, i);
        if (o.side > 0)
            ++res.outer;
        else if (o.side < 0)
            ++res.inner;
        else
            ++res.censored;
        if (o.side != 0) res.exit_time_sum += o.time;
    }
    return res;
}

} // namespace

HitStats simulate_annulus(const SimConfig& cfg) {
    if (!(0.0 < cfg.inner && cfg.inner <= cfg.r0 && cfg.r0 <= cfg.outer &&
          cfg.outer < cfg.manifold.r_max()))
        throw DomainError("annulus must satisfy 0 < a <= r0 <= b < r_max");
    if (!(cfg.dt > 0.0)) throw DomainError("dt must be positive");
    if (cfg.paths < 1) throw DomainError("need at least one path");

    HitStats st;
    st.paths = cfg.paths;

    // Degenerate starts resolve without stepping.
    if (cfg.r0 == cfg.inner && cfg.r0 == cfg.outer)
        throw DomainError("empty annulus");
    if (cfg.r0 == cfg.inner) {
        st.inner_hits = cfg.paths;
        st.p_outer = 0.0;
        return st;
    }
    if (cfg.r0 == cfg.outer) {
        st.outer_hits = cfg.paths;
        st.p_outer = 1.0;
        return st;
    }

    const std::uint64_t blocks = (cfg.paths + kBlock - 1) / kBlock;
    std::vector<BlockResult> results(blocks);
    unsigned hw = std::thread::hardware_concurrency();
    unsigned want = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : (hw ? hw : 1);
    unsigned workers = std::min<unsigned>(want, static_cast<unsigned>(blocks));

    if (workers <= 1) {
        for (std::uint64_t blk = 0; blk < blocks; ++blk)
            results[blk] = run_block(cfg, blk * kBlock,
                                     std::min(cfg.paths, (blk + 1) * kBlock));
    } else {
        std::atomic<std::uint64_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::uint64_t blk = next.fetch_add(1);
                if (blk >= blocks) return;
                results[blk] = run_block(cfg, blk * kBlock,
                                         std::min(cfg.paths, (blk + 1) * kBlock));
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    double time_sum = 0.0;
    for (const BlockResult& br : results) { // index order: reduction is fixed
        st.outer_hits += br.outer;
        st.inner_hits += br.inner;
        st.censored += br.censored;
        time_sum += br.exit_time_sum;
    }
    double n = static_cast<double>(cfg.paths);
    st.p_outer = static_cast<double>(st.outer_hits) / n;
    st.std_error = std::sqrt(st.p_outer * (1.0 - st.p_outer) / n);
    std::uint64_t exited = st.outer_hits + st.inner_hits;
    st.mean_exit_time = exited ? time_sum / static_cast<double>(exited) : 0.0;

    if (static_cast<double>(st.censored) > 0.01 * n) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "%llu of %llu paths exhausted the step budget; increase max_steps or dt",
                      static_cast<unsigned long long>(st.censored),
                      static_cast<unsigned long long>(cfg.paths));
        throw CensoringError(buf);
    }
    return st;
}

double exact_hitting_probability(const ModelManifold& m, double a, double r0, double b) {
    if (!(0.0 < a && a <= r0 && r0 <= b)) throw DomainError("need 0 < a <= r0 <= b");
    if (r0 == a && r0 == b) throw DomainError("empty annulus");
    if (r0 == a) return 0.0;
    if (r0 == b) return 1.0;
    const int n = m.dim();
    auto ds = [&](double u) { return std::pow(m.sigma().value(u), 1 - n); };
    double num = integrate_or_throw(ds, a, r0, 1e-10, 1e-300);
    double den = num + integrate_or_throw(ds, r0, b, 1e-10, 1e-300);
    return num / den;
}

EscapeResult escape_probability(const ModelManifold& m, double a, double r0,
                                const TailProbe& probe) {
    if (!(0.0 < a && a < r0)) throw DomainError("need 0 < a < r0");
    EscapeResult res{EscapeResult::Kind::Inconclusive, std::nullopt,
                     capacity_oracle(m, a, probe)};
    if (res.capacity.kind == Parabolicity::Parabolic) {
        res.kind = EscapeResult::Kind::Recurrent;
        return res;
    }
    if (res.capacity.kind == Parabolicity::NonParabolic) {
        const int n = m.dim();
        auto ds = [&](double u) { return std::pow(m.sigma().value(u), 1 - n); };
        double num = integrate_or_throw(ds, a, r0, 1e-10, 1e-300);
        res.kind = EscapeResult::Kind::Escape;
        res.probability = num / *res.capacity.tail;
    }
    return res;
}

TrendReport recurrence_monte_carlo(const SimConfig& base,
                                   const std::vector<double>& outer_sequence) {
    if (outer_sequence.empty()) throw DomainError("need at least one outer radius");
    TrendReport rep;
    for (double b : outer_sequence) {
        if (b < base.r0) throw DomainError("outer radii must be >= r0");
        SimConfig cfg = base;
        cfg.outer = b;
        HitStats st = simulate_annulus(cfg);
        rep.points.push_back({b, st, 1.0 - st.p_outer});
    }
    for (std::size_t i = 0; i + 1 < rep.points.size(); ++i) {
        double tol = 3.0 * (rep.points[i].stats.std_error + rep.points[i + 1].stats.std_error);
        if (rep.points[i + 1].p_inner < rep.points[i].p_inner - tol) rep.monotone_inner = false;
    }

    // Extrapolate p_outer from the last three sweep points. For geometric
    // decrements Aitken's delta-squared recovers the limit exactly; otherwise
    // fall back to the last value.
    const std::size_t np = rep.points.size();
    double limit = rep.points.back().stats.p_outer;
    std::string note;
    if (np >= 3) {
        double y0 = rep.points[np - 3].stats.p_outer;
        double y1 = rep.points[np - 2].stats.p_outer;
        double y2 = rep.points[np - 1].stats.p_outer;
        double d1 = y1 - y0, d2 = y2 - y1;
        double se = rep.points.back().stats.std_error;
        if (std::abs(d2) <= std::max(2.0 * se, 1e-4)) {
            limit = y2;
            note = "sequence already flat";
        } else if (std::abs(d2 - d1) > 1e-12 && d2 / d1 > 0.0 && d2 / d1 < 0.98) {
            limit = y2 - d2 * d2 / (d2 - d1);
            note = "geometric extrapolation";
        } else {
            limit = y2;
            note = "decrements not geometric; using last point";
        }
    } else {
        note = "fewer than three sweep points";
        rep.verdict = TrendVerdict::Inconclusive;
        rep.fitted_outer_limit = limit;
        rep.note = note;
        return rep;
    }
    rep.fitted_outer_limit = limit;
    rep.note = note;
    rep.verdict = limit < 0.1 ? TrendVerdict::Recurrent : TrendVerdict::Transient;
    return rep;
}

} // namespace holab
