#include "enscoh/nelder_mead.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

namespace enscoh {

namespace {

struct Vertex {
    std::vector<double> x;
    double f;
};

// One simplex descent from x0. Returns the best vertex.
Vertex descend(const Objective& f, const std::vector<double>& x0, double step, const NelderMeadOptions& opt,
               std::size_t& evals, std::size_t budget) {
    const std::size_t n = x0.size();
    const double nd = static_cast<double>(n);
    const double alpha = 1.0;
    const double beta = 1.0 + 2.0 / nd;
    const double gamma = 0.75 - 1.0 / (2.0 * nd);
    const double delta = 1.0 - 1.0 / nd;

    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return f(x);
    };

    std::vector<Vertex> s;
    s.reserve(n + 1);
    s.push_back({x0, eval(x0)});
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> x = x0;
        x[i] += step;
        s.push_back({x, eval(x)});
    }

    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    while (evals < budget) {
        std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });

        double diam = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t k = 0; k < n; ++k) diam = std::max(diam, std::abs(s[i].x[k] - s[0].x[k]));
        }
        if (s[n].f - s[0].f <= opt.f_tol && diam <= opt.x_tol) break;
        if (diam <= 1e-15) break;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) centroid[k] += s[i].x[k];
        }
        for (double& c : centroid) c /= nd;

        const Vertex& worst = s[n];
        for (std::size_t k = 0; k < n; ++k) xr[k] = centroid[k] + alpha * (centroid[k] - worst.x[k]);
        const double fr = eval(xr);

        if (fr < s[0].f) {
            for (std::size_t k = 0; k < n; ++k) xe[k] = centroid[k] + beta * (xr[k] - centroid[k]);
            const double fe = eval(xe);
            s[n] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
            continue;
        }
        if (fr < s[n - 1].f) {
            s[n] = {xr, fr};
            continue;
        }
        const bool outside = fr < worst.f;
        for (std::size_t k = 0; k < n; ++k) {
            xc[k] = outside ? centroid[k] + gamma * (xr[k] - centroid[k])
                            : centroid[k] - gamma * (centroid[k] - worst.x[k]);
        }
        const double fc = eval(xc);
        if (fc < (outside ? fr : worst.f)) {
            s[n] = {xc, fc};
            continue;
        }
        // Shrink toward the best vertex.
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t k = 0; k < n; ++k) s[i].x[k] = s[0].x[k] + delta * (s[i].x[k] - s[0].x[k]);
            s[i].f = eval(s[i].x);
        }
    }
    return *std::min_element(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
}

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0, const NelderMeadOptions& opt) {
    NelderMeadResult r;
    if (x0.empty()) {
        r.value = f(x0);
        r.evals = 1;
        r.x = std::move(x0);
        return r;
    }
    Vertex best{x0, f(x0)};
    r.evals = 1;
    double step = opt.initial_step;
    for (int pass = 0; pass < opt.max_passes && r.evals < opt.max_evals; ++pass) {
        Vertex v = descend(f, best.x, step, opt, r.evals, opt.max_evals);
        const bool improved = v.f < best.f - opt.f_tol;
        if (v.f < best.f) best = std::move(v);
        if (!improved && pass > 0) break;
        step = std::max(step * 0.25, 1e-4);
    }
    r.x = std::move(best.x);
    r.value = best.f;
    return r;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 over the combined word
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::size_t worker_count() {
    if (const char* env = std::getenv("ENSCOH_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace enscoh
