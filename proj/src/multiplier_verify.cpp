#include "gpelab/multiplier_verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "gpelab/data.hpp"
#include "gpelab/errors.hpp"
#include "gpelab/fit.hpp"
#include "gpelab/ioperator.hpp"

namespace gpelab {

namespace {

constexpr double kSingular = 1e-9;
constexpr double kSpan = 64.0;  // magnitudes are sampled in [N/64, 64N]

double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

Vec3 sum_of(const FrequencyTuple& x, std::initializer_list<int> idx) {
    Vec3 s{0.0, 0.0, 0.0};
    for (int i : idx)
        for (int a = 0; a < 3; ++a) s[a] += x[static_cast<std::size_t>(i)][a];
    return s;
}

double m_of(double N, double s, double r) { return multiplier_radial({N, s}, r); }
double m_of(double N, double s, const Vec3& v) { return m_of(N, s, norm3(v)); }

double inv_product(const FrequencyTuple& x) {
    double p = 1.0;
    for (const auto& v : x) p /= norm3(v);
    return p;
}

// A_S = prod_{i in S} (|xi_i| / N)^{1/4}
double A(const FrequencyTuple& x, double N, const std::vector<int>& idx) {
    double a = 1.0;
    for (int i : idx) a *= std::pow(norm3(x[static_cast<std::size_t>(i)]) / N, 0.25);
    return a;
}

double r(const FrequencyTuple& x, int i) { return norm3(x[static_cast<std::size_t>(i)]); }

// |m(xi_a + ...) - prod m_i| / prod m_i over the listed indices.
double commutator(const FrequencyTuple& x, double N, double s, std::initializer_list<int> idx) {
    double prod = 1.0;
    for (int i : idx) prod *= m_of(N, s, x[static_cast<std::size_t>(i)]);
    return std::abs(m_of(N, s, sum_of(x, idx)) - prod) / prod;
}

// m(xi_a + ...) / prod m_i over the listed indices.
double quotient(const FrequencyTuple& x, double N, double s, std::initializer_list<int> idx) {
    double prod = 1.0;
    for (int i : idx) prod *= m_of(N, s, x[static_cast<std::size_t>(i)]);
    return m_of(N, s, sum_of(x, idx)) / prod;
}

std::vector<MultiplierExpr> build_exprs() {
    std::vector<MultiplierExpr> e;
    e.push_back({"local-cubic", 4,
                 [](const FrequencyTuple& x, double N, double s) {
                     const double S = norm3(sum_of(x, {0, 1, 2}));
                     return quotient(x, N, s, {0, 1, 2}) * S / (r(x, 0) * r(x, 1) * r(x, 2));
                 },
                 {{0, 1, 2}}});
    e.push_back({"local-quadratic", 3,
                 [](const FrequencyTuple& x, double N, double s) {
                     const double S = norm3(sum_of(x, {0, 1}));
                     return quotient(x, N, s, {0, 1}) * S / (r(x, 0) * r(x, 1));
                 },
                 {{0, 1}}});
    e.push_back({"cubic-commutator-gradient", 4,
                 [](const FrequencyTuple& x, double N, double s) {
                     const double S = norm3(sum_of(x, {0, 1, 2}));
                     return commutator(x, N, s, {0, 1, 2}) * S / (r(x, 0) * r(x, 1) * r(x, 2));
                 },
                 {{0, 1, 2}}});
    e.push_back({"quadratic-commutator-gradient", 3,
                 [](const FrequencyTuple& x, double N, double s) {
                     const double S = norm3(sum_of(x, {1, 2}));
                     return commutator(x, N, s, {1, 2}) * S / (r(x, 1) * r(x, 2));
                 },
                 {{1, 2}}});
    e.push_back({"cubic-commutator-x-cubic", 6,
                 [](const FrequencyTuple& x, double N, double s) {
                     return commutator(x, N, s, {0, 1, 2}) * quotient(x, N, s, {3, 4, 5}) * inv_product(x);
                 },
                 {{0, 1, 2}, {3, 4, 5}}});
    e.push_back({"cubic-commutator-x-quadratic", 5,
                 [](const FrequencyTuple& x, double N, double s) {
                     return commutator(x, N, s, {0, 1, 2}) * quotient(x, N, s, {3, 4}) * inv_product(x);
                 },
                 {{0, 1, 2}, {3, 4}}});
    e.push_back({"quadratic-commutator-x-cubic", 5,
                 [](const FrequencyTuple& x, double N, double s) {
                     return commutator(x, N, s, {0, 1}) * quotient(x, N, s, {2, 3, 4}) * inv_product(x);
                 },
                 {{0, 1}, {2, 3, 4}}});
    e.push_back({"cubic-commutator-x-linear", 4,
                 [](const FrequencyTuple& x, double N, double s) {
                     return commutator(x, N, s, {0, 1, 2}) * inv_product(x);
                 },
                 {{0, 1, 2}}});
    e.push_back({"quadratic-commutator-x-quadratic", 4,
                 [](const FrequencyTuple& x, double N, double s) {
                     return commutator(x, N, s, {0, 1}) * quotient(x, N, s, {2, 3}) * inv_product(x);
                 },
                 {{0, 1}, {2, 3}}});
    e.push_back({"quadratic-commutator-x-linear", 3,
                 [](const FrequencyTuple& x, double N, double s) {
                     return commutator(x, N, s, {0, 1}) * inv_product(x);
                 },
                 {{0, 1}}});
    return e;
}

// Magnitude windows (multiples of N).
struct Win {
    double lo, hi;
};
constexpr Win G{1.0, kSpan};            // >= N
constexpr Win L{1.0 / kSpan, 1.0};      // <= N
constexpr Win T{1.0 / kSpan, 0.125};    // N >> .
constexpr Win Any{1.0 / kSpan, kSpan};
// Dependent frequencies are not clipped to the sampling span.
constexpr Win DepAny{0.0, kInfinity};
constexpr Win DepG{1.0, kInfinity};

using Mags = std::vector<double>;
using Pred = std::function<bool(const Mags&, double)>;

bool ge(const Mags& m, int a, int b) { return m[a] >= m[b]; }
bool gg(const Mags& m, int a, int b) { return m[a] >= 8.0 * m[b]; }
bool sim(const Mags& m, int a, int b) {
    return std::max(m[a], m[b]) <= 2.0 * std::min(m[a], m[b]);
}

CaseRegion region(std::string label, int dependent, std::vector<Win> wins, Pred pred, std::string note = {}) {
    CaseRegion c;
    c.label = std::move(label);
    c.arity = static_cast<int>(wins.size());
    c.dependent = dependent;
    for (const auto& w : wins) {
        c.lo.push_back(w.lo);
        c.hi.push_back(w.hi);
    }
    c.predicate = std::move(pred);
    c.note = std::move(note);
    return c;
}

}  // namespace

const std::vector<MultiplierExpr>& multiplier_exprs() {
    static const std::vector<MultiplierExpr> exprs = build_exprs();
    return exprs;
}

const MultiplierExpr& multiplier_expr(const std::string& label) {
    for (const auto& e : multiplier_exprs())
        if (e.label == label) return e;
    throw DomainError("unknown multiplier expression: " + label);
}

double eval_multiplier(const MultiplierExpr& expr, const FrequencyTuple& xis, double N, double s) {
    if (static_cast<int>(xis.size()) != expr.arity)
        throw ContractViolation("tuple length differs from the expression arity");
    for (const auto& v : xis)
        if (!(norm3(v) >= kSingular)) throw SingularInput("frequency magnitude below 1e-9 in " + expr.label);
    return expr.evaluator(xis, N, s);
}

bool region_contains(const CaseRegion& region, const FrequencyTuple& xis, double N) {
    if (static_cast<int>(xis.size()) != region.arity) return false;
    Mags m(xis.size());
    for (std::size_t i = 0; i < xis.size(); ++i) {
        m[i] = norm3(xis[i]);
        if (m[i] < region.lo[i] * N || m[i] > region.hi[i] * N) return false;
    }
    return !region.predicate || region.predicate(m, N);
}

RegionSample sample_region(const CaseRegion& region, double N, int count, std::uint64_t seed) {
    if (count < 1) throw DomainError("sample count must be positive");
    const auto k = static_cast<std::size_t>(region.arity);
    for (std::size_t i = 0; i < k; ++i) {
        if (static_cast<int>(i) == region.dependent) continue;
        if (std::max(region.lo[i], 1.0 / kSpan) > std::min(region.hi[i], kSpan))
            throw InfeasibleRegion("empty magnitude window in region " + region.label);
    }
    Rng rng(seed);
    RegionSample out;
    out.tuples.reserve(static_cast<std::size_t>(count));
    const std::uint64_t budget = std::max<std::uint64_t>(20000, 400ull * static_cast<std::uint64_t>(count));
    FrequencyTuple x(k);
    while (out.tuples.size() < static_cast<std::size_t>(count) && out.attempts < budget) {
        ++out.attempts;
        Vec3 total{0.0, 0.0, 0.0};
        for (std::size_t i = 0; i < k; ++i) {
            if (static_cast<int>(i) == region.dependent) continue;
            const double lo = std::log(std::max(region.lo[i], 1.0 / kSpan) * N);
            const double hi = std::log(std::min(region.hi[i], kSpan) * N);
            const double mag = std::exp(rng.uniform(lo, hi));
            const double z = rng.uniform(-1.0, 1.0);
            const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
            const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
            x[i] = {mag * rho * std::cos(phi), mag * rho * std::sin(phi), mag * z};
            for (int a = 0; a < 3; ++a) total[a] += x[i][a];
        }
        x[static_cast<std::size_t>(region.dependent)] = {-total[0], -total[1], -total[2]};
        if (region_contains(region, x, N)) out.tuples.push_back(x);
    }
    if (out.tuples.empty())
        throw InfeasibleRegion("no admissible sample in region " + region.label + " at N = " + std::to_string(N));
    if (out.tuples.size() < static_cast<std::size_t>(count))
        warn("region " + region.label + ": accepted " + std::to_string(out.tuples.size()) + " of " +
             std::to_string(count) + " samples within the attempt budget");
    return out;
}

VerifyReport verify_bound(const MultiplierExpr& expr, const ClaimedBound& claim, const std::vector<double>& N_list,
                          int samples_per_N, std::uint64_t seed, const VerifyOptions& opts) {
    if (claim.region.arity != expr.arity) throw ContractViolation("region arity differs from the expression arity");
    if (N_list.empty()) throw DomainError("verification needs at least one N");
    if (!(opts.s > 0.5 && opts.s < 1.0)) throw DomainError("s must lie in (1/2, 1)");
    if (opts.s < claim.s_min) throw DomainError("claim " + claim.source + " is only made for larger s");

    VerifyReport rep;
    rep.expr = expr.label;
    rep.region = claim.region.label;
    rep.source = claim.source;
    rep.note = claim.region.note;
    rep.s = opts.s;
    rep.cap = opts.cap;
    rep.slope_cap = opts.slope_cap;
    rep.per_N.resize(N_list.size());

    auto run_one = [&](std::size_t j) {
        PerNReport& p = rep.per_N[j];
        p.N = N_list[j];
        // Common random numbers: the same seed at every N, so the per-N maxima
        // differ only through genuine N-dependence, not sampling noise.
        const RegionSample smp = sample_region(claim.region, p.N, samples_per_N, seed);
        p.attempts = smp.attempts;
        for (const auto& x : smp.tuples) {
            double v;
            try {
                v = eval_multiplier(expr, x, p.N, opts.s);
            } catch (const SingularInput&) {
                ++p.singular_rejections;
                continue;
            }
            const double b = claim.bound(x, p.N, opts.s);
            ++p.samples;
            const double ratio = v / b;
            if (ratio > p.max_ratio || p.witness.empty()) {
                p.max_ratio = ratio;
                p.witness = x;
            }
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(1, opts.threads)), 1,
                                                        N_list.size());
    if (workers == 1) {
        for (std::size_t j = 0; j < N_list.size(); ++j) run_one(j);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t j = w; j < N_list.size(); j += workers) run_one(j);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    std::vector<double> Ns, maxima;
    bool positive = true;
    for (const auto& p : rep.per_N) {
        if (p.max_ratio > rep.max_ratio || rep.witness.empty()) {
            rep.max_ratio = p.max_ratio;
            rep.witness = p.witness;
            rep.witness_N = p.N;
        }
        Ns.push_back(p.N);
        maxima.push_back(p.max_ratio);
        positive = positive && p.max_ratio > 0.0;
    }
    rep.slope = (Ns.size() >= 2 && positive) ? fit_loglog(Ns, maxima).slope : 0.0;
    rep.passed = rep.max_ratio <= opts.cap && rep.slope <= opts.slope_cap;
    return rep;
}

std::vector<CatalogEntry> multiplier_catalog() {
    std::vector<CatalogEntry> out;
    auto add = [&](const std::string& expr, CaseRegion reg, TupleFunction bound, double s_min = 0.75) {
        const MultiplierExpr& e = multiplier_expr(expr);
        const std::string source = expr + "/" + reg.label;
        out.push_back({&e, ClaimedBound{std::move(reg), std::move(bound), source, s_min}});
    };
    using X = const FrequencyTuple&;

    // Local smoothing of the cubic and quadratic terms, xi_1 >= xi_2 >= xi_3.
    {
        const std::string e = "local-cubic";
        const Pred ord = [](const Mags& m, double) { return ge(m, 0, 1) && ge(m, 1, 2); };
        add(e, region("all-high", 3, {G, G, G, DepAny}, ord), [](X x, double N, double s) {
            return 1.0 / (std::pow(r(x, 1), s) * std::pow(r(x, 2), s) * std::pow(N, 2.0 * (1.0 - s)));
        }, 0.5);
        add(e, region("two-high", 3, {G, G, L, DepAny}, ord), [](X x, double N, double s) {
            return 1.0 / (std::pow(r(x, 1), s) * r(x, 2) * std::pow(N, 1.0 - s));
        }, 0.5);
        add(e, region("one-high-separated", 3, {G, L, L, DepAny},
                      [](const Mags& m, double) { return gg(m, 0, 1) && ge(m, 1, 2); }),
            [](X x, double, double) { return 1.0 / (r(x, 1) * r(x, 2)); }, 0.5);
        add(e, region("all-low", 3, {L, L, L, DepAny}, ord),
            [](X x, double, double) { return 1.0 / (r(x, 1) * r(x, 2)); }, 0.5);
    }
    {
        const std::string e = "local-quadratic";
        add(e, region("both-high", 2, {G, G, DepAny}, [](const Mags& m, double) { return ge(m, 0, 1); }),
            [](X x, double N, double s) { return 1.0 / (std::pow(r(x, 1), s) * std::pow(N, 1.0 - s)); }, 0.5);
        add(e, region("low-separated", 2, {Any, L, DepAny}, [](const Mags& m, double) { return gg(m, 0, 1); }),
            [](X x, double, double) { return 1.0 / r(x, 1); }, 0.5);
        add(e, region("low-comparable", 2, {Any, L, DepAny},
                      [](const Mags& m, double) { return ge(m, 0, 1) && m[0] <= 2.0 * m[1]; }),
            [](X x, double, double) { return 1.0 / r(x, 1); }, 0.5);
    }

    // Commutator against the gradient, xi_1 >= xi_2 >= xi_3, xi_1 >= N.
    {
        const std::string e = "cubic-commutator-gradient";
        const Pred ord = [](const Mags& m, double) { return ge(m, 0, 1) && ge(m, 1, 2); };
        add(e, region("all-high", 3, {G, G, G, DepAny}, ord),
            [](X x, double N, double) { return A(x, N, {0, 1, 2}) / (r(x, 1) * r(x, 2)); });
        add(e, region("two-high", 3, {G, G, L, DepAny}, ord),
            [](X x, double N, double) { return A(x, N, {0, 1}) / (r(x, 1) * r(x, 2)); });
        add(e, region("one-high-separated", 3, {G, L, L, DepAny},
                      [](const Mags& m, double) { return gg(m, 0, 1) && ge(m, 1, 2); }),
            [](X x, double, double) { return 1.0 / (r(x, 0) * r(x, 2)); });
    }
    {
        const std::string e = "quadratic-commutator-gradient";
        add(e, region("comparable-high", 0, {DepAny, G, G},
                      [](const Mags& m, double) { return ge(m, 1, 2) && m[1] <= 2.0 * m[2]; }),
            [](X x, double N, double) { return std::sqrt(r(x, 1) / N) / r(x, 1); });
        add(e, region("separated-high", 0, {DepAny, G, G}, [](const Mags& m, double) { return gg(m, 1, 2); }),
            [](X, double N, double) { return 1.0 / N; });
        add(e, region("separated-low", 0, {DepAny, G, L}, [](const Mags& m, double) { return gg(m, 1, 2); }),
            [](X x, double, double) { return 1.0 / r(x, 1); });
    }

    // Commutator times a cubic smoothing factor: groups (1,2,3) and (4,5,6).
    {
        const std::string e = "cubic-commutator-x-cubic";
        const Pred ord = [](const Mags& m, double) {
            return ge(m, 0, 1) && ge(m, 1, 2) && ge(m, 3, 4) && ge(m, 4, 5);
        };
        auto P = [](std::initializer_list<int> S) {
            return [S = std::vector<int>(S)](X x, double N, double) { return A(x, N, S) * inv_product(x); };
        };
        auto mvt = [](X x, double, double) { return r(x, 1) / r(x, 0) * inv_product(x); };
        add(e, region("three-high/a", 0, {DepG, G, G, G, G, G}, ord), P({0, 1, 2, 3, 4, 5}));
        add(e, region("three-high/b", 0, {DepG, G, L, G, G, G}, ord), P({0, 1, 3, 4, 5}));
        add(e, region("three-high/c", 0, {DepG, L, L, G, G, G}, ord), P({0, 3, 4, 5}));
        add(e, region("two-high/a", 0, {DepG, G, G, G, G, L}, ord), P({0, 1, 2, 3, 4}));
        add(e, region("two-high/b", 0, {DepG, G, L, G, G, L}, ord), P({0, 1, 3, 4}));
        add(e, region("two-high/c", 0, {DepG, L, L, G, G, L}, ord), P({0, 3, 4}));
        add(e, region("one-high/a", 0, {DepG, G, G, G, L, L}, ord), P({0, 1, 2}));
        add(e, region("one-high/b", 0, {DepG, G, L, G, L, L}, ord), P({0, 1}));
        add(e, region("one-high/c", 0, {DepG, L, L, G, L, L}, ord), mvt);
        add(e, region("none-high/a", 0, {DepG, G, G, T, T, T}, ord), P({0, 1, 2}));
        add(e, region("none-high/b", 0, {DepG, G, L, T, T, T}, ord), P({0, 1}));
    }
    {
        const std::string e = "cubic-commutator-x-quadratic";
        const Pred ord = [](const Mags& m, double) { return ge(m, 0, 1) && ge(m, 1, 2) && ge(m, 3, 4); };
        const Pred sep = [](const Mags& m, double) { return ge(m, 1, 2) && gg(m, 0, 1) && ge(m, 3, 4); };
        const Pred cmp = [](const Mags& m, double) {
            return ge(m, 0, 1) && sim(m, 0, 1) && ge(m, 1, 2) && ge(m, 3, 4);
        };
        auto P = [](std::initializer_list<int> S) {
            return [S = std::vector<int>(S)](X x, double N, double) { return A(x, N, S) * inv_product(x); };
        };
        auto mvt = [](std::initializer_list<int> S) {
            return [S = std::vector<int>(S)](X x, double N, double) { return r(x, 1) / r(x, 0) * A(x, N, S) * inv_product(x); };
        };
        add(e, region("two-high/a", 0, {DepG, G, G, G, G}, ord), P({0, 1, 2, 3, 4}));
        add(e, region("two-high/b", 0, {DepG, G, L, G, G}, ord), P({0, 1, 3, 4}));
        add(e, region("two-high/c", 0, {DepG, L, L, G, G}, sep), mvt({3, 4}));
        add(e, region("one-high/a", 0, {DepG, G, G, G, L}, ord), P({0, 1, 2, 3}));
        add(e, region("one-high/b", 0, {DepG, G, L, G, L}, ord), P({0, 1, 3}));
        add(e, region("one-high/c", 0, {DepG, L, L, G, L}, sep), mvt({3}));
        add(e, region("none-high/a", 0, {DepG, G, G, T, T}, cmp), P({0, 1, 2}));
        add(e, region("none-high/b", 0, {DepG, G, L, T, T}, cmp), P({0, 1}));
    }
    {
        const std::string e = "quadratic-commutator-x-cubic";
        const Pred ord = [](const Mags& m, double) { return ge(m, 0, 1) && ge(m, 2, 3) && ge(m, 3, 4); };
        const Pred sep = [](const Mags& m, double) { return gg(m, 0, 1) && ge(m, 2, 3) && ge(m, 3, 4); };
        auto P = [](std::initializer_list<int> S) {
            return [S = std::vector<int>(S)](X x, double N, double) { return A(x, N, S) * inv_product(x); };
        };
        auto mvt = [](std::initializer_list<int> S) {
            return [S = std::vector<int>(S)](X x, double N, double) { return r(x, 1) / r(x, 0) * A(x, N, S) * inv_product(x); };
        };
        add(e, region("three-high/a", 0, {DepG, G, G, G, G}, ord), P({0, 1, 2, 3, 4}));
        add(e, region("three-high/b", 0, {DepG, T, G, G, G}, ord), mvt({2, 3, 4}));
        add(e, region("two-high/a", 0, {DepG, G, G, G, L}, ord), P({0, 1, 2, 3}));
        add(e, region("two-high/b", 0, {DepG, L, G, G, L}, sep, "case header reads N1 >= N2 >> N2; encoded as N1 >> N2 with N2 <= N"),
            mvt({2, 3}));
        add(e, region("one-high/a", 0, {DepG, G, G, L, L}, ord), P({0, 1}));
        add(e, region("one-high/b", 0, {DepG, L, G, L, L}, ord), mvt({}));
        add(e, region("none-high", 0, {DepG, G, T, T, T},
                      [](const Mags& m, double) { return ge(m, 0, 1) && sim(m, 0, 1) && ge(m, 2, 3) && ge(m, 3, 4); }),
            P({0, 1}));
    }
    {
        const std::string e = "cubic-commutator-x-linear";
        const Pred ord = [](const Mags& m, double) { return ge(m, 0, 1) && ge(m, 1, 2); };
        auto P = [](std::initializer_list<int> S) {
            return [S = std::vector<int>(S)](X x, double N, double) { return A(x, N, S) * inv_product(x); };
        };
        add(e, region("low-fourth/a", 0, {DepG, G, G, T}, ord), P({0, 1, 2}));
        add(e, region("low-fourth/b", 0, {DepG, G, L, T}, ord), P({0, 1}));
        add(e, region("high-fourth/a", 0, {DepG, G, G, G}, ord), P({0, 1, 2}));
        add(e, region("high-fourth/b", 0, {DepG, G, L, G}, ord), P({0, 1}));
        add(e, region("high-fourth/c", 0, {DepG, T, L, G}, ord),
            [](X x, double, double) { return r(x, 1) / r(x, 0) * inv_product(x); });
    }
    {
        const std::string e = "quadratic-commutator-x-quadratic";
        const Pred ord = [](const Mags& m, double) { return ge(m, 0, 1) && ge(m, 2, 3); };
        const Pred sep = [](const Mags& m, double) { return ge(m, 0, 1) && gg(m, 2, 3); };
        auto mvt = [](std::initializer_list<int> S) {
            return [S = std::vector<int>(S)](X x, double N, double) { return r(x, 1) / r(x, 0) * A(x, N, S) * inv_product(x); };
        };
        add(e, region("both-high/a", 0, {DepG, G, G, G}, ord),
            [](X x, double N, double) { return A(x, N, {0, 1, 2, 3}) * inv_product(x); });
        add(e, region("both-high/b", 0, {DepG, L, G, G}, ord), mvt({2, 3}));
        add(e, region("one-high/a", 0, {DepG, G, G, L}, sep),
            [](X x, double N, double) { return A(x, N, {0, 1}) * inv_product(x); });
        add(e, region("one-high/b", 0, {DepG, L, G, L}, sep), mvt({}));
        add(e, region("none-high", 0, {DepG, G, T, T},
                      [](const Mags& m, double) { return ge(m, 0, 1) && sim(m, 0, 1) && ge(m, 2, 3); }),
            [](X x, double N, double) { return A(x, N, {0, 1}) * inv_product(x); });
    }
    {
        const std::string e = "quadratic-commutator-x-linear";
        add(e, region("high-third/a", 0, {DepG, G, G}, [](const Mags& m, double) { return ge(m, 0, 1); }),
            [](X x, double N, double) { return A(x, N, {0, 1}) * inv_product(x); });
        add(e, region("high-third/b", 0, {DepG, L, G}, [](const Mags& m, double) { return gg(m, 0, 1); }),
            [](X x, double, double) { return r(x, 1) / r(x, 0) * inv_product(x); });
        add(e, region("low-third", 0, {DepG, G, T},
                      [](const Mags& m, double) { return ge(m, 0, 1) && sim(m, 0, 1); }),
            [](X x, double N, double) { return A(x, N, {0, 1}) * inv_product(x); });
    }
    return out;
}

}  // namespace gpelab
