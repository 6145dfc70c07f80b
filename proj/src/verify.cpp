#include "sgo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

#include "sgo/config.hpp"
#include "sgo/errors.hpp"
#include "sgo/orbits.hpp"
#include "sgo/zastava.hpp"

namespace sgo {

namespace {

struct Outcome {
    long long trials = 0;
    long long violations = 0;
    long long precision = 0;
    std::vector<Failure> failures;
};

class TaskContext {
public:
    TaskContext(Outcome& o, int cap) : o_(o), cap_(cap) {}
    void trial() { ++o_.trials; }
    void violation(std::string input, std::string expected, std::string got) {
        ++o_.violations;
        keep(std::move(input), std::move(expected), std::move(got));
    }
    void precision(std::string input, std::string what) {
        ++o_.precision;
        keep(std::move(input), "result within the precision budget", std::move(what));
    }

private:
    Outcome& o_;
    int cap_;
    void keep(std::string input, std::string expected, std::string got) {
        if (static_cast<int>(o_.failures.size()) < cap_)
            o_.failures.push_back({std::move(input), std::move(expected), std::move(got)});
    }
};

// runs task(i, ctx) for i in [0, count), folding outcomes in index order
template <class F>
void run_tasks(SuiteReport& r, long long count, F&& task) {
    std::vector<Outcome> out(static_cast<std::size_t>(count));
    const int cap = r.params.failure_cap;
    auto one = [&](long long i) {
        Outcome& o = out[static_cast<std::size_t>(i)];
        TaskContext ctx(o, cap);
        try {
            task(i, ctx);
        } catch (const PrecisionExhausted& e) {
            ctx.precision("task " + std::to_string(i), e.what());
        } catch (const InsufficientPrecision& e) {
            ctx.precision("task " + std::to_string(i), e.what());
        } catch (const std::exception& e) {
            ctx.violation("task " + std::to_string(i), "no error", e.what());
        }
    };
    if (r.params.execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long long i = 0; i < count; ++i) one(i);
    } else {
        for (long long i = 0; i < count; ++i) one(i);
    }
    for (auto& o : out) {
        r.trials += o.trials;
        r.violations += o.violations;
        r.precision_failures += o.precision;
        for (auto& f : o.failures)
            if (static_cast<int>(r.failures.size()) < cap) r.failures.push_back(std::move(f));
    }
}

template <class F>
SuiteReport timed(const char* name, const SuiteParams& p, F&& body) {
    SuiteReport r;
    r.suite = name;
    r.params = p;
    const auto t0 = std::chrono::steady_clock::now();
    body(r);
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

PrecisionPolicy policy_of(const SuiteParams& p) { return {p.precision, std::max(kMaxPrecision, p.precision)}; }

std::string seed_tag(std::uint64_t s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(s));
    return buf;
}

GroupPattern with_poles(GroupPattern g, int pole_bound) {
    g.pole_bound = pole_bound;
    return g;
}

LoopMatrix embed_top_left(const LoopMatrix& g, int n) {
    LoopMatrix out = LoopMatrix::identity(n);
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j) out.at(i, j) = g.at(i, j);
    return out;
}

// random element of GL_M(F): lower and upper unipotent over F, a torus
// element with small exponents, and an arc element
LoopMatrix sample_gl_f(int M, int pole_bound, std::uint64_t seed) {
    std::mt19937_64 rng(derive_seed(seed, 0));
    std::vector<int> ex(static_cast<std::size_t>(M));
    for (int& e : ex) e = static_cast<int>(rng() % 3) - 1;
    return sample(with_poles(GroupPattern::lower_unipotent(M), pole_bound), derive_seed(seed, 1)) *
           LoopMatrix::diag_monomial(ex) *
           sample(with_poles(GroupPattern::upper_unipotent(M), pole_bound), derive_seed(seed, 2)) *
           sample(with_poles(GroupPattern::arc_gl(M), pole_bound), derive_seed(seed, 3));
}

// exact row reduction over Q, used to test membership in a row space
class RowSpace {
public:
    explicit RowSpace(std::size_t width) : width_(width) {}
    // reduces v against the basis; returns true if it was independent (and keeps it)
    bool insert(std::vector<Rational> v) {
        reduce(v);
        std::size_t c = 0;
        while (c < width_ && v[c].is_zero()) ++c;
        if (c == width_) return false;
        const Rational inv = Rational(1) / v[c];
        for (auto& x : v) x = x * inv;
        // keep the basis fully reduced
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (rows_[k][c].is_zero()) continue;
            const Rational f = rows_[k][c];
            for (std::size_t j = 0; j < width_; ++j)
                if (!v[j].is_zero()) rows_[k][j] = rows_[k][j] - f * v[j];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(c);
        return true;
    }
    bool contains(std::vector<Rational> v) const {
        reduce(v);
        return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
    }

private:
    std::size_t width_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
    void reduce(std::vector<Rational>& v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Rational f = v[pivots_[k]];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < width_; ++j)
                if (!rows_[k][j].is_zero()) v[j] = v[j] - f * rows_[k][j];
        }
    }
};

ColoredDivisor point_divisor(int M, int N, const std::string& x, const SuperWeight& w) {
    ColoredDivisor d(M, N);
    d.set(x, w);
    return d;
}

SuperWeight neg_root(int M, int N, int i) { return -recompose(RootVector::unit(M, N, i)); }

}

int SuiteReport::exit_code() const {
    if (violations > 0) return 1;
    if (precision_failures > 0) return 3;
    return 0;
}

json SuiteReport::to_json() const {
    json f = json::array();
    for (const auto& x : failures) f.push_back(json{{"input", x.input}, {"expected", x.expected}, {"got", x.got}});
    json params_json{{"M", params.M},       {"N", params.N},
                     {"box", params.box},   {"samples", params.samples},
                     {"seed", params.seed}, {"precision", params.precision},
                     {"pole_bound", params.pole_bound}};
    return json{{"schema", kReportSchema},
                {"suite", suite},
                {"params", params_json},
                {"trials", trials},
                {"violations", violations},
                {"precision_failures", precision_failures},
                {"passed", passed()},
                {"failures", f},
                {"assumptions", assumptions}};
}

SuiteReport run_roundtrip(const SuiteParams& p) {
    return timed("roundtrip", p, [&](SuiteReport& r) {
        check_rank(p.M, p.N);
        const auto weights = orbit_label_box(p.M, p.N, p.box);
        const PrecisionPolicy policy = policy_of(p);
        const Classifier classifier = p.classifier ? p.classifier
                                                   : [](const LoopMatrix& a, int M, int N, const PrecisionPolicy& pol) {
                                                         return classify(a, M, N, pol);
                                                     };
        const GroupPattern hp = with_poles(GroupPattern::h_pattern(p.M, p.N), p.pole_bound);
        const GroupPattern kp = with_poles(GroupPattern::arc_gl(p.N), p.pole_bound);
        run_tasks(r, static_cast<long long>(weights.size()), [&](long long wi, TaskContext& ctx) {
            const SuperWeight& w = weights[static_cast<std::size_t>(wi)];
            const LoopMatrix l = canonical_rep_N(w);
            for (int s = 0; s < p.samples; ++s) {
                const auto ti = static_cast<std::uint64_t>(wi) * static_cast<std::uint64_t>(p.samples) +
                                static_cast<std::uint64_t>(s);
                const std::string input = "w=" + w.str() + " task=" + seed_tag(ti);
                ctx.trial();
                try {
                    const LoopMatrix a = sample(hp, derive_seed(p.seed, 2 * ti)) * l *
                                         sample(kp, derive_seed(p.seed, 2 * ti + 1));
                    const SuperWeight got = classifier(a, p.M, p.N, policy);
                    if (got != w) ctx.violation(input, w.str(), got.str());
                } catch (const PrecisionExhausted& e) {
                    ctx.precision(input, e.what());
                } catch (const Error& e) {
                    ctx.violation(input, w.str(), e.what());
                }
            }
        });
    });
}

std::vector<SuperWeight> prop81_weights(int M, int N, int box, int count) {
    const auto labels = orbit_label_box(M, N, box);
    if (count <= 0 || static_cast<std::size_t>(count) >= labels.size()) return labels;
    std::vector<SuperWeight> out;
    for (int k = 0; k < count; ++k)
        out.push_back(labels[static_cast<std::size_t>(k) * labels.size() / static_cast<std::size_t>(count)]);
    return out;
}

SuiteReport run_prop81(const SuiteParams& p) {
    return timed("prop81", p, [&](SuiteReport& r) {
        check_rank(p.M, p.N);
        const auto weights = prop81_weights(p.M, p.N, p.box, p.weight_count);
        const long long nw = static_cast<long long>(weights.size());
        const PrecisionPolicy policy = policy_of(p);
        // tasks [0, samples) are sampled orbit points, the rest canonical points
        run_tasks(r, p.samples + nw, [&](long long i, TaskContext& ctx) {
            ctx.trial();
            if (i >= p.samples) {
                const SuperWeight& w = weights[static_cast<std::size_t>(i - p.samples)];
                const SuperWeight got = semi_infinite_weight(canonical_rep_G(w), p.M, p.N, policy);
                if (got != w) ctx.violation("canonical w=" + w.str(), w.str(), got.str());
                return;
            }
            const SuperWeight& w = weights[static_cast<std::size_t>(i % nw)];
            const std::uint64_t s = derive_seed(p.seed, static_cast<std::uint64_t>(i));
            const LoopMatrix g = sample_gl_f(p.M, p.pole_bound, derive_seed(s, 0));
            const LoopMatrix u = sample(with_poles(GroupPattern::uminus(p.M, p.N), p.pole_bound), derive_seed(s, 1));
            const LoopMatrix kM = sample(with_poles(GroupPattern::arc_gl(p.M), p.pole_bound), derive_seed(s, 2));
            const LoopMatrix kN = sample(with_poles(GroupPattern::arc_gl(p.N), p.pole_bound), derive_seed(s, 3));
            const OrbitPoint c = canonical_rep_G(w);
            const OrbitPoint pt{g * *c.grM * kM, embed_top_left(g, p.N) * u * c.grN * kN};
            const SuperWeight got = semi_infinite_weight(pt, p.M, p.N, policy);
            if (!leq(got, w)) ctx.violation("w=" + w.str() + " task=" + seed_tag(static_cast<std::uint64_t>(i)),
                                            "a weight <= " + w.str(), got.str());
        });
    });
}

SuiteReport run_closure_equiv(const SuiteParams& p) {
    return timed("closure", p, [&](SuiteReport& r) {
        check_rank(p.M, p.N);
        const auto weights = weight_box(p.M, p.N, p.box);
        run_tasks(r, static_cast<long long>(weights.size()), [&](long long i, TaskContext& ctx) {
            const SuperWeight& a = weights[static_cast<std::size_t>(i)];
            long long n = 0;
            for (const SuperWeight& b : weights) {
                ++n;
                const bool x = leq(a, b);
                if (x != closure_partial_sums(a, b))
                    ctx.violation(a.str() + " vs " + b.str(), x ? "leq" : "not leq",
                                  x ? "partial sums fail" : "partial sums hold");
            }
            for (long long k = 0; k < n; ++k) ctx.trial();
        });
    });
}

bool chi_vanishes_on_stabilizer(const SuperWeight& w, int T) {
    const int M = w.M, N = w.N;
    const LoopMatrix l = canonical_rep_N(w);
    const TruncatedSeries d = det(l);
    if (!d.poly().is_monomial()) throw InvariantViolation("canonical determinant is not a monomial");
    const int dv = d.poly().valuation();
    const Rational dc = d.poly().leading();
    const LoopMatrix adj = adjugate(l);
    // L^-1 = adj(L) / det(L), exact
    std::vector<LaurentScalar> inv(static_cast<std::size_t>(N * N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            inv[static_cast<std::size_t>(i * N + j)] = adj.at(i, j).poly().shifted(-dv).scaled(Rational(1) / dc);

    const std::size_t unknowns = static_cast<std::size_t>(T) * static_cast<std::size_t>(N * N);
    std::map<std::tuple<int, int, int>, std::vector<Rational>> constraint;
    std::vector<Rational> chi(unknowns);
    for (int m = 0; m < T; ++m)
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                const std::size_t u = static_cast<std::size_t>((m * N + a) * N + b);
                for (int i = 0; i < N; ++i) {
                    const LaurentScalar& la = l.at(i, a).poly();
                    if (la.is_zero()) continue;
                    for (int j = 0; j < N; ++j) {
                        const LaurentScalar& lb = inv[static_cast<std::size_t>(b * N + j)];
                        if (lb.is_zero()) continue;
                        const bool free_entry = i >= M + 1 && j < i;
                        for (const auto& [e, c] : (la * lb).shifted(m).terms()) {
                            if (!free_entry) {
                                auto& row = constraint[{i, j, e}];
                                if (row.empty()) row.resize(unknowns);
                                row[u] = row[u] + c;
                            } else if (j == i - 1 && e == -1) {
                                chi[u] = chi[u] + c;
                            }
                        }
                    }
                }
            }
    RowSpace space(unknowns);
    for (auto& [key, row] : constraint) space.insert(std::move(row));
    return space.contains(chi);
}

SuiteReport run_relevance_stab(const SuiteParams& p) {
    return timed("relevance", p, [&](SuiteReport& r) {
        check_rank(p.M, p.N);
        const int T = p.truncation > 0 ? p.truncation : p.box + 2;
        if (T < p.box + 2)
            throw InsufficientPrecision("truncation " + std::to_string(T) + " below box + 2");
        r.assumptions = {
            "stabilizers are compared at the Lie algebra level, truncated to t^m E_ab with 0 <= m < " +
                std::to_string(T),
            "only the character half (condition A) is checked; the determinant-line half (condition B) is not",
        };
        const auto weights = orbit_label_box(p.M, p.N, p.box);
        run_tasks(r, static_cast<long long>(weights.size()), [&](long long i, TaskContext& ctx) {
            const SuperWeight& w = weights[static_cast<std::size_t>(i)];
            ctx.trial();
            const bool vanish = chi_vanishes_on_stabilizer(w, T);
            const bool a = condition_a(w);
            if (vanish != a)
                ctx.violation("w=" + w.str(), a ? "chi vanishes" : "chi nonzero", vanish ? "chi vanishes" : "chi nonzero");
        });
    });
}

SuiteReport run_config(const SuiteParams& p) {
    return timed("config", p, [&](SuiteReport& r) {
        check_rank(p.M, p.N);
        const int M = p.M, N = p.N;
        const int roots = M + N - 1;
        const long long trivial_end = roots;
        const long long parity_end = 2LL * roots;
        const long long additive_end = parity_end + p.samples;
        run_tasks(r, additive_end + 1, [&](long long t, TaskContext& ctx) {
            ctx.trial();
            if (t < trivial_end) {
                const int i = static_cast<int>(t) + 1;
                const auto e = line_bundle_exponents(point_divisor(M, N, "x", neg_root(M, N, i)));
                if (e != std::map<std::string, int>{{"x", 0}})
                    ctx.violation("(-alpha_" + std::to_string(i) + ")x", "exponent 0",
                                  "exponent " + std::to_string(e.begin()->second));
            } else if (t < parity_end) {
                const int i = static_cast<int>(t - trivial_end) + 1;
                RootVector n = RootVector::zero(M, N);
                n.coeffs[static_cast<std::size_t>(i - 1)] = 3;
                const StalkParity want = i <= 2 * M ? StalkParity::Constant : StalkParity::Sign;
                if (stalk_parity(n) != want)
                    ctx.violation("parity of alpha_" + std::to_string(i), want == StalkParity::Constant ? "constant" : "sign",
                                  want == StalkParity::Constant ? "sign" : "constant");
            } else if (t < additive_end) {
                std::mt19937_64 rng(derive_seed(p.seed, static_cast<std::uint64_t>(t)));
                auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
                ColoredDivisor a(M, N), b(M, N);
                for (const std::string x : {"c", "x1", "x2", "x3", "x4"}) {
                    const int owner = draw(0, 2);
                    if (owner == 0) continue;
                    SuperWeight w = SuperWeight::zero(M, N);
                    if (x == kMarkedPoint) {
                        for (int& v : w.lambda) v = draw(-2, 2);
                        for (int& v : w.theta) v = draw(-2, 2);
                        for (int& v : w.theta_prime) v = draw(-2, 2);
                    } else {
                        RootVector n = RootVector::zero(M, N);
                        for (int& v : n.coeffs) v = draw(0, 2);
                        w = -recompose(n);
                    }
                    (owner == 1 ? a : b).set(x, w);
                }
                if (!factorization_exponent_check(a, b))
                    ctx.violation(to_json(a).dump() + " + " + to_json(b).dump(), "additive exponents", "not additive");
            } else {
                // some collision must break additivity
                for (int i = 1; i <= roots; ++i)
                    for (int j = i; j <= roots; ++j) {
                        const SuperWeight wi = neg_root(M, N, i), wj = neg_root(M, N, j);
                        if (line_bundle_exponent(wi + wj) != line_bundle_exponent(wi) + line_bundle_exponent(wj)) return;
                    }
                ctx.violation("colliding pairs of negative simple roots", "a non-additive collision", "none found");
            }
        });
    });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"roundtrip", "prop81", "closure", "relevance", "config"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& p) {
    if (name == "roundtrip") return run_roundtrip(p);
    if (name == "prop81") return run_prop81(p);
    if (name == "closure") return run_closure_equiv(p);
    if (name == "relevance") return run_relevance_stab(p);
    if (name == "config") return run_config(p);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}
