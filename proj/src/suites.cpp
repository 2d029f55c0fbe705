#include "mrba/suites.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "mrba/algebra.hpp"
#include "mrba/coalgebra.hpp"
#include "mrba/hopf.hpp"
#include "mrba/oracle.hpp"
#include "mrba/serialize.hpp"
#include "mrba/target.hpp"

namespace mrba {

namespace {

class Run {
public:
    explicit Run(std::string name) { result_.name = std::move(name); }

    // Records one check; keeps only the first failure.
    void check(bool ok, const std::function<std::string()>& describe) {
        ++result_.cases;
        if (ok || !result_.passed) return;
        result_.passed = false;
        result_.counterexample = describe();
    }

    bool failed() const { return !result_.passed; }
    SuiteResult result() && { return std::move(result_); }

private:
    SuiteResult result_;
};

std::string show(const LinComb& u) { return to_text(u); }

struct Engines {
    explicit Engines(const SuiteConfig& c)
        : alg(c.generator, c.params, /*memoize=*/true),
          co(c.params.is_hopf() ? std::make_unique<Coalgebra>(alg, true) : nullptr),
          hopf(co ? std::make_unique<Hopf>(*co) : nullptr) {}

    Algebra alg;
    std::unique_ptr<Coalgebra> co;
    std::unique_ptr<Hopf> hopf;
};

Sampler sampler_for(const SuiteConfig& c, std::size_t salt) {
    return Sampler(c.seed * 1000003ULL + salt, c.alphabet, c.shape);
}

// Pairs whose product stays within the degree bound.
std::pair<Word, Word> word_pair(Sampler& s, const SuiteConfig& c, std::size_t depth) {
    for (;;) {
        Word x = s.word(depth), y = s.word(depth);
        if (c.shape.max_degree == 0 || shape_degree(x) + shape_degree(y) <= c.shape.max_degree) return {x, y};
    }
}

bool all_canonical(const LinComb& u) {
    return std::all_of(u.begin(), u.end(), [](const auto& t) { return is_canonical(t.first); });
}

SuiteResult assoc_suite(const SuiteConfig& c, Engines& e) {
    Run run("assoc");
    Sampler s = sampler_for(c, 1);
    for (std::size_t i = 0; i < c.cases && !run.failed(); ++i) {
        Word x = s.word(), y = s.word(), z = s.word();
        LinComb left = e.alg.mul(e.alg.mul(x, y), z);
        LinComb right = e.alg.mul(LinComb::of(x), e.alg.mul(y, z));
        run.check(left == right && all_canonical(left), [&] {
            return "(" + to_text(x) + " * " + to_text(y) + ") * " + to_text(z) + " = " + show(left) +
                   " but regrouped = " + show(right);
        });
        LinComb u = LinComb::of(x);
        run.check(e.alg.mul(e.alg.one(), u) == u && e.alg.mul(u, e.alg.one()) == u,
                  [&] { return "unit law fails for " + to_text(x); });
    }
    return std::move(run).result();
}

SuiteResult mrb_suite(const SuiteConfig& c, Engines& e) {
    Run run("mrb");
    Sampler s = sampler_for(c, 2);
    for (std::size_t i = 0; i < c.cases && !run.failed(); ++i) {
        LinComb u = s.lincomb(2), v = s.lincomb(2);
        LinComb r = e.alg.mrb_residual(u, v);
        run.check(r.is_zero(), [&] { return "u = " + show(u) + ", v = " + show(v) + ", residual " + show(r); });
    }
    if (!e.co) return std::move(run).result();

    // tensor-level operators
    const std::size_t tensor_cases = std::max<std::size_t>(1, c.cases / 5);
    for (std::size_t i = 0; i < tensor_cases && !run.failed(); ++i) {
        Tensor2 a = tensor(s.lincomb(1), s.lincomb(1));
        Tensor2 b = tensor(s.lincomb(1), s.lincomb(1));
        Tensor2 r = e.co->op_residual(a, b);
        run.check(r.is_zero(), [&] { return "tensor operator residual " + to_text(r); });
    }
    for (std::size_t i = 0; i < tensor_cases && !run.failed(); ++i) {
        Tensor3 a = tensor(s.lincomb(1), s.lincomb(1), s.lincomb(1));
        Tensor3 b = tensor(s.lincomb(1), s.lincomb(1), s.lincomb(1));
        run.check(e.co->op_residual(a, b).is_zero(), [&] { return std::string("triple tensor operator residual nonzero"); });
    }

    // universal morphisms
    const auto& gen = e.alg.generator();
    const Rational lambda = c.params.lambda;
    ScalarMRBA scalar(lambda);
    auto eps_a = [&](const GenIndex& k) { return gen.counit(k); };
    GeneratorRing ring(gen);
    ScaledIdentityMRBA<GeneratorRing> scaled(ring, lambda);
    auto id_a = [](const GenIndex& k) { return GenElement::of(k); };
    for (std::size_t i = 0; i < c.cases && !run.failed(); ++i) {
        LinComb u = s.lincomb(2), v = s.lincomb(2);
        Rational via_map = universal_map(scalar, eps_a, u, c.params);
        run.check(via_map == e.co->counit(u), [&] { return "universal map to k differs from counit on " + show(u); });
        auto fu = universal_map(scaled, id_a, u, c.params);
        auto fv = universal_map(scaled, id_a, v, c.params);
        auto fuv = universal_map(scaled, id_a, e.alg.mul(u, v), c.params);
        run.check(fuv == ring.mul(fu, fv), [&] { return "universal map not multiplicative on " + show(u) + ", " + show(v); });
        auto fpu = universal_map(scaled, id_a, e.alg.apply_op(u), c.params);
        run.check(fpu == scaled.op(fu), [&] { return "universal map does not commute with P on " + show(u); });
    }
    return std::move(run).result();
}

SuiteResult oracle_suite(const SuiteConfig& c, Engines& e) {
    Run run("oracle");
    Sampler s = sampler_for(c, 3);
    for (std::size_t i = 0; i < c.cases && !run.failed(); ++i) {
        Expr t = s.expr(3, 3);
        LinComb engine = e.alg.evaluate(t);
        LinComb oracle = oracle_normal_form(t, c.params, e.alg.generator());
        run.check(engine == oracle, [&] {
            return to_debug_string(t) + ": engine " + show(engine) + ", rewriting " + show(oracle);
        });
    }
    return std::move(run).result();
}

SuiteResult coassoc_suite(const SuiteConfig& c, Engines& e) {
    Run run("coassoc");
    Sampler s = sampler_for(c, 4);
    for (std::size_t i = 0; i < c.cases && !run.failed(); ++i) {
        LinComb u = LinComb::of(s.word());
        run.check(e.co->coproduct_left(u) == e.co->coproduct_right(u),
                  [&] { return "coassociativity fails on " + show(u); });
    }
    return std::move(run).result();
}

SuiteResult counit_suite(const SuiteConfig& c, Engines& e) {
    Run run("counit");
    Sampler s = sampler_for(c, 5);
    for (std::size_t i = 0; i < c.cases && !run.failed(); ++i) {
        LinComb u = LinComb::of(s.word());
        run.check(e.co->counit_left(u) == u, [&] { return "left counit law fails on " + show(u); });
        run.check(e.co->counit_right(u) == u, [&] { return "right counit law fails on " + show(u); });
    }
    run.check(e.co->counit(LinComb::of(Word::bracket(Word()))) == -c.params.lambda,
              [] { return std::string("eps(P(1)) != -lambda"); });
    return std::move(run).result();
}

SuiteResult compat_suite(const SuiteConfig& c, Engines& e) {
    Run run("compat");
    Sampler s = sampler_for(c, 6);
    for (std::size_t i = 0; i < c.cases && !run.failed(); ++i) {
        auto [x, y] = word_pair(s, c, c.shape.max_depth);
        LinComb xy = e.alg.mul(x, y);
        run.check(e.co->coproduct(xy) == e.co->mul(e.co->coproduct(x), e.co->coproduct(y)),
                  [&] { return "Delta not multiplicative on " + to_text(x) + ", " + to_text(y); });
        run.check(e.co->counit(xy) == e.co->counit(x) * e.co->counit(y),
                  [&] { return "eps not multiplicative on " + to_text(x) + ", " + to_text(y); });
    }
    return std::move(run).result();
}

SuiteResult cocycle_suite(const SuiteConfig& c, Engines& e) {
    Run run("cocycle");
    Sampler s = sampler_for(c, 7);
    for (std::size_t i = 0; i < c.cases && !run.failed(); ++i) {
        LinComb u = s.lincomb(2);
        Tensor2 lhs = e.co->coproduct(e.alg.apply_op(u));
        // [u] (x) 1 + lambda u (x) 1 + (id (x) P) Delta(u)
        Tensor2 rhs = tensor(e.alg.apply_op(u), e.alg.one());
        rhs.add(tensor(u, e.alg.one()), c.params.lambda);
        for (const auto& [p, coeff] : e.co->coproduct(u)) rhs.add_term({p.first, Word::bracket(p.second)}, coeff);
        run.check(lhs == rhs, [&] { return "cocycle identity fails on " + show(u); });
    }
    return std::move(run).result();
}

SuiteResult antipode_suite(const SuiteConfig& c, Engines& e) {
    Run run("antipode");
    Sampler s = sampler_for(c, 8);
    const auto S = EndoMap::antipode();
    const auto id = EndoMap::identity();
    for (std::size_t i = 0; i < c.cases && !run.failed(); ++i) {
        LinComb u = LinComb::of(s.word());
        LinComb expected = e.alg.one().scaled(e.co->counit(u));
        run.check(e.hopf->convolution(S, id, u) == expected, [&] { return "(S*id)(u) != eps(u)1 for u = " + show(u); });
        run.check(e.hopf->convolution(id, S, u) == expected, [&] { return "(id*S)(u) != eps(u)1 for u = " + show(u); });
    }
    const std::size_t pair_cases = std::max<std::size_t>(1, c.cases / 4);
    for (std::size_t i = 0; i < pair_cases && !run.failed(); ++i) {
        auto [x, y] = word_pair(s, c, 2);
        LinComb lhs = e.hopf->antipode(e.alg.mul(x, y));
        LinComb rhs = e.alg.mul(e.hopf->antipode(y), e.hopf->antipode(x));
        run.check(lhs == rhs, [&] { return "S(xy) != S(y)S(x) for " + to_text(x) + ", " + to_text(y); });
    }
    return std::move(run).result();
}

SuiteResult filtration_suite(const SuiteConfig& c, Engines& e) {
    Run run("filtration");
    Sampler s = sampler_for(c, 9);
    const auto& gen = e.alg.generator();
    for (std::size_t i = 0; i < c.cases && !run.failed(); ++i) {
        Word x = s.word(), y = s.word();
        const std::size_t dx = degree(x, gen), dy = degree(y, gen);
        LinComb xy = e.alg.mul(x, y);
        run.check(xy.is_zero() || filtration_degree(xy, gen) <= dx + dy,
                  [&] { return "deg(xy) > deg x + deg y for " + to_text(x) + ", " + to_text(y); });
        run.check(degree(Word::bracket(x), gen) == dx + 1, [&] { return "deg P(x) != deg x + 1 for " + to_text(x); });
        if (e.co) {
            bool ok = true;
            for (const auto& [p, coeff] : e.co->coproduct(x))
                ok = ok && degree(p.first, gen) + degree(p.second, gen) <= dx;
            run.check(ok, [&] { return "coproduct of " + to_text(x) + " leaves the filtration"; });
        }
    }
    bool connected = true;
    for (const auto& w : words_up_to_degree(gen, 0)) connected = connected && w.empty();
    run.check(connected, [] { return std::string("H_0 contains a word other than 1"); });
    return std::move(run).result();
}

using SuiteFn = SuiteResult (*)(const SuiteConfig&, Engines&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"assoc", assoc_suite},     {"mrb", mrb_suite},         {"oracle", oracle_suite},
        {"coassoc", coassoc_suite}, {"counit", counit_suite},   {"compat", compat_suite},
        {"cocycle", cocycle_suite}, {"antipode", antipode_suite}, {"filtration", filtration_suite},
    };
    return r;
}

SuiteResult run_with(const std::string& name, const SuiteConfig& config, Engines& e) {
    for (const auto& [n, fn] : registry())
        if (n == name) return fn(config, e);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

void validate(const std::string& name, const SuiteConfig& config) {
    if (!config.generator) throw std::invalid_argument("suite needs a generator");
    if (suite_needs_hopf(name) && !config.params.is_hopf())
        throw std::invalid_argument("suite '" + name + "' requires kappa = -lambda^2");
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : registry()) n.push_back(name);
        return n;
    }();
    return names;
}

bool suite_needs_hopf(const std::string& name) {
    return name != "assoc" && name != "mrb" && name != "oracle" && name != "filtration";
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
        throw std::invalid_argument("unknown suite '" + name + "'");
    validate(name, config);
    Engines e(config);
    return run_with(name, config, e);
}

std::vector<SuiteResult> run_suites(const std::string& name, const SuiteConfig& config) {
    if (name != "all") return {run_suite(name, config)};
    for (const auto& n : suite_names()) validate(n, config);
    Engines e(config);
    std::vector<SuiteResult> out;
    for (const auto& n : suite_names()) out.push_back(run_with(n, config, e));
    return out;
}

} // namespace mrba
