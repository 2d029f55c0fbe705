#include "mrba/cli.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "mrba/algebra.hpp"
#include "mrba/coalgebra.hpp"
#include "mrba/hopf.hpp"
#include "mrba/parser.hpp"
#include "mrba/serialize.hpp"
#include "mrba/suites.hpp"

namespace mrba {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string lambda = "1";
    std::optional<std::string> kappa;
    std::string alphabet = "a,b";
    std::string generator = "free";
    std::string format = "text";
    std::uint64_t seed = 0;
    std::size_t cases = 100;
    std::size_t max_depth = 3;
    std::size_t max_degree = 10;
    std::string expr;
    std::string suite;
};

std::string strip_commas(const std::string& s) {
    std::string out;
    std::copy_if(s.begin(), s.end(), std::back_inserter(out), [](char c) { return c != ','; });
    return out;
}

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError("invalid value for " + flag + ": " + e.what());
    }
}

class Session {
public:
    explicit Session(const Options& o) : opts_(o) {
        Rational lambda = parse_rational_flag("--lambda", o.lambda);
        params_ = Params::hopf(lambda);
        if (o.kappa) params_.kappa = parse_rational_flag("--kappa", *o.kappa);
        alphabet_ = o.generator == "trivial" ? std::string() : strip_commas(o.alphabet);
        try {
            gen_ = make_generator(o.generator, alphabet_);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        alg_ = std::make_unique<Algebra>(gen_, params_, true);
    }

    void require_hopf(const std::string& command) const {
        if (!params_.is_hopf())
            throw UsageError(command + " requires kappa = -lambda^2 (lambda = " + params_.lambda.text() +
                             ", kappa = " + params_.kappa.text() + ")");
    }

    LinComb evaluate(const std::string& text) const { return alg_->evaluate(parse_expr(text, alphabet_)); }

    const Algebra& algebra() const { return *alg_; }
    const Params& params() const { return params_; }
    std::shared_ptr<const GeneratorBialgebra> generator() const { return gen_; }
    const std::string& alphabet() const { return alphabet_; }
    bool json() const { return opts_.format == "json"; }

private:
    const Options& opts_;
    Params params_;
    std::string alphabet_;
    std::shared_ptr<const GeneratorBialgebra> gen_;
    std::unique_ptr<Algebra> alg_;
};

int run_check(const Session& s, const Options& o, std::ostream& out) {
    SuiteConfig cfg;
    cfg.params = s.params();
    cfg.generator = s.generator();
    cfg.alphabet = s.alphabet();
    cfg.seed = o.seed;
    cfg.cases = o.cases;
    cfg.shape.max_depth = o.max_depth;
    cfg.shape.max_degree = o.max_degree;

    std::vector<SuiteResult> results;
    try {
        results = run_suites(o.suite, cfg);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const bool passed = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    if (s.json()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : results)
            arr.push_back({{"name", r.name}, {"checks", r.cases}, {"passed", r.passed},
                           {"counterexample", r.counterexample}});
        out << nlohmann::json{{"suites", arr}, {"passed", passed}}.dump() << "\n";
    } else {
        for (const auto& r : results) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " checks)";
            if (!r.passed) out << ": " << r.counterexample;
            out << "\n";
        }
        out << (passed ? "all suites passed" : "suite failure") << "\n";
    }
    return passed ? exit_ok : exit_failure;
}

int dispatch(const std::string& command, const Options& o, std::ostream& out) {
    Session s(o);
    if (command == "check") return run_check(s, o, out);

    if (command != "eval" && command != "deg") s.require_hopf(command);
    const LinComb u = s.evaluate(o.expr);

    if (command == "eval") {
        out << (s.json() ? to_json(u).dump() : to_text(u)) << "\n";
    } else if (command == "deg") {
        if (u.is_zero()) throw UsageError("degree of the zero element is undefined");
        std::size_t d = filtration_degree(u, s.algebra().generator());
        out << (s.json() ? nlohmann::json{{"degree", d}}.dump() : std::to_string(d)) << "\n";
    } else {
        Coalgebra co(s.algebra(), true);
        if (command == "counit") {
            Rational e = co.counit(u);
            out << (s.json() ? to_json(e).dump() : e.text()) << "\n";
        } else if (command == "coprod") {
            Tensor2 t = co.coproduct(u);
            out << (s.json() ? to_json(t).dump() : to_text(t)) << "\n";
        } else {
            Hopf h(co);
            LinComb r = h.antipode(u);
            out << (s.json() ? to_json(r).dump() : to_text(r)) << "\n";
        }
    }
    return exit_ok;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Free modified Rota-Baxter algebra calculator", "mrba"};
    app.require_subcommand(1, 1);
    app.add_option("--lambda", o.lambda, "lambda as p/q")->capture_default_str();
    app.add_option("--kappa", o.kappa, "operator weight as p/q (algebra-only commands; default -lambda^2)");
    app.add_option("--alphabet", o.alphabet, "generator symbols, e.g. a,b")->capture_default_str();
    app.add_option("--generator", o.generator, "generator bialgebra")
        ->check(CLI::IsMember({"trivial", "free"}))
        ->capture_default_str();
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--seed", o.seed, "random seed for check")->capture_default_str();
    app.add_option("--cases", o.cases, "cases per suite for check")->capture_default_str();
    app.add_option("--max-depth", o.max_depth, "maximal bracket depth of random words for check")->capture_default_str();
    app.add_option("--max-degree", o.max_degree, "maximal degree of random words for check (0: unbounded)")
        ->capture_default_str();

    const std::vector<std::pair<std::string, std::string>> expr_commands{
        {"eval", "evaluate an expression"},         {"coprod", "coproduct of an expression"},
        {"counit", "counit of an expression"},      {"antipode", "antipode of an expression"},
        {"deg", "filtration degree of an expression"},
    };
    for (const auto& [name, help] : expr_commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        sub->add_option("expr", o.expr, "expression, e.g. P(a)*P(b)")->required();
    }
    auto* check = app.add_subcommand("check", "run property suites");
    check->fallthrough();
    std::vector<std::string> choices = suite_names();
    choices.push_back("all");
    check->add_option("--suite", o.suite, "suite name")->required()->check(CLI::IsMember(choices));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return dispatch(command, o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    }
    return exit_usage;
}

} // namespace mrba
