#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mrba/algebra.hpp"
#include "mrba/cli.hpp"
#include "mrba/coalgebra.hpp"
#include "mrba/hopf.hpp"
#include "mrba/parser.hpp"
#include "mrba/serialize.hpp"
#include "mrba/suites.hpp"

namespace py = pybind11;
using namespace mrba;

namespace {

// Owns one algebra and, for kappa == -lambda^2, its coalgebra and antipode.
// Results cross the boundary as text or JSON strings.
class Engine {
public:
    Engine(const std::string& lambda, const std::optional<std::string>& kappa, const std::string& alphabet,
           const std::string& generator)
        : alphabet_(generator == "trivial" ? std::string() : alphabet) {
        params_ = Params::hopf(Rational::parse(lambda));
        if (kappa) params_.kappa = Rational::parse(*kappa);
        gen_ = make_generator(generator, alphabet_);
        alg_ = std::make_unique<Algebra>(gen_, params_, true);
        if (params_.is_hopf()) {
            co_ = std::make_unique<Coalgebra>(*alg_, true);
            hopf_ = std::make_unique<Hopf>(*co_);
        }
    }

    std::string eval(const std::string& expr, bool json) const {
        LinComb u = evaluate(expr);
        return json ? to_json(u).dump() : to_text(u);
    }
    std::string coproduct(const std::string& expr, bool json) const {
        Tensor2 t = coalgebra().coproduct(evaluate(expr));
        return json ? to_json(t).dump() : to_text(t);
    }
    std::string counit(const std::string& expr) const { return coalgebra().counit(evaluate(expr)).str(); }
    std::string antipode(const std::string& expr, bool json) const {
        coalgebra();
        LinComb s = hopf_->antipode(evaluate(expr));
        return json ? to_json(s).dump() : to_text(s);
    }
    std::size_t degree(const std::string& expr) const { return filtration_degree(evaluate(expr), *gen_); }
    std::string mrb_residual(const std::string& u, const std::string& v) const {
        return to_text(alg_->mrb_residual(evaluate(u), evaluate(v)));
    }

    std::vector<py::dict> check(const std::string& suite, std::uint64_t seed, std::size_t cases,
                                std::size_t max_depth, std::size_t max_degree) const {
        SuiteConfig cfg;
        cfg.params = params_;
        cfg.generator = gen_;
        cfg.alphabet = alphabet_;
        cfg.seed = seed;
        cfg.cases = cases;
        cfg.shape.max_depth = max_depth;
        cfg.shape.max_degree = max_degree;
        std::vector<SuiteResult> results;
        {
            py::gil_scoped_release release;
            results = run_suites(suite, cfg);
        }
        std::vector<py::dict> out;
        for (const auto& r : results)
            out.push_back(py::dict(py::arg("name") = r.name, py::arg("checks") = r.cases, py::arg("passed") = r.passed,
                                   py::arg("counterexample") = r.counterexample));
        return out;
    }

    std::string lambda() const { return params_.lambda.str(); }
    std::string kappa() const { return params_.kappa.str(); }
    bool is_hopf() const { return params_.is_hopf(); }

private:
    LinComb evaluate(const std::string& expr) const { return alg_->evaluate(parse_expr(expr, alphabet_)); }
    const Coalgebra& coalgebra() const {
        if (!co_) throw std::invalid_argument("coalgebra operations require kappa = -lambda^2");
        return *co_;
    }

    std::string alphabet_;
    Params params_;
    std::shared_ptr<const GeneratorBialgebra> gen_;
    std::unique_ptr<Algebra> alg_;
    std::unique_ptr<Coalgebra> co_;
    std::unique_ptr<Hopf> hopf_;
};

py::tuple run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

} // namespace

PYBIND11_MODULE(_mrba, m) {
    m.doc() = "Free modified Rota-Baxter algebras: products, coproduct, counit and antipode";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Engine>(m, "Engine")
        .def(py::init<const std::string&, const std::optional<std::string>&, const std::string&, const std::string&>(),
             py::arg("lam") = "1", py::arg("kappa") = py::none(), py::arg("alphabet") = "ab",
             py::arg("generator") = "free")
        .def("eval", &Engine::eval, py::arg("expr"), py::arg("json") = false)
        .def("coproduct", &Engine::coproduct, py::arg("expr"), py::arg("json") = false)
        .def("counit", &Engine::counit, py::arg("expr"))
        .def("antipode", &Engine::antipode, py::arg("expr"), py::arg("json") = false)
        .def("degree", &Engine::degree, py::arg("expr"))
        .def("mrb_residual", &Engine::mrb_residual, py::arg("u"), py::arg("v"))
        .def("check", &Engine::check, py::arg("suite") = "all", py::arg("seed") = 0, py::arg("cases") = 100,
             py::arg("max_depth") = 3, py::arg("max_degree") = 10)
        .def_property_readonly("lam", &Engine::lambda)
        .def_property_readonly("kappa", &Engine::kappa)
        .def_property_readonly("is_hopf", &Engine::is_hopf);

    m.def("run_cli", &run_cli, py::arg("args"), "Run a command line; returns (exit code, stdout, stderr).");
}
