#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kpm/actions.hpp"
#include "kpm/birkhoff.hpp"
#include "kpm/cli.hpp"
#include "kpm/io.hpp"
#include "kpm/lines.hpp"
#include "kpm/schubert.hpp"
#include "kpm/sections.hpp"

namespace py = pybind11;
using namespace kpm;

namespace {

ADHMData adhm_arg(const std::string& json_text) {
    return adhm_from_json(Json::parse(json_text));
}

LoopMatrix loop_arg(const std::string& json_text) {
    return loop_from_json(Json::parse(json_text));
}

}  // namespace

PYBIND11_MODULE(_kpm, m) {
    m.doc() = "exact computations for rank-2 monad bundles on the projective plane, "
              "the loop-group lattice model, and the Schubert ring";

    py::register_exception<MalformedInput>(m, "MalformedInput", PyExc_ValueError);
    py::register_exception<SingularInput>(m, "SingularInput", PyExc_ValueError);
    py::register_exception<TruncationTooSmall>(m, "TruncationTooSmall", PyExc_ValueError);
    py::register_exception<DegenerateData>(m, "DegenerateData", PyExc_ValueError);

    // -- Schubert ring ------------------------------------------------------
    m.def("schubert_product", [](const std::string& x, const std::string& y) {
        std::ostringstream out, err;
        int code = run_cli({"schubert", "product", x, y}, out, err);
        if (code != 0) throw MalformedInput(err.str());
        std::string text = out.str();
        auto pos = text.find("product: ");
        return text.substr(pos + 9, text.size() - pos - 10);
    }, py::arg("x"), py::arg("y"), "Product of two Schubert classes, e.g. 'eps1', '2*eps2'.");

    m.def("eps_product", [](long i, long j) {
        SchubertClass p = eps_product(i, j);
        std::map<unsigned long, std::string> out;
        for (const auto& [k, c] : p.terms()) out[k] = int_str(c);
        return out;
    }, py::arg("i"), py::arg("j"));

    m.def("admissible_degree", [](long d) {
        if (d < 0) throw MalformedInput("degree must be nonnegative");
        return admissible_degree(Int(d));
    }, py::arg("d"), "True iff the degree passes the divisibility obstruction (6 | d).");

    m.def("p3_pullback", [](long d) {
        if (d < 0) throw MalformedInput("degree must be nonnegative");
        auto r = p3_pullback(Int(d));
        py::dict out;
        out["admissible"] = r.admissible;
        if (r.admissible) {
            out["eps1"] = int_str(r.image[1]);
            out["eps2"] = int_str(r.image[2]);
            out["eps3"] = int_str(r.image[3]);
        } else {
            out["obstruction_index"] = r.obstruction_index;
            out["obstruction_value"] = rat_str(r.obstruction_value);
        }
        return out;
    }, py::arg("d"));

    // -- lattice model ------------------------------------------------------
    m.def("lattice_index", [](const std::string& loop_json) {
        return lattice_from_group(loop_arg(loop_json)).index();
    }, py::arg("loop_json"));

    m.def("lattice_member", [](const std::string& loop_json, int d) {
        return in_Ld(lattice_from_group(loop_arg(loop_json)), d);
    }, py::arg("loop_json"), py::arg("d"));

    m.def("splitting_type", [](const std::string& loop_json, int trunc) {
        return splitting_type_p1(loop_arg(loop_json), trunc);
    }, py::arg("loop_json"), py::arg("trunc") = 16);

    m.def("vg_h0", [](const std::string& loop_json, int k, int trunc) {
        return vg_h0(loop_arg(loop_json), k, trunc);
    }, py::arg("loop_json"), py::arg("k"), py::arg("trunc") = 16);

    m.def("birkhoff_exponent", [](const std::string& loop_json, int trunc) {
        return birkhoff(loop_arg(loop_json).mat(), trunc).n;
    }, py::arg("loop_json"), py::arg("trunc") = 16);

    // -- monads -------------------------------------------------------------
    m.def("adhm_validate", [](const std::string& adhm_json) {
        return validate(adhm_arg(adhm_json));
    }, py::arg("adhm_json"), "Exact test of [alpha, beta] + b a^t = 0.");

    m.def("adhm_nondegenerate", [](const std::string& adhm_json) {
        return nondegenerate(adhm_arg(adhm_json));
    }, py::arg("adhm_json"));

    m.def("adhm_fiber", [](const std::string& adhm_json, const std::string& point) {
        ScalarMatrix reps = fiber(adhm_arg(adhm_json), parse_triple(point));
        std::vector<std::vector<std::string>> out(2);
        for (int j = 0; j < 2; ++j)
            for (int i = 0; i < reps.rows(); ++i) out[j].push_back(reps(i, j).str());
        return out;
    }, py::arg("adhm_json"), py::arg("point"));

    m.def("splitting_on_line",
          [](const std::string& adhm_json, const std::string& p, const std::string& q,
             int trunc) {
              return splitting_on_line(adhm_arg(adhm_json), parse_triple(p), parse_triple(q),
                                       trunc);
          },
          py::arg("adhm_json"), py::arg("p"), py::arg("q"), py::arg("trunc") = 16);

    m.def("jumping_scan", [](const std::string& adhm_json, int size, long denom, int trunc) {
        if (size < 0 || denom <= 0) throw MalformedInput("bad grid specification");
        std::vector<LineSpec> grid;
        for (long i = -size; i <= size; ++i)
            for (long j = -size; j <= size; ++j) {
                Rat du(i, denom), dv(j, denom);
                du.canonicalize();
                dv.canonicalize();
                grid.push_back(line_from_dual(du, dv, Rat(1)));
            }
        auto report = jumping_line_scan(adhm_arg(adhm_json), grid, trunc);
        std::vector<std::tuple<std::string, int, std::string>> out;
        for (const auto& e : report.lines) out.emplace_back(e.label, e.n, e.error);
        return out;
    }, py::arg("adhm_json"), py::arg("size"), py::arg("denom") = 1, py::arg("trunc") = 16);

    m.def("random_adhm", [](int d, std::uint64_t seed) {
        return adhm_to_json(random_adhm(d, seed)).dump();
    }, py::arg("d"), py::arg("seed"));

    // -- group actions ------------------------------------------------------
    m.def("act_gl", [](const std::string& adhm_json, const std::string& g_json) {
        ScalarMatrix g = matrix_from_json(Json::parse(g_json), "g");
        return adhm_to_json(gl_act(g, adhm_arg(adhm_json))).dump();
    }, py::arg("adhm_json"), py::arg("g_json"));

    m.def("act_cstar", [](const std::string& adhm_json, const std::string& z) {
        return adhm_to_json(cstar_act(rat_parse(z), adhm_arg(adhm_json))).dump();
    }, py::arg("adhm_json"), py::arg("z"));

    m.def("gl_equivalent",
          [](const std::string& x_json, const std::string& y_json, int trials) {
              auto res = gl_equivalent(adhm_arg(x_json), adhm_arg(y_json), trials);
              py::dict out;
              switch (res.status) {
                  case EquivStatus::kFound:
                      out["status"] = "found";
                      out["g"] = matrix_to_json(*res.g).dump();
                      break;
                  case EquivStatus::kNoSolution:
                      out["status"] = "none";
                      break;
                  case EquivStatus::kInconclusive:
                      out["status"] = "inconclusive";
                      break;
              }
              return out;
          },
          py::arg("x_json"), py::arg("y_json"), py::arg("trials") = 64);

    m.def("verify_scaling_equivariance",
          [](const std::string& adhm_json, const std::string& z, const std::string& point) {
              return verify_lemma42(adhm_arg(adhm_json), rat_parse(z), parse_triple(point));
          },
          py::arg("adhm_json"), py::arg("z"), py::arg("point"));

    m.def("pi_map", [](const std::string& x, const std::string& lm) {
        auto img = pi_map(parse_triple(x), parse_pair(lm));
        return proj_str({img[0], img[1], img[2], img[3]});
    }, py::arg("x"), py::arg("lm"));

    // -- CLI passthrough ------------------------------------------------------
    m.def("cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Run a CLI invocation; returns (exit_code, stdout, stderr).");
}
