#include "kpm/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "kpm/actions.hpp"
#include "kpm/birkhoff.hpp"
#include "kpm/errors.hpp"
#include "kpm/io.hpp"
#include "kpm/lines.hpp"
#include "kpm/schubert.hpp"
#include "kpm/sections.hpp"

namespace kpm {

namespace {

// term := [int '*']? 'eps' uint | int ; expr := term (('+'|'-') term)*
SchubertClass parse_schubert(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw MalformedInput("empty Schubert expression");
    SchubertClass acc;
    std::size_t pos = 0;
    while (pos < t.size()) {
        Int sign(1);
        if (t[pos] == '+' || t[pos] == '-') {
            if (t[pos] == '-') sign = -1;
            ++pos;
        }
        std::string digits;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
            digits.push_back(t[pos++]);
        Int coeff = digits.empty() ? Int(1) : Int(digits);
        if (pos < t.size() && t[pos] == '*') ++pos;
        unsigned long index = 0;
        if (t.compare(pos, 3, "eps") == 0) {
            pos += 3;
            std::string idx;
            while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
                idx.push_back(t[pos++]);
            if (idx.empty()) throw MalformedInput("eps needs an index: " + s);
            index = std::stoul(idx);
        } else if (digits.empty()) {
            throw MalformedInput("bad Schubert term in: " + s);
        }
        acc = acc + SchubertClass::eps(index, sign * coeff);
    }
    return acc;
}

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (...) {
        throw MalformedInput("bad integer: " + s);
    }
}

int default_trunc() {
    if (const char* env = std::getenv("KPM_TRUNCATION")) {
        try {
            int n = std::stoi(env);
            if (n >= 4) return n;
            throw MalformedInput("KPM_TRUNCATION must be at least 4");
        } catch (const MalformedInput&) {
            throw;
        } catch (...) {
            throw MalformedInput("KPM_TRUNCATION must be an integer");
        }
    }
    return 16;
}

std::string matrix_str(const LaurentMatrix& m) {
    std::string out = "[";
    for (int i = 0; i < m.rows(); ++i) {
        out += (i ? ", [" : "[");
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += m(i, j).str();
        }
        out += "]";
    }
    return out + "]";
}

std::string row_str(const ScalarMatrix& col) {
    std::string out = "(";
    for (int i = 0; i < col.rows(); ++i) {
        if (i) out += ", ";
        out += col(i, 0).str();
    }
    return out + ")";
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations for rank-2 monad bundles on the projective plane,\n"
                 "the loop-group lattice model, and the Schubert ring"};
    app.require_subcommand(1);
    int rc = 0;
    int trunc = 16;
    try {
        trunc = default_trunc();
    } catch (const MalformedInput& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    // ---- schubert ----
    auto* schubert = app.add_subcommand("schubert", "Schubert ring of the loop Grassmannian");
    schubert->require_subcommand(1);
    {
        auto* product = schubert->add_subcommand("product", "product of two classes");
        auto x = std::make_shared<std::string>();
        auto y = std::make_shared<std::string>();
        product->add_option("x", *x, "first class, e.g. '2*eps1 + eps0'")->required();
        product->add_option("y", *y, "second class")->required();
        product->callback([&out, x, y]() {
            SchubertClass p = class_product(parse_schubert(*x), parse_schubert(*y));
            out << "check: schubert-product\n";
            out << "product: " << p.str() << "\n";
        });

        auto* degree = schubert->add_subcommand("degree-check",
                                                "divisibility obstruction for a degree");
        auto dstr = std::make_shared<std::string>();
        degree->add_option("d", *dstr, "candidate degree (nonnegative integer)")->required();
        degree->callback([&out, &rc, dstr]() {
            Int d = parse_int(*dstr);
            if (sgn(d) < 0) throw MalformedInput("degree must be nonnegative");
            auto res = p3_pullback(d);
            out << "check: schubert-degree\n";
            if (res.admissible) {
                out << "admissible: true (c=" << int_str(res.image[2])
                    << ", e=" << int_str(res.image[3]) << ")\n";
            } else {
                out << "admissible: false (obstruction at eps_" << res.obstruction_index
                    << ")\n";
                rc = 1;
            }
        });
    }

    // ---- lattice ----
    auto* lattice = app.add_subcommand("lattice", "lattice model of the loop Grassmannian");
    lattice->require_subcommand(1);
    {
        auto* index = lattice->add_subcommand("index", "invariant factors and index");
        auto file = std::make_shared<std::string>();
        index->add_option("file", *file, "loop matrix file")->required();
        index->callback([&out, file]() {
            Lattice l = lattice_from_group(load_loop(*file));
            out << "check: lattice-index\n";
            out << "invariant-factors: (" << l.k1() << ", " << l.k2() << ")\n";
            out << "index: " << l.index() << "\n";
        });

        auto* member = lattice->add_subcommand("member", "membership in L_d");
        auto mfile = std::make_shared<std::string>();
        auto d = std::make_shared<int>(0);
        member->add_option("file", *mfile, "loop matrix file")->required();
        member->add_option("d", *d, "lattice stratum")->required();
        member->callback([&out, &rc, mfile, d]() {
            Lattice l = lattice_from_group(load_loop(*mfile));
            bool ok = in_Ld(l, *d);
            out << "check: lattice-member\n";
            out << "member: " << (ok ? "true" : "false") << "\n";
            if (!ok) rc = 1;
        });

        auto* splitting = lattice->add_subcommand("splitting", "splitting type of the glued sheaf");
        auto sfile = std::make_shared<std::string>();
        splitting->add_option("file", *sfile, "loop matrix file")->required();
        splitting->add_option("--trunc", trunc, "truncation order")->check(CLI::Range(4, 1048576));
        splitting->callback([&out, &trunc, sfile]() {
            int n = splitting_type_p1(load_loop(*sfile), trunc);
            out << "check: lattice-splitting\n";
            out << "splitting: " << n << "\n";
        });
    }

    // ---- birkhoff ----
    {
        auto* bk = app.add_subcommand("birkhoff", "Birkhoff factorization of a det-1 loop");
        auto file = std::make_shared<std::string>();
        bk->add_option("file", *file, "loop matrix file")->required();
        bk->add_option("--trunc", trunc, "truncation order")->check(CLI::Range(4, 1048576));
        bk->callback([&out, &trunc, file]() {
            auto fac = birkhoff(load_loop(*file).mat(), trunc);
            out << "check: birkhoff\n";
            out << "n: " << fac.n << "\n";
            out << "g_minus: " << matrix_str(fac.g_minus) << "\n";
            out << "d: " << matrix_str(fac.d) << "\n";
            out << "g_plus: " << matrix_str(fac.g_plus) << "\n";
        });
    }

    // ---- monad ----
    auto* monad = app.add_subcommand("monad", "ADHM data and the monad bundle");
    monad->require_subcommand(1);
    {
        auto* check = monad->add_subcommand("check", "condition (1) and nondegeneracy");
        auto file = std::make_shared<std::string>();
        check->add_option("file", *file, "ADHM data file")->required();
        check->callback([&out, &rc, file]() {
            ADHMData x = load_adhm(*file);
            out << "check: monad-check\n";
            if (!validate(x)) {
                out << "condition(1): violated\n";
                rc = 1;
                return;
            }
            bool nd = nondegenerate(x);
            out << "condition(1): ok; nondegenerate: " << (nd ? "true" : "false") << "\n";
            if (!nd) rc = 1;
        });

        auto* fib = monad->add_subcommand("fiber", "fiber representatives at a point");
        auto ffile = std::make_shared<std::string>();
        auto point = std::make_shared<std::string>();
        fib->add_option("file", *ffile, "ADHM data file")->required();
        fib->add_option("point", *point, "homogeneous coordinates l,m,n")->required();
        fib->callback([&out, ffile, point]() {
            ADHMData x = load_adhm(*ffile);
            ScalarMatrix reps = fiber(x, parse_triple(*point));
            out << "check: monad-fiber\n";
            out << "rep1: " << row_str(reps.col(0)) << "\n";
            out << "rep2: " << row_str(reps.col(1)) << "\n";
        });

        auto* line = monad->add_subcommand("line", "splitting type on the line through P and Q");
        auto lfile = std::make_shared<std::string>();
        auto pstr = std::make_shared<std::string>();
        auto qstr = std::make_shared<std::string>();
        line->add_option("file", *lfile, "ADHM data file")->required();
        line->add_option("P", *pstr, "first point l,m,n")->required();
        line->add_option("Q", *qstr, "second point l,m,n")->required();
        line->add_option("--trunc", trunc, "truncation order")->check(CLI::Range(4, 1048576));
        line->callback([&out, &trunc, lfile, pstr, qstr]() {
            ADHMData x = load_adhm(*lfile);
            int n = splitting_on_line(x, parse_triple(*pstr), parse_triple(*qstr), trunc);
            out << "check: monad-line\n";
            out << "splitting: " << n << "\n";
        });

        auto* scan = monad->add_subcommand("scan", "splitting survey over a dual-plane grid");
        auto sfile = std::make_shared<std::string>();
        auto size = std::make_shared<int>(3);
        auto denom = std::make_shared<long>(1);
        auto table = std::make_shared<bool>(false);
        scan->add_option("file", *sfile, "ADHM data file")->required();
        scan->add_option("--size", *size, "grid radius (duals [i/m : j/m : 1], |i|,|j| <= size)");
        scan->add_option("--denom", *denom, "grid denominator m");
        scan->add_flag("--table", *table, "tab-separated per-line output");
        scan->add_option("--trunc", trunc, "truncation order")->check(CLI::Range(4, 1048576));
        scan->callback([&out, &trunc, sfile, size, denom, table]() {
            if (*size < 0 || *denom <= 0) throw MalformedInput("bad grid specification");
            ADHMData x = load_adhm(*sfile);
            std::vector<LineSpec> grid;
            for (long i = -*size; i <= *size; ++i)
                for (long j = -*size; j <= *size; ++j) {
                    Rat du(i, *denom), dv(j, *denom);
                    du.canonicalize();
                    dv.canonicalize();
                    grid.push_back(line_from_dual(du, dv, Rat(1)));
                }
            auto report = jumping_line_scan(x, grid, trunc);
            if (*table) {
                for (const auto& e : report.lines)
                    out << e.label << "\t" << (e.error.empty() ? std::to_string(e.n) : e.error)
                        << "\n";
                return;
            }
            out << "check: monad-scan\n";
            out << "lines: " << report.lines.size() << "\n";
            for (const auto& [n, count] : report.histogram)
                out << "splitting " << n << ": " << count << "\n";
            out << "errors: " << report.errors << "\n";
            for (const auto& e : report.lines)
                if (e.n > 0) out << "jumping: " << e.label << " n=" << e.n << "\n";
        });

        auto* rnd = monad->add_subcommand("random", "seeded random valid ADHM data");
        auto d = std::make_shared<int>(1);
        auto seed = std::make_shared<std::uint64_t>(0);
        auto outfile = std::make_shared<std::string>();
        rnd->add_option("d", *d, "instanton number")->required();
        rnd->add_option("seed", *seed, "random seed")->required();
        rnd->add_option("-o,--output", *outfile, "write to file instead of stdout");
        rnd->callback([&out, d, seed, outfile]() {
            ADHMData x = random_adhm(*d, *seed);
            Json j = adhm_to_json(x);
            if (outfile->empty()) {
                out << "check: monad-random\n" << j.dump(2) << "\n";
            } else {
                save_json(j, *outfile);
                out << "check: monad-random\nwritten: " << *outfile << "\n";
            }
        });
    }

    // ---- act ----
    auto* act = app.add_subcommand("act", "group actions on ADHM data");
    act->require_subcommand(1);
    {
        auto* gl = act->add_subcommand("gl", "frame change g . (alpha, beta, a, b)");
        auto file = std::make_shared<std::string>();
        auto gfile = std::make_shared<std::string>();
        auto outfile = std::make_shared<std::string>();
        gl->add_option("file", *file, "ADHM data file")->required();
        gl->add_option("g", *gfile, "matrix file with field \"g\"")->required();
        gl->add_option("-o,--output", *outfile, "write result to file");
        gl->callback([&out, file, gfile, outfile]() {
            ADHMData x = load_adhm(*file);
            ScalarMatrix g = load_matrix(*gfile, "g");
            ADHMData y = gl_act(g, x);
            out << "check: act-gl\n";
            if (outfile->empty())
                out << adhm_to_json(y).dump(2) << "\n";
            else {
                save_adhm(y, *outfile);
                out << "written: " << *outfile << "\n";
            }
        });

        auto* cstar = act->add_subcommand("cstar", "scaling action z . (alpha, beta, a, b)");
        auto cfile = std::make_shared<std::string>();
        auto zstr = std::make_shared<std::string>();
        auto coutfile = std::make_shared<std::string>();
        cstar->add_option("file", *cfile, "ADHM data file")->required();
        cstar->add_option("z", *zstr, "nonzero rational scale")->required();
        cstar->add_option("-o,--output", *coutfile, "write result to file");
        cstar->callback([&out, cfile, zstr, coutfile]() {
            ADHMData x = load_adhm(*cfile);
            ADHMData y = cstar_act(rat_parse(*zstr), x);
            out << "check: act-cstar\n";
            if (coutfile->empty())
                out << adhm_to_json(y).dump(2) << "\n";
            else {
                save_adhm(y, *coutfile);
                out << "written: " << *coutfile << "\n";
            }
        });

        auto* equiv = act->add_subcommand("equiv", "orbit equivalence under GL(d)");
        auto xfile = std::make_shared<std::string>();
        auto yfile = std::make_shared<std::string>();
        auto trials = std::make_shared<int>(64);
        equiv->add_option("x", *xfile, "first ADHM data file")->required();
        equiv->add_option("y", *yfile, "second ADHM data file")->required();
        equiv->add_option("--trials", *trials, "invertibility trial budget");
        equiv->callback([&out, &rc, xfile, yfile, trials]() {
            auto res = gl_equivalent(load_adhm(*xfile), load_adhm(*yfile), *trials);
            out << "check: act-equiv\n";
            switch (res.status) {
                case EquivStatus::kFound:
                    out << "equivalent: true\n";
                    out << "g: " << matrix_to_json(*res.g).at("g").dump() << "\n";
                    break;
                case EquivStatus::kNoSolution:
                    out << "equivalent: false (conclusive)\n";
                    rc = 1;
                    break;
                case EquivStatus::kInconclusive:
                    out << "equivalent: unknown (inconclusive)\n";
                    rc = 1;
                    break;
            }
        });

        auto* l42 = act->add_subcommand("verify-l42",
                                        "equivariance of the monad fiber under the scaling action");
        auto vfile = std::make_shared<std::string>();
        auto vz = std::make_shared<std::string>();
        auto vpoint = std::make_shared<std::string>();
        l42->add_option("file", *vfile, "ADHM data file")->required();
        l42->add_option("z", *vz, "nonzero rational scale")->required();
        l42->add_option("point", *vpoint, "homogeneous coordinates l,m,n")->required();
        l42->callback([&out, &rc, vfile, vz, vpoint]() {
            bool ok = verify_lemma42(load_adhm(*vfile), rat_parse(*vz), parse_triple(*vpoint));
            out << "check: verify-l42\n";
            out << "equivariance: " << (ok ? "ok" : "violated") << "\n";
            if (!ok) rc = 1;
        });

        auto* pi = act->add_subcommand("pi", "the map (x, [l:m]) -> [l x : m]");
        auto xstr = std::make_shared<std::string>();
        auto lmstr = std::make_shared<std::string>();
        pi->add_option("x", *xstr, "nonzero triple x1,x2,x3")->required();
        pi->add_option("lm", *lmstr, "line point l,m")->required();
        pi->callback([&out, xstr, lmstr]() {
            auto img = pi_map(parse_triple(*xstr), parse_pair(*lmstr));
            out << "check: act-pi\n";
            out << "image: " << proj_str({img[0], img[1], img[2], img[3]}) << "\n";
        });
    }

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const MalformedInput& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace kpm
