#include "CLI11.hpp"

#include "illumcover/config.hpp"
#include "illumcover/fractional.hpp"
#include "illumcover/io.hpp"
#include "illumcover/polydisc.hpp"
#include "illumcover/svg.hpp"
#include "illumcover/zonoid.hpp"
#include "illumcover/zonotope.hpp"

#include <iostream>
#include <sstream>

namespace {

using namespace illumcover;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;      // verified negative (uncovered / not illuminated)
constexpr int kExitInconclusive = 2;  // float-margin or budget limits
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        atomic_write_file(out_path, content);
}

CubeCover load_cover_arg(const std::string& file) {
    if (file.empty() || file == "-") return read_cover(std::cin);
    return read_cover_file(file);
}

std::string light_source_report(int n, double r, int grid, long long budget) {
    LightSourceCount c = light_source_number(n, r, grid, budget);
    std::ostringstream os;
    os << "eps=" << format_double(c.eps) << " lower=" << c.lower.str();
    if (c.exact) os << " exact=" << c.exact->str();
    if (c.upper) os << " upper=" << c.upper->str();
    os << "\n";
    return os.str();
}

Rat parse_eps(const std::string& s) {
    Rat eps = parse_rational(s);
    if (!(eps > 0 && eps < 1)) throw DomainError("eps must lie in (0,1)");
    return eps;
}

struct Flags {
    RunConfig cfg;
    std::string config_path;
};

int run(int argc, char** argv) {
    CLI::App app{"covering numbers of the flat torus and illumination of polydiscs, "
                 "zonotopes and discrete zonoids"};
    app.require_subcommand(1);
    Flags flags;
    app.add_option("--config", flags.config_path, "key=value config file");
    auto* opt_threads = app.add_option("--threads", flags.cfg.threads, "worker cap");
    auto* opt_margin = app.add_option("--margin", flags.cfg.margin, "float-mode margin");
    auto* opt_q = app.add_option("--q", flags.cfg.q, "phase grid resolution");
    auto* opt_budget = app.add_option("--budget", flags.cfg.budget, "solver node budget");

    // ---- cover ----
    auto* cover = app.add_subcommand("cover", "torus cube covers");
    cover->require_subcommand(1);

    int cc_n = 2, cc_m = 2;
    std::string cc_out;
    auto* cover_construct = cover->add_subcommand("construct", "explicit side-1/m cover");
    cover_construct->add_option("--n", cc_n, "dimension")->required();
    cover_construct->add_option("--m", cc_m, "side denominator")->required();
    cover_construct->add_option("--out", cc_out, "output file (default stdout)");

    std::string cv_file, cv_out;
    auto* cover_verify = cover->add_subcommand("verify", "certify a cover file");
    cover_verify->add_option("--file", cv_file, "cover file ('-' = stdin)");
    cover_verify->add_option("--out", cv_out, "write cover + certificate here");

    int cs_n = 2, cs_grid = 14;
    std::string cs_eps = "1/2", cs_out;
    auto* cover_search = cover->add_subcommand("search", "minimal grid cover");
    cover_search->add_option("--n", cs_n, "dimension")->required();
    cover_search->add_option("--eps", cs_eps, "cube side (p/q)")->required();
    cover_search->add_option("--grid", cs_grid, "base grid resolution")->required();
    cover_search->add_option("--out", cs_out, "output file");

    int ct_dim = 2;
    std::string ct_eps_list, ct_out;
    auto* cover_table = cover->add_subcommand("table", "bounds/exact values as CSV");
    cover_table->add_option("--dim", ct_dim, "2 or 3")->required();
    cover_table->add_option("--eps-list", ct_eps_list, "comma-separated sides")->required();
    cover_table->add_option("--out", ct_out, "output file");

    std::string cp_file, cp_out;
    auto* cover_plot = cover->add_subcommand("plot", "svg figure of a 2d cover");
    cover_plot->add_option("--file", cp_file, "cover file")->required();
    cover_plot->add_option("--out", cp_out, "svg output path")->required();

    // ---- frac ----
    auto* frac = app.add_subcommand("frac", "fractional covering numbers");
    frac->require_subcommand(1);

    int fv_n = 2;
    std::string fv_eps = "1/2";
    auto* frac_value = frac->add_subcommand("value", "closed form (1/eps)^n");
    frac_value->add_option("--n", fv_n, "dimension")->required();
    frac_value->add_option("--eps", fv_eps, "cube side")->required();

    int fl_n = 1, fl_k = 4;
    std::string fl_eps = "1/2";
    auto* frac_lp = frac->add_subcommand("lp", "finite LP relaxation");
    frac_lp->add_option("--n", fl_n, "dimension")->required();
    frac_lp->add_option("--eps", fl_eps, "cube side")->required();
    frac_lp->add_option("--k", fl_k, "grid resolution")->required();

    // ---- polydisc ----
    auto* poly = app.add_subcommand("polydisc", "illumination of the polydisc");
    poly->require_subcommand(1);

    int pi_n = 1;
    auto* poly_ill = poly->add_subcommand("ill", "classical and fractional numbers");
    poly_ill->add_option("--n", pi_n, "dimension")->required();

    int pd_n = 2;
    std::string pd_out;
    auto* poly_dirs = poly->add_subcommand("directions", "minimal illuminating set");
    poly_dirs->add_option("--n", pd_n, "dimension")->required();
    poly_dirs->add_option("--out", pd_out, "output file");

    int pl_n = 2, pl_grid = 0;
    double pl_r = 2.0;
    auto* poly_light = poly->add_subcommand("lightsource", "counts for sources on r*D0^n");
    poly_light->add_option("--n", pl_n, "dimension")->required();
    poly_light->add_option("--r", pl_r, "source radius > 1")->required();
    poly_light->add_option("--grid", pl_grid, "search grid for an upper bound (0 = off)");

    std::string pc_dirs;
    int pc_grid = 24;
    auto* poly_check = poly->add_subcommand("check", "grid check of a direction set");
    poly_check->add_option("--directions", pc_dirs, "phase direction file")->required();
    poly_check->add_option("--grid", pc_grid, "phase grid resolution");

    // ---- zonotope ----
    auto* zono = app.add_subcommand("zonotope", "real and complex zonotopes");
    zono->require_subcommand(1);

    std::string zr_file, zr_out;
    auto* zono_reduce = zono->add_subcommand("reduce", "canonical n+1 generator form");
    zono_reduce->add_option("--file", zr_file, "generator file")->required();
    zono_reduce->add_option("--out", zr_out, "output file");

    std::string zi_file, zi_out;
    bool zi_fractional = false;
    auto* zono_ill = zono->add_subcommand("illuminate", "explicit illuminating set");
    zono_ill->add_option("--file", zi_file, "generator file")->required();
    zono_ill->add_flag("--fractional", zi_fractional, "half-circle arc measure");
    zono_ill->add_option("--out", zi_out, "output file");

    std::string zv_file, zv_dirs;
    auto* zono_verify = zono->add_subcommand("verify", "scan extreme phase candidates");
    zono_verify->add_option("--file", zv_file, "generator file")->required();
    zono_verify->add_option("--dirs", zv_dirs, "coefficient direction file")->required();
    zono_verify->add_option("--q", flags.cfg.q, "phase grid resolution");

    // ---- zonoid ----
    auto* zon = app.add_subcommand("zonoid", "discrete zonoids");
    zon->require_subcommand(1);

    std::string zs_file, zs_theta;
    auto* zon_support = zon->add_subcommand("support", "support function value");
    zon_support->add_option("--file", zs_file, "atoms file")->required();
    zon_support->add_option("--theta", zs_theta, "direction, comma-separated complex")->required();

    int zc_trials = 100, zc_q = 4096;
    auto* zon_identity = zon->add_subcommand("identity-check", "inner-product averaging identity");
    zon_identity->add_option("--trials", zc_trials, "random pairs");
    zon_identity->add_option("--q", zc_q, "quadrature nodes");

    std::string ze_file, ze_clusters;
    double ze_delta = 0.01;
    auto* zon_extract = zon->add_subcommand("extract", "zonotope summand approximation");
    zon_extract->add_option("--file", ze_file, "atoms file")->required();
    zon_extract->add_option("--clusters", ze_clusters, "cluster file")->required();
    zon_extract->add_option("--delta", ze_delta, "target Hausdorff bound")->required();

    app.parse(argc, argv);

    if (!flags.config_path.empty()) {
        RunConfig from_file = load_config_file(flags.config_path);
        // explicit flags win over the file
        if (!*opt_threads) flags.cfg.threads = from_file.threads;
        if (!*opt_margin) flags.cfg.margin = from_file.margin;
        if (!*opt_q && !zono_verify->count("--q")) flags.cfg.q = from_file.q;
        if (!*opt_budget) flags.cfg.budget = from_file.budget;
        flags.cfg.t_depth = from_file.t_depth;
    }
    flags.cfg.validate();
    const RunConfig& cfg = flags.cfg;

    if (*cover_construct) {
        CubeCover c = construct_cover(cc_n, cc_m);
        emit(cc_out, write_cover(c));
        return kExitOk;
    }
    if (*cover_verify) {
        CubeCover c = load_cover_arg(cv_file);
        c.margin = c.mode == Mode::Float ? c.margin : cfg.margin;
        CoverCertificate cert = verify_cover(c, cfg.threads);
        c.certificate = cert;
        if (!cv_out.empty()) emit(cv_out, write_cover(c));
        if (cert.verdict == Verdict::Covered) {
            std::cout << "covered grid=" << cert.candidate_grid_size << "\n";
            return kExitOk;
        }
        std::cout << "uncovered ";
        if (cert.witness)
            std::cout << to_string(*cert.witness);
        else {
            for (std::size_t j = 0; j < cert.witness_f.size(); ++j)
                std::cout << (j ? "," : "") << format_double(cert.witness_f[j]);
        }
        std::cout << "\n";
        return kExitNegative;
    }
    if (*cover_search) {
        SearchResult res = search_minimal_cover(cs_n, parse_eps(cs_eps), cs_grid, cfg.budget);
        res.cover.certificate = verify_cover(res.cover, cfg.threads);
        std::ostringstream os;
        os << write_cover(res.cover) << "# size=" << res.cover.size() << " proven_minimal="
           << (res.proven_minimal ? 1 : 0) << " nodes=" << res.nodes << "\n";
        emit(cs_out, os.str());
        return kExitOk;
    }
    if (*cover_table) {
        if (ct_dim != 2 && ct_dim != 3) throw DomainError("cover table: dim must be 2 or 3");
        std::ostringstream os;
        os << "eps,lower_bound,exact,source\n";
        std::string item;
        std::istringstream is(ct_eps_list);
        while (std::getline(is, item, ',')) {
            Rat eps = parse_eps(item);
            Int lb = lower_bound_recurrence(ct_dim, eps);
            os << item << "," << lb.str() << ",";
            if (ct_dim == 2) {
                os << exact_value_2d(eps).str() << ",formula\n";
            } else if (auto v = exact_value_3d(eps)) {
                os << v->str() << ",table\n";
            } else {
                os << ",none\n";
            }
        }
        emit(ct_out, os.str());
        return kExitOk;
    }
    if (*cover_plot) {
        CubeCover c = read_cover_file(cp_file);
        emit(cp_out, emit_svg(c));
        return kExitOk;
    }

    if (*frac_value) {
        Rat eps = parse_eps(fv_eps);
        std::cout << "n,eps,closed_form,lp_value,gap\n"
                  << fv_n << "," << fv_eps << ","
                  << rational_string(fractional_covering_number(fv_n, eps)) << ",,\n";
        return kExitOk;
    }
    if (*frac_lp) {
        Rat eps = parse_eps(fl_eps);
        LpReport rep = lp_fractional_cover(fl_n, eps, fl_k);
        std::cout << "n,eps,closed_form,lp_value,gap\n"
                  << fl_n << "," << fl_eps << ","
                  << rational_string(fractional_covering_number(fl_n, eps)) << ","
                  << rational_string(rep.primal) << "," << rational_string(rep.gap) << "\n";
        return kExitOk;
    }

    if (*poly_ill) {
        std::cout << "classical=" << illumination_number_polydisc(pi_n).str()
                  << " fractional=" << fractional_number_polydisc(pi_n).str() << "\n";
        return kExitOk;
    }
    if (*poly_dirs) {
        auto dirs = direction_set_from_cover(construct_cover(pd_n, 2));
        emit(pd_out, write_directions(dirs));
        return kExitOk;
    }
    if (*poly_light) {
        std::cout << light_source_report(pl_n, pl_r, pl_grid, cfg.budget);
        return kExitOk;
    }
    if (*poly_check) {
        auto dirs = read_directions_file(pc_dirs);
        if (dirs.empty()) throw DomainError("polydisc check: empty direction set");
        const int n = dirs[0].dim();
        std::vector<TorusCube> cubes;
        for (const auto& d : dirs) cubes.push_back(illuminated_cube(d));
        long long total = 1;
        for (int j = 0; j < n; ++j) total *= pc_grid;
        for (long long c = 0; c < total; ++c) {
            std::vector<UnitRat> coords(n);
            long long rem = c;
            for (int j = n - 1; j >= 0; --j) {
                coords[j] = UnitRat::wrap(Rat(rem % pc_grid, pc_grid));
                rem /= pc_grid;
            }
            TorusPoint x(std::move(coords));
            bool hit = false;
            for (const auto& cube : cubes)
                if (cube.contains(x)) {
                    hit = true;
                    break;
                }
            if (!hit) {
                std::cout << "not illuminated: " << to_string(x) << "\n";
                return kExitNegative;
            }
        }
        std::cout << "illuminated grid=" << total << "\n";
        return kExitOk;
    }

    if (*zono_reduce) {
        CanonicalZonotope K = reduce_to_canonical(read_generators_file(zr_file));
        emit(zr_out, write_canonical(K));
        return kExitOk;
    }
    if (*zono_ill) {
        CanonicalZonotope K = reduce_to_canonical(read_generators_file(zi_file));
        std::ostringstream os;
        if (zi_fractional) {
            ArcMeasure mu = fractional_measure(K);
            os << write_coefficient_directions(mu.arcs);
            os << "# arcs half-circle, unit mass each, total_mass=" << mu.total_mass << "\n";
        } else {
            DirectionSet ds = K.field == Field::Complex ? complex_illuminating_set(K)
                                                        : real_illuminating_set(K);
            os << write_coefficient_directions(ds);
        }
        emit(zi_out, os.str());
        return kExitOk;
    }
    if (*zono_verify) {
        CanonicalZonotope K = reduce_to_canonical(read_generators_file(zv_file));
        DirectionSet ds = read_coefficient_directions_file(zv_dirs);
        IlluminationReport rep =
            verify_illumination(K, ds, cfg.q, cfg.threads, cfg.t_depth, cfg.margin);
        if (rep.pass) {
            std::cout << "pass candidates=" << rep.candidates << "\n";
            return kExitOk;
        }
        std::cout << "fail candidate=";
        for (std::size_t j = 0; j < rep.first_unilluminated->size(); ++j)
            std::cout << (j ? "," : "") << format_complex((*rep.first_unilluminated)[j]);
        std::cout << "\n(negative at tested steps; not a proof of non-illumination)\n";
        return kExitNegative;
    }

    if (*zon_support) {
        DiscreteZonoid z = read_zonoid_file(zs_file);
        CxVec theta;
        std::istringstream is(zs_theta);
        std::string item;
        while (std::getline(is, item, ',')) theta.push_back(parse_complex(item));
        std::cout << format_double(support_function(z, theta)) << "\n";
        return kExitOk;
    }
    if (*zon_identity) {
        SplitMix64 rng(0x1dULL);
        double worst = 0;
        for (int t = 0; t < zc_trials; ++t) {
            CxVec x(3), y(3);
            for (int i = 0; i < 3; ++i) {
                x[i] = Cx(rng.uniform() * 2 - 1, rng.uniform() * 2 - 1);
                y[i] = Cx(rng.uniform() * 2 - 1, rng.uniform() * 2 - 1);
            }
            worst = std::max(worst, complex_real_identity_check(x, y, zc_q).error);
        }
        std::cout << "trials=" << zc_trials << " q=" << zc_q << " max_error="
                  << format_double(worst) << "\n";
        return worst < 1e-6 ? kExitOk : kExitNegative;
    }
    if (*zon_extract) {
        DiscreteZonoid z = read_zonoid_file(ze_file);
        auto clusters = read_clusters_file(ze_clusters);
        SummandResult res = summand_extraction(z, clusters, ze_delta);
        std::cout << "m=" << format_double(res.m)
                  << " hausdorff_estimate=" << format_double(res.hausdorff_estimate)
                  << " within_delta=" << (res.within_delta ? 1 : 0)
                  << " summand_ok=" << (res.summand_ok ? 1 : 0) << "\n";
        return res.within_delta && res.summand_ok ? kExitOk : kExitNegative;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = CLI::App().exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const FloatModeInconclusive& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const BudgetExceeded& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const SolverFailure& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const Infeasible& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitNegative;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
