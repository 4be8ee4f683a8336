#include "app/runner.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "app/plot.hpp"
#include "casimir3/modesum.hpp"
#include "casimir3/potentials.hpp"

namespace casimir3::app
{
namespace
{
std::string error_token(Error const& e)
{
    if (dynamic_cast<PoleOnAxis const*>(&e))
        return "error:pole_on_axis";
    if (dynamic_cast<ExtrapolationUnstable const*>(&e))
        return "error:extrapolation_unstable";
    if (dynamic_cast<ImaginaryResidue const*>(&e))
        return "error:imaginary_residue";
    if (dynamic_cast<DegenerateGeometry const*>(&e))
        return "error:degenerate_geometry";
    return "error:invalid_argument";
}

std::string join(std::vector<std::string> const& items)
{
    std::string out;
    for (auto const& s : items)
    {
        if (!out.empty())
            out += ';';
        out += s;
    }
    return out;
}

Row evaluate_point(RunConfig const& cfg, SweepPoint const& p, Quantity q)
{
    AtomConfig atoms = scaled_atoms(cfg.atoms, p.scale);
    Row row{p.ct, 0, 0, 0, {}, to_string(q), {}, {}, {}, {}};
    try
    {
        TriangleGeometry g = triangle_from_positions(atoms);
        row.alpha = g.alpha;
        row.beta = g.beta;
        row.gamma = g.gamma;
        row.region_label = classify_region(g, p.ct).label();
    }
    catch (Error const& e)
    {
        row.converged = false;
        row.warnings = error_token(e);
        return row;
    }

    PotentialResult r;
    try
    {
        switch (q)
        {
            case Quantity::delta_E_C:
                r = delta_E_C(atoms, p.ct, cfg.quadrature);
                break;
            case Quantity::delta_E3:
                r = delta_E3_symmetrized(atoms, p.ct, cfg.quadrature);
                break;
            case Quantity::delta_E3_spacelike_AB:
                r = delta_E3_spacelike_AB(atoms, p.ct, cfg.quadrature);
                break;
            case Quantity::delta_E_C_pair:
                r = delta_E_C_pair(atoms, p.ct, cfg.quadrature);
                break;
            case Quantity::static_energy:
            case Quantity::all:
                r = static_three_body(atoms, cfg.quadrature);
                break;
        }
    }
    catch (RegionMismatch const&)
    {
        row.warnings = "region_mismatch";
        return row;
    }
    catch (Error const& e)
    {
        row.converged = false;
        row.warnings = error_token(e);
        return row;
    }
    row.value = r.value;
    row.error_estimate = r.error_estimate;
    row.converged = r.converged;
    row.warnings = join(r.warnings);
    return row;
}

std::string utc_timestamp()
{
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

std::string with_extension(std::string const& path, char const* ext)
{
    return std::filesystem::path(path).replace_extension(ext).string();
}

std::vector<PlotMarker> threshold_markers(RunConfig const& cfg)
{
    TriangleGeometry g = triangle_from_positions(cfg.atoms);
    std::vector<PlotMarker> raw = {{g.alpha, "ct=alpha"},
                                   {g.beta, "ct=beta"},
                                   {g.gamma, "ct=gamma"},
                                   {g.alpha - g.gamma, "alpha=gamma+ct"},
                                   {g.beta - g.gamma, "beta=gamma+ct"}};
    std::vector<PlotMarker> out;
    for (auto const& m : raw)
    {
        if (!(m.x > 0))
            continue;
        if (cfg.sweep_kind == SweepKind::side_scaling)
        {
            // Scale at which the threshold distance reaches the fixed ct
            double ct = cfg.points.front().ct;
            if (ct > 0)
                out.push_back({ct / m.x, m.label});
        }
        else
        {
            out.push_back(m);
        }
    }
    return out;
}
}  // namespace

std::vector<Row> evaluate_sweep(RunConfig const& config, int threads)
{
    auto quantities = expand(config.quantity);
    std::size_t const nq = quantities.size();
    std::vector<Row> rows(config.points.size() * nq);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < config.points.size(); i = next++)
        {
            for (std::size_t j = 0; j < nq; ++j)
                rows[i * nq + j] = evaluate_point(config, config.points[i], quantities[j]);
        }
    };
    int workers = std::max(1, std::min<int>(threads, config.points.size()));
    if (workers == 1)
    {
        work();
    }
    else
    {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }
    return rows;
}

std::string format_number(double x)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, end);
}

void write_csv(std::ostream& os, std::vector<Row> const& rows, std::string const& header_comment)
{
    os << "# " << header_comment << '\n';
    os << "ct,alpha,beta,gamma,region_label,quantity,value,error_estimate,converged,warnings\n";
    for (auto const& r : rows)
    {
        os << format_number(r.ct) << ',' << format_number(r.alpha) << ','
           << format_number(r.beta) << ',' << format_number(r.gamma) << ','
           << r.region_label << ',' << r.quantity << ','
           << (r.value ? format_number(*r.value) : "") << ','
           << (r.error_estimate ? format_number(*r.error_estimate) : "") << ','
           << (r.converged ? (*r.converged ? "true" : "false") : "") << ',' << r.warnings
           << '\n';
    }
}

void write_json_lines(std::ostream& os, std::vector<Row> const& rows)
{
    for (auto const& r : rows)
    {
        nlohmann::ordered_json j;
        j["ct"] = r.ct;
        j["alpha"] = r.alpha;
        j["beta"] = r.beta;
        j["gamma"] = r.gamma;
        j["region_label"] = r.region_label;
        j["quantity"] = r.quantity;
        j["value"] = r.value ? nlohmann::ordered_json(*r.value) : nullptr;
        j["error_estimate"]
            = r.error_estimate ? nlohmann::ordered_json(*r.error_estimate) : nullptr;
        j["converged"] = r.converged ? nlohmann::ordered_json(*r.converged) : nullptr;
        j["warnings"] = r.warnings;
        os << j.dump() << '\n';
    }
}

int resolve_threads(std::optional<int> flag)
{
    if (flag && *flag > 0)
        return *flag;
    if (char const* env = std::getenv("CASIMIR3_THREADS"))
    {
        int n = std::atoi(env);
        if (n > 0)
            return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int run_command(std::string const& config_path, CommandOptions const& options, std::ostream& log)
{
    RunConfig cfg;
    try
    {
        cfg = load_config(config_path);
        if (!cfg.has_sweep)
            throw ConfigParse(config_path + ": missing required key 'sweep' in 'top level'");
    }
    catch (ConfigParse const& e)
    {
        log << "config error: " << e.what() << '\n';
        return 1;
    }
    OutputFormat format = options.format.value_or(cfg.format);
    std::string out = options.out_path.value_or(
        cfg.output_path.empty()
            ? with_extension(config_path, format == OutputFormat::csv ? ".csv" : ".jsonl")
            : cfg.output_path);

    auto rows = evaluate_sweep(cfg, resolve_threads(options.threads));

    std::ofstream os(out, std::ios::binary);
    if (!os)
    {
        log << "cannot write " << out << '\n';
        return 1;
    }
    if (format == OutputFormat::csv)
        write_csv(os, rows, "casimir3 run " + utc_timestamp() + " config=" + config_path);
    else
        write_json_lines(os, rows);

    if (cfg.plot || options.plot)
    {
        std::vector<double> x;
        for (auto const& p : cfg.points)
        {
            for (std::size_t j = 0; j < expand(cfg.quantity).size(); ++j)
                x.push_back(cfg.sweep_kind == SweepKind::side_scaling ? p.scale : p.ct);
        }
        std::string svg_path = with_extension(out, ".svg");
        std::ofstream svg(svg_path, std::ios::binary);
        svg << render_svg(rows,
                          x,
                          cfg.sweep_kind == SweepKind::side_scaling ? "scale" : "ct / L0",
                          threshold_markers(cfg));
    }

    long failed = 0;
    for (auto const& r : rows)
    {
        if (r.converged && !*r.converged)
            ++failed;
    }
    if (!options.quiet)
    {
        log << "wrote " << rows.size() << " rows to " << out;
        if (failed)
            log << " (" << failed << " not converged)";
        log << '\n';
    }
    return failed ? 2 : 0;
}

int oracle_command(std::string const& config_path,
                   CommandOptions const& options,
                   std::ostream& log)
{
    RunConfig cfg;
    try
    {
        cfg = load_config(config_path);
    }
    catch (ConfigParse const& e)
    {
        log << "config error: " << e.what() << '\n';
        return 1;
    }
    TriangleGeometry g = triangle_from_positions(cfg.atoms);
    double d = g.max_distance();
    BoxSpec box;
    box.L = cfg.oracle.box_side.value_or(40 * d);
    box.n_max = cfg.oracle.n_max;
    box.soft_cutoff = cfg.oracle.soft_cutoff.value_or(0.2 / d);
    double width = cfg.oracle.k_bin_width.value_or(0.25 / d);
    int threads = resolve_threads(options.threads);
    std::string out = options.out_path.value_or(
        with_extension(config_path, "") + "_oracle.csv");

    std::ostringstream body;
    double worst = 0;
    try
    {
        struct Named
        {
            char const* name;
            Vec3 r;
        };
        for (auto const& [name, r] : {Named{"free_correlation_AB", g.r_AB()},
                                      Named{"free_correlation_BC", g.r_BC()},
                                      Named{"free_correlation_AC", g.r_AC()}})
        {
            Mat3 discrete;
            try
            {
                discrete = box_free_correlation(box, r, Vec3::Zero(), threads);
            }
            catch (CoincidentPoints const&)
            {
                // Separation below the box resolution: the check cannot pass
                worst = HUGE_VAL;
                body << name << ',' << format_number(box.k_max()) << ',' << box.mode_count()
                     << ",,,inf\n";
                if (!options.quiet)
                    log << name << ": separation below the box resolution L/(2 n_max)\n";
                continue;
            }
            auto cont = continuum_free_correlation(r, *box.soft_cutoff, box.k_max());
            double dev = (discrete - cont.value).cwiseAbs().maxCoeff()
                         / cont.value.cwiseAbs().maxCoeff();
            worst = std::max(worst, dev);
            body << name << ',' << format_number(box.k_max()) << ',' << box.mode_count() << ','
                 << format_number(discrete.norm()) << ',' << format_number(cont.value.norm())
                 << ',' << format_number(dev) << '\n';
        }
        BoxSpec sharp = box;
        sharp.soft_cutoff.reset();
        auto report = box_reduced_integrand_check(sharp, g, width, threads);
        for (auto const& s : report.shells)
        {
            worst = std::max(worst, s.deviation);
            body << "shell," << format_number(s.k_center) << ',' << s.modes << ','
                 << format_number(s.discrete) << ',' << format_number(s.analytic) << ','
                 << format_number(s.deviation) << '\n';
        }
        body << "shell_mean," << format_number(box.k_max()) << ",," << ",,"
             << format_number(report.mean_deviation) << '\n';
    }
    catch (Error const& e)
    {
        log << "oracle error: " << e.what() << '\n';
        return 1;
    }

    std::ofstream os(out, std::ios::binary);
    if (!os)
    {
        log << "cannot write " << out << '\n';
        return 1;
    }
    os << "# casimir3 oracle " << utc_timestamp() << " config=" << config_path << '\n';
    os << "check,k,modes,discrete,analytic,deviation\n" << body.str();
    bool pass = worst < cfg.oracle.threshold;
    if (!options.quiet)
    {
        log << "max deviation " << format_number(worst) << " (threshold "
            << format_number(cfg.oracle.threshold) << "): " << (pass ? "pass" : "FAIL")
            << "; table in " << out << '\n';
    }
    return pass ? 0 : 2;
}

}  // namespace casimir3::app
