#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "app/runner.hpp"

int main(int argc, char** argv)
{
    using namespace casimir3::app;
    CLI::App app{"Time-dependent three-body Casimir-Polder energies"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string format;
    bool plot = false;
    int threads = 0;
    bool quiet = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("config", config_path, "YAML configuration file")->required();
        sub->add_option("--out", out_path, "Output file");
        sub->add_option("--threads", threads, "Worker threads (default: CASIMIR3_THREADS or all cores)")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--quiet", quiet, "Suppress progress messages");
    };

    auto* run = app.add_subcommand("run", "Evaluate a sweep and write a table");
    add_common(run);
    run->add_option("--format", format, "csv or json-lines")
        ->check(CLI::IsMember({"csv", "json-lines"}));
    run->add_flag("--plot", plot, "Also write an SVG plot next to the table");

    auto* oracle = app.add_subcommand("oracle", "Compare box mode sums with continuum integrals");
    add_common(oracle);

    CLI11_PARSE(app, argc, argv);

    CommandOptions options;
    if (!out_path.empty())
        options.out_path = out_path;
    if (!format.empty())
        options.format = format == "csv" ? OutputFormat::csv : OutputFormat::json_lines;
    options.plot = plot;
    if (threads > 0)
        options.threads = threads;
    options.quiet = quiet;

    try
    {
        if (run->parsed())
            return run_command(config_path, options, std::cerr);
        return oracle_command(config_path, options, std::cerr);
    }
    catch (std::exception const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
