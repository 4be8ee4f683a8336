#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "app/config.hpp"

namespace casimir3::app
{
//! One output record: a quantity evaluated at one sweep point
struct Row
{
    double ct;
    double alpha;
    double beta;
    double gamma;
    std::string region_label;
    std::string quantity;
    std::optional<double> value;
    std::optional<double> error_estimate;
    std::optional<bool> converged;
    std::string warnings;
};

struct CommandOptions
{
    std::optional<std::string> out_path;
    std::optional<OutputFormat> format;
    bool plot{false};
    std::optional<int> threads;
    bool quiet{false};
};

//! Evaluate every sweep point with a worker pool; rows come back in sweep order
std::vector<Row> evaluate_sweep(RunConfig const& config, int threads);

//! Shortest decimal string that reads back to the same double
std::string format_number(double x);

void write_csv(std::ostream& os, std::vector<Row> const& rows, std::string const& header_comment);
void write_json_lines(std::ostream& os, std::vector<Row> const& rows);

//! Thread count from the flag, else CASIMIR3_THREADS, else the hardware
int resolve_threads(std::optional<int> flag);

//! `run` subcommand; returns the process exit status
int run_command(std::string const& config_path, CommandOptions const& options, std::ostream& log);
//! `oracle` subcommand; returns the process exit status
int oracle_command(std::string const& config_path,
                   CommandOptions const& options,
                   std::ostream& log);

}  // namespace casimir3::app
