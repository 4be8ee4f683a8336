#pragma once

#include <optional>
#include <string>
#include <vector>

#include "casimir3/errors.hpp"
#include "casimir3/geometry.hpp"
#include "casimir3/quadrature.hpp"

namespace casimir3::app
{
//! Malformed or invalid configuration; the message carries file:line:column
class ConfigParse : public Error
{
  public:
    using Error::Error;
};

enum class SweepKind
{
    time,
    side_scaling,
    custom_grid,
};

enum class Quantity
{
    delta_E_C,
    delta_E3,
    delta_E3_spacelike_AB,
    delta_E_C_pair,
    static_energy,
    all,
};

enum class OutputFormat
{
    csv,
    json_lines,
};

char const* to_string(Quantity q);
std::vector<Quantity> expand(Quantity q);

//! One evaluation point: time ct and a uniform scale applied to positions
struct SweepPoint
{
    double ct;
    double scale;
};

struct OracleSettings
{
    std::optional<double> box_side;  //!< default 40 x largest separation
    int n_max{60};
    std::optional<double> soft_cutoff;  //!< default 0.2 / largest separation
    std::optional<double> k_bin_width;  //!< default 0.25 / largest separation
    double threshold{0.02};
};

struct RunConfig
{
    std::string source;
    AtomConfig atoms;
    bool has_sweep{false};
    SweepKind sweep_kind{SweepKind::time};
    std::vector<SweepPoint> points;
    Quantity quantity{Quantity::all};
    QuadratureSpec quadrature;
    std::string output_path;
    OutputFormat format{OutputFormat::csv};
    bool plot{false};
    OracleSettings oracle;
};

//! Parse configuration text; name is used in error messages
RunConfig parse_config(std::string const& text, std::string const& name);
RunConfig load_config(std::string const& path);

//! Atoms with every position multiplied by scale
AtomConfig scaled_atoms(AtomConfig const& atoms, double scale);

}  // namespace casimir3::app
