#include "app/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace casimir3::app
{
namespace
{
class Reader
{
  public:
    explicit Reader(std::string name) : name_(std::move(name)) {}

    [[noreturn]] void fail(YAML::Node const& node, std::string const& what) const
    {
        auto mark = node.Mark();
        std::ostringstream os;
        os << name_;
        if (!mark.is_null())
            os << ':' << mark.line + 1 << ':' << mark.column + 1;
        os << ": " << what;
        throw ConfigParse(os.str());
    }

    void require_map(YAML::Node const& node, std::string const& where) const
    {
        if (!node.IsMap())
            fail(node, "'" + where + "' must be a mapping");
    }

    void check_keys(YAML::Node const& node,
                    std::string const& where,
                    std::set<std::string> const& allowed) const
    {
        require_map(node, where);
        for (auto const& kv : node)
        {
            auto key = kv.first.as<std::string>();
            if (!allowed.count(key))
                fail(kv.first, "unknown key '" + key + "' in '" + where + "'");
        }
    }

    YAML::Node required(YAML::Node const& parent,
                        std::string const& key,
                        std::string const& where) const
    {
        YAML::Node n = parent[key];
        if (!n)
            fail(parent, "missing required key '" + key + "' in '" + where + "'");
        return n;
    }

    double number(YAML::Node const& node, std::string const& what) const
    {
        try
        {
            if (!node.IsScalar())
                fail(node, what + " must be a number");
            return node.as<double>();
        }
        catch (YAML::Exception const&)
        {
            fail(node, what + " must be a number");
        }
    }

    int integer(YAML::Node const& node, std::string const& what) const
    {
        try
        {
            if (!node.IsScalar())
                fail(node, what + " must be an integer");
            return node.as<int>();
        }
        catch (YAML::Exception const&)
        {
            fail(node, what + " must be an integer");
        }
    }

    bool boolean(YAML::Node const& node, std::string const& what) const
    {
        try
        {
            if (!node.IsScalar())
                fail(node, what + " must be true or false");
            return node.as<bool>();
        }
        catch (YAML::Exception const&)
        {
            fail(node, what + " must be true or false");
        }
    }

    std::string text(YAML::Node const& node, std::string const& what) const
    {
        if (!node.IsScalar())
            fail(node, what + " must be a string");
        return node.as<std::string>();
    }

    std::vector<double> numbers(YAML::Node const& node, std::string const& what) const
    {
        if (!node.IsSequence())
            fail(node, what + " must be a list");
        std::vector<double> out;
        for (auto const& item : node)
            out.push_back(number(item, "entries of " + what));
        return out;
    }

    Vec3 position(YAML::Node const& node, std::string const& what) const
    {
        auto v = numbers(node, what);
        if (v.size() != 3)
            fail(node, what + " must have three coordinates");
        return {v[0], v[1], v[2]};
    }

    PolarizabilityModel model(YAML::Node const& node, std::string const& where) const
    {
        require_map(node, where);
        auto type = text(required(node, "type", where), where + ".type");
        try
        {
            if (type == "static")
            {
                check_keys(node, where, {"type", "alpha0"});
                return PolarizabilityModel::make_static(
                    number(required(node, "alpha0", where), "alpha0"));
            }
            if (type == "single_resonance")
            {
                check_keys(node, where, {"type", "alpha0", "k0", "gamma_damp"});
                double gamma = node["gamma_damp"] ? number(node["gamma_damp"], "gamma_damp")
                                                  : 0.0;
                return PolarizabilityModel::make_single_resonance(
                    number(required(node, "alpha0", where), "alpha0"),
                    number(required(node, "k0", where), "k0"),
                    gamma);
            }
        }
        catch (InvalidArgument const& e)
        {
            fail(node, where + ": " + e.what());
        }
        fail(node["type"], "unknown model type '" + type + "'");
    }

  private:
    std::string name_;
};

Quantity parse_quantity(Reader const& r, YAML::Node const& node)
{
    auto name = r.text(node, "quantity");
    for (Quantity q : {Quantity::delta_E_C,
                       Quantity::delta_E3,
                       Quantity::delta_E3_spacelike_AB,
                       Quantity::delta_E_C_pair,
                       Quantity::static_energy,
                       Quantity::all})
    {
        if (name == to_string(q))
            return q;
    }
    r.fail(node, "unknown quantity '" + name + "'");
}

void parse_sweep(Reader const& r, YAML::Node const& node, RunConfig& cfg)
{
    r.check_keys(node, "sweep", {"kind", "values", "ct"});
    auto kind = r.text(r.required(node, "kind", "sweep"), "sweep.kind");
    YAML::Node values = r.required(node, "values", "sweep");
    if (!values.IsSequence() || values.size() == 0)
        r.fail(values, "sweep.values must be a non-empty list");

    if (kind == "time" || kind == "side_scaling")
    {
        bool time = kind == "time";
        cfg.sweep_kind = time ? SweepKind::time : SweepKind::side_scaling;
        double fixed_ct = 0;
        if (time && node["ct"])
            r.fail(node["ct"], "sweep.ct is only used by side_scaling sweeps");
        if (!time)
        {
            fixed_ct = r.number(r.required(node, "ct", "sweep"), "sweep.ct");
            if (!(fixed_ct >= 0))
                r.fail(node["ct"], "sweep.ct must be non-negative");
        }
        std::size_t i = 0;
        for (auto const& item : values)
        {
            double v = r.number(item, "sweep.values");
            if (!(v >= 0) || !std::isfinite(v))
                r.fail(item, "sweep values must be finite and non-negative");
            if (!time && v == 0)
                r.fail(item, "scale factors must be positive");
            if (i > 0)
            {
                double prev = time ? cfg.points.back().ct : cfg.points.back().scale;
                if (!(v > prev))
                    r.fail(item, "sweep values must be strictly increasing");
            }
            cfg.points.push_back(time ? SweepPoint{v, 1.0} : SweepPoint{fixed_ct, v});
            ++i;
        }
    }
    else if (kind == "custom_grid")
    {
        cfg.sweep_kind = SweepKind::custom_grid;
        if (node["ct"])
            r.fail(node["ct"], "sweep.ct is only used by side_scaling sweeps");
        for (auto const& item : values)
        {
            auto pair = r.numbers(item, "custom_grid entries");
            if (pair.size() != 2)
                r.fail(item, "custom_grid entries must be [ct, scale] pairs");
            if (!(pair[0] >= 0) || !(pair[1] > 0) || !std::isfinite(pair[0])
                || !std::isfinite(pair[1]))
                r.fail(item, "custom_grid needs ct >= 0 and scale > 0");
            if (!cfg.points.empty())
            {
                auto const& prev = cfg.points.back();
                bool increasing = pair[0] > prev.ct
                                  || (pair[0] == prev.ct && pair[1] > prev.scale);
                if (!increasing)
                    r.fail(item, "custom_grid points must be strictly increasing in (ct, scale)");
            }
            cfg.points.push_back({pair[0], pair[1]});
        }
    }
    else
    {
        r.fail(node["kind"], "unknown sweep kind '" + kind + "'");
    }
    cfg.has_sweep = true;
}

void parse_quadrature(Reader const& r, YAML::Node const& node, QuadratureSpec& q)
{
    r.check_keys(node,
                 "quadrature",
                 {"rel_tol",
                  "abs_tol",
                  "max_subdivisions",
                  "eta_schedule",
                  "extrapolation_order",
                  "extrapolation_rel_tol"});
    if (node["rel_tol"])
        q.rel_tol = r.number(node["rel_tol"], "rel_tol");
    if (node["abs_tol"])
        q.abs_tol = r.number(node["abs_tol"], "abs_tol");
    if (node["max_subdivisions"])
        q.max_subdivisions = r.integer(node["max_subdivisions"], "max_subdivisions");
    if (node["eta_schedule"])
        q.eta_schedule = r.numbers(node["eta_schedule"], "eta_schedule");
    if (node["extrapolation_order"])
        q.extrapolation_order = r.integer(node["extrapolation_order"], "extrapolation_order");
    if (node["extrapolation_rel_tol"])
        q.extrapolation_rel_tol
            = r.number(node["extrapolation_rel_tol"], "extrapolation_rel_tol");
    try
    {
        q.validate();
    }
    catch (InvalidArgument const& e)
    {
        r.fail(node, std::string("quadrature: ") + e.what());
    }
}

void parse_output(Reader const& r, YAML::Node const& node, RunConfig& cfg)
{
    r.check_keys(node, "output", {"path", "format", "plot"});
    if (node["path"])
        cfg.output_path = r.text(node["path"], "output.path");
    if (node["format"])
    {
        auto f = r.text(node["format"], "output.format");
        if (f == "csv")
            cfg.format = OutputFormat::csv;
        else if (f == "json-lines")
            cfg.format = OutputFormat::json_lines;
        else
            r.fail(node["format"], "output.format must be csv or json-lines");
    }
    if (node["plot"])
        cfg.plot = r.boolean(node["plot"], "output.plot");
}

void parse_oracle(Reader const& r, YAML::Node const& node, OracleSettings& o)
{
    r.check_keys(node, "oracle", {"box_side", "n_max", "soft_cutoff", "k_bin_width", "threshold"});
    auto positive = [&](char const* key) -> std::optional<double> {
        if (!node[key])
            return std::nullopt;
        double v = r.number(node[key], key);
        if (!(v > 0))
            r.fail(node[key], std::string("oracle.") + key + " must be positive");
        return v;
    };
    o.box_side = positive("box_side");
    o.k_bin_width = positive("k_bin_width");
    if (auto t = positive("threshold"))
        o.threshold = *t;
    if (node["soft_cutoff"])
    {
        double v = r.number(node["soft_cutoff"], "soft_cutoff");
        if (!(v >= 0))
            r.fail(node["soft_cutoff"], "oracle.soft_cutoff must be non-negative");
        o.soft_cutoff = v;
    }
    if (node["n_max"])
    {
        o.n_max = r.integer(node["n_max"], "n_max");
        if (o.n_max < 1)
            r.fail(node["n_max"], "oracle.n_max must be at least 1");
    }
}
}  // namespace

char const* to_string(Quantity q)
{
    switch (q)
    {
        case Quantity::delta_E_C:
            return "delta_E_C";
        case Quantity::delta_E3:
            return "delta_E3";
        case Quantity::delta_E3_spacelike_AB:
            return "delta_E3_spacelike_AB";
        case Quantity::delta_E_C_pair:
            return "delta_E_C_pair";
        case Quantity::static_energy:
            return "static";
        case Quantity::all:
            return "all";
    }
    return "?";
}

std::vector<Quantity> expand(Quantity q)
{
    if (q != Quantity::all)
        return {q};
    return {Quantity::delta_E_C,
            Quantity::delta_E3,
            Quantity::delta_E3_spacelike_AB,
            Quantity::delta_E_C_pair,
            Quantity::static_energy};
}

RunConfig parse_config(std::string const& text, std::string const& name)
{
    Reader r(name);
    YAML::Node root;
    try
    {
        root = YAML::Load(text);
    }
    catch (YAML::ParserException const& e)
    {
        std::ostringstream os;
        os << name << ':' << e.mark.line + 1 << ':' << e.mark.column + 1 << ": " << e.msg;
        throw ConfigParse(os.str());
    }
    if (!root.IsMap())
        r.fail(root, "configuration must be a mapping with an 'atoms' section");
    r.check_keys(root, "top level", {"atoms", "sweep", "quantity", "quadrature", "output", "oracle"});

    RunConfig cfg;
    cfg.source = name;
    YAML::Node atoms = r.required(root, "atoms", "top level");
    r.check_keys(atoms, "atoms", {"A", "B", "C"});
    struct Slot
    {
        char const* key;
        Vec3* pos;
        PolarizabilityModel* model;
    };
    for (Slot s : {Slot{"A", &cfg.atoms.position_A, &cfg.atoms.model_A},
                   Slot{"B", &cfg.atoms.position_B, &cfg.atoms.model_B},
                   Slot{"C", &cfg.atoms.position_C, &cfg.atoms.model_C}})
    {
        std::string where = std::string("atoms.") + s.key;
        YAML::Node atom = r.required(atoms, s.key, "atoms");
        r.check_keys(atom, where, {"position", "model"});
        *s.pos = r.position(r.required(atom, "position", where), where + ".position");
        *s.model = r.model(r.required(atom, "model", where), where + ".model");
    }
    try
    {
        cfg.atoms.validate();
    }
    catch (DegenerateGeometry const& e)
    {
        r.fail(atoms, e.what());
    }

    if (root["sweep"])
        parse_sweep(r, root["sweep"], cfg);
    if (root["quantity"])
        cfg.quantity = parse_quantity(r, root["quantity"]);
    if (root["quadrature"])
        parse_quadrature(r, root["quadrature"], cfg.quadrature);
    if (root["output"])
        parse_output(r, root["output"], cfg);
    if (root["oracle"])
        parse_oracle(r, root["oracle"], cfg.oracle);
    return cfg;
}

RunConfig load_config(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigParse(path + ": cannot open configuration file");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_config(os.str(), path);
}

AtomConfig scaled_atoms(AtomConfig const& atoms, double scale)
{
    AtomConfig out = atoms;
    out.position_A *= scale;
    out.position_B *= scale;
    out.position_C *= scale;
    return out;
}

}  // namespace casimir3::app
