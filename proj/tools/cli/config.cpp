#include "config.hpp"
#include "figures.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <set>

namespace casimir::cli {

const char* to_string(Command c)
{
    switch (c) {
    case Command::Eta: return "eta";
    case Command::Sweep: return "sweep";
    case Command::Epsilon: return "epsilon";
    case Command::Reflect: return "reflect";
    case Command::Asym: return "asym";
    case Command::Figure: return "figure";
    }
    return "?";
}

std::optional<Command> parse_command(const std::string& s)
{
    for (auto c : {Command::Eta, Command::Sweep, Command::Epsilon, Command::Reflect, Command::Asym, Command::Figure})
        if (s == to_string(c)) return c;
    return std::nullopt;
}

std::optional<OutputFormat> parse_format(const std::string& s)
{
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    return std::nullopt;
}

std::string format_error(const ConfigError& e)
{
    std::string s;
    if (e.line > 0) s += "line " + std::to_string(e.line) + ": ";
    if (!e.field.empty()) s += e.field + ": ";
    return s + e.message;
}

std::vector<double> log_space(double lo, double hi, int per_decade)
{
    if (!(lo > 0.0) || !(hi >= lo) || per_decade < 1) throw Error("log range needs 0 < min <= max, points_per_decade >= 1");
    if (hi == lo) return {lo};
    const double decades = std::log10(hi / lo);
    const int n = std::max(1, static_cast<int>(std::ceil(decades * per_decade - 1e-9)));
    std::vector<double> out(n + 1);
    for (int i = 0; i <= n; ++i) out[i] = lo * std::pow(10.0, decades * i / n);
    out.back() = hi;
    return out;
}

namespace {

std::string substitute_thickness(const std::string& spec, double d)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "@%.9g", d);
    std::string out;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        if (spec.compare(i, 2, "@D") == 0 && (i + 2 == spec.size() || spec[i + 2] == '/')) {
            out += buf;
            ++i;
        } else {
            out += spec[i];
        }
    }
    return out;
}

bool has_placeholder(const std::string& spec) { return substitute_thickness(spec, 1.0) != spec; }

}  // namespace

std::vector<std::pair<std::string, std::string>> expand_mirrors(const RunConfig& cfg)
{
    const std::string b = cfg.mirror_b.empty() ? cfg.mirror_a : cfg.mirror_b;
    if (cfg.thicknesses.empty()) return {{cfg.mirror_a, b}};
    std::vector<std::pair<std::string, std::string>> out;
    for (const double d : cfg.thicknesses) out.emplace_back(substitute_thickness(cfg.mirror_a, d), substitute_thickness(b, d));
    return out;
}

namespace {

using LineMap = std::map<std::string, int>;

void validate_impl(const RunConfig& cfg, const LineMap& lines, std::vector<ConfigError>& errors)
{
    const auto line = [&](const std::string& f) {
        const auto it = lines.find(f);
        return it == lines.end() ? 0 : it->second;
    };
    const auto err = [&](const std::string& f, const std::string& m) {
        for (const auto& e : errors)
            if (e.field == f && e.message == m) return;
        errors.push_back({line(f), f, m});
    };

    const auto check_mirrors = [&] {
        if (cfg.mirror_a.empty()) {
            err("mirror_a", "required for '" + std::string(to_string(cfg.command)) + "'");
            return;
        }
        const bool placeholder = has_placeholder(cfg.mirror_a) || has_placeholder(cfg.mirror_b);
        if (placeholder && cfg.thicknesses.empty()) err("thickness", "mirror spec uses @D but no thickness list given");
        if (!placeholder && !cfg.thicknesses.empty()) err("thickness", "thickness list given but no mirror spec uses @D");
        for (const auto& [a, b] : expand_mirrors(cfg)) {
            for (const auto& [field, spec] : {std::pair{"mirror_a", a}, std::pair{"mirror_b", b}}) {
                try {
                    (void)parse_mirror(spec, cfg.models);
                } catch (const Error& e) {
                    err(field, e.what());
                }
            }
        }
    };
    const auto check_models = [&] {
        if (cfg.model_ids.empty()) err("model", "required for '" + std::string(to_string(cfg.command)) + "'");
        for (const auto& id : cfg.model_ids) {
            try {
                (void)make_model(id, cfg.models);
            } catch (const Error& e) {
                err("model", e.what());
            }
        }
    };
    const auto check_positive = [&](const std::vector<double>& v, const std::string& field, bool required) {
        if (required && v.empty()) err(field, "at least one value required");
        for (const double x : v)
            if (!(x > 0.0) || !std::isfinite(x)) {
                err(field, "values must be positive, got " + std::to_string(x));
                break;
            }
    };

    switch (cfg.command) {
    case Command::Eta:
    case Command::Sweep:
        check_mirrors();
        check_positive(cfg.separations, "separation", true);
        break;
    case Command::Epsilon:
        check_models();
        check_positive(cfg.omegas, "omega", true);
        break;
    case Command::Reflect:
        check_mirrors();
        check_positive(cfg.omegas, "omega", true);
        if (cfg.transverse_k.empty()) err("k", "at least one value required");
        for (const double k : cfg.transverse_k)
            if (!(k >= 0.0)) {
                err("k", "transverse wavevector must be >= 0");
                break;
            }
        break;
    case Command::Asym:
        check_models();
        if (cfg.phase_ratio && !(*cfg.phase_ratio >= 1.0)) err("phase_ratio", "must be >= 1");
        if (cfg.phase_ratio) check_positive(cfg.omegas, "omega", true);
        break;
    case Command::Figure:
        if (!is_known_figure(cfg.figure)) err("figure", "unknown figure '" + cfg.figure + "'");
        break;
    }
    check_positive(cfg.thicknesses, "thickness", false);
    if (cfg.area && !(*cfg.area > 0.0)) err("area", "must be positive");
    if (cfg.points_per_decade < 1) err("points_per_decade", "must be >= 1");
    try {
        cfg.quad.validate();
    } catch (const Error& e) {
        err("quadrature", e.what());
    }
    if (cfg.threads < 1) err("threads", "must be >= 1");
}

// Walks the YAML tree, collecting errors instead of stopping at the first.
class Parser {
public:
    Parser(std::string base_dir) : base_dir_(std::move(base_dir)) {}

    std::vector<ConfigError> errors;
    LineMap lines;

    void error(const YAML::Node& n, const std::string& field, const std::string& msg)
    {
        errors.push_back({n.IsDefined() ? n.Mark().line + 1 : 0, field, msg});
    }

    std::optional<double> number(const YAML::Node& n, const std::string& field)
    {
        if (!n.IsScalar()) {
            error(n, field, "expected a number");
            return std::nullopt;
        }
        try {
            return detail::parse_number(n.Scalar(), field);
        } catch (const Error&) {
            error(n, field, "'" + n.Scalar() + "' is not a number");
            return std::nullopt;
        }
    }

    std::optional<double> length(const YAML::Node& n, const std::string& field)
    {
        if (!n.IsScalar()) {
            error(n, field, "expected a length");
            return std::nullopt;
        }
        try {
            return parse_length(n.Scalar());
        } catch (const Error&) {
            error(n, field, "'" + n.Scalar() + "' is not a length (number with optional nm/um/mm/m)");
            return std::nullopt;
        }
    }

    std::optional<std::string> string(const YAML::Node& n, const std::string& field)
    {
        if (!n.IsScalar()) {
            error(n, field, "expected a string");
            return std::nullopt;
        }
        return n.Scalar();
    }

    void check_keys(const YAML::Node& map, const std::string& field, const std::set<std::string>& allowed)
    {
        for (const auto& kv : map) {
            const auto key = kv.first.Scalar();
            if (!allowed.count(key))
                error(kv.first, field.empty() ? key : field + "." + key, "unknown key");
        }
    }

    std::optional<FrequencyUnit> unit(const YAML::Node& map, const std::string& field)
    {
        const auto u = map["unit"];
        if (!u) return FrequencyUnit::ElectronVolt;
        const auto s = string(u, field + ".unit");
        if (!s) return std::nullopt;
        try {
            return parse_frequency_unit(*s);
        } catch (const Error& e) {
            error(u, field + ".unit", e.what());
            return std::nullopt;
        }
    }

    /// A list of values, or a log range {min, max, points_per_decade}.
    template <class Conv>
    std::vector<double> series(const YAML::Node& n, const std::string& field, int default_ppd, Conv&& conv)
    {
        std::vector<double> out;
        if (n.IsScalar()) {
            if (auto v = conv(n, field)) out.push_back(*v);
        } else if (n.IsSequence()) {
            for (std::size_t i = 0; i < n.size(); ++i)
                if (auto v = conv(n[i], field + "[" + std::to_string(i) + "]")) out.push_back(*v);
        } else if (n.IsMap()) {
            check_keys(n, field, {"min", "max", "points_per_decade", "values", "unit"});
            if (n["values"]) return series(n["values"], field + ".values", default_ppd, conv);
            if (!n["min"] || !n["max"]) {
                error(n, field, "range needs min and max (or values)");
                return out;
            }
            const auto lo = conv(n["min"], field + ".min");
            const auto hi = conv(n["max"], field + ".max");
            int ppd = default_ppd;
            if (n["points_per_decade"]) {
                if (auto p = number(n["points_per_decade"], field + ".points_per_decade")) ppd = static_cast<int>(*p);
            }
            if (lo && hi) {
                try {
                    out = log_space(*lo, *hi, ppd);
                } catch (const Error& e) {
                    error(n, field, e.what());
                }
            }
        } else {
            error(n, field, "expected a value, a list or a range");
        }
        return out;
    }

    std::vector<double> frequency_series(const YAML::Node& n, const std::string& field, int ppd)
    {
        FrequencyUnit u = FrequencyUnit::ElectronVolt;
        if (n.IsMap()) {
            if (auto parsed = unit(n, field)) u = *parsed;
        }
        return series(n, field, ppd, [&](const YAML::Node& v, const std::string& f) -> std::optional<double> {
            auto x = number(v, f);
            if (x) *x = to_rad_s(*x, u);
            return x;
        });
    }

    std::optional<AnalyticTerm> term(const YAML::Node& n, const std::string& field)
    {
        if (!n.IsMap()) {
            error(n, field, "term must be a map with 'kind'");
            return std::nullopt;
        }
        const auto kind = n["kind"] ? string(n["kind"], field + ".kind") : std::nullopt;
        if (!kind) {
            if (!n["kind"]) error(n, field, "term needs 'kind'");
            return std::nullopt;
        }
        const auto u = unit(n, field);
        const auto freq = [&](const char* key) -> std::optional<double> {
            if (!n[key]) {
                error(n, field + "." + key, "required for kind '" + *kind + "'");
                return std::nullopt;
            }
            auto v = number(n[key], field + "." + key);
            if (v && u) *v = to_rad_s(*v, *u);
            return u ? v : std::nullopt;
        };
        const auto plain = [&](const char* key) -> std::optional<double> {
            if (!n[key]) {
                error(n, field + "." + key, "required for kind '" + *kind + "'");
                return std::nullopt;
            }
            return number(n[key], field + "." + key);
        };

        std::optional<AnalyticTerm> out;
        if (*kind == "constant") {
            check_keys(n, field, {"kind", "value"});
            if (auto v = plain("value")) out = constant_offset(*v);
        } else if (*kind == "drude") {
            check_keys(n, field, {"kind", "unit", "wp", "gamma"});
            auto wp = freq("wp");
            auto g = freq("gamma");
            if (wp && g) out = drude(*wp, *g);
        } else if (*kind == "plasma") {
            check_keys(n, field, {"kind", "unit", "wp"});
            if (auto wp = freq("wp")) out = plasma(*wp);
        } else if (*kind == "lorentz") {
            check_keys(n, field, {"kind", "unit", "strength", "resonance", "width"});
            auto s = plain("strength");
            auto w = freq("resonance");
            auto g = plain("width");
            if (s && w && g) out = lorentz(*s, *w, *g);
        } else if (*kind == "pole") {
            check_keys(n, field, {"kind", "unit", "amplitude", "cutoff"});
            auto a = plain("amplitude");
            auto c = freq("cutoff");
            if (a && c) out = pole(*a, *c);
        } else {
            error(n["kind"], field + ".kind", "unknown term kind '" + *kind + "'");
        }
        if (out) {
            try {
                validate(*out);
            } catch (const Error& e) {
                error(n, field, e.what());
                out.reset();
            }
        }
        return out;
    }

    void models(const YAML::Node& n, RunConfig& cfg)
    {
        if (!n.IsMap()) {
            error(n, "models", "expected a map of model definitions");
            return;
        }
        for (const auto& kv : n) {
            const std::string name = kv.first.Scalar();
            const std::string field = "models." + name;
            const YAML::Node& def = kv.second;
            if (!def.IsMap()) {
                error(def, field, "model definition must be a map");
                continue;
            }
            check_keys(def, field, {"terms", "table"});
            std::vector<AnalyticTerm> terms;
            bool ok = true;
            if (def["terms"]) {
                if (!def["terms"].IsSequence()) {
                    error(def["terms"], field + ".terms", "expected a list");
                    ok = false;
                } else {
                    for (std::size_t i = 0; i < def["terms"].size(); ++i) {
                        auto t = term(def["terms"][i], field + ".terms[" + std::to_string(i) + "]");
                        if (t) terms.push_back(*t);
                        else ok = false;
                    }
                }
            }
            std::shared_ptr<const OpticalTable> table;
            if (def["table"]) {
                if (auto path = string(def["table"], field + ".table")) {
                    std::filesystem::path p(*path);
                    if (p.is_relative()) p = std::filesystem::path(base_dir_) / p;
                    try {
                        table = std::make_shared<const OpticalTable>(read_optical_table(p.string()));
                    } catch (const Error& e) {
                        error(def["table"], field + ".table", e.what());
                        ok = false;
                    }
                } else {
                    ok = false;
                }
            }
            if (!def["terms"] && !def["table"]) {
                error(def, field, "model needs 'terms' and/or 'table'");
                ok = false;
            }
            if (ok) cfg.models[name] = DielectricModel(std::move(terms), name, std::move(table));
        }
    }

    std::optional<std::string> mirror(const YAML::Node& n, const std::string& field)
    {
        if (n.IsScalar()) return n.Scalar();
        if (!n.IsMap()) {
            error(n, field, "mirror must be a spec string or a map with layers/backing");
            return std::nullopt;
        }
        check_keys(n, field, {"layers", "backing"});
        std::string spec;
        if (n["layers"]) {
            if (!n["layers"].IsSequence()) {
                error(n["layers"], field + ".layers", "expected a list");
                return std::nullopt;
            }
            for (std::size_t i = 0; i < n["layers"].size(); ++i) {
                const auto& l = n["layers"][i];
                const std::string lf = field + ".layers[" + std::to_string(i) + "]";
                if (!l.IsMap() || !l["model"] || !l["thickness"]) {
                    error(l, lf, "layer needs model and thickness");
                    continue;
                }
                check_keys(l, lf, {"model", "thickness"});
                const auto model = string(l["model"], lf + ".model");
                std::string thick;
                if (l["thickness"].IsScalar() && l["thickness"].Scalar() == "D") {
                    thick = "D";
                } else if (auto d = length(l["thickness"], lf + ".thickness")) {
                    // Shortest form that reads back to the same double.
                    char buf[64];
                    const auto res = std::to_chars(buf, buf + sizeof buf, *d);
                    thick.assign(buf, res.ptr);
                }
                if (!model || thick.empty()) continue;
                if (!spec.empty()) spec += '/';
                spec += *model + "@" + thick;
            }
        }
        if (n["backing"]) {
            if (auto b = string(n["backing"], field + ".backing"); b && *b != "vacuum") {
                if (!spec.empty()) spec += '/';
                spec += *b;
            }
        }
        return spec;
    }

    std::optional<RunConfig> parse(const YAML::Node& root)
    {
        if (!root.IsMap()) {
            error(root, "", "top level must be a map");
            return std::nullopt;
        }
        check_keys(root, "", {"command", "models", "mirror_a", "mirror_b", "separation", "thickness", "model",
                              "omega", "k", "phase_ratio", "area", "figure", "points_per_decade", "quadrature",
                              "output", "threads"});
        for (const auto& kv : root) lines[kv.first.Scalar()] = kv.first.Mark().line + 1;

        RunConfig cfg;
        if (!root["command"]) {
            error(root, "command", "required");
        } else if (auto c = string(root["command"], "command")) {
            if (auto parsed = parse_command(*c)) cfg.command = *parsed;
            else error(root["command"], "command", "unknown command '" + *c + "'");
        }
        if (root["points_per_decade"]) {
            if (auto p = number(root["points_per_decade"], "points_per_decade")) cfg.points_per_decade = static_cast<int>(*p);
        }
        if (root["models"]) models(root["models"], cfg);
        if (root["mirror_a"]) {
            if (auto m = mirror(root["mirror_a"], "mirror_a")) cfg.mirror_a = *m;
        }
        if (root["mirror_b"]) {
            if (auto m = mirror(root["mirror_b"], "mirror_b")) cfg.mirror_b = *m;
        }
        const auto len = [this](const YAML::Node& v, const std::string& f) { return length(v, f); };
        if (root["separation"]) cfg.separations = series(root["separation"], "separation", cfg.points_per_decade, len);
        if (root["thickness"]) cfg.thicknesses = series(root["thickness"], "thickness", cfg.points_per_decade, len);
        if (root["model"]) {
            const auto& m = root["model"];
            if (m.IsSequence()) {
                for (std::size_t i = 0; i < m.size(); ++i)
                    if (auto s = string(m[i], "model[" + std::to_string(i) + "]")) cfg.model_ids.push_back(*s);
            } else if (auto s = string(m, "model")) {
                cfg.model_ids.push_back(*s);
            }
        }
        if (root["omega"]) cfg.omegas = frequency_series(root["omega"], "omega", cfg.points_per_decade);
        if (root["k"]) {
            const auto num = [this](const YAML::Node& v, const std::string& f) { return number(v, f); };
            cfg.transverse_k = series(root["k"], "k", cfg.points_per_decade, num);
        }
        if (root["phase_ratio"]) cfg.phase_ratio = number(root["phase_ratio"], "phase_ratio");
        if (root["area"]) cfg.area = number(root["area"], "area");
        if (root["figure"]) {
            if (auto s = string(root["figure"], "figure")) cfg.figure = *s;
        }
        if (root["quadrature"]) {
            const auto& q = root["quadrature"];
            if (!q.IsMap()) {
                error(q, "quadrature", "expected a map");
            } else {
                check_keys(q, "quadrature", {"rel_tol", "max_evals", "cutoff_mult"});
                if (q["rel_tol"]) {
                    if (auto v = number(q["rel_tol"], "quadrature.rel_tol")) cfg.quad.rel_tol = *v;
                }
                if (q["max_evals"]) {
                    if (auto v = number(q["max_evals"], "quadrature.max_evals")) {
                        if (*v < 0) error(q["max_evals"], "quadrature.max_evals", "must be positive");
                        else cfg.quad.max_evals = static_cast<std::size_t>(*v);
                    }
                }
                if (q["cutoff_mult"]) {
                    if (auto v = number(q["cutoff_mult"], "quadrature.cutoff_mult")) cfg.quad.cutoff_mult = *v;
                }
            }
        }
        if (root["output"]) {
            const auto& o = root["output"];
            if (!o.IsMap()) {
                error(o, "output", "expected a map with path/format");
            } else {
                check_keys(o, "output", {"path", "format"});
                if (o["path"]) {
                    if (auto s = string(o["path"], "output.path")) cfg.output_path = *s;
                }
                if (o["format"]) {
                    if (auto s = string(o["format"], "output.format")) {
                        if (auto f = parse_format(*s)) cfg.format = *f;
                        else error(o["format"], "output.format", "must be csv or json");
                    }
                }
            }
        }
        if (root["threads"]) {
            if (auto t = number(root["threads"], "threads")) {
                if (*t < 1) error(root["threads"], "threads", "must be >= 1");
                else cfg.threads = static_cast<unsigned>(*t);
            }
        }
        return cfg;
    }

private:
    std::string base_dir_;
};

}  // namespace

void validate_config(const RunConfig& cfg, std::vector<ConfigError>& errors) { validate_impl(cfg, {}, errors); }

ConfigResult parse_config(const std::string& text, const std::string& base_dir)
{
    ConfigResult result;
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        result.errors.push_back({e.mark.line + 1, "", e.msg});
        return result;
    }
    Parser parser(base_dir);
    auto cfg = parser.parse(root);
    result.errors = std::move(parser.errors);
    if (cfg) validate_impl(*cfg, parser.lines, result.errors);
    if (result.errors.empty()) result.config = std::move(cfg);
    return result;
}

void apply_environment(RunConfig& cfg)
{
    if (const char* out = std::getenv("CASIMIR_OUT"); out && *out) cfg.output_path = out;
    if (const char* t = std::getenv("CASIMIR_THREADS"); t && *t) {
        const long n = std::strtol(t, nullptr, 10);
        if (n >= 1) cfg.threads = static_cast<unsigned>(n);
    }
}

}  // namespace casimir::cli
