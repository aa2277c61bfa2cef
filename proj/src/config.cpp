#include "deadoil/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "deadoil/io.hpp"
#include "deadoil/profiles.hpp"

namespace deadoil {

namespace {

constexpr int kConfigVersion = 1;
constexpr double kDefaultValidationRange = 10.0;
constexpr int kDefaultValidationSamples = 10001;

using Section = std::map<std::string, std::string, std::less<>>;

const std::map<std::string, std::set<std::string, std::less<>>, std::less<>>& allowed_keys() {
    static const std::map<std::string, std::set<std::string, std::less<>>, std::less<>> keys = {
        {"", {"version"}},
        {"grid", {"nx", "ny", "nt", "T"}},
        {"coefficients", {"phi", "g", "d"}},
        {"penalty", {"beta1", "beta2", "q0"}},
        {"data", {"u0", "p0", "U", "P", "f"}},
        {"optimizer",
         {"method", "max_iters", "grad_tol", "armijo_c", "shrink", "step0", "max_backtracks", "damping", "tol"}},
        {"validation", {"range", "samples", "c1", "c2", "c3"}},
        {"output", {"dir"}},
    };
    return keys;
}

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

std::map<std::string, Section, std::less<>> tokenize(std::string_view text) {
    std::map<std::string, Section, std::less<>> sections;
    std::string current;
    sections[current];
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        const std::string where = "config line " + std::to_string(line_no) + ": ";
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(where + "malformed section header");
            current = trim(std::string_view(line).substr(1, line.size() - 2));
            if (!allowed_keys().contains(current) || current.empty()) {
                throw ConfigError(where + "unknown section [" + current + "]");
            }
            if (sections.contains(current)) throw ConfigError(where + "duplicate section [" + current + "]");
            sections[current];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(where + "expected key = value");
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        const auto& allowed = allowed_keys().at(current);
        if (!allowed.contains(key)) {
            throw ConfigError(where + "unknown key '" + key + "'" +
                              (current.empty() ? std::string(" before any section") : " in [" + current + "]"));
        }
        if (value.empty()) throw ConfigError(where + "empty value for '" + key + "'");
        if (!sections[current].emplace(key, value).second) {
            throw ConfigError(where + "duplicate key '" + key + "'");
        }
    }
    return sections;
}

class SectionReader {
public:
    SectionReader(const std::map<std::string, Section, std::less<>>& sections, const std::string& name)
        : name_(name) {
        const auto it = sections.find(name);
        if (it != sections.end()) entries_ = &it->second;
    }

    bool has(const std::string& key) const { return entries_ && entries_->contains(key); }

    const std::string& text(const std::string& key) const {
        if (!has(key)) throw ConfigError("missing key '" + key + "' in [" + name_ + "]");
        return entries_->find(key)->second;
    }

    double number(const std::string& key) const {
        const std::string& s = text(key);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || !std::isfinite(v)) {
            throw ConfigError("[" + name_ + "] " + key + ": expected a number, got '" + s + "'");
        }
        return v;
    }

    int integer(const std::string& key) const {
        const double v = number(key);
        if (v != std::floor(v) || std::abs(v) > 1e9) {
            throw ConfigError("[" + name_ + "] " + key + ": expected an integer, got '" + text(key) + "'");
        }
        return static_cast<int>(v);
    }

    double number_or(const std::string& key, double fallback) const { return has(key) ? number(key) : fallback; }
    int integer_or(const std::string& key, int fallback) const { return has(key) ? integer(key) : fallback; }

private:
    std::string name_;
    const Section* entries_ = nullptr;
};

bool is_csv(const std::string& source) { return source.rfind("csv:", 0) == 0; }

std::filesystem::path csv_path(const std::string& source, const std::filesystem::path& base_dir) {
    std::filesystem::path p = trim(std::string_view(source).substr(4));
    return p.is_absolute() ? p : base_dir / p;
}

ScalarField load_initial(const std::string& key, const std::string& source, const Discretization& disc,
                         const std::filesystem::path& base_dir) {
    if (is_csv(source)) return read_scalar_csv(csv_path(source, base_dir), disc);
    const ProfileSpec spec = parse_profile(source);
    if (!vanishes_on_boundary(spec)) {
        throw ConfigError("[data] " + key + ": initial data must vanish on the boundary, '" + source + "' does not");
    }
    return eval_profile(spec, disc, 0.0);
}

SpaceTimeField load_field(const std::string& source, const Discretization& disc,
                          const std::filesystem::path& base_dir) {
    if (is_csv(source)) return read_field_csv(csv_path(source, base_dir), disc);
    return eval_profile_qt(parse_profile(source), disc);
}

std::string describe_violations(const ValidationReport& report) {
    std::ostringstream msg;
    msg << "coefficient hypotheses violated on [-" << report.range << ", " << report.range << "] ("
        << report.violations.size() << " violation(s))";
    const std::size_t shown = std::min<std::size_t>(report.violations.size(), 5);
    for (std::size_t k = 0; k < shown; ++k) {
        const auto& v = report.violations[k];
        msg << "; " << v.bound << " fails at r=" << v.r << " (" << v.function;
        for (int o = 0; o < v.order; ++o) msg << '\'';
        msg << " = " << v.value << ")";
    }
    if (report.violations.size() > shown) msg << "; ...";
    return msg.str();
}

}  // namespace

ProblemBundle parse_config_text(std::string_view text, const std::filesystem::path& base_dir) {
    const auto sections = tokenize(text);

    const SectionReader top(sections, "");
    if (!top.has("version")) throw ConfigError("missing 'version = 1' header");
    if (top.integer("version") != kConfigVersion) {
        throw ConfigError("unsupported config version '" + top.text("version") + "'");
    }

    const SectionReader grid(sections, "grid");
    const Discretization disc(grid.integer("nx"), grid.integer("ny"), grid.integer("nt"), grid.number("T"));

    const SectionReader coeffs(sections, "coefficients");
    const SectionReader validation(sections, "validation");
    HypothesisBounds bounds;
    if (validation.has("c1")) bounds.c1 = validation.number("c1");
    if (validation.has("c2")) bounds.c2 = validation.number("c2");
    if (validation.has("c3")) bounds.c3 = validation.number("c3");
    CoefficientModel model(CoefficientFamily::parse(coeffs.text("phi")), CoefficientFamily::parse(coeffs.text("g")),
                           CoefficientFamily::parse(coeffs.text("d")), bounds);

    const double range = validation.number_or("range", kDefaultValidationRange);
    const int samples = validation.integer_or("samples", kDefaultValidationSamples);
    if (!(range > 0.0) || samples < 2) throw ConfigError("[validation] needs range > 0 and samples >= 2");
    ValidationReport report = validate_hypotheses(model, range, samples);
    if (!report.pass) {
        std::string message = describe_violations(report);
        throw ValidationError(std::move(message), std::move(report));
    }

    const SectionReader penalty(sections, "penalty");
    PenaltyConfig pen{penalty.number("beta1"), penalty.number("beta2"), penalty.number("q0")};
    pen.validate();

    const SectionReader data(sections, "data");
    std::map<std::string, std::string> sources;
    for (const char* key : {"u0", "p0", "U", "P"}) sources[key] = data.text(key);
    sources["f"] = data.has("f") ? data.text("f") : "zero()";

    ScalarField u0 = load_initial("u0", sources["u0"], disc, base_dir);
    ScalarField p0 = load_initial("p0", sources["p0"], disc, base_dir);
    SpaceTimeField U = load_field(sources["U"], disc, base_dir);
    SpaceTimeField P = load_field(sources["P"], disc, base_dir);
    SpaceTimeField f = load_field(sources["f"], disc, base_dir);

    const SectionReader opt(sections, "optimizer");
    OptimizerSettings settings;
    settings.method = opt.has("method") ? opt.text("method") : settings.method;
    if (settings.method != "gradient_descent" && settings.method != "fixed_point") {
        throw ConfigError("[optimizer] method must be gradient_descent or fixed_point, got '" + settings.method + "'");
    }
    auto& gd = settings.descent;
    auto& fp = settings.fixed_point;
    gd.max_iters = fp.max_iters = opt.integer_or("max_iters", gd.max_iters);
    gd.grad_tol = opt.number_or("grad_tol", gd.grad_tol);
    gd.armijo_c = opt.number_or("armijo_c", gd.armijo_c);
    gd.shrink = opt.number_or("shrink", gd.shrink);
    gd.step0 = opt.number_or("step0", gd.step0);
    gd.max_backtracks = opt.integer_or("max_backtracks", gd.max_backtracks);
    fp.damping = opt.number_or("damping", fp.damping);
    fp.tol = opt.number_or("tol", fp.tol);
    gd.validate();
    fp.validate();

    const SectionReader output(sections, "output");
    std::filesystem::path out_dir = output.has("dir") ? output.text("dir") : "out";

    return ProblemBundle{Problem{disc, std::move(model), pen, std::move(u0), std::move(p0), std::move(U), std::move(P)},
                         std::move(f),
                         std::move(settings),
                         std::move(out_dir),
                         std::move(report),
                         std::move(sources)};
}

ProblemBundle parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config '" + path.string() + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path.parent_path());
}

}  // namespace deadoil
