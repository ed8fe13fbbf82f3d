#include "fockasym/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <gmp.h>

#include "CLI11.hpp"
#include "fockasym/errors.hpp"
#include "fockasym/fock.hpp"

namespace fockasym::cli {
namespace {

using nlohmann::json;

struct HelpRequested {
    std::string text;
};

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys{"command", "family", "omega", "thoma", "nu",  "mu",  "rho",    "scalars",
                                            "q2",      "grid",   "t",     "normalization", "m", "K", "member", "out",
                                            "output",  "tol"};
    return keys;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

Rational rational_of(const json& v, const std::string& what) {
    if (v.is_string()) {
        return Rational::parse(trim(v.get<std::string>()));
    }
    if (v.is_number_integer()) {
        return Rational(v.get<std::int64_t>());
    }
    if (v.is_number_float()) {
        throw ParseError(what + ": float literal " + v.dump() + " rejected; write p/q");
    }
    throw ParseError(what + ": expected a rational, got " + v.dump());
}

std::int64_t integer_of(const json& v, const std::string& what) {
    const Rational r = rational_of(v, what);
    if (!r.is_integer() || !r.numerator().fits_slong_p()) {
        throw ParseError(what + ": expected an integer, got " + r.str());
    }
    return r.numerator().get_si();
}

std::size_t count_of(const json& v, const std::string& what) {
    const std::int64_t n = integer_of(v, what);
    if (n < 0) {
        throw ParseError(what + " must be nonnegative");
    }
    return static_cast<std::size_t>(n);
}

std::vector<Rational> rational_list(const json& v, const std::string& what) {
    std::vector<Rational> out;
    if (v.is_array()) {
        for (const auto& x : v) {
            out.push_back(rational_of(x, what));
        }
        return out;
    }
    if (v.is_string()) {
        const std::string s = trim(v.get<std::string>());
        if (s.empty()) {
            return out;
        }
        for (const auto& piece : split(s, ',')) {
            out.push_back(Rational::parse(trim(piece)));
        }
        return out;
    }
    return {rational_of(v, what)};
}

json object_of(const json& v, const std::string& what) {
    if (v.is_object()) {
        return v;
    }
    if (v.is_string()) {
        try {
            json parsed = json::parse(v.get<std::string>());
            if (parsed.is_object()) {
                return parsed;
            }
        } catch (const json::parse_error&) {
        }
    }
    throw ParseError(what + ": expected a JSON object, got " + v.dump());
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& what) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.contains(key)) {
            throw ParseError(what + ": unknown key '" + key + "'");
        }
    }
}

OmegaParams omega_of(const json& v) {
    const json obj = object_of(v, "--omega");
    reject_unknown(obj, {"alphaPlus", "alphaMinus", "betaPlus", "betaMinus", "gammaPlus", "gammaMinus"}, "--omega");
    OmegaParams w;
    const auto list = [&](const char* key, std::vector<Rational>& dst) {
        if (obj.contains(key)) {
            dst = rational_list(obj.at(key), std::string("--omega ") + key);
        }
    };
    list("alphaPlus", w.alphaPlus);
    list("alphaMinus", w.alphaMinus);
    list("betaPlus", w.betaPlus);
    list("betaMinus", w.betaMinus);
    if (obj.contains("gammaPlus")) {
        w.gammaPlus = rational_of(obj.at("gammaPlus"), "--omega gammaPlus");
    }
    if (obj.contains("gammaMinus")) {
        w.gammaMinus = rational_of(obj.at("gammaMinus"), "--omega gammaMinus");
    }
    w.validate();
    return w;
}

ThomaParams thoma_of(const json& v) {
    const json obj = object_of(v, "--thoma");
    reject_unknown(obj, {"alpha", "beta"}, "--thoma");
    ThomaParams th;
    if (obj.contains("alpha")) {
        th.alpha = rational_list(obj.at("alpha"), "--thoma alpha");
    }
    if (obj.contains("beta")) {
        th.beta = rational_list(obj.at("beta"), "--thoma beta");
    }
    th.validate();
    return th;
}

NuSequence nu_of(const json& v) {
    NuSequence nu;
    if (v.is_string() && trim(v.get<std::string>()).rfind("prefix=", 0) == 0) {
        // prefix=[a,b,...];tail=c
        const auto parts = split(trim(v.get<std::string>()), ';');
        if (parts.size() != 2 || parts[1].rfind("tail=", 0) != 0) {
            throw ParseError("--nu: expected 'prefix=[...];tail=k', got " + v.get<std::string>());
        }
        std::string list = trim(parts[0].substr(7));
        if (list.size() < 2 || list.front() != '[' || list.back() != ']') {
            throw ParseError("--nu: prefix must be a bracketed list");
        }
        list = trim(list.substr(1, list.size() - 2));
        if (!list.empty()) {
            for (const auto& x : split(list, ',')) {
                nu.prefix.push_back(integer_of(json(trim(x)), "--nu prefix"));
            }
        }
        nu.tail = integer_of(json(trim(parts[1].substr(5))), "--nu tail");
    } else {
        const json obj = object_of(v, "--nu");
        reject_unknown(obj, {"prefix", "tail"}, "--nu");
        if (obj.contains("prefix")) {
            const json& p = obj.at("prefix");
            if (!p.is_array()) {
                throw ParseError("--nu prefix must be an array");
            }
            for (const auto& x : p) {
                nu.prefix.push_back(integer_of(x, "--nu prefix"));
            }
        }
        if (obj.contains("tail")) {
            nu.tail = integer_of(obj.at("tail"), "--nu tail");
        }
    }
    nu.validate();
    return nu;
}

std::vector<IntegerPartition> partitions_of_json(const json& v, const std::string& what) {
    std::vector<std::string> texts;
    if (v.is_array()) {
        for (const auto& x : v) {
            if (x.is_number_integer()) {
                texts.push_back(std::to_string(x.get<std::int64_t>()));
            } else if (x.is_string()) {
                texts.push_back(x.get<std::string>());
            } else {
                throw ParseError(what + ": partitions are strings like \"2,1\"");
            }
        }
    } else if (v.is_string()) {
        texts = split(v.get<std::string>(), ';');
    } else if (v.is_number_integer()) {
        texts.push_back(std::to_string(v.get<std::int64_t>()));
    } else {
        throw ParseError(what + ": partitions are strings like \"2,1\"");
    }
    std::vector<IntegerPartition> out;
    for (const auto& t : texts) {
        out.push_back(IntegerPartition::parse(trim(t)));
    }
    return out;
}

std::vector<std::int64_t> grid_of(const json& v) {
    std::vector<std::int64_t> out;
    if (v.is_array()) {
        for (const auto& x : v) {
            out.push_back(integer_of(x, "--grid"));
        }
    } else if (v.is_string() && v.get<std::string>().find(':') != std::string::npos) {
        const auto parts = split(v.get<std::string>(), ':');
        if (parts.size() != 3) {
            throw ParseError("--grid range must be a:b:step");
        }
        const std::int64_t a = integer_of(json(trim(parts[0])), "--grid");
        const std::int64_t b = integer_of(json(trim(parts[1])), "--grid");
        const std::int64_t step = integer_of(json(trim(parts[2])), "--grid");
        if (step <= 0) {
            throw ParseError("--grid step must be positive");
        }
        for (std::int64_t x = a; x <= b; x += step) {
            out.push_back(x);
        }
    } else if (v.is_string()) {
        for (const auto& piece : split(v.get<std::string>(), ',')) {
            out.push_back(integer_of(json(trim(piece)), "--grid"));
        }
    } else {
        out.push_back(integer_of(v, "--grid"));
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (out[k] <= 0 || (k > 0 && out[k] <= out[k - 1])) {
            throw InputError("--grid must be positive and strictly increasing");
        }
    }
    return out;
}

std::string string_of(const json& v, const std::string& what) {
    if (!v.is_string()) {
        throw ParseError(what + ": expected a string, got " + v.dump());
    }
    return v.get<std::string>();
}

ExperimentKind kind_of(const std::string& s) {
    if (s == "moments") {
        return ExperimentKind::Moments;
    }
    if (s == "lln") {
        return ExperimentKind::Lln;
    }
    if (s == "clt") {
        return ExperimentKind::Clt;
    }
    if (s == "characters") {
        return ExperimentKind::Characters;
    }
    if (s == "boundary") {
        return ExperimentKind::Boundary;
    }
    throw ParseError("unknown command '" + s + "'");
}

json read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open config file " + path);
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("config file " + path + ": " + e.what());
    }
    if (!j.is_object()) {
        throw ParseError("config file " + path + " must hold a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
        if (!known_keys().contains(key)) {
            throw ParseError("config file " + path + ": unknown key '" + key + "'");
        }
    }
    return j;
}

ExperimentConfig config_from(const json& merged) {
    ExperimentConfig c;
    c.echo = merged;
    if (!merged.contains("command")) {
        throw InputError("no command given");
    }
    c.kind = kind_of(string_of(merged.at("command"), "command"));
    const auto has = [&](const char* key) { return merged.contains(key); };
    if (has("family")) {
        c.family = string_of(merged.at("family"), "--family");
        if (c.family != "unitary" && c.family != "symmetric" && c.family != "quantum" && c.family != "custom") {
            throw ParseError("--family must be unitary, symmetric, quantum or custom");
        }
    }
    if (has("omega")) {
        c.omega = omega_of(merged.at("omega"));
    }
    if (has("thoma")) {
        c.thoma = thoma_of(merged.at("thoma"));
    }
    if (has("nu")) {
        c.nu = nu_of(merged.at("nu"));
    }
    if (has("q2")) {
        c.q2 = rational_of(merged.at("q2"), "--q2");
        if (c.q2->sign() <= 0 || *c.q2 >= Rational(1)) {
            throw ParameterError("--q2 must lie in (0,1), got " + c.q2->str());
        }
    }
    if (has("mu") && has("rho")) {
        throw InputError("give either --mu or --rho, not both");
    }
    if (has("mu")) {
        c.partitions = partitions_of_json(merged.at("mu"), "--mu");
    }
    if (has("rho")) {
        c.partitions = partitions_of_json(merged.at("rho"), "--rho");
    }
    if (has("scalars")) {
        c.scalars = rational_list(merged.at("scalars"), "--scalars");
    }
    if (has("grid")) {
        c.grid = grid_of(merged.at("grid"));
    }
    if (has("t")) {
        c.t = rational_of(merged.at("t"), "--t");
    }
    if (has("normalization")) {
        const std::string n = string_of(merged.at("normalization"), "--normalization");
        if (n == "variance") {
            c.normalization = Normalization::ByVariance;
        } else if (n == "power") {
            c.normalization = Normalization::ByPower;
        } else {
            throw ParseError("--normalization must be variance or power");
        }
    }
    if (has("m")) {
        c.m = count_of(merged.at("m"), "--m");
    }
    if (has("K")) {
        c.K = count_of(merged.at("K"), "--K");
    }
    if (has("member")) {
        c.member = count_of(merged.at("member"), "--member");
    }
    c.out = c.kind == ExperimentKind::Boundary ? OutputFormat::Json : OutputFormat::Csv;
    if (has("out")) {
        const std::string o = string_of(merged.at("out"), "--out");
        if (o == "csv") {
            c.out = OutputFormat::Csv;
        } else if (o == "json") {
            c.out = OutputFormat::Json;
        } else {
            throw ParseError("--out must be csv or json");
        }
    }
    if (has("output")) {
        c.output = string_of(merged.at("output"), "--output");
    }
    if (has("tol")) {
        c.tolerance = rational_of(merged.at("tol"), "--tol");
        if (c.tolerance->sign() < 0) {
            throw InputError("--tol must be nonnegative");
        }
    }

    if (c.kind == ExperimentKind::Boundary) {
        if (c.nu.has_value() == c.omega.has_value()) {
            throw InputError("boundary needs exactly one of --nu or --omega");
        }
        if (c.nu && !c.q2) {
            throw InputError("boundary --nu needs --q2");
        }
        return c;
    }
    if (c.family.empty()) {
        throw InputError("--family is required");
    }
    if (c.grid.empty()) {
        throw InputError("--grid is required");
    }
    if (c.kind != ExperimentKind::Characters && c.t.sign() <= 0) {
        throw InputError("--t must be positive");
    }
    if (c.m && (*c.m == 0 || *c.m > kMaxCltFactors)) {
        throw InputError("--m must lie in 1.." + std::to_string(kMaxCltFactors));
    }
    return c;
}

std::string rate_text(const std::optional<double>& r) {
    if (!r) {
        return "";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", *r);
    return buf;
}

json metadata(const ExperimentConfig& config) {
    return {{"tool", "fockasym"},
            {"versions",
             {{"fockasym", kVersion},
              {"cli11", CLI11_VERSION},
              {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                    std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                    std::to_string(NLOHMANN_JSON_VERSION_PATCH)},
              {"gmp", gmp_version}}},
            {"config", config.echo}};
}

std::vector<std::size_t> factor_indices(const ExperimentConfig& config, const EigenvalueFamily& fam) {
    const std::size_t m = config.m.value_or(fam.size());
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < m; ++k) {
        idx.push_back(k % fam.size());
    }
    return idx;
}

// ⟨Λ_t(f_1)...Λ_t(f_m)⟩ from the set-partition formula, checked against the classical
// compound-Poisson value in the limit column.
ConvergenceReport moments_report(const ExperimentConfig& config, const EigenvalueFamily& fam) {
    const auto idx = factor_indices(config, fam);
    ConvergenceReport report;
    report.kind = "moments";
    report.family = fam.name();
    report.normalization = to_string(Normalization::Unnormalized);
    report.tolerance = config.tolerance;
    const CoherentState psi = CoherentState::unit({GaussianRational(1)});
    const std::vector<Rational> times{config.t};
    for (std::size_t k = 0; k < config.grid.size(); ++k) {
        const std::int64_t N = config.grid[k];
        std::vector<GaussianRational> jumps;
        for (std::size_t i = 0; i < fam.size(); ++i) {
            jumps.emplace_back(family_eigenvalue(fam, i, N));
        }
        std::vector<AffineProcessSpec> specs;
        std::vector<MonomialFactor> mono;
        for (auto i : idx) {
            specs.push_back(AffineProcessSpec::scalar(jumps[i]));
            mono.push_back({i, 0});
        }
        const Rational value = joint_moment_coherent(specs, psi, psi, config.t).re();
        const Rational classical = compound_poisson_moments(jumps, times, mono).re();
        ReportRow row;
        row.gridIndex = k;
        row.N = N;
        row.L = 1;
        row.value = value;
        row.limit = classical;
        row.absError = abs(value - classical);
        report.rows.push_back(row);
    }
    if (report.tolerance) {
        report.passed = report.rows.back().absError.square() <= *report.tolerance * *report.tolerance;
    }
    return report;
}

std::string boundary_output(const ExperimentConfig& config) {
    TruncatedSeries h = config.nu ? q_boundary_h_series(*config.nu, *config.q2, config.K)
                                  : phi_omega_h_series(*config.omega, config.K);
    std::vector<Rational> schur;
    for (const auto& mu : config.partitions) {
        schur.push_back(config.nu ? s_mu_omega_nu(mu, *config.nu, *config.q2) : s_mu_omega(mu, *config.omega));
    }
    if (config.out == OutputFormat::Csv) {
        std::ostringstream os;
        os << "k,h_exact,h_decimal\n";
        for (std::size_t k = 0; k < h.coeffs().size(); ++k) {
            os << k << ',' << h.coeffs()[k].str() << ',' << h.coeffs()[k].decimal() << '\n';
        }
        return os.str();
    }
    json body;
    body["parameter"] = config.nu ? "nu" : "omega";
    body["K"] = config.K;
    json exact = json::array();
    json decimal = json::array();
    for (const auto& c : h.coeffs()) {
        exact.push_back(c.str());
        decimal.push_back(c.decimal());
    }
    body["h_exact"] = exact;
    body["h_decimal"] = decimal;
    if (config.nu) {
        const QBoundaryFactors f = q_boundary_factors(*config.nu);
        body["nu"] = config.nu->str();
        body["q2"] = config.q2->str();
        body["numerator_exponents"] = f.numerator;
        body["denominator_exponents"] = f.denominator;
    }
    json sj = json::array();
    for (std::size_t i = 0; i < schur.size(); ++i) {
        sj.push_back({{"mu", config.partitions[i].str()},
                      {"value_exact", schur[i].str()},
                      {"value_decimal", schur[i].decimal()}});
    }
    body["schur"] = sj;
    json doc{{"metadata", metadata(config)}, {"boundary", body}};
    return doc.dump(2) + "\n";
}

std::string error_type(const std::exception& e) {
    if (dynamic_cast<const DegenerateError*>(&e)) {
        return "DegenerateError";
    }
    if (dynamic_cast<const ConstructionError*>(&e)) {
        return "ConstructionError";
    }
    if (dynamic_cast<const ParseError*>(&e)) {
        return "ParseError";
    }
    if (dynamic_cast<const InputError*>(&e)) {
        return "InputError";
    }
    if (dynamic_cast<const ParameterError*>(&e)) {
        return "ParameterError";
    }
    if (dynamic_cast<const DomainError*>(&e)) {
        return "DomainError";
    }
    if (dynamic_cast<const BoundError*>(&e)) {
        return "BoundError";
    }
    if (dynamic_cast<const ShapeError*>(&e)) {
        return "ShapeError";
    }
    return "Error";
}

int report_error(std::ostream& err, const std::string& type, const std::string& message, int code) {
    const json record{{"error", {{"type", type}, {"message", message}, {"exit", code}}}};
    err << record.dump() << '\n';
    return code;
}

} // namespace

ExperimentConfig parse_config(const std::vector<std::string>& args) {
    CLI::App app{"Exact moment, LLN and CLT experiments for conservation operator processes", "fockasym"};
    app.require_subcommand(1);
    std::map<std::string, std::string> raw;
    std::vector<std::string> mus;
    std::vector<std::string> rhos;
    std::string config_path;
    std::vector<std::pair<std::string, CLI::Option*>> options;

    const std::vector<std::pair<std::string, std::string>> flags{
        {"family", "unitary | symmetric | quantum | custom"},
        {"omega", "JSON object with alphaPlus, alphaMinus, betaPlus, betaMinus, gammaPlus, gammaMinus"},
        {"thoma", "JSON object with alpha and beta lists"},
        {"nu", "JSON {\"prefix\": [...], \"tail\": k} or 'prefix=[...];tail=k'"},
        {"scalars", "comma list of rationals for the custom family"},
        {"q2", "q^2 as p/q in (0,1)"},
        {"grid", "comma list or a:b:step of N (or L) values"},
        {"t", "time as p/q"},
        {"normalization", "variance | power"},
        {"m", "number of factors; members are used cyclically"},
        {"K", "series order for boundary"},
        {"member", "member index for lln and characters"},
        {"out", "csv | json"},
        {"output", "report path (default: standard output)"},
        {"tol", "tolerance p/q on the last absolute error"},
    };
    const std::vector<std::pair<std::string, std::string>> commands{
        {"moments", "joint moments of the family's processes against the compound-Poisson oracle"},
        {"lln", "law of large numbers report"},
        {"clt", "scaled central limit moment report"},
        {"characters", "normalized eigenvalues against their limits"},
        {"boundary", "h-series of a boundary parameter"},
    };
    std::vector<std::pair<std::string, CLI::App*>> subs;
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        for (const auto& [flag, fhelp] : flags) {
            options.emplace_back(flag, sub->add_option("--" + flag, raw[flag], fhelp));
        }
        options.emplace_back("mu", sub->add_option("--mu", mus, "partition like 2,1; repeat or separate with ;"));
        options.emplace_back("rho", sub->add_option("--rho", rhos, "cycle type like 3,2; repeat or separate with ;"));
        sub->add_option("--config", config_path, "JSON config file; flags override its keys");
        subs.emplace_back(name, sub);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw ParseError(e.what());
    }

    json merged = config_path.empty() ? json::object() : read_config_file(config_path);
    for (const auto& [name, sub] : subs) {
        if (sub->parsed()) {
            merged["command"] = name;
        }
    }
    for (const auto& [key, opt] : options) {
        if (opt->count() == 0) {
            continue;
        }
        if (key == "mu" || key == "rho") {
            const auto& list = key == "mu" ? mus : rhos;
            std::string joined;
            for (std::size_t k = 0; k < list.size(); ++k) {
                joined += (k ? ";" : "") + list[k];
            }
            merged[key] = joined;
            // a flag replaces the file's list, including the other spelling
            merged.erase(key == "mu" ? "rho" : "mu");
        } else {
            merged[key] = raw[key];
        }
    }
    return config_from(merged);
}

EigenvalueFamily make_family(const ExperimentConfig& c) {
    const auto need = [&](bool ok, const char* flag) {
        if (!ok) {
            throw InputError(std::string(flag) + " is required for the " + c.family + " family");
        }
    };
    if (c.family == "unitary") {
        need(c.omega.has_value(), "--omega");
        need(!c.partitions.empty(), "--mu");
        return EigenvalueFamily::unitary(c.partitions, *c.omega);
    }
    if (c.family == "symmetric") {
        need(c.thoma.has_value(), "--thoma");
        need(!c.partitions.empty(), "--rho");
        return EigenvalueFamily::symmetric(c.partitions, *c.thoma);
    }
    if (c.family == "quantum") {
        need(c.nu.has_value(), "--nu");
        need(c.q2.has_value(), "--q2");
        need(!c.partitions.empty(), "--mu");
        return EigenvalueFamily::quantum(c.partitions, *c.nu, *c.q2);
    }
    if (c.family == "custom") {
        need(!c.scalars.empty(), "--scalars");
        return EigenvalueFamily::custom(c.scalars);
    }
    throw InputError("unknown family '" + c.family + "'");
}

std::string render_csv(const ConvergenceReport& report) {
    std::ostringstream os;
    os << "gridIndex,N,L,value_exact,value_decimal,limit_exact,abs_error_exact,abs_error_decimal,rate_estimate\n";
    for (const auto& r : report.rows) {
        os << r.gridIndex << ',' << r.N << ',' << r.L << ',' << r.value.str() << ',' << r.value.decimal() << ','
           << r.limit.str() << ',' << r.absError.str() << ',' << r.absError.decimal() << ',' << rate_text(r.rate)
           << '\n';
    }
    return os.str();
}

std::string render_json(const ConvergenceReport& report, const ExperimentConfig& config) {
    json rows = json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"gridIndex", r.gridIndex},
                        {"N", r.N},
                        {"L", r.L},
                        {"value_exact", r.value.str()},
                        {"value_decimal", r.value.decimal()},
                        {"limit_exact", r.limit.str()},
                        {"abs_error_exact", r.absError.str()},
                        {"abs_error_decimal", r.absError.decimal()},
                        {"rate_estimate", rate_text(r.rate)}});
    }
    json body{{"kind", report.kind},
              {"family", report.family},
              {"normalization", report.normalization},
              {"fitted_rate", report.fittedRate ? json(rate_text(report.fittedRate)) : json(nullptr)},
              {"tolerance", report.tolerance ? json(report.tolerance->str()) : json(nullptr)},
              {"passed", report.passed ? json(*report.passed) : json(nullptr)},
              {"rows", rows}};
    const json doc{{"metadata", metadata(config)}, {"report", body}};
    return doc.dump(2) + "\n";
}

std::string run(const ExperimentConfig& config) {
    if (config.kind == ExperimentKind::Boundary) {
        return boundary_output(config);
    }
    const EigenvalueFamily fam = make_family(config);
    ConvergenceReport report;
    switch (config.kind) {
    case ExperimentKind::Moments:
        report = moments_report(config, fam);
        break;
    case ExperimentKind::Lln:
        report = lln_report(fam, config.member, config.grid, config.t, config.tolerance);
        break;
    case ExperimentKind::Characters:
        report = lln_report(fam, config.member, config.grid, Rational(1), config.tolerance);
        report.kind = "characters";
        break;
    case ExperimentKind::Clt: {
        const auto idx = factor_indices(config, fam);
        report = clt_report(fam, idx, config.grid, config.t, config.normalization, config.tolerance);
        break;
    }
    case ExperimentKind::Boundary:
        break;
    }
    return config.out == OutputFormat::Csv ? render_csv(report) : render_json(report, config);
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        const ExperimentConfig config = parse_config(args);
        const std::string text = run(config);
        if (config.output.empty()) {
            out << text;
        } else {
            std::ofstream file(config.output, std::ios::binary);
            if (!file || !(file << text)) {
                throw InputError("cannot write " + config.output);
            }
        }
        return 0;
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const DegenerateError& e) {
        return report_error(err, error_type(e), e.what(), 3);
    } catch (const ConstructionError& e) {
        return report_error(err, error_type(e), e.what(), 3);
    } catch (const Error& e) {
        return report_error(err, error_type(e), e.what(), 2);
    } catch (const std::exception& e) {
        return report_error(err, "InternalError", e.what(), 1);
    }
}

} // namespace fockasym::cli
