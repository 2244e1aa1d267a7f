#include "smenc/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace smenc {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("invalid number for " + key + ": '" + v + "'");
    }
}

int parse_int(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("invalid integer for " + key + ": '" + v + "'");
    }
}

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw ConfigError("invalid boolean for " + key + ": '" + v + "'");
}

std::vector<double> parse_list(const std::string& v, const std::string& key) {
    std::string s = v;
    for (char& c : s)
        if (c == ',') c = ' ';
    std::istringstream in(s);
    std::vector<double> out;
    std::string tok;
    while (in >> tok) out.push_back(parse_double(tok, key));
    return out;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

void RunConfig::validate() const {
    if (system_name != "singular_hopf")
        throw ConfigError("unknown system: '" + system_name + "'");
    domain.validate();
    if (d < 1) throw ConfigError("mesh.d must be >= 1");
    const bool orig = a || b || c;
    const bool resc = A || B || C;
    if (orig && resc)
        throw ConfigError("give either original (a,b,c) or rescaled (A,B,C) "
                          "parameters, not both");
    if (orig && !(a && b && c)) throw ConfigError("incomplete original parameters");
    if (resc && !(A && B && C)) throw ConfigError("incomplete rescaled parameters");
    if (!orig && !resc) throw ConfigError("system parameters missing");
    if (epsilons && epsilons->empty()) throw ConfigError("run.epsilon list is empty");
    if (epsilons)
        for (double e : *epsilons)
            if (!(e > 0.0)) throw ConfigError("epsilon values must be positive");
    if (!(N0 > 0.0)) throw ConfigError("run.N0 must be positive");
    if (!(update_factor > 0.0 && update_factor < 0.5))
        throw ConfigError("run.update_factor must lie in (0, 1/2)");
    if (max_passes < 1) throw ConfigError("run.max_passes must be >= 1");
    if (threads < 1) throw ConfigError("threads must be >= 1");
}

std::vector<double> RunConfig::resolved_epsilons() const {
    return epsilons ? *epsilons : default_epsilon_grid();
}

SystemFactory RunConfig::system_factory() const {
    validate();
    const Branch br = branch;
    const double mu_ = mu;
    if (a) {
        const SingularHopfParams p{mu_, *a, *b, *c};
        return [p, br](double eps) {
            return std::make_shared<const SingularHopf>(eps, p, br);
        };
    }
    const RescaledHopfParams p{mu_, *A, *B, *C};
    return [p, br](double eps) {
        return std::make_shared<const SingularHopf>(eps, p, br);
    };
}

SweepSettings RunConfig::sweep_settings() const {
    SweepSettings s;
    s.make_system = system_factory();
    s.domain = domain;
    s.d = d;
    s.epsilons = resolved_epsilons();
    s.N0 = N0;
    s.update_factor = update_factor;
    s.tighten_enabled = tighten;
    s.max_passes = max_passes;
    s.threads = threads;
    return s;
}

std::string RunConfig::canonical_text() const {
    std::ostringstream out;
    out << "[system]\n";
    out << "name = " << system_name << "\n";
    out << "branch = " << (branch == Branch::Plus ? "plus" : "minus") << "\n";
    out << "mu = " << fmt(mu) << "\n";
    if (a) {
        out << "a = " << fmt(*a) << "\nb = " << fmt(*b) << "\nc = " << fmt(*c)
            << "\n";
    } else {
        out << "A = " << fmt(*A) << "\nB = " << fmt(*B) << "\nC = " << fmt(*C)
            << "\n";
    }
    out << "\n[domain]\n";
    out << "y_min = " << fmt(domain.y_min) << "\ny_max = " << fmt(domain.y_max)
        << "\nz_min = " << fmt(domain.z_min) << "\nz_max = " << fmt(domain.z_max)
        << "\n";
    out << "\n[mesh]\n";
    out << "d = " << d << "\n";
    out << "\n[run]\n";
    out << "epsilon =";
    for (double e : resolved_epsilons()) out << " " << fmt(e);
    out << "\n";
    out << "N0 = " << fmt(N0) << "\n";
    out << "update_factor = " << fmt(update_factor) << "\n";
    out << "tighten = " << (tighten ? "true" : "false") << "\n";
    out << "max_passes = " << max_passes << "\n";
    out << "threads = " << threads << "\n";
    return out.str();
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ConfigError("malformed section header at line " +
                                  std::to_string(lineno));
            section = t.substr(1, t.size() - 2);
            if (section != "system" && section != "domain" && section != "mesh" &&
                section != "run")
                throw ConfigError("unknown section [" + section + "]");
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key = value at line " + std::to_string(lineno));
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        const std::string qual = section + "." + key;

        if (qual == "system.name") cfg.system_name = value;
        else if (qual == "system.branch") {
            if (value == "plus") cfg.branch = Branch::Plus;
            else if (value == "minus") cfg.branch = Branch::Minus;
            else throw ConfigError("system.branch must be plus or minus");
        }
        else if (qual == "system.mu") cfg.mu = parse_double(value, qual);
        else if (qual == "system.a") cfg.a = parse_double(value, qual);
        else if (qual == "system.b") cfg.b = parse_double(value, qual);
        else if (qual == "system.c") cfg.c = parse_double(value, qual);
        else if (qual == "system.A") cfg.A = parse_double(value, qual);
        else if (qual == "system.B") cfg.B = parse_double(value, qual);
        else if (qual == "system.C") cfg.C = parse_double(value, qual);
        else if (qual == "domain.y_min") cfg.domain.y_min = parse_double(value, qual);
        else if (qual == "domain.y_max") cfg.domain.y_max = parse_double(value, qual);
        else if (qual == "domain.z_min") cfg.domain.z_min = parse_double(value, qual);
        else if (qual == "domain.z_max") cfg.domain.z_max = parse_double(value, qual);
        else if (qual == "mesh.d") cfg.d = parse_int(value, qual);
        else if (qual == "run.epsilon") cfg.epsilons = parse_list(value, qual);
        else if (qual == "run.N0") cfg.N0 = parse_double(value, qual);
        else if (qual == "run.update_factor") cfg.update_factor = parse_double(value, qual);
        else if (qual == "run.tighten") cfg.tighten = parse_bool(value, qual);
        else if (qual == "run.max_passes") cfg.max_passes = parse_int(value, qual);
        else if (qual == "run.threads") cfg.threads = parse_int(value, qual);
        else throw ConfigError("unknown key '" + qual + "' at line " +
                               std::to_string(lineno));
    }
    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

} // namespace smenc
